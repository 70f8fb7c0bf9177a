/*
 *   Copyright 2026 The relgroupoid Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "relgroupoid/group_table.hpp"

#include <algorithm>
#include <numeric>

namespace relgroupoid {

  namespace {
    constexpr Elem unset = static_cast<Elem>(-1);
  }

  GroupTable::GroupTable(std::string                name,
                         std::vector<std::string>   elements,
                         std::string const&         unit,
                         std::vector<Triple> const& table)
      : _name(std::move(name)),
        _universe(make_universe(_name, std::move(elements))) {
    std::size_t const n = _universe->size();
    if (n == 0) {
      throw Error("group \"" + _name + "\" has no elements");
    }
    _unit = _universe->index(unit);
    _table.assign(n * n, unset);
    for (auto const& [a, b, ab] : table) {
      Elem  i    = _universe->index(a);
      Elem  j    = _universe->index(b);
      Elem  k    = _universe->index(ab);
      Elem& slot = _table[i * n + j];
      if (slot != unset && slot != k) {
        throw Error("group \"" + _name + "\": product " + a + "*" + b
                    + " is not single valued");
      }
      slot = k;
    }
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        if (_table[i * n + j] == unset) {
          throw Error("group \"" + _name + "\": product " + name_of(i) + "*"
                      + name_of(j) + " is undefined");
        }
      }
    }
    for (Elem i = 0; i < n; ++i) {
      if (multiply(_unit, i) != i || multiply(i, _unit) != i) {
        throw Error("group \"" + _name + "\": unit law fails at "
                    + name_of(i));
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
            throw Error("group \"" + _name + "\": associativity fails at ("
                        + name_of(a) + "," + name_of(b) + "," + name_of(c)
                        + ")");
          }
        }
      }
    }
    _inverse.assign(n, unset);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (multiply(a, b) == _unit && multiply(b, a) == _unit) {
          _inverse[a] = b;
          break;
        }
      }
      if (_inverse[a] == unset) {
        throw Error("group \"" + _name + "\": " + name_of(a)
                    + " has no inverse");
      }
    }
  }

  std::vector<GroupTable::Triple> GroupTable::triples() const {
    std::vector<Triple> out;
    out.reserve(size() * size());
    for (Elem a = 0; a < size(); ++a) {
      for (Elem b = 0; b < size(); ++b) {
        out.push_back({name_of(a), name_of(b), name_of(multiply(a, b))});
      }
    }
    return out;
  }

  GroupTable trivial_group() {
    return GroupTable("1", {"e"}, "e", {{"e", "e", "e"}});
  }

  GroupTable cyclic_group(std::size_t n) {
    if (n == 0) {
      throw PreconditionError("cyclic group of order 0");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
    }
    std::vector<GroupTable::Triple> table;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table.push_back({names[i], names[j], names[(i + j) % n]});
      }
    }
    return GroupTable("Z" + std::to_string(n), names, "0", table);
  }

  GroupTable klein_four_group() {
    // e = 00, a = 10, b = 01, c = 11 under componentwise addition.
    std::vector<std::string> names = {"e", "a", "b", "c"};
    std::vector<GroupTable::Triple> table;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        table.push_back({names[i], names[j], names[i ^ j]});
      }
    }
    return GroupTable("V4", names, "e", table);
  }

  GroupTable symmetric_group(std::size_t n) {
    if (n == 0 || n > 9) {
      throw PreconditionError("symmetric group degree must be in 1..9");
    }
    std::vector<std::vector<int>> perms;
    std::vector<int>              p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto name = [](std::vector<int> const& q) {
      std::string s;
      for (int v : q) {
        s += static_cast<char>('0' + v);
      }
      return s;
    };
    std::vector<std::string>        names;
    std::vector<GroupTable::Triple> table;
    for (auto const& a : perms) {
      names.push_back(name(a));
    }
    for (auto const& a : perms) {
      for (auto const& b : perms) {
        std::vector<int> ab(n);
        for (std::size_t i = 0; i < n; ++i) {
          ab[i] = a[b[i] - 1];
        }
        table.push_back({name(a), name(b), name(ab)});
      }
    }
    return GroupTable("S" + std::to_string(n), names, names.front(), table);
  }

  bool is_subgroup(GroupTable const& g, std::vector<Elem> const& h) {
    if (!std::binary_search(h.begin(), h.end(), g.unit())) {
      return false;
    }
    for (Elem a : h) {
      if (!std::binary_search(h.begin(), h.end(), g.inverse(a))) {
        return false;
      }
      for (Elem b : h) {
        if (!std::binary_search(h.begin(), h.end(), g.multiply(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_normal_subgroup(GroupTable const& g, std::vector<Elem> const& h) {
    if (!is_subgroup(g, h)) {
      return false;
    }
    for (Elem x = 0; x < g.size(); ++x) {
      for (Elem a : h) {
        Elem c = g.multiply(g.multiply(x, a), g.inverse(x));
        if (!std::binary_search(h.begin(), h.end(), c)) {
          return false;
        }
      }
    }
    return true;
  }

  QuotientGroup quotient_group(GroupTable const&        g,
                               std::vector<Elem> const& h) {
    if (!is_normal_subgroup(g, h)) {
      throw PreconditionError("quotient of \"" + g.name()
                              + "\" by a subset that is not a normal subgroup");
    }
    std::vector<Elem> rep(g.size(), unset);
    std::vector<Elem> reps;
    for (Elem x = 0; x < g.size(); ++x) {
      if (rep[x] != unset) {
        continue;
      }
      // x is the least member of its coset since we scan in order.
      reps.push_back(x);
      for (Elem a : h) {
        rep[g.multiply(x, a)] = x;
      }
    }
    auto class_name = [&](Elem x) { return "[" + g.name_of(rep[x]) + "]"; };
    std::vector<std::string> names;
    for (Elem r : reps) {
      names.push_back(class_name(r));
    }
    std::vector<GroupTable::Triple> table;
    for (Elem a : reps) {
      for (Elem b : reps) {
        table.push_back({class_name(a), class_name(b),
                         class_name(g.multiply(a, b))});
      }
    }
    GroupTable        q(g.name() + "/H", names, class_name(g.unit()), table);
    std::vector<Elem> proj(g.size());
    for (Elem x = 0; x < g.size(); ++x) {
      proj[x] = q.index(class_name(x));
    }
    return {std::move(q), std::move(proj)};
  }

  bool are_isomorphic(GroupTable const& a, GroupTable const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    std::size_t const n = a.size();
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (perm[a.unit()] != b.unit()) {
        continue;
      }
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        for (Elem y = 0; y < n && ok; ++y) {
          ok = perm[a.multiply(x, y)] == b.multiply(perm[x], perm[y]);
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

}  // namespace relgroupoid
