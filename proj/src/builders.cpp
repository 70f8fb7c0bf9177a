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

#include "relgroupoid/builders.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace relgroupoid {

  std::string pair_name(std::string const& x, std::string const& y) {
    return "(" + x + "," + y + ")";
  }

  std::string product_form_name(std::string const& x,
                                std::string const& g,
                                std::string const& y) {
    return x + "|" + g + "|" + y;
  }

  Groupoid pair_groupoid(Names const& x) {
    RawGroupoid r;
    r.name = "X^2";
    for (auto const& a : x) {
      r.units.push_back(pair_name(a, a));
      for (auto const& b : x) {
        r.elements.push_back(pair_name(a, b));
        r.inverse.emplace_back(pair_name(a, b), pair_name(b, a));
        for (auto const& c : x) {
          r.compose.push_back(
              {pair_name(a, b), pair_name(b, c), pair_name(a, c)});
        }
      }
    }
    return validate(r);
  }

  Groupoid set_groupoid(Names const& x) {
    RawGroupoid r;
    r.name     = "X";
    r.elements = x;
    r.units    = x;
    for (auto const& a : x) {
      r.inverse.emplace_back(a, a);
      r.compose.push_back({a, a, a});
    }
    return validate(r);
  }

  Groupoid group_groupoid(GroupTable const& t) {
    RawGroupoid r;
    r.name     = t.name();
    r.elements = t.universe()->elements();
    r.units    = {t.name_of(t.unit())};
    for (Elem g = 0; g < t.size(); ++g) {
      r.inverse.emplace_back(t.name_of(g), t.name_of(t.inverse(g)));
    }
    r.compose = t.triples();
    return validate(r);
  }

  Groupoid group_bundle(std::vector<GroupTable> const& fibers) {
    RawGroupoid r;
    r.name = "bundle";
    for (std::size_t i = 0; i < fibers.size(); ++i) {
      auto const& t   = fibers[i];
      auto        tag = [&](Elem g) {
        return std::to_string(i) + ":" + t.name_of(g);
      };
      r.units.push_back(tag(t.unit()));
      for (Elem g = 0; g < t.size(); ++g) {
        r.elements.push_back(tag(g));
        r.inverse.emplace_back(tag(g), tag(t.inverse(g)));
        for (Elem h = 0; h < t.size(); ++h) {
          r.compose.push_back({tag(g), tag(h), tag(t.multiply(g, h))});
        }
      }
    }
    return validate(r);
  }

  Groupoid equivalence_groupoid(Names const& x,
                                std::vector<Names> const& blocks) {
    std::map<std::string, std::size_t> block_of;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].empty()) {
        throw PreconditionError("equivalence_groupoid: empty block");
      }
      for (auto const& a : blocks[i]) {
        if (!block_of.emplace(a, i).second) {
          throw PreconditionError("equivalence_groupoid: \"" + a
                                  + "\" lies in two blocks");
        }
      }
    }
    std::set<std::string> const all(x.begin(), x.end());
    if (all.size() != block_of.size()
        || !std::all_of(all.begin(), all.end(), [&](auto const& a) {
             return block_of.count(a) != 0;
           })) {
      throw PreconditionError("equivalence_groupoid: blocks do not cover X");
    }
    RawGroupoid r;
    r.name = "R";
    for (auto const& a : x) {
      r.units.push_back(pair_name(a, a));
      for (auto const& b : x) {
        if (block_of[a] != block_of[b]) {
          continue;
        }
        r.elements.push_back(pair_name(a, b));
        r.inverse.emplace_back(pair_name(a, b), pair_name(b, a));
        for (auto const& c : x) {
          if (block_of[b] == block_of[c]) {
            r.compose.push_back(
                {pair_name(a, b), pair_name(b, c), pair_name(a, c)});
          }
        }
      }
    }
    return validate(r);
  }

  Groupoid product_form(Names const& e, GroupTable const& t) {
    RawGroupoid r;
    r.name = "Ex" + t.name();
    for (auto const& x : e) {
      r.units.push_back(product_form_name(x, t.name_of(t.unit()), x));
      for (Elem g = 0; g < t.size(); ++g) {
        for (auto const& y : e) {
          std::string const xgy = product_form_name(x, t.name_of(g), y);
          r.elements.push_back(xgy);
          r.inverse.emplace_back(
              xgy, product_form_name(y, t.name_of(t.inverse(g)), x));
          for (Elem h = 0; h < t.size(); ++h) {
            for (auto const& z : e) {
              r.compose.push_back(
                  {xgy,
                   product_form_name(y, t.name_of(h), z),
                   product_form_name(x, t.name_of(t.multiply(g, h)), z)});
            }
          }
        }
      }
    }
    return validate(r);
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupAction
  ////////////////////////////////////////////////////////////////////////

  GroupAction::GroupAction(GroupTable                             group,
                           Names                                  carrier,
                           std::vector<GroupTable::Triple> const& triples)
      : _group(std::move(group)),
        _carrier(make_universe("X", std::move(carrier))) {
    std::size_t const nx = _carrier->size();
    _table.assign(_group.size() * nx, no_elem);
    for (auto const& [gx, g, x] : triples) {
      Elem& slot = _table[_group.index(g) * nx + _carrier->index(x)];
      Elem  y    = _carrier->index(gx);
      if (slot != no_elem && slot != y) {
        throw PreconditionError("group action: " + g + "." + x
                                + " is not single valued");
      }
      slot = y;
    }
    for (Elem g = 0; g < _group.size(); ++g) {
      for (Elem x = 0; x < nx; ++x) {
        if (act(g, x) == no_elem) {
          throw PreconditionError("group action: " + _group.name_of(g) + "."
                                  + _carrier->name(x) + " is undefined");
        }
      }
    }
    for (Elem x = 0; x < nx; ++x) {
      if (act(_group.unit(), x) != x) {
        throw PreconditionError("group action: unit moves "
                                + _carrier->name(x));
      }
      for (Elem g = 0; g < _group.size(); ++g) {
        for (Elem h = 0; h < _group.size(); ++h) {
          if (act(g, act(h, x)) != act(_group.multiply(g, h), x)) {
            throw PreconditionError(
                "group action: g(hx) != (gh)x at g=" + _group.name_of(g)
                + ", h=" + _group.name_of(h) + ", x=" + _carrier->name(x));
          }
        }
      }
    }
  }

  std::vector<GroupTable::Triple> GroupAction::triples() const {
    std::vector<GroupTable::Triple> out;
    for (Elem g = 0; g < _group.size(); ++g) {
      for (Elem x = 0; x < _carrier->size(); ++x) {
        out.push_back({_carrier->name(act(g, x)),
                       _group.name_of(g),
                       _carrier->name(x)});
      }
    }
    return out;
  }

  bool GroupAction::is_effective() const {
    for (Elem g = 0; g < _group.size(); ++g) {
      if (g == _group.unit()) {
        continue;
      }
      bool moves = false;
      for (Elem x = 0; x < _carrier->size() && !moves; ++x) {
        moves = act(g, x) != x;
      }
      if (!moves) {
        return false;
      }
    }
    return true;
  }

  bool GroupAction::is_transitive() const {
    if (_carrier->size() == 0) {
      return true;
    }
    std::set<Elem> orbit;
    for (Elem g = 0; g < _group.size(); ++g) {
      orbit.insert(act(g, 0));
    }
    return orbit.size() == _carrier->size();
  }

  Groupoid transformation_groupoid(GroupAction const& a) {
    GroupTable const&  g = a.group();
    Universe const&    x = *a.carrier();
    RawGroupoid        r;
    r.name = g.name() + "xX";
    auto nm = [&](Elem h, Elem p) { return pair_name(g.name_of(h), x.name(p)); };
    for (Elem p = 0; p < x.size(); ++p) {
      r.units.push_back(nm(g.unit(), p));
      for (Elem h = 0; h < g.size(); ++h) {
        r.elements.push_back(nm(h, p));
        r.inverse.emplace_back(nm(h, p), nm(g.inverse(h), a.act(h, p)));
        for (Elem k = 0; k < g.size(); ++k) {
          r.compose.push_back(
              {nm(k, a.act(h, p)), nm(h, p), nm(g.multiply(k, h), p)});
        }
      }
    }
    return validate(r);
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  namespace catalog {

    Groupoid one_point() {
      return group_groupoid(trivial_group()).renamed("one-point");
    }
    Groupoid s2() {
      return set_groupoid({"a", "b"}).renamed("S2");
    }
    Groupoid p2() {
      return pair_groupoid({"1", "2"}).renamed("P2");
    }
    Groupoid p3() {
      return pair_groupoid({"1", "2", "3"}).renamed("P3");
    }
    Groupoid z2() {
      return group_groupoid(cyclic_group(2));
    }
    Groupoid z4() {
      return group_groupoid(cyclic_group(4));
    }
    Groupoid klein() {
      return group_groupoid(klein_four_group());
    }
    Groupoid bundle_z2_trivial() {
      return group_bundle({cyclic_group(2), trivial_group()});
    }
    GroupAction z2_swap_action() {
      return GroupAction(cyclic_group(2),
                         {"p", "q"},
                         {{"p", "0", "p"},
                          {"q", "0", "q"},
                          {"q", "1", "p"},
                          {"p", "1", "q"}});
    }
    Groupoid z2_swap() {
      return transformation_groupoid(z2_swap_action()).renamed("swap");
    }
    Groupoid product_form_xy_z2() {
      return product_form({"x", "y"}, cyclic_group(2)).renamed("xZ2x");
    }
    Groupoid equivalence_12_3() {
      return equivalence_groupoid({"1", "2", "3"}, {{"1", "2"}, {"3"}})
          .renamed("equiv");
    }

    std::vector<std::pair<std::string, Groupoid>> all() {
      return {{"one-point", one_point()},
              {"S2", s2()},
              {"P2", p2()},
              {"P3", p3()},
              {"Z2", z2()},
              {"Z4", z4()},
              {"V4", klein()},
              {"bundle", bundle_z2_trivial()},
              {"swap", z2_swap()},
              {"xZ2x", product_form_xy_z2()},
              {"equiv", equivalence_12_3()}};
    }

  }  // namespace catalog

}  // namespace relgroupoid
