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

#include "relgroupoid/bisection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace relgroupoid {

  namespace {

    // Counts of elements of a over each unit, via e_L or e_R.
    std::vector<std::size_t> fiber_counts(Groupoid const& g,
                                          Subset const&   a,
                                          bool            left) {
      std::vector<std::size_t> count(g.size(), 0);
      for (Elem x : a) {
        ++count[left ? g.left_unit(x) : g.right_unit(x)];
      }
      return count;
    }

    bool injective_on(Groupoid const& g, Subset const& a, bool left) {
      auto const c = fiber_counts(g, a, left);
      return std::all_of(
          c.begin(), c.end(), [](std::size_t n) { return n <= 1; });
    }

    std::string padded(std::size_t i, std::size_t n) {
      std::string s = std::to_string(i);
      std::size_t w = std::to_string(n > 0 ? n - 1 : 0).size();
      return "B" + std::string(w - std::min(w, s.size()), '0') + s;
    }

  }  // namespace

  bool is_bisection_by_fibers(Groupoid const& g, Subset const& a) {
    auto const l = fiber_counts(g, a, true);
    auto const r = fiber_counts(g, a, false);
    for (Elem u : g.units()) {
      if (l[u] != 1 || r[u] != 1) {
        return false;
      }
    }
    return true;
  }

  Subset subset_mult(Groupoid const& g, Subset const& a, Subset const& b) {
    Subset out;
    for (Elem x : a) {
      for (Elem y : b) {
        Elem xy = g.product_or_none(x, y);
        if (xy != no_elem) {
          out.push_back(xy);
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Subset subset_inverse(Groupoid const& g, Subset const& a) {
    Subset out;
    for (Elem x : a) {
      out.push_back(g.inverse(x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_bisection_by_products(Groupoid const& g, Subset const& a) {
    Subset const s = subset_inverse(g, a);
    return subset_mult(g, s, a) == g.units() && subset_mult(g, a, s) == g.units();
  }

  bool is_bisection(Groupoid const& g, Subset const& a) {
    bool const f = is_bisection_by_fibers(g, a);
    if (f != is_bisection_by_products(g, a)) {
      throw std::logic_error("bisection characterizations disagree");
    }
    return f;
  }

  bool is_right_section(Groupoid const& g, Subset const& a) {
    return injective_on(g, a, false);
  }

  bool right_products_in_units(Groupoid const& g, Subset const& a) {
    for (Elem x : subset_mult(g, a, subset_inverse(g, a))) {
      if (!g.is_unit(x)) {
        return false;
      }
    }
    return true;
  }

  bool is_left_section(Groupoid const& g, Subset const& a) {
    return injective_on(g, a, true);
  }

  bool left_products_in_units(Groupoid const& g, Subset const& a) {
    for (Elem x : subset_mult(g, subset_inverse(g, a), a)) {
      if (!g.is_unit(x)) {
        return false;
      }
    }
    return true;
  }

  std::vector<Subset> all_bisections(Groupoid const& g) {
    auto const&         units = g.units();
    std::vector<Subset> out;
    std::vector<bool>   used(g.size(), false);
    Subset              chosen;
    // One element per right fiber, with distinct left units.
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == units.size()) {
        Subset b = chosen;
        std::sort(b.begin(), b.end());
        out.push_back(std::move(b));
        return;
      }
      for (Elem x : g.right_fiber(units[i])) {
        Elem l = g.left_unit(x);
        if (used[l]) {
          continue;
        }
        used[l] = true;
        chosen.push_back(x);
        self(self, i + 1);
        chosen.pop_back();
        used[l] = false;
      }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  BisectionGroup bisection_group(Groupoid const& g) {
    std::vector<Subset> elems = all_bisections(g);
    std::size_t const   n     = elems.size();
    if (n >= bisection_group_limit) {
      throw BudgetExceeded("bisection group has " + std::to_string(n)
                           + " elements; the limit is "
                           + std::to_string(bisection_group_limit));
    }
    std::map<Subset, std::size_t> index;
    std::vector<std::string>      names;
    for (std::size_t i = 0; i < n; ++i) {
      index.emplace(elems[i], i);
      names.push_back(padded(i, n));
    }
    std::vector<GroupTable::Triple> table;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto it = index.find(subset_mult(g, elems[i], elems[j]));
        if (it == index.end()) {
          throw std::logic_error("product of bisections is not a bisection");
        }
        table.push_back({names[i], names[j], names[it->second]});
      }
    }
    std::string const unit = names[index.at(g.units())];
    return {std::move(elems),
            GroupTable("B(" + g.name() + ")", names, unit, table)};
  }

  Elem act(Groupoid const& g, Subset const& b, Elem gamma) {
    Elem const target = g.left_unit(gamma);
    for (Elem x : b) {
      if (g.right_unit(x) == target) {
        return g.multiply(x, gamma);
      }
    }
    throw PreconditionError("act: subset misses the fiber over "
                            + g.name_of(target));
  }

  Morphism ad(Groupoid const& g, Subset const& b) {
    if (!is_bisection(g, b)) {
      throw PreconditionError("ad: subset is not a bisection");
    }
    std::vector<Elem> over(g.size(), no_elem);  // e_R(x) -> x
    for (Elem x : b) {
      over[g.right_unit(x)] = x;
    }
    MorphismGraph graph;
    for (Elem x = 0; x < g.size(); ++x) {
      Elem y = g.multiply(over[g.left_unit(x)], x);
      graph.emplace_back(g.multiply(y, g.inverse(over[g.right_unit(x)])), x);
    }
    return validate_morphism(g, g, std::move(graph));
  }

  Subset image_bisection(Morphism const& h, Subset const& b) {
    if (!is_bisection(h.source(), b)) {
      throw PreconditionError("image_bisection: subset is not a bisection");
    }
    Subset out;
    for (Elem x : b) {
      auto const& r = h.related(x);
      out.insert(out.end(), r.begin(), r.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!is_bisection(h.target(), out)) {
      throw std::logic_error("image of a bisection is not a bisection");
    }
    return out;
  }

  InducedHom induced_hom(Morphism const& h) {
    InducedHom out{
        bisection_group(h.source()), bisection_group(h.target()), {}};
    std::map<Subset, Elem> index;
    for (Elem i = 0; i < out.target.elements.size(); ++i) {
      index.emplace(out.target.elements[i], i);
    }
    for (auto const& b : out.source.elements) {
      out.map.push_back(index.at(image_bisection(h, b)));
    }
    auto const& s = out.source.table;
    auto const& t = out.target.table;
    for (Elem i = 0; i < s.size(); ++i) {
      for (Elem j = 0; j < s.size(); ++j) {
        if (out.map[s.multiply(i, j)] != t.multiply(out.map[i], out.map[j])) {
          throw std::logic_error("induced map is not a homomorphism");
        }
      }
    }
    return out;
  }

}  // namespace relgroupoid
