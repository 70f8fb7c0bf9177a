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

#include "relgroupoid/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "relgroupoid/builders.hpp"

namespace relgroupoid {

  std::string_view to_string(Axiom a) {
    switch (a) {
      case Axiom::structure:
        return "structure";
      case Axiom::involution:
        return "involution";
      case Axiom::unit_law:
        return "unit-law";
      case Axiom::inverse_law:
        return "inverse-law";
      case Axiom::antihomomorphism:
        return "antihomomorphism";
      case Axiom::associativity:
        return "associativity";
      case Axiom::definition:
        return "definition";
    }
    return "unknown";
  }

  namespace {
    std::string describe(std::vector<AxiomViolation> const& v) {
      std::string out = std::string(to_string(v.front().axiom));
      if (!v.front().message.empty()) {
        out += ": " + v.front().message;
      }
      return out;
    }
  }  // namespace

  AxiomError::AxiomError(std::vector<AxiomViolation> violations)
      : Error(describe(violations)), _violations(std::move(violations)) {}

  bool AxiomError::violates(Axiom a) const noexcept {
    return std::any_of(_violations.begin(),
                       _violations.end(),
                       [a](AxiomViolation const& v) { return v.axiom == a; });
  }

  ////////////////////////////////////////////////////////////////////////
  // Groupoid data
  ////////////////////////////////////////////////////////////////////////

  struct Groupoid::Data {
    std::string                    name;
    UniversePtr                    universe;
    std::vector<Elem>              units;
    std::vector<char>              unit_flag;
    std::vector<Elem>              inverse;
    std::vector<Elem>              left;
    std::vector<Elem>              right;
    std::vector<Elem>              table;  // n * n, no_elem if undefined
    std::vector<std::vector<Elem>> left_fibers;
    std::vector<std::vector<Elem>> right_fibers;
    FinRel                         m;
    FinRel                         s;
    FinRel                         e;
  };

  namespace {
  }

  Groupoid::Groupoid() : _data(validate(RawGroupoid{"empty", {}, {}, {}, {}})._data) {}

  Groupoid::Groupoid(std::shared_ptr<Data const> data) : _data(std::move(data)) {}

  std::string const& Groupoid::name() const noexcept {
    return _data->name;
  }
  UniversePtr const& Groupoid::universe() const noexcept {
    return _data->universe;
  }
  std::size_t Groupoid::size() const noexcept {
    return _data->universe->size();
  }
  std::string const& Groupoid::name_of(Elem g) const {
    return _data->universe->name(g);
  }
  Elem Groupoid::index(std::string_view name) const {
    return _data->universe->index(name);
  }

  std::vector<std::string> Groupoid::names(Subset const& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (Elem g : s) {
      out.push_back(name_of(g));
    }
    return out;
  }

  Subset Groupoid::subset(std::vector<std::string> const& names) const {
    Subset out;
    out.reserve(names.size());
    for (auto const& n : names) {
      out.push_back(index(n));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Elem> const& Groupoid::units() const noexcept {
    return _data->units;
  }
  bool Groupoid::is_unit(Elem g) const {
    return _data->unit_flag.at(g) != 0;
  }
  Elem Groupoid::inverse(Elem g) const {
    return _data->inverse.at(g);
  }
  Elem Groupoid::left_unit(Elem g) const {
    return _data->left.at(g);
  }
  Elem Groupoid::right_unit(Elem g) const {
    return _data->right.at(g);
  }

  Elem Groupoid::multiply(Elem a, Elem b) const {
    Elem c = product_or_none(a, b);
    if (c == no_elem) {
      throw PreconditionError("(" + name_of(a) + ", " + name_of(b)
                              + ") is not composable in \"" + name() + "\"");
    }
    return c;
  }

  Elem Groupoid::product_or_none(Elem a, Elem b) const {
    return _data->table.at(a * size() + b);
  }

  std::vector<Elem> const& Groupoid::left_fiber(Elem unit) const {
    if (!is_unit(unit)) {
      throw PreconditionError(name_of(unit) + " is not a unit");
    }
    return _data->left_fibers[unit];
  }

  std::vector<Elem> const& Groupoid::right_fiber(Elem unit) const {
    if (!is_unit(unit)) {
      throw PreconditionError(name_of(unit) + " is not a unit");
    }
    return _data->right_fibers[unit];
  }

  FinRel const& Groupoid::multiplication() const noexcept {
    return _data->m;
  }
  FinRel const& Groupoid::inverse_relation() const noexcept {
    return _data->s;
  }
  FinRel const& Groupoid::unit_relation() const noexcept {
    return _data->e;
  }

  RawGroupoid Groupoid::raw() const {
    RawGroupoid r;
    r.name     = name();
    r.elements = _data->universe->elements();
    r.units    = names(units());
    for (Elem g = 0; g < size(); ++g) {
      r.inverse.emplace_back(name_of(g), name_of(inverse(g)));
    }
    for (Elem a = 0; a < size(); ++a) {
      for (Elem b = 0; b < size(); ++b) {
        Elem c = product_or_none(a, b);
        if (c != no_elem) {
          r.compose.push_back({name_of(a), name_of(b), name_of(c)});
        }
      }
    }
    return r;
  }

  Groupoid Groupoid::renamed(std::string name) const {
    auto copy  = std::make_shared<Data>(*_data);
    copy->name = std::move(name);
    return Groupoid(std::move(copy));
  }

  bool Groupoid::operator==(Groupoid const& other) const noexcept {
    if (_data == other._data) {
      return true;
    }
    return *_data->universe == *other._data->universe
           && _data->units == other._data->units
           && _data->inverse == other._data->inverse
           && _data->table == other._data->table;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Relations {
      UniversePtr universe;
      FinRel      m;
      FinRel      s;
      FinRel      e;
    };

    AxiomViolation structure_violation(std::string witness,
                                       std::string message) {
      return {Axiom::structure, std::move(witness), std::move(message)};
    }

    // Builds m, s and e from names; throws AxiomError on dangling names.
    Relations build_relations(RawGroupoid const& raw) {
      UniversePtr universe;
      try {
        universe = make_universe(raw.name, raw.elements);
      } catch (Error const& e) {
        throw AxiomError({structure_violation("", e.what())});
      }
      for (auto const& n : universe->elements()) {
        if (n.empty()) {
          throw AxiomError(
              {structure_violation("", "empty element identifier")});
        }
      }
      auto lookup = [&](std::string const& n, char const* where) {
        auto i = universe->find(n);
        if (!i) {
          throw AxiomError({structure_violation(
              n, "unknown element \"" + n + "\" in " + where)});
        }
        return *i;
      };

      Domain const g(universe);
      Domain const gg = g * g;

      std::vector<Pair> e_graph;
      std::set<Elem>    seen_units;
      for (auto const& u : raw.units) {
        Elem i = lookup(u, "units");
        if (!seen_units.insert(i).second) {
          throw AxiomError(
              {structure_violation(u, "unit \"" + u + "\" listed twice")});
        }
        e_graph.emplace_back(i, 0);
      }

      std::vector<Pair>    s_graph;
      std::map<Elem, Elem> inv;
      for (auto const& [a, b] : raw.inverse) {
        Elem i = lookup(a, "inverse");
        Elem j = lookup(b, "inverse");
        auto [it, inserted] = inv.emplace(i, j);
        if (!inserted && it->second != j) {
          throw AxiomError({structure_violation(
              a, "inverse of \"" + a + "\" given twice")});
        }
        s_graph.emplace_back(j, i);
      }

      std::vector<Pair> m_graph;
      for (auto const& [a, b, c] : raw.compose) {
        Elem i = lookup(a, "compose");
        Elem j = lookup(b, "compose");
        Elem k = lookup(c, "compose");
        m_graph.emplace_back(k, i * universe->size() + j);
      }
      return {universe,
              FinRel(gg, g, std::move(m_graph)),
              FinRel(g, g, std::move(s_graph)),
              FinRel(Domain::point(), g, std::move(e_graph))};
    }

    void compare(FinRel const&                lhs,
                 FinRel const&                rhs,
                 Axiom                        axiom,
                 std::string const&           equation,
                 std::vector<AxiomViolation>& out) {
      auto diff = first_difference(lhs, rhs);
      if (diff) {
        std::string w = lhs.render(diff->first);
        out.push_back({axiom,
                       w,
                       equation + " fails at " + w + " (only in "
                           + (diff->second ? "left" : "right") + " side)"});
      }
    }

    std::vector<AxiomViolation> relational_axioms(Relations const& r) {
      std::vector<AxiomViolation> out;
      Domain const                g(r.universe);
      FinRel const                id = identity(g);
      FinRel const&               m  = r.m;
      FinRel const&               s  = r.s;
      FinRel const&               e  = r.e;

      compare(compose(s, s), id, Axiom::involution, "s^2 = id", out);

      compare(compose(m, product(e, id)),
              id,
              Axiom::unit_law,
              "m(e x id) = id",
              out);
      compare(compose(m, product(id, e)),
              id,
              Axiom::unit_law,
              "m(id x e) = id",
              out);

      auto units = image(e);
      for (Code x = 0; x < g.size(); ++x) {
        std::vector<Code> products;
        for (Code a : apply(s, x)) {
          auto part = apply(m, a * g.size() + x);
          products.insert(products.end(), part.begin(), part.end());
        }
        std::string const name = g.render(x);
        if (products.empty()) {
          out.push_back({Axiom::inverse_law,
                         name,
                         "m(s(" + name + "), " + name + ") is empty"});
          break;
        }
        auto stray = std::find_if(products.begin(), products.end(), [&](Code c) {
          return !std::binary_search(units.begin(), units.end(), c);
        });
        if (stray != products.end()) {
          out.push_back({Axiom::inverse_law,
                         name,
                         "m(s(" + name + "), " + name + ") contains non-unit "
                             + g.render(*stray)});
          break;
        }
      }

      compare(compose(s, m),
              compose(m, compose(flip(g, g), product(s, s))),
              Axiom::antihomomorphism,
              "sm = m sigma (s x s)",
              out);

      compare(compose(m, product(m, id)),
              compose(m, product(id, m)),
              Axiom::associativity,
              "m(m x id) = m(id x m)",
              out);
      return out;
    }

    std::vector<Elem> sorted_unique(std::vector<Elem> v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

  }  // namespace

  std::vector<AxiomViolation> check_axioms(RawGroupoid const& raw) {
    try {
      return relational_axioms(build_relations(raw));
    } catch (AxiomError const& e) {
      return e.violations();
    }
  }

  Groupoid validate(RawGroupoid const& raw) {
    Relations rel        = build_relations(raw);
    auto      violations = relational_axioms(rel);
    if (!violations.empty()) {
      throw AxiomError(std::move(violations));
    }

    auto              data = std::make_shared<Groupoid::Data>();
    std::size_t const n    = rel.universe->size();
    data->name             = raw.name;
    data->universe         = rel.universe;
    data->units            = sorted_unique([&] {
      std::vector<Elem> u;
      for (auto const& p : rel.e.graph()) {
        u.push_back(p.first);
      }
      return u;
    }());
    data->unit_flag.assign(n, 0);
    for (Elem u : data->units) {
      data->unit_flag[u] = 1;
    }
    data->inverse.assign(n, no_elem);
    for (auto const& [b, a] : rel.s.graph()) {
      data->inverse[a] = b;
    }
    data->table.assign(n * n, no_elem);
    std::vector<AxiomViolation> definition;
    for (auto const& [c, ab] : rel.m.graph()) {
      Elem& slot = data->table[ab];
      if (slot != no_elem && slot != c) {
        definition.push_back({Axiom::definition,
                              rel.m.source().render(ab),
                              "m is not single valued at "
                                  + rel.m.source().render(ab)});
        break;
      }
      slot = c;
    }
    if (!definition.empty()) {
      throw AxiomError(std::move(definition));
    }
    data->left.assign(n, no_elem);
    data->right.assign(n, no_elem);
    for (Elem g = 0; g < n; ++g) {
      data->left[g]  = data->table[g * n + data->inverse[g]];
      data->right[g] = data->table[data->inverse[g] * n + g];
    }
    data->left_fibers.assign(n, {});
    data->right_fibers.assign(n, {});
    for (Elem g = 0; g < n; ++g) {
      data->left_fibers[data->left[g]].push_back(g);
      data->right_fibers[data->right[g]].push_back(g);
    }
    data->m = std::move(rel.m);
    data->s = std::move(rel.s);
    data->e = std::move(rel.e);

    Groupoid result(std::move(data));
    auto     failures = check_category_laws(result);
    if (!failures.empty()) {
      std::vector<AxiomViolation> v;
      for (auto& f : failures) {
        v.push_back({Axiom::definition, "", std::move(f)});
      }
      throw AxiomError(std::move(v));
    }
    return result;
  }

  std::vector<std::string> check_category_laws(Groupoid const& g) {
    std::vector<std::string> out;
    std::size_t const        n = g.size();
    auto const               nm = [&](Elem x) { return g.name_of(x); };

    // The inputs of m are exactly the pairs with e_R(a) = e_L(b).
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        bool defined = g.product_or_none(a, b) != no_elem;
        if (defined != g.composable(a, b)) {
          out.push_back("m defined at (" + nm(a) + "," + nm(b)
                        + ") disagrees with e_R(a) = e_L(b)");
        }
      }
    }
    for (Elem u : g.units()) {
      if (g.inverse(u) != u || g.left_unit(u) != u || g.right_unit(u) != u) {
        out.push_back("unit " + nm(u) + " is not fixed by s, e_L, e_R");
      }
    }
    for (Elem a = 0; a < n; ++a) {
      Elem l = g.left_unit(a), r = g.right_unit(a);
      if (l == no_elem || r == no_elem || !g.is_unit(l) || !g.is_unit(r)) {
        out.push_back("e_L/e_R of " + nm(a) + " is not a unit");
        continue;
      }
      if (g.product_or_none(l, a) != a || g.product_or_none(a, r) != a) {
        out.push_back("unit law fails at " + nm(a));
      }
      Elem s = g.inverse(a);
      if (g.inverse(s) != a || g.right_unit(s) != l || g.left_unit(s) != r) {
        out.push_back("inverse law fails at " + nm(a));
      }
    }
    if (!out.empty()) {
      return out;
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem ab = g.product_or_none(a, b);
        if (ab == no_elem) {
          continue;
        }
        if (g.right_unit(ab) != g.right_unit(b)
            || g.left_unit(ab) != g.left_unit(a)) {
          out.push_back("source/target of " + nm(a) + nm(b) + " wrong");
        }
        if (g.inverse(ab)
            != g.product_or_none(g.inverse(b), g.inverse(a))) {
          out.push_back("s(ab) = s(b)s(a) fails at (" + nm(a) + "," + nm(b)
                        + ")");
        }
        for (Elem c = 0; c < n; ++c) {
          Elem left  = g.product_or_none(ab, c);
          Elem bc    = g.product_or_none(b, c);
          Elem right = bc == no_elem ? no_elem : g.product_or_none(a, bc);
          if (left != right) {
            out.push_back("associativity fails at (" + nm(a) + "," + nm(b)
                          + "," + nm(c) + ")");
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structural queries
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::pair<Elem, Elem>> composable_pairs(Groupoid const& g) {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem a = 0; a < g.size(); ++a) {
      for (Elem b : g.left_fiber(g.right_unit(a))) {
        out.emplace_back(a, b);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Subset> orbits(Groupoid const& g) {
    std::vector<Elem> parent(g.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Elem x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (Elem a = 0; a < g.size(); ++a) {
      Elem x = find(g.left_unit(a)), y = find(g.right_unit(a));
      if (x != y) {
        parent[std::max(x, y)] = std::min(x, y);
      }
    }
    std::map<Elem, Subset> by_root;
    for (Elem u : g.units()) {
      by_root[find(u)].push_back(u);
    }
    std::vector<Subset> out;
    for (auto& [root, members] : by_root) {
      out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_transitive(Groupoid const& g) {
    return orbits(g).size() <= 1;
  }

  Subset isotropy(Groupoid const& g, Elem unit) {
    if (unit >= g.size() || !g.is_unit(unit)) {
      throw PreconditionError("isotropy: not a unit of \"" + g.name() + "\"");
    }
    Subset out;
    for (Elem a : g.right_fiber(unit)) {
      if (g.left_unit(a) == unit) {
        out.push_back(a);
      }
    }
    return out;
  }

  Subset isotropy_bundle(Groupoid const& g) {
    Subset out;
    for (Elem a = 0; a < g.size(); ++a) {
      if (g.left_unit(a) == g.right_unit(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<Subset> transitive_components(Groupoid const& g) {
    std::vector<Subset> out;
    for (auto const& orbit : orbits(g)) {
      Subset c;
      for (Elem a = 0; a < g.size(); ++a) {
        if (std::binary_search(orbit.begin(), orbit.end(), g.right_unit(a))) {
          c.push_back(a);
        }
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  bool is_subgroupoid(Groupoid const& g, Subset const& s) {
    auto in = [&](Elem x) { return std::binary_search(s.begin(), s.end(), x); };
    for (Elem a : s) {
      if (a >= g.size() || !in(g.inverse(a))) {
        return false;
      }
      for (Elem b : s) {
        Elem c = g.product_or_none(a, b);
        if (c != no_elem && !in(c)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_wide(Groupoid const& g, Subset const& s) {
    return is_subgroupoid(g, s)
           && std::includes(
               s.begin(), s.end(), g.units().begin(), g.units().end());
  }

  bool is_union_of_components(Groupoid const& g, Subset const& s) {
    Subset expected;
    for (auto const& c : transitive_components(g)) {
      bool any = std::any_of(c.begin(), c.end(), [&](Elem x) {
        return std::binary_search(s.begin(), s.end(), x);
      });
      if (any) {
        expected.insert(expected.end(), c.begin(), c.end());
      }
    }
    std::sort(expected.begin(), expected.end());
    return expected == s;
  }

  Groupoid subgroupoid(Groupoid const& g, Subset const& s, std::string name) {
    if (!std::is_sorted(s.begin(), s.end()) || !is_subgroupoid(g, s)) {
      throw PreconditionError("subset of \"" + g.name()
                              + "\" is not a subgroupoid");
    }
    RawGroupoid r;
    r.name     = std::move(name);
    r.elements = g.names(s);
    for (Elem a : s) {
      if (g.is_unit(a)) {
        r.units.push_back(g.name_of(a));
      }
      r.inverse.emplace_back(g.name_of(a), g.name_of(g.inverse(a)));
      for (Elem b : s) {
        Elem c = g.product_or_none(a, b);
        if (c != no_elem) {
          r.compose.push_back({g.name_of(a), g.name_of(b), g.name_of(c)});
        }
      }
    }
    return validate(r);
  }

  Groupoid restrict(Groupoid const& g, Subset const& units) {
    for (Elem u : units) {
      if (u >= g.size() || !g.is_unit(u)) {
        throw PreconditionError("restrict: " + std::string(u < g.size() ? g.name_of(u) : "?")
                                + " is not a unit of \"" + g.name() + "\"");
      }
    }
    auto   in = [&](Elem x) {
      return std::binary_search(units.begin(), units.end(), x);
    };
    Subset members;
    for (Elem a = 0; a < g.size(); ++a) {
      if (in(g.left_unit(a)) && in(g.right_unit(a))) {
        members.push_back(a);
      }
    }
    return subgroupoid(g, members, g.name() + "|F");
  }

  Groupoid disjoint_union(Groupoid const& g1, Groupoid const& g2) {
    RawGroupoid r;
    r.name = g1.name() + "+" + g2.name();
    auto add = [&r](Groupoid const& g, std::string const& tag) {
      RawGroupoid part = g.raw();
      for (auto& x : part.elements) {
        r.elements.push_back(tag + x);
      }
      for (auto& u : part.units) {
        r.units.push_back(tag + u);
      }
      for (auto& [a, b] : part.inverse) {
        r.inverse.emplace_back(tag + a, tag + b);
      }
      for (auto& [a, b, c] : part.compose) {
        r.compose.push_back({tag + a, tag + b, tag + c});
      }
    };
    add(g1, "L:");
    add(g2, "R:");
    return validate(r);
  }

  namespace {
    std::string tuple_name(std::string const& a, std::string const& b) {
      return "(" + a + "," + b + ")";
    }
  }  // namespace

  Groupoid cartesian_product(Groupoid const& g1, Groupoid const& g2) {
    Domain const d1 = g1.domain(), d2 = g2.domain();
    // (m1 x m2)(id x sigma x id) : G1*G2*G1*G2 -o G1*G2, with
    // sigma : G2 x G1 -o G1 x G2.
    FinRel const shuffle = product(product(identity(d1), flip(d2, d1)),
                                   identity(d2));
    FinRel const m = compose(product(g1.multiplication(), g2.multiplication()),
                             shuffle);
    RawGroupoid  r;
    r.name = g1.name() + "x" + g2.name();
    for (Elem a = 0; a < g1.size(); ++a) {
      for (Elem b = 0; b < g2.size(); ++b) {
        std::string n = tuple_name(g1.name_of(a), g2.name_of(b));
        r.elements.push_back(n);
        if (g1.is_unit(a) && g2.is_unit(b)) {
          r.units.push_back(n);
        }
        r.inverse.emplace_back(
            n, tuple_name(g1.name_of(g1.inverse(a)), g2.name_of(g2.inverse(b))));
      }
    }
    for (auto const& [out, in] : m.graph()) {
      auto o = m.target().decode(out);
      auto i = m.source().decode(in);
      r.compose.push_back({tuple_name(g1.name_of(i[0]), g2.name_of(i[1])),
                           tuple_name(g1.name_of(i[2]), g2.name_of(i[3])),
                           tuple_name(g1.name_of(o[0]), g2.name_of(o[1]))});
    }
    return validate(r);
  }

  GroupTable isotropy_group(Groupoid const& g, Elem unit) {
    Subset                          iso = isotropy(g, unit);
    std::vector<GroupTable::Triple> table;
    for (Elem a : iso) {
      for (Elem b : iso) {
        table.push_back(
            {g.name_of(a), g.name_of(b), g.name_of(g.multiply(a, b))});
      }
    }
    return GroupTable(g.name() + "_" + g.name_of(unit),
                      g.names(iso),
                      g.name_of(unit),
                      table);
  }

  TransitiveDecomposition decompose_transitive(Groupoid const& g, Elem base) {
    if (!is_transitive(g)) {
      throw PreconditionError("decompose_transitive: \"" + g.name()
                              + "\" is not transitive");
    }
    if (base >= g.size() || !g.is_unit(base)) {
      throw PreconditionError("decompose_transitive: base is not a unit");
    }
    TransitiveDecomposition d{base,
                              g.units(),
                              isotropy_group(g, base),
                              {},
                              Groupoid(),
                              {}};
    for (Elem x : d.units) {
      if (x == base) {
        d.section.push_back(base);
        continue;
      }
      Elem p = no_elem;
      for (Elem a : g.left_fiber(base)) {
        if (g.right_unit(a) == x) {
          p = a;
          break;
        }
      }
      d.section.push_back(p);
    }
    d.product = product_form(g.names(d.units), d.group);
    d.iso.assign(d.product.size(), no_elem);
    for (std::size_t i = 0; i < d.units.size(); ++i) {
      for (Elem h = 0; h < d.group.size(); ++h) {
        Elem gh = g.index(d.group.name_of(h));
        for (std::size_t j = 0; j < d.units.size(); ++j) {
          Elem target = g.multiply(g.multiply(g.inverse(d.section[i]), gh),
                                   d.section[j]);
          Elem source = d.product.index(product_form_name(
              g.name_of(d.units[i]), d.group.name_of(h), g.name_of(d.units[j])));
          d.iso[source] = target;
        }
      }
    }
    if (!is_isomorphism(d.product, g, d.iso)) {
      throw std::logic_error("decompose_transitive: product map is not an "
                             "isomorphism");
    }
    return d;
  }

  Groupoid orbit_relation(Groupoid const& g) {
    std::vector<std::vector<std::string>> blocks;
    for (auto const& o : orbits(g)) {
      blocks.push_back(g.names(o));
    }
    return equivalence_groupoid(g.names(g.units()), blocks)
        .renamed("R(" + g.name() + ")");
  }

  bool is_isomorphism(Groupoid const&          a,
                      Groupoid const&          b,
                      std::vector<Elem> const& map) {
    if (a.size() != b.size() || map.size() != a.size()) {
      return false;
    }
    std::vector<char> hit(b.size(), 0);
    for (Elem x : map) {
      if (x >= b.size() || hit[x]) {
        return false;
      }
      hit[x] = 1;
    }
    for (Elem x = 0; x < a.size(); ++x) {
      if (a.is_unit(x) != b.is_unit(map[x])
          || map[a.inverse(x)] != b.inverse(map[x])) {
        return false;
      }
      for (Elem y = 0; y < a.size(); ++y) {
        Elem xy = a.product_or_none(x, y);
        Elem im = b.product_or_none(map[x], map[y]);
        if ((xy == no_elem) != (im == no_elem)
            || (xy != no_elem && map[xy] != im)) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<Elem>> find_isomorphism(Groupoid const& a,
                                                    Groupoid const& b) {
    if (a.size() != b.size() || a.units().size() != b.units().size()) {
      return std::nullopt;
    }
    std::size_t const n = a.size();
    std::vector<Elem> map(n, no_elem);
    std::vector<char> used(n, 0);
    // Partial consistency on assigned elements.
    auto consistent = [&](Elem x) {
      Elem fx = map[x];
      if (a.is_unit(x) != b.is_unit(fx)) {
        return false;
      }
      Elem sx = a.inverse(x);
      if (map[sx] != no_elem && map[sx] != b.inverse(fx)) {
        return false;
      }
      for (Elem y = 0; y < n; ++y) {
        if (map[y] == no_elem) {
          continue;
        }
        for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
          Elem pq = a.product_or_none(p, q);
          Elem im = b.product_or_none(map[p], map[q]);
          if ((pq == no_elem) != (im == no_elem)) {
            return false;
          }
          if (pq != no_elem && map[pq] != no_elem && map[pq] != im) {
            return false;
          }
        }
      }
      return true;
    };
    std::function<bool(Elem)> search = [&](Elem x) -> bool {
      if (x == n) {
        return is_isomorphism(a, b, map);
      }
      for (Elem y = 0; y < n; ++y) {
        if (used[y]) {
          continue;
        }
        map[x]  = y;
        used[y] = 1;
        if (consistent(x) && search(x + 1)) {
          return true;
        }
        used[y] = 0;
        map[x]  = no_elem;
      }
      return false;
    };
    if (search(0)) {
      return map;
    }
    return std::nullopt;
  }

}  // namespace relgroupoid
