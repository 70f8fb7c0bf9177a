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

#include "relgroupoid/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace relgroupoid {

  std::string_view to_string(ActionLaw law) {
    switch (law) {
      case ActionLaw::structure:
        return "structure";
      case ActionLaw::composition:
        return "Phi(m x id) = Phi(id x Phi)";
      case ActionLaw::unit:
        return "Phi(e x id) = id";
      case ActionLaw::derived:
        return "derived";
      case ActionLaw::classical:
        return "classical";
    }
    return "unknown";
  }

  ActionError::ActionError(ActionLaw law, std::string const& message)
      : Error("action law " + std::string(to_string(law)) + " fails: "
              + message),
        _law(law) {}

  struct Action::Data {
    Groupoid                  groupoid;
    UniversePtr               carrier;
    std::vector<ActionTriple> triples;
    std::vector<Elem>         rho;
    std::vector<Elem>         table;  // gamma * |X| + x
  };

  Action::Action(std::shared_ptr<Data const> d) : _data(std::move(d)) {}

  Groupoid const& Action::groupoid() const noexcept {
    return _data->groupoid;
  }
  UniversePtr const& Action::carrier() const noexcept {
    return _data->carrier;
  }
  std::size_t Action::carrier_size() const noexcept {
    return _data->carrier->size();
  }
  std::vector<ActionTriple> const& Action::triples() const noexcept {
    return _data->triples;
  }
  std::vector<std::array<std::string, 3>> Action::named_triples() const {
    std::vector<std::array<std::string, 3>> out;
    for (auto const& [y, g, x] : triples()) {
      out.push_back(
          {carrier()->name(y), groupoid().name_of(g), carrier()->name(x)});
    }
    return out;
  }
  Elem Action::apply(Elem gamma, Elem x) const {
    return _data->table.at(gamma * carrier_size() + x);
  }
  Elem Action::base(Elem x) const {
    return _data->rho.at(x);
  }
  std::vector<Elem> const& Action::base_map() const noexcept {
    return _data->rho;
  }

  namespace {

    FinRel action_relation(Groupoid const&                  g,
                           UniversePtr const&               x,
                           std::vector<ActionTriple> const& triples) {
      Domain const      gx({g.universe(), x});
      std::vector<Pair> pairs;
      for (auto const& t : triples) {
        std::array<Elem, 2> in{t[1], t[2]};
        pairs.emplace_back(t[0], gx.encode(in));
      }
      return FinRel(gx, Domain(x), std::move(pairs));
    }

    std::optional<std::pair<ActionLaw, std::string>>
    compare(FinRel const& lhs, FinRel const& rhs, ActionLaw law) {
      auto diff = first_difference(lhs, rhs);
      if (!diff) {
        return std::nullopt;
      }
      return std::pair{law,
                       lhs.render(diff->first) + " lies only in the "
                           + (diff->second ? "left" : "right") + " side"};
    }

  }  // namespace

  FinRel Action::relation() const {
    return action_relation(groupoid(), carrier(), triples());
  }

  bool Action::operator==(Action const& other) const noexcept {
    return _data == other._data
           || (triples() == other.triples() && groupoid() == other.groupoid()
               && *carrier() == *other.carrier());
  }

  bool Action::operator<(Action const& other) const noexcept {
    return triples() < other.triples();
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::pair<ActionLaw, std::string>>
  check_action(Groupoid const&                  g,
               UniversePtr const&               x,
               std::vector<ActionTriple> const& triples) {
    std::size_t const nx = x->size();
    for (auto const& [y, gamma, p] : triples) {
      if (y >= nx || p >= nx || gamma >= g.size()) {
        return std::pair{ActionLaw::structure,
                         std::string("triple outside X x G x X")};
      }
    }
    FinRel const phi = action_relation(g, x, triples);
    FinRel const idx = identity(Domain(x));
    if (auto v = compare(compose(phi, product(g.multiplication(), idx)),
                         compose(phi, product(identity(g.domain()), phi)),
                         ActionLaw::composition)) {
      return v;
    }
    if (auto v = compare(
            compose(phi, product(g.unit_relation(), idx)), idx, ActionLaw::unit)) {
      return v;
    }

    // Consequences: a base map rho with Phi single valued exactly on
    // e_R(gamma) = rho(x), landing over e_L(gamma).
    std::vector<Elem> rho(nx, no_elem);
    std::vector<Elem> table(g.size() * nx, no_elem);
    for (auto const& [y, gamma, p] : triples) {
      Elem& slot = table[gamma * nx + p];
      if (slot != no_elem) {
        return std::pair{ActionLaw::derived,
                         "not single valued at (" + g.name_of(gamma) + ", "
                             + x->name(p) + ")"};
      }
      slot = y;
      if (g.is_unit(gamma) && y == p) {
        if (rho[p] != no_elem) {
          return std::pair{ActionLaw::derived,
                           "two units fix " + x->name(p)};
        }
        rho[p] = gamma;
      }
    }
    for (Elem p = 0; p < nx; ++p) {
      if (rho[p] == no_elem) {
        return std::pair{ActionLaw::derived, "no unit fixes " + x->name(p)};
      }
    }
    for (Elem gamma = 0; gamma < g.size(); ++gamma) {
      for (Elem p = 0; p < nx; ++p) {
        Elem y       = table[gamma * nx + p];
        bool defined = g.right_unit(gamma) == rho[p];
        if ((y != no_elem) != defined) {
          return std::pair{ActionLaw::derived,
                           "domain is not e_R(gamma) = rho(x) at ("
                               + g.name_of(gamma) + ", " + x->name(p) + ")"};
        }
        if (defined && rho[y] != g.left_unit(gamma)) {
          return std::pair{ActionLaw::derived,
                           "rho(gamma x) != e_L(gamma) at ("
                               + g.name_of(gamma) + ", " + x->name(p) + ")"};
        }
      }
    }
    return std::nullopt;
  }

  Action validate_action(Groupoid const&           g,
                         UniversePtr               x,
                         std::vector<ActionTriple> triples) {
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    if (auto v = check_action(g, x, triples)) {
      throw ActionError(v->first, v->second);
    }
    auto              data = std::make_shared<Action::Data>();
    std::size_t const nx   = x->size();
    data->groupoid         = g;
    data->carrier          = std::move(x);
    data->rho.assign(nx, no_elem);
    data->table.assign(g.size() * nx, no_elem);
    for (auto const& [y, gamma, p] : triples) {
      data->table[gamma * nx + p] = y;
      if (g.is_unit(gamma) && y == p) {
        data->rho[p] = gamma;
      }
    }
    data->triples = std::move(triples);
    return Action(std::move(data));
  }

  Action validate_action(Groupoid const&                                g,
                         Names const&                                   x,
                         std::vector<std::array<std::string, 3>> const& triples) {
    UniversePtr               u = make_universe("X", x);
    std::vector<ActionTriple> idx;
    for (auto const& [y, gamma, p] : triples) {
      idx.push_back({u->index(y), g.index(gamma), u->index(p)});
    }
    return validate_action(g, std::move(u), std::move(idx));
  }

  Action classical_to_relational(Groupoid const&        g,
                                 UniversePtr const&     x,
                                 ClassicalAction const& a) {
    std::size_t const nx = x->size();
    auto fail = [](std::string msg) {
      return ActionError(ActionLaw::classical, msg);
    };
    if (a.rho.size() != nx || a.table.size() != g.size() * nx) {
      throw fail("table sizes do not match G and X");
    }
    for (Elem p = 0; p < nx; ++p) {
      if (a.rho[p] >= g.size() || !g.is_unit(a.rho[p])) {
        throw fail("rho(" + x->name(p) + ") is not a unit");
      }
    }
    std::vector<ActionTriple> triples;
    for (Elem gamma = 0; gamma < g.size(); ++gamma) {
      for (Elem p = 0; p < nx; ++p) {
        Elem y       = a.table[gamma * nx + p];
        bool defined = g.right_unit(gamma) == a.rho[p];
        if ((y != no_elem) != defined) {
          throw fail("action is not defined exactly on e_R(gamma) = rho(x) at ("
                     + g.name_of(gamma) + ", " + x->name(p) + ")");
        }
        if (!defined) {
          continue;
        }
        if (y >= nx || a.rho[y] != g.left_unit(gamma)) {
          throw fail("rho(gamma x) != e_L(gamma) at (" + g.name_of(gamma)
                     + ", " + x->name(p) + ")");
        }
        triples.push_back({y, gamma, p});
      }
    }
    for (Elem p = 0; p < nx; ++p) {
      if (a.table[a.rho[p] * nx + p] != p) {
        throw fail("rho(x) x != x at " + x->name(p));
      }
    }
    for (auto const& [g1, g2] : composable_pairs(g)) {
      for (Elem p = 0; p < nx; ++p) {
        Elem y = a.table[g2 * nx + p];
        if (y == no_elem) {
          continue;
        }
        if (a.table[g1 * nx + y] != a.table[g.multiply(g1, g2) * nx + p]) {
          throw fail("(g1 g2) x != g1 (g2 x) at (" + g.name_of(g1) + ", "
                     + g.name_of(g2) + ", " + x->name(p) + ")");
        }
      }
    }
    return validate_action(g, x, std::move(triples));
  }

  ClassicalAction as_mapping(Action const& phi) {
    ClassicalAction out{phi.base_map(), {}};
    Groupoid const& g = phi.groupoid();
    for (Elem gamma = 0; gamma < g.size(); ++gamma) {
      for (Elem p = 0; p < phi.carrier_size(); ++p) {
        out.table.push_back(phi.apply(gamma, p));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Examples
  ////////////////////////////////////////////////////////////////////////

  Action left_multiplication(Groupoid const& g) {
    UniversePtr               x = make_universe("X", g.universe()->elements());
    std::vector<ActionTriple> t;
    for (auto const& [a, b] : composable_pairs(g)) {
      t.push_back({g.multiply(a, b), a, b});
    }
    return validate_action(g, x, std::move(t));
  }

  Action unit_action(Groupoid const& g) {
    UniversePtr               x = make_universe("X", g.names(g.units()));
    std::vector<ActionTriple> t;
    for (Elem a = 0; a < g.size(); ++a) {
      t.push_back({x->index(g.name_of(g.left_unit(a))),
                   a,
                   x->index(g.name_of(g.right_unit(a)))});
    }
    return validate_action(g, x, std::move(t));
  }

  Action conjugation_action(Groupoid const& g) {
    Subset const              bundle = isotropy_bundle(g);
    UniversePtr               x      = make_universe("X", g.names(bundle));
    std::vector<ActionTriple> t;
    for (Elem a = 0; a < g.size(); ++a) {
      for (Elem k : isotropy(g, g.right_unit(a))) {
        Elem c = g.multiply(g.multiply(a, k), g.inverse(a));
        t.push_back({x->index(g.name_of(c)), a, x->index(g.name_of(k))});
      }
    }
    return validate_action(g, x, std::move(t));
  }

  Action group_action_relation(GroupAction const& a) {
    Groupoid const            g = group_groupoid(a.group());
    std::vector<ActionTriple> t;
    for (Elem h = 0; h < a.group().size(); ++h) {
      Elem gh = g.index(a.group().name_of(h));
      for (Elem p = 0; p < a.carrier()->size(); ++p) {
        t.push_back({a.act(h, p), gh, p});
      }
    }
    return validate_action(g, a.carrier(), std::move(t));
  }

  ////////////////////////////////////////////////////////////////////////
  // Actions and morphisms
  ////////////////////////////////////////////////////////////////////////

  Morphism action_to_pair_morphism(Action const& phi) {
    Universe const& x  = *phi.carrier();
    Groupoid const  sq = pair_groupoid(x.elements()).renamed("X^2");
    MorphismGraph   graph;
    for (auto const& [y, gamma, p] : phi.triples()) {
      graph.emplace_back(sq.index(pair_name(x.name(y), x.name(p))), gamma);
    }
    return validate_morphism(phi.groupoid(), sq, std::move(graph));
  }

  Action morphism_to_action(Morphism const& h, UniversePtr const& x) {
    Groupoid const& sq = h.target();
    if (!(sq == pair_groupoid(x->elements()))) {
      throw PreconditionError(
          "morphism_to_action: target is not the pair groupoid of X");
    }
    std::vector<std::pair<Elem, Elem>> decode(sq.size());
    for (Elem y = 0; y < x->size(); ++y) {
      for (Elem p = 0; p < x->size(); ++p) {
        decode[sq.index(pair_name(x->name(y), x->name(p)))] = {y, p};
      }
    }
    std::vector<ActionTriple> t;
    for (auto const& [delta, gamma] : h.graph()) {
      t.push_back({decode[delta].first, gamma, decode[delta].second});
    }
    return validate_action(h.source(), x, std::move(t));
  }

  Morphism right_commuting_to_morphism(Action const& phi, Groupoid const& delta) {
    if (phi.carrier()->elements() != delta.universe()->elements()) {
      throw PreconditionError(
          "right_commuting_to_morphism: carrier is not the target groupoid");
    }
    Groupoid const& g = phi.groupoid();
    // The carrier is sorted like delta, so indices agree.
    for (Elem gamma = 0; gamma < g.size(); ++gamma) {
      for (auto const& [d1, d2] : composable_pairs(delta)) {
        Elem lhs = phi.apply(gamma, delta.multiply(d1, d2));
        Elem y   = phi.apply(gamma, d1);
        Elem rhs = y == no_elem ? no_elem : delta.product_or_none(y, d2);
        if (lhs != rhs) {
          throw PreconditionError(
              "right_commuting_to_morphism: Phi(id x m) != m(Phi x id) at ("
              + g.name_of(gamma) + ", " + delta.name_of(d1) + ", "
              + delta.name_of(d2) + ")");
        }
      }
    }
    MorphismGraph graph;
    for (Elem gamma = 0; gamma < g.size(); ++gamma) {
      for (Elem f : delta.units()) {
        Elem y = phi.apply(gamma, f);
        if (y != no_elem) {
          graph.emplace_back(y, gamma);
        }
      }
    }
    return validate_morphism(g, delta, std::move(graph));
  }

  Action pullback_action(Morphism const& h, Action const& phi) {
    if (!(h.target() == phi.groupoid())) {
      throw UniverseMismatch(h.target().name(), phi.groupoid().name());
    }
    std::vector<ActionTriple> t;
    for (auto const& [gamma, delta] : h.graph()) {
      for (Elem p = 0; p < phi.carrier_size(); ++p) {
        Elem y = phi.apply(gamma, p);
        if (y != no_elem) {
          t.push_back({y, delta, p});
        }
      }
    }
    return validate_action(h.source(), phi.carrier(), std::move(t));
  }

  bool is_equivariant(std::vector<Elem> const& f,
                      Action const&            phi,
                      Action const&            psi) {
    if (!(phi.groupoid() == psi.groupoid()) || f.size() != phi.carrier_size()) {
      return false;
    }
    for (Elem p : f) {
      if (p >= psi.carrier_size()) {
        return false;
      }
    }
    for (Elem gamma = 0; gamma < phi.groupoid().size(); ++gamma) {
      for (Elem p = 0; p < phi.carrier_size(); ++p) {
        Elem y = phi.apply(gamma, p);
        Elem z = psi.apply(gamma, f[p]);
        if ((y == no_elem) != (z == no_elem)) {
          return false;
        }
        if (y != no_elem && f[y] != z) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<Elem>> find_equivariant_bijection(Action const& phi,
                                                              Action const& psi) {
    std::size_t const n = phi.carrier_size();
    if (n != psi.carrier_size() || !(phi.groupoid() == psi.groupoid())) {
      return std::nullopt;
    }
    std::vector<Elem> f(n, no_elem);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, Elem p) -> bool {
      if (p == n) {
        return is_equivariant(f, phi, psi);
      }
      for (Elem q = 0; q < n; ++q) {
        if (used[q] || psi.base(q) != phi.base(p)) {
          continue;
        }
        used[q] = true;
        f[p]    = q;
        if (self(self, p + 1)) {
          return true;
        }
        used[q] = false;
      }
      return false;
    };
    if (rec(rec, 0)) {
      return f;
    }
    return std::nullopt;
  }

  ActionGroupoid action_groupoid(Action const& phi) {
    Groupoid const& g = phi.groupoid();
    Universe const& x = *phi.carrier();
    auto nm = [&](Elem gamma, Elem p) {
      return pair_name(g.name_of(gamma), x.name(p));
    };
    RawGroupoid r;
    r.name = g.name() + "xX";
    for (Elem p = 0; p < x.size(); ++p) {
      r.units.push_back(nm(phi.base(p), p));
      for (Elem gamma : g.right_fiber(phi.base(p))) {
        Elem y = phi.apply(gamma, p);
        r.elements.push_back(nm(gamma, p));
        r.inverse.emplace_back(nm(gamma, p), nm(g.inverse(gamma), y));
        for (Elem g1 : g.right_fiber(g.left_unit(gamma))) {
          r.compose.push_back(
              {nm(g1, y), nm(gamma, p), nm(g.multiply(g1, gamma), p)});
        }
      }
    }
    ActionGroupoid out{validate(r), {}};
    out.pairs.resize(out.groupoid.size());
    for (Elem p = 0; p < x.size(); ++p) {
      for (Elem gamma : g.right_fiber(phi.base(p))) {
        out.pairs[out.groupoid.index(nm(gamma, p))] = {gamma, p};
      }
    }
    return out;
  }

  ActionFunctor action_groupoid_functor(Morphism const& h) {
    Groupoid const& d   = h.target();
    Action          phi = pullback_action(h, unit_action(d));
    ActionGroupoid  ag  = action_groupoid(phi);
    std::vector<Elem> functor;
    for (auto const& [gamma, f] : ag.pairs) {
      // f indexes the units of d in the carrier; h_f^R(gamma).
      Elem unit  = d.index(phi.carrier()->name(f));
      Elem found = no_elem;
      for (Elem delta : h.related(gamma)) {
        if (d.right_unit(delta) == unit) {
          found = delta;
        }
      }
      if (found == no_elem) {
        throw std::logic_error("action_groupoid_functor: fiber map undefined");
      }
      functor.push_back(found);
    }
    if (!is_functor(ag.groupoid, d, functor)) {
      throw std::logic_error("action_groupoid_functor: K is not a functor");
    }
    return {phi, ag, functor};
  }

  Morphism functor_to_zm(Action const&            phi,
                         Groupoid const&          delta,
                         std::vector<Elem> const& k) {
    if (phi.carrier()->elements() != delta.names(delta.units())) {
      throw PreconditionError("functor_to_zm: phi does not act on E_D");
    }
    ActionGroupoid const ag = action_groupoid(phi);
    if (!is_functor(ag.groupoid, delta, k)) {
      throw PreconditionError("functor_to_zm: K is not a functor");
    }
    for (Elem p = 0; p < phi.carrier_size(); ++p) {
      Elem unit = ag.groupoid.index(
          pair_name(phi.groupoid().name_of(phi.base(p)), phi.carrier()->name(p)));
      if (delta.name_of(k[unit]) != phi.carrier()->name(p)) {
        throw PreconditionError("functor_to_zm: K(rho(f), f) != f at "
                                + phi.carrier()->name(p));
      }
    }
    MorphismGraph graph;
    for (Elem a = 0; a < ag.groupoid.size(); ++a) {
      graph.emplace_back(k[a], ag.pairs[a].first);
    }
    return validate_morphism(phi.groupoid(), delta, std::move(graph));
  }

  ////////////////////////////////////////////////////////////////////////
  // Cosets and quotients
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Classes of gamma1 ~ gamma2 iff s(gamma1) gamma2 in sub, named by
    // least member.
    std::pair<UniversePtr, std::vector<Elem>> left_cosets(Groupoid const& g,
                                                          Subset const&   sub) {
      std::vector<Elem> least(g.size(), no_elem);
      for (Elem a = 0; a < g.size(); ++a) {
        if (least[a] != no_elem) {
          continue;
        }
        for (Elem b : g.left_fiber(g.left_unit(a))) {
          Elem q = g.multiply(g.inverse(a), b);
          if (std::binary_search(sub.begin(), sub.end(), q)) {
            least[b] = a;
          }
        }
      }
      std::vector<std::string> names;
      for (Elem a = 0; a < g.size(); ++a) {
        if (least[a] == a) {
          names.push_back("[" + g.name_of(a) + "]");
        }
      }
      UniversePtr       u = make_universe("G/H", names);
      std::vector<Elem> proj;
      for (Elem a = 0; a < g.size(); ++a) {
        proj.push_back(u->index("[" + g.name_of(least[a]) + "]"));
      }
      return {u, proj};
    }

  }  // namespace

  CosetSpace coset_space(Groupoid const& g, Subset const& sub) {
    if (!is_wide(g, sub)) {
      throw PreconditionError("coset_space: subset is not a wide subgroupoid");
    }
    auto [classes, proj] = left_cosets(g, sub);
    std::vector<ActionTriple> t;
    for (auto const& [a, b] : composable_pairs(g)) {
      t.push_back({proj[g.multiply(a, b)], a, proj[b]});
    }
    Action action = validate_action(g, classes, std::move(t));
    return {g, sub, classes, proj, action};
  }

  QuotientGroupoid quotient_groupoid(Groupoid const& g, Subset const& sub) {
    if (!is_wide(g, sub)) {
      throw PreconditionError("quotient_groupoid: subset is not wide");
    }
    for (Elem k : sub) {
      if (g.left_unit(k) != g.right_unit(k)) {
        throw PreconditionError(
            "quotient_groupoid: subset leaves the isotropy bundle at "
            + g.name_of(k));
      }
      for (Elem a : g.right_fiber(g.left_unit(k))) {
        if (a == k) {
          continue;
        }
        Elem c = g.multiply(g.multiply(a, k), g.inverse(a));
        if (!std::binary_search(sub.begin(), sub.end(), c)) {
          throw PreconditionError(
              "quotient_groupoid: subset is not normal at " + g.name_of(k));
        }
      }
    }
    auto [classes, proj] = left_cosets(g, sub);
    RawGroupoid r;
    r.name     = g.name() + "/N";
    r.elements = classes->elements();
    std::set<std::pair<Elem, Elem>> inv;
    for (Elem a = 0; a < g.size(); ++a) {
      inv.emplace(proj[a], proj[g.inverse(a)]);
      if (g.is_unit(a)) {
        r.units.push_back(classes->name(proj[a]));
      }
    }
    std::map<Elem, Elem> inv_map;
    for (auto const& [c, ci] : inv) {
      if (!inv_map.emplace(c, ci).second) {
        throw std::logic_error("quotient_groupoid: s is not well defined");
      }
      r.inverse.emplace_back(classes->name(c), classes->name(ci));
    }
    std::sort(r.units.begin(), r.units.end());
    r.units.erase(std::unique(r.units.begin(), r.units.end()), r.units.end());
    std::set<std::array<Elem, 3>> triples;
    for (auto const& [a, b] : composable_pairs(g)) {
      triples.insert({proj[a], proj[b], proj[g.multiply(a, b)]});
    }
    for (auto const& [a, b, ab] : triples) {
      r.compose.push_back(
          {classes->name(a), classes->name(b), classes->name(ab)});
    }
    Groupoid      q = validate(r);
    MorphismGraph graph;
    std::vector<Elem> cls;
    for (Elem a = 0; a < g.size(); ++a) {
      Elem c = q.index(classes->name(proj[a]));
      cls.push_back(c);
      graph.emplace_back(c, a);
    }
    return {q, validate_morphism(g, q, std::move(graph)), std::move(cls)};
  }

  Homogeneous homogeneous_identification(Action const&            phi,
                                         std::vector<Elem> const& p) {
    Groupoid const& g     = phi.groupoid();
    auto const&     units = g.units();
    if (p.size() != units.size()) {
      throw PreconditionError("homogeneous_identification: one point per unit");
    }
    std::vector<Elem> point(g.size(), no_elem);  // unit -> p(unit)
    for (std::size_t i = 0; i < units.size(); ++i) {
      if (p[i] >= phi.carrier_size() || phi.base(p[i]) != units[i]) {
        throw PreconditionError(
            "homogeneous_identification: p is not a section of rho at "
            + g.name_of(units[i]));
      }
      point[units[i]] = p[i];
    }
    Subset sub;
    for (Elem a = 0; a < g.size(); ++a) {
      if (phi.apply(a, point[g.right_unit(a)]) == point[g.left_unit(a)]) {
        sub.push_back(a);
      }
    }
    CosetSpace        cosets = coset_space(g, sub);
    std::vector<Elem> psi(phi.carrier_size(), no_elem);
    for (Elem a = 0; a < g.size(); ++a) {
      Elem x = phi.apply(a, point[g.right_unit(a)]);
      if (psi[x] == no_elem) {
        psi[x] = cosets.projection[a];
      }
    }
    std::vector<Elem> sorted = psi;
    std::sort(sorted.begin(), sorted.end());
    if (std::find(psi.begin(), psi.end(), no_elem) != psi.end()
        || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()
        || sorted.size() != cosets.classes->size()) {
      throw PreconditionError(
          "homogeneous_identification: action is not transitive");
    }
    std::vector<Pair> pairs;
    for (Elem x = 0; x < psi.size(); ++x) {
      pairs.emplace_back(psi[x], x);
    }
    FinRel const psi_rel(Domain(phi.carrier()), Domain(cosets.classes), pairs);
    FinRel const lhs = compose(psi_rel, phi.relation());
    FinRel const rhs = compose(cosets.action.relation(),
                               product(identity(g.domain()), psi_rel));
    if (!(lhs == rhs)) {
      throw std::logic_error("homogeneous_identification: psi not equivariant");
    }
    return {std::move(sub), std::move(cosets), std::move(psi)};
  }

  InducedAction induced_action(Groupoid const& g,
                               Subset const&   sub,
                               Action const&   phi) {
    Groupoid const k = subgroupoid(g, sub, "K");
    if (!(phi.groupoid() == k)) {
      throw PreconditionError("induced_action: phi does not act on sub");
    }
    Universe const& x = *phi.carrier();
    // Y^ = {(gamma, x) : e_R(gamma) = rho(x)}.
    std::map<std::pair<Elem, Elem>, std::size_t> slot;
    std::vector<std::pair<Elem, Elem>>           members;
    for (Elem a = 0; a < g.size(); ++a) {
      for (Elem p = 0; p < x.size(); ++p) {
        Elem rho = g.index(k.name_of(phi.base(p)));
        if (g.right_unit(a) == rho) {
          slot.emplace(std::pair{a, p}, members.size());
          members.emplace_back(a, p);
        }
      }
    }
    std::vector<std::size_t> parent(members.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
      while (parent[i] != i) {
        i = parent[i] = parent[parent[i]];
      }
      return i;
    };
    // (gamma k, x) ~ (gamma, k x).
    for (Elem a = 0; a < g.size(); ++a) {
      for (Elem p = 0; p < x.size(); ++p) {
        for (Elem kk = 0; kk < k.size(); ++kk) {
          Elem y = phi.apply(kk, p);
          if (y == no_elem) {
            continue;
          }
          Elem ak = g.product_or_none(a, g.index(k.name_of(kk)));
          if (ak == no_elem) {
            continue;
          }
          std::size_t i = find(slot.at({ak, p}));
          std::size_t j = find(slot.at({a, y}));
          if (i != j) {
            parent[i] = j;
          }
        }
      }
    }
    auto name = [&](std::size_t i) {
      return pair_name(g.name_of(members[i].first), x.name(members[i].second));
    };
    std::map<std::size_t, std::string> label;  // root -> least member name
    for (std::size_t i = 0; i < members.size(); ++i) {
      auto [it, fresh] = label.emplace(find(i), name(i));
      if (!fresh && name(i) < it->second) {
        it->second = name(i);
      }
    }
    std::vector<std::string> names;
    for (auto const& [root, n] : label) {
      names.push_back("[" + n + "]");
    }
    UniversePtr classes = make_universe("Y", names);
    auto cls = [&](std::size_t i) {
      return classes->index("[" + label.at(find(i)) + "]");
    };
    std::set<ActionTriple> t;
    for (std::size_t i = 0; i < members.size(); ++i) {
      auto const& [a, p] = members[i];
      for (Elem b : g.right_fiber(g.left_unit(a))) {
        t.insert({cls(slot.at({g.multiply(b, a), p})), b, cls(i)});
      }
    }
    Action action = validate_action(
        g, classes, std::vector<ActionTriple>(t.begin(), t.end()));
    return {classes, action};
  }

  ////////////////////////////////////////////////////////////////////////
  // Transitive groupoids
  ////////////////////////////////////////////////////////////////////////

  Action product_form_action(Names const& e, GroupAction const& a) {
    Groupoid const    g = product_form(e, a.group());
    GroupTable const& t = a.group();
    Universe const&   z = *a.carrier();
    Names             carrier;
    for (auto const& x : e) {
      for (Elem p = 0; p < z.size(); ++p) {
        carrier.push_back(pair_name(x, z.name(p)));
      }
    }
    std::vector<std::array<std::string, 3>> triples;
    for (auto const& e1 : e) {
      for (Elem h = 0; h < t.size(); ++h) {
        for (auto const& e2 : e) {
          for (Elem p = 0; p < z.size(); ++p) {
            triples.push_back({pair_name(e1, z.name(a.act(h, p))),
                               product_form_name(e1, t.name_of(h), e2),
                               pair_name(e2, z.name(p))});
          }
        }
      }
    }
    return validate_action(g, carrier, triples);
  }

  TransitiveClassification classify_transitive_action(Names const&        e,
                                                      GroupTable const&   t,
                                                      Action const&       phi,
                                                      std::optional<Elem> z0) {
    Groupoid const& g = phi.groupoid();
    if (!(g == product_form(e, t))) {
      throw PreconditionError(
          "classify_transitive_action: groupoid is not E x G x E");
    }
    if (phi.carrier_size() == 0) {
      throw PreconditionError("classify_transitive_action: empty carrier");
    }
    Elem const point = z0.value_or(0);
    if (point >= phi.carrier_size()) {
      throw PreconditionError("classify_transitive_action: z0 out of range");
    }
    std::string const& unit_g = t.name_of(t.unit());
    std::string        e0;
    for (auto const& x : e) {
      if (g.index(product_form_name(x, unit_g, x)) == phi.base(point)) {
        e0 = x;
      }
    }
    Elem const        base0 = phi.base(point);
    Universe const&   z     = *phi.carrier();
    Names             fiber;
    std::vector<Elem> fiber_idx;
    for (Elem p = 0; p < z.size(); ++p) {
      if (phi.base(p) == base0) {
        fiber.push_back(z.name(p));
        fiber_idx.push_back(p);
      }
    }
    std::vector<GroupTable::Triple> gt;
    for (Elem h = 0; h < t.size(); ++h) {
      Elem a = g.index(product_form_name(e0, t.name_of(h), e0));
      for (Elem p : fiber_idx) {
        gt.push_back({z.name(phi.apply(a, p)), t.name_of(h), z.name(p)});
      }
    }
    GroupAction reduced(t, fiber, gt);
    Action      model = product_form_action(e, reduced);

    // psi("(e,z~)") = Phi(e|1|e0, z~).
    Universe const&   mz = *model.carrier();
    std::vector<Elem> psi(mz.size(), no_elem);
    for (auto const& x : e) {
      Elem a = g.index(product_form_name(x, unit_g, e0));
      for (Elem p : fiber_idx) {
        psi[mz.index(pair_name(x, z.name(p)))] = phi.apply(a, p);
      }
    }
    std::vector<Elem> sorted = psi;
    std::sort(sorted.begin(), sorted.end());
    for (Elem i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i || sorted.size() != z.size()) {
        throw std::logic_error("classify_transitive_action: psi not bijective");
      }
    }
    std::vector<Pair> pairs;
    for (Elem i = 0; i < psi.size(); ++i) {
      pairs.emplace_back(psi[i], i);
    }
    FinRel const psi_rel(Domain(model.carrier()), Domain(phi.carrier()), pairs);
    // The model acts on a groupoid equal to g but with its own universe.
    FinRel const model_rel(
        Domain({g.universe(), model.carrier()}),
        Domain(model.carrier()),
        std::vector<Pair>(model.relation().graph()));
    if (!(compose(phi.relation(), product(identity(g.domain()), psi_rel))
          == compose(psi_rel, model_rel))) {
      throw std::logic_error(
          "classify_transitive_action: Phi(id x Psi) != Psi Phi~");
    }
    return {point, reduced, model, psi};
  }

  TransitiveClassification classify_transitive_action(Action const& phi) {
    Groupoid const& g = phi.groupoid();
    if (phi.carrier_size() == 0) {
      throw PreconditionError("classify_transitive_action: empty carrier");
    }
    auto const d = decompose_transitive(g, phi.base(0));
    std::vector<ActionTriple> t;
    for (Elem a = 0; a < d.product.size(); ++a) {
      for (Elem p = 0; p < phi.carrier_size(); ++p) {
        Elem y = phi.apply(d.iso[a], p);
        if (y != no_elem) {
          t.push_back({y, a, p});
        }
      }
    }
    Action transported = validate_action(d.product, phi.carrier(), std::move(t));
    return classify_transitive_action(
        g.names(d.units), d.group, transported, Elem{0});
  }

}  // namespace relgroupoid
