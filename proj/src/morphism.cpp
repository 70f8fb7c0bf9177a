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

#include "relgroupoid/morphism.hpp"

#include <algorithm>
#include <map>

#include "relgroupoid/action.hpp"
#include "relgroupoid/bisection.hpp"

namespace relgroupoid {

  std::string_view to_string(MorphismLaw law) {
    switch (law) {
      case MorphismLaw::structure:
        return "structure";
      case MorphismLaw::units:
        return "he = e";
      case MorphismLaw::inverse:
        return "hs = sh";
      case MorphismLaw::multiplicative:
        return "hm = m(h x h)";
      case MorphismLaw::derived:
        return "derived";
    }
    return "unknown";
  }

  MorphismError::MorphismError(MorphismViolation v)
      : Error("morphism law " + std::string(to_string(v.law)) + " fails: "
              + v.message),
        _violation(std::move(v)) {}

  struct Morphism::Data {
    Groupoid                       source;
    Groupoid                       target;
    MorphismGraph                  graph;
    std::vector<std::vector<Elem>> related;
    std::vector<Elem>              base;
    Subset                         domain;
    Subset                         image;
    Subset                         kernel;
  };

  Morphism::Morphism(std::shared_ptr<Data const> d) : _data(std::move(d)) {}

  Groupoid const& Morphism::source() const noexcept {
    return _data->source;
  }
  Groupoid const& Morphism::target() const noexcept {
    return _data->target;
  }
  MorphismGraph const& Morphism::graph() const noexcept {
    return _data->graph;
  }
  std::vector<Elem> const& Morphism::related(Elem g) const {
    return _data->related.at(g);
  }
  bool Morphism::contains(Elem delta, Elem gamma) const {
    auto const& r = related(gamma);
    return std::binary_search(r.begin(), r.end(), delta);
  }
  std::vector<Elem> const& Morphism::base_map() const noexcept {
    return _data->base;
  }
  Elem Morphism::base(Elem unit) const {
    Elem b = _data->base.at(unit);
    if (b == no_elem) {
      throw PreconditionError("base map: " + target().name_of(unit)
                              + " is not a unit");
    }
    return b;
  }
  Subset const& Morphism::domain() const noexcept {
    return _data->domain;
  }
  Subset const& Morphism::image() const noexcept {
    return _data->image;
  }
  Subset const& Morphism::kernel() const noexcept {
    return _data->kernel;
  }

  FinRel Morphism::relation() const {
    return FinRel(source().domain(),
                  target().domain(),
                  std::vector<Pair>(graph().begin(), graph().end()));
  }

  std::vector<std::string> Morphism::render() const {
    std::vector<std::string> out;
    for (auto const& [d, g] : graph()) {
      out.push_back("(" + target().name_of(d) + "; " + source().name_of(g)
                    + ")");
    }
    return out;
  }

  bool Morphism::operator==(Morphism const& other) const noexcept {
    return _data == other._data
           || (graph() == other.graph() && source() == other.source()
               && target() == other.target());
  }

  bool Morphism::operator<(Morphism const& other) const noexcept {
    return graph() < other.graph();
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::optional<MorphismViolation> range_check(Groupoid const&      g,
                                                 Groupoid const&      d,
                                                 MorphismGraph const& graph) {
      for (auto const& [delta, gamma] : graph) {
        if (delta >= d.size() || gamma >= g.size()) {
          return MorphismViolation{MorphismLaw::structure,
                                   "",
                                   "pair outside target x source"};
        }
      }
      return std::nullopt;
    }

    std::optional<MorphismViolation> compare(FinRel const& lhs,
                                             FinRel const& rhs,
                                             MorphismLaw   law) {
      auto diff = first_difference(lhs, rhs);
      if (!diff) {
        return std::nullopt;
      }
      std::string w = lhs.render(diff->first);
      return MorphismViolation{
          law,
          w,
          w + " lies only in the " + (diff->second ? "left" : "right")
              + " side"};
    }

  }  // namespace

  std::optional<MorphismViolation> check_morphism(Groupoid const&      g,
                                                  Groupoid const&      d,
                                                  MorphismGraph const& graph) {
    if (auto v = range_check(g, d, graph)) {
      return v;
    }
    FinRel const h(g.domain(),
                   d.domain(),
                   std::vector<Pair>(graph.begin(), graph.end()));
    if (auto v = compare(
            compose(h, g.unit_relation()), d.unit_relation(), MorphismLaw::units)) {
      return v;
    }
    if (auto v = compare(compose(h, g.inverse_relation()),
                         compose(d.inverse_relation(), h),
                         MorphismLaw::inverse)) {
      return v;
    }
    return compare(compose(h, g.multiplication()),
                   compose(d.multiplication(), product(h, h)),
                   MorphismLaw::multiplicative);
  }

  bool is_morphism_pointwise(Groupoid const&      g,
                             Groupoid const&      d,
                             MorphismGraph const& graph) {
    if (range_check(g, d, graph)) {
      return false;
    }
    std::vector<std::vector<Elem>> rel(g.size());
    for (auto const& [delta, gamma] : graph) {
      rel[gamma].push_back(delta);
    }
    for (auto& r : rel) {
      std::sort(r.begin(), r.end());
      r.erase(std::unique(r.begin(), r.end()), r.end());
    }
    // h e = e_D
    std::vector<Elem> hit;
    for (Elem u : g.units()) {
      for (Elem delta : rel[u]) {
        if (!d.is_unit(delta)) {
          return false;
        }
        hit.push_back(delta);
      }
    }
    std::sort(hit.begin(), hit.end());
    hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
    if (hit != d.units()) {
      return false;
    }
    // h s = s_D h
    for (Elem gamma = 0; gamma < g.size(); ++gamma) {
      std::vector<Elem> rhs;
      for (Elem delta : rel[gamma]) {
        rhs.push_back(d.inverse(delta));
      }
      std::sort(rhs.begin(), rhs.end());
      if (rhs != rel[g.inverse(gamma)]) {
        return false;
      }
    }
    // h m = m_D (h x h)
    std::vector<Elem> rhs;
    for (Elem a = 0; a < g.size(); ++a) {
      for (Elem b = 0; b < g.size(); ++b) {
        rhs.clear();
        for (Elem x : rel[a]) {
          for (Elem y : rel[b]) {
            Elem xy = d.product_or_none(x, y);
            if (xy != no_elem) {
              rhs.push_back(xy);
            }
          }
        }
        std::sort(rhs.begin(), rhs.end());
        rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
        Elem ab = g.product_or_none(a, b);
        if (ab == no_elem ? !rhs.empty() : rhs != rel[ab]) {
          return false;
        }
      }
    }
    return true;
  }

  Morphism validate_morphism(Groupoid const& g,
                             Groupoid const& d,
                             MorphismGraph   graph) {
    std::sort(graph.begin(), graph.end());
    graph.erase(std::unique(graph.begin(), graph.end()), graph.end());
    if (auto v = check_morphism(g, d, graph)) {
      throw MorphismError(*v);
    }
    auto data    = std::make_shared<Morphism::Data>();
    data->source = g;
    data->target = d;
    data->graph  = std::move(graph);
    data->related.assign(g.size(), {});
    for (auto const& [delta, gamma] : data->graph) {
      data->related[gamma].push_back(delta);
    }
    auto derived = [](std::string msg) {
      return MorphismError({MorphismLaw::derived, "", std::move(msg)});
    };

    data->base.assign(d.size(), no_elem);
    for (Elem f : d.units()) {
      for (Elem u : g.units()) {
        auto const& r = data->related[u];
        if (std::binary_search(r.begin(), r.end(), f)) {
          if (data->base[f] != no_elem) {
            throw derived("base map is not single valued at " + d.name_of(f));
          }
          data->base[f] = u;
        }
      }
      if (data->base[f] == no_elem) {
        throw derived("base map undefined at " + d.name_of(f));
      }
    }
    for (Elem gamma = 0; gamma < g.size(); ++gamma) {
      auto const& r = data->related[gamma];
      if (r.empty()) {
        continue;
      }
      data->domain.push_back(gamma);
      if (std::all_of(r.begin(), r.end(), [&](Elem x) { return d.is_unit(x); })) {
        data->kernel.push_back(gamma);
      }
      data->image.insert(data->image.end(), r.begin(), r.end());
    }
    std::sort(data->image.begin(), data->image.end());
    data->image.erase(std::unique(data->image.begin(), data->image.end()),
                      data->image.end());
    if (!is_union_of_components(g, data->domain)) {
      throw derived("domain is not a union of transitive components");
    }
    if (!is_wide(d, data->image)) {
      throw derived("image is not a wide subgroupoid");
    }
    // Fiber maps are single valued and total.
    for (Elem f : d.units()) {
      Elem e = data->base[f];
      for (int side = 0; side < 2; ++side) {
        for (Elem gamma : side == 0 ? g.left_fiber(e) : g.right_fiber(e)) {
          std::size_t hits = 0;
          for (Elem delta : data->related[gamma]) {
            hits += (side == 0 ? d.left_unit(delta) : d.right_unit(delta)) == f;
          }
          if (hits != 1) {
            throw derived(std::string(side == 0 ? "left" : "right")
                          + " fiber map at " + d.name_of(f)
                          + " is not a mapping at " + g.name_of(gamma));
          }
        }
      }
    }
    return Morphism(std::move(data));
  }

  Morphism validate_morphism(
      Groupoid const&                                         g,
      Groupoid const&                                         d,
      std::vector<std::pair<std::string, std::string>> const& graph) {
    MorphismGraph idx;
    for (auto const& [delta, gamma] : graph) {
      idx.emplace_back(d.index(delta), g.index(gamma));
    }
    return validate_morphism(g, d, std::move(idx));
  }

  Morphism identity_morphism(Groupoid const& g) {
    MorphismGraph graph;
    for (Elem x = 0; x < g.size(); ++x) {
      graph.emplace_back(x, x);
    }
    return validate_morphism(g, g, std::move(graph));
  }

  MorphismGraph compose_graphs(Morphism const& k, Morphism const& h) {
    MorphismGraph out;
    for (auto const& [delta, gamma] : h.graph()) {
      for (Elem lambda : k.related(delta)) {
        out.emplace_back(lambda, gamma);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Morphism compose_morphisms(Morphism const& k, Morphism const& h) {
    if (!(h.target() == k.source())) {
      throw UniverseMismatch(h.target().name(), k.source().name());
    }
    return validate_morphism(h.source(), k.target(), compose_graphs(k, h));
  }

  namespace {
    std::vector<std::pair<Elem, Elem>> fiber_map(Morphism const& h,
                                                 Elem            f,
                                                 bool            left) {
      Groupoid const& g = h.source();
      Groupoid const& d = h.target();
      Elem const      e = h.base(f);
      std::vector<std::pair<Elem, Elem>> out;
      for (Elem gamma : left ? g.left_fiber(e) : g.right_fiber(e)) {
        Elem found = no_elem;
        for (Elem delta : h.related(gamma)) {
          if ((left ? d.left_unit(delta) : d.right_unit(delta)) == f) {
            if (found != no_elem) {
              throw std::logic_error("fiber map is not single valued");
            }
            found = delta;
          }
        }
        if (found == no_elem) {
          throw std::logic_error("fiber map is not total");
        }
        out.emplace_back(gamma, found);
      }
      return out;
    }
  }  // namespace

  std::vector<std::pair<Elem, Elem>> fiber_map_left(Morphism const& h, Elem f) {
    return fiber_map(h, f, true);
  }

  std::vector<std::pair<Elem, Elem>> fiber_map_right(Morphism const& h, Elem f) {
    return fiber_map(h, f, false);
  }

  bool is_mono(Morphism const& h) {
    return h.kernel() == h.source().units();
  }

  bool is_surjective(Morphism const& h) {
    return h.image().size() == h.target().size();
  }

  ////////////////////////////////////////////////////////////////////////
  // Cancellation witnesses
  ////////////////////////////////////////////////////////////////////////

  bool verify_witness(Morphism const& h, CancellationWitness const& w) {
    if (w.w1.graph() == w.w2.graph()) {
      return false;
    }
    if (w.side == CancellationWitness::Side::mono) {
      return compose_graphs(h, w.w1) == compose_graphs(h, w.w2);
    }
    return compose_graphs(w.w1, h) == compose_graphs(w.w2, h);
  }

  CancellationWitness mono_witness(Morphism const& h) {
    if (is_mono(h)) {
      throw PreconditionError("morphism is mono");
    }
    Groupoid const& g = h.source();
    auto            in_domain = [&](Elem x) {
      return std::binary_search(h.domain().begin(), h.domain().end(), x);
    };
    std::optional<CancellationWitness> result;
    if (h.domain().size() != g.size()) {
      Subset missing;
      for (auto const& o : orbits(g)) {
        if (!in_domain(o.front())) {
          missing = o;
          break;
        }
      }
      auto in_missing = [&](Elem u) {
        return std::binary_search(missing.begin(), missing.end(), u);
      };
      Names names = g.names(g.units());
      Elem  e0    = no_elem;
      for (Elem u : g.units()) {
        if (!in_missing(u)) {
          e0 = u;
          break;
        }
      }
      std::string collapse = e0 == no_elem ? "⊥" : g.name_of(e0);
      if (e0 == no_elem) {
        names.push_back(collapse);
      }
      Groupoid      probe = set_groupoid(names).renamed("E");
      MorphismGraph w1, w2;
      for (Elem u : g.units()) {
        w1.emplace_back(u, probe.index(g.name_of(u)));
        w2.emplace_back(
            u, probe.index(in_missing(u) ? collapse : g.name_of(u)));
      }
      result = CancellationWitness{CancellationWitness::Side::mono,
                                   probe,
                                   validate_morphism(probe, g, w1),
                                   validate_morphism(probe, g, w2)};
    } else {
      Elem gamma0 = no_elem;
      for (Elem k : h.kernel()) {
        if (!g.is_unit(k)) {
          gamma0 = k;
          break;
        }
      }
      Elem const e0 = g.left_unit(gamma0);
      Subset     h0;
      for (Elem x : isotropy(g, e0)) {
        if (std::binary_search(h.kernel().begin(), h.kernel().end(), x)) {
          h0.push_back(x);
        }
      }
      Groupoid      probe = subgroupoid(g, h0, "H0");
      MorphismGraph psi1, psi2;
      for (Elem x : h0) {
        Elem k = probe.index(g.name_of(x));
        for (Elem u : g.units()) {
          psi1.emplace_back(u, k);
          if (u != e0) {
            psi2.emplace_back(u, k);
          }
        }
        psi2.emplace_back(x, k);
      }
      result = CancellationWitness{CancellationWitness::Side::mono,
                                   probe,
                                   validate_morphism(probe, g, psi1),
                                   validate_morphism(probe, g, psi2)};
    }
    if (!verify_witness(h, *result)) {
      throw std::logic_error("mono witness does not verify");
    }
    return *result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard morphisms
  ////////////////////////////////////////////////////////////////////////

  Morphism left_regular(Groupoid const& g) {
    Groupoid const sq =
        pair_groupoid(g.universe()->elements()).renamed(g.name() + "^2");
    MorphismGraph graph;
    for (auto const& [k, x] : composable_pairs(g)) {
      graph.emplace_back(
          sq.index(pair_name(g.name_of(g.multiply(k, x)), g.name_of(x))), k);
    }
    return validate_morphism(g, sq, std::move(graph));
  }

  Morphism component_projection(Groupoid const& g, Subset const& components) {
    if (!is_union_of_components(g, components)) {
      throw PreconditionError(
          "component_projection: subset is not a union of transitive "
          "components");
    }
    Groupoid const sub = subgroupoid(g, components, g.name() + "_1");
    MorphismGraph  graph;
    for (Elem x : components) {
      graph.emplace_back(sub.index(g.name_of(x)), x);
    }
    return validate_morphism(g, sub, std::move(graph));
  }

  Morphism wide_inclusion(Groupoid const& g, Subset const& wide) {
    if (!is_wide(g, wide)) {
      throw PreconditionError("wide_inclusion: subset is not a wide subgroupoid");
    }
    Groupoid const sub = subgroupoid(g, wide, g.name() + "_1");
    MorphismGraph  graph;
    for (Elem x : wide) {
      graph.emplace_back(x, sub.index(g.name_of(x)));
    }
    return validate_morphism(sub, g, std::move(graph));
  }

  Morphism to_orbit_pair(Groupoid const& g) {
    Groupoid const sq = pair_groupoid(g.names(g.units())).renamed("E^2");
    MorphismGraph  graph;
    for (Elem x = 0; x < g.size(); ++x) {
      graph.emplace_back(sq.index(pair_name(g.name_of(g.left_unit(x)),
                                            g.name_of(g.right_unit(x)))),
                         x);
    }
    return validate_morphism(g, sq, std::move(graph));
  }

  Morphism to_orbit_relation(Groupoid const& g) {
    Groupoid const r = orbit_relation(g);
    MorphismGraph  graph;
    for (Elem x = 0; x < g.size(); ++x) {
      graph.emplace_back(r.index(pair_name(g.name_of(g.left_unit(x)),
                                           g.name_of(g.right_unit(x)))),
                         x);
    }
    return validate_morphism(g, r, std::move(graph));
  }

  Morphism restrict_to_domain(Morphism const& h) {
    Groupoid const& g   = h.source();
    Groupoid const  sub = subgroupoid(g, h.domain(), g.name() + "_1");
    MorphismGraph   graph;
    for (auto const& [delta, gamma] : h.graph()) {
      graph.emplace_back(delta, sub.index(g.name_of(gamma)));
    }
    return validate_morphism(sub, h.target(), std::move(graph));
  }

  std::pair<Morphism, Morphism> product_injections(Groupoid const& g1,
                                                   Groupoid const& g2) {
    Groupoid const p = cartesian_product(g1, g2);
    MorphismGraph  i1, i2;
    for (Elem x = 0; x < g1.size(); ++x) {
      for (Elem u : g2.units()) {
        i1.emplace_back(p.index(pair_name(g1.name_of(x), g2.name_of(u))), x);
      }
    }
    for (Elem y = 0; y < g2.size(); ++y) {
      for (Elem u : g1.units()) {
        i2.emplace_back(p.index(pair_name(g1.name_of(u), g2.name_of(y))), y);
      }
    }
    return {validate_morphism(g1, p, std::move(i1)),
            validate_morphism(g2, p, std::move(i2))};
  }

  std::pair<Morphism, Morphism> union_projections(Groupoid const& g1,
                                                  Groupoid const& g2) {
    Groupoid const u = disjoint_union(g1, g2);
    MorphismGraph  p1, p2;
    for (Elem x = 0; x < g1.size(); ++x) {
      p1.emplace_back(x, u.index("L:" + g1.name_of(x)));
    }
    for (Elem y = 0; y < g2.size(); ++y) {
      p2.emplace_back(y, u.index("R:" + g2.name_of(y)));
    }
    return {validate_morphism(u, g1, std::move(p1)),
            validate_morphism(u, g2, std::move(p2))};
  }

  bool is_functor(Groupoid const&          g,
                  Groupoid const&          d,
                  std::vector<Elem> const& phi) {
    if (phi.size() != g.size()) {
      return false;
    }
    for (Elem x = 0; x < g.size(); ++x) {
      if (phi[x] >= d.size()) {
        return false;
      }
      if (g.is_unit(x) && !d.is_unit(phi[x])) {
        return false;
      }
      if (phi[g.inverse(x)] != d.inverse(phi[x])) {
        return false;
      }
    }
    for (auto const& [a, b] : composable_pairs(g)) {
      if (d.product_or_none(phi[a], phi[b]) != phi[g.multiply(a, b)]) {
        return false;
      }
    }
    return true;
  }

  Morphism functor_to_morphism(Groupoid const&          g,
                               Groupoid const&          d,
                               std::vector<Elem> const& phi) {
    if (!is_functor(g, d, phi)) {
      throw PreconditionError("map is not a functor");
    }
    Subset image;
    for (Elem u : g.units()) {
      image.push_back(phi[u]);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()
        || image != d.units()) {
      throw PreconditionError("functor is not a bijection on units");
    }
    MorphismGraph graph;
    for (Elem x = 0; x < g.size(); ++x) {
      graph.emplace_back(phi[x], x);
    }
    return validate_morphism(g, d, std::move(graph));
  }

  Morphism group_action_morphism(GroupAction const& a) {
    Groupoid const g  = group_groupoid(a.group());
    Groupoid const sq = pair_groupoid(a.carrier()->elements());
    MorphismGraph  graph;
    for (Elem x = 0; x < g.size(); ++x) {
      Elem t = a.group().index(g.name_of(x));
      for (Elem p = 0; p < a.carrier()->size(); ++p) {
        graph.emplace_back(sq.index(pair_name(a.carrier()->name(a.act(t, p)),
                                              a.carrier()->name(p))),
                           x);
      }
    }
    return validate_morphism(g, sq, std::move(graph));
  }

  IntoGroup classify_into_group(Morphism const& h) {
    Groupoid const& g = h.source();
    Groupoid const& d = h.target();
    if (d.units().size() != 1) {
      throw PreconditionError("classify_into_group: target is not a group");
    }
    IntoGroup out{h.base(d.units().front()), {}};
    for (Elem x : isotropy(g, out.unit)) {
      auto const& r = h.related(x);
      if (r.size() != 1) {
        throw std::logic_error("morphism into a group is not single valued");
      }
      out.hom.push_back(r.front());
    }
    return out;
  }

  Morphism reconstruct_into_group(Groupoid const&  g,
                                  Groupoid const&  group,
                                  IntoGroup const& data) {
    Subset const iso = isotropy(g, data.unit);
    if (iso.size() != data.hom.size()) {
      throw PreconditionError("reconstruct_into_group: homomorphism size");
    }
    MorphismGraph graph;
    for (std::size_t i = 0; i < iso.size(); ++i) {
      graph.emplace_back(data.hom[i], iso[i]);
    }
    return validate_morphism(g, group, std::move(graph));
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorizations
  ////////////////////////////////////////////////////////////////////////

  KernelQuotient quotient_by_kernel(Morphism const& h) {
    Groupoid const& g = h.source();
    if (h.domain().size() != g.size()) {
      throw PreconditionError("quotient_by_kernel: D(h) is not the source");
    }
    QuotientGroupoid q = quotient_groupoid(g, h.kernel());
    MorphismGraph    reduced;
    for (auto const& [delta, gamma] : h.graph()) {
      reduced.emplace_back(delta, q.classes[gamma]);
    }
    Morphism r = validate_morphism(q.groupoid, h.target(), std::move(reduced));
    if (!is_mono(r)) {
      throw std::logic_error("quotient_by_kernel: reduced morphism not mono");
    }
    if (compose_graphs(r, q.projection) != h.graph()) {
      throw std::logic_error("quotient_by_kernel: h != h~ pi");
    }
    return {q.groupoid, q.projection, r};
  }

  Factorization epi_mono_factorization(Morphism const& h) {
    Morphism const p  = component_projection(h.source(), h.domain());
    Morphism const h1 = restrict_to_domain(h);
    KernelQuotient q  = quotient_by_kernel(h1);
    Morphism const e  = compose_morphisms(q.projection, p);
    if (!is_surjective(e) || !is_mono(q.reduced)) {
      throw std::logic_error("epi_mono_factorization: factor properties");
    }
    if (compose_graphs(q.reduced, e) != h.graph()) {
      throw std::logic_error("epi_mono_factorization: h != h2 h1");
    }
    return {q.quotient, e, q.reduced};
  }

  Morphism product_pairing(Morphism const& p1, Morphism const& p2) {
    if (!(p1.source() == p2.source())) {
      throw UniverseMismatch(p1.source().name(), p2.source().name());
    }
    Groupoid const& g1 = p1.target();
    Groupoid const& g2 = p2.target();
    Groupoid const  u  = disjoint_union(g1, g2);
    MorphismGraph   graph;
    for (auto const& [delta, lambda] : p1.graph()) {
      graph.emplace_back(u.index("L:" + g1.name_of(delta)), lambda);
    }
    for (auto const& [delta, lambda] : p2.graph()) {
      graph.emplace_back(u.index("R:" + g2.name_of(delta)), lambda);
    }
    Morphism p = validate_morphism(p1.source(), u, std::move(graph));
    auto [i1, i2] = union_projections(g1, g2);
    if (compose_graphs(i1, p) != p1.graph()
        || compose_graphs(i2, p) != p2.graph()) {
      throw std::logic_error("product_pairing: projections do not recover");
    }
    return p;
  }

  SeparatingPair separating_pair(Groupoid const& g, Subset const& sub) {
    if (!is_wide(g, sub)) {
      throw PreconditionError("separating_pair: subset is not wide");
    }
    if (sub.size() == g.size()) {
      throw PreconditionError("separating_pair: subset is not proper");
    }
    auto in_sub = [&](Elem x) {
      return std::binary_search(sub.begin(), sub.end(), x);
    };
    Elem gamma0 = no_elem, fixed0 = no_elem;
    for (Elem x = 0; x < g.size(); ++x) {
      if (in_sub(x)) {
        continue;
      }
      if (g.inverse(x) != x && gamma0 == no_elem) {
        gamma0 = x;
      }
      if (fixed0 == no_elem) {
        fixed0 = x;
      }
    }
    std::optional<SeparatingPair> out;
    if (gamma0 != no_elem) {
      Elem const        e0 = g.left_unit(gamma0);
      std::vector<Elem> sigma(g.size());
      for (Elem x = 0; x < g.size(); ++x) {
        sigma[x] = x;
      }
      for (Elem x : g.right_fiber(e0)) {
        if (in_sub(x)) {
          Elem y   = g.multiply(x, gamma0);
          sigma[x] = y;
          sigma[y] = x;
        }
      }
      Morphism const l  = left_regular(g);
      Groupoid const sq = l.target();
      Subset         tilde;
      for (Elem x = 0; x < g.size(); ++x) {
        tilde.push_back(sq.index(pair_name(g.name_of(sigma[x]), g.name_of(x))));
      }
      std::sort(tilde.begin(), tilde.end());
      out = SeparatingPair{'A', sq, l, compose_morphisms(ad(sq, tilde), l)};
    } else {
      Elem const e0 = g.right_unit(fixed0);
      for (Elem x : g.right_fiber(e0)) {
        if (g.left_unit(x) != e0) {
          throw std::logic_error("separating_pair: orbit of e0 is not a point");
        }
      }
      GroupTable const  iso = isotropy_group(g, e0);
      std::vector<Elem> h;
      for (Elem x : isotropy(g, e0)) {
        if (in_sub(x)) {
          h.push_back(iso.index(g.name_of(x)));
        }
      }
      std::sort(h.begin(), h.end());
      QuotientGroup const q = quotient_group(iso, h);
      Groupoid const      k = group_groupoid(q.group).renamed("K");
      Elem const          unit_k = k.units().front();
      MorphismGraph       h1, h2;
      for (Elem x : isotropy(g, e0)) {
        h1.emplace_back(unit_k, x);
        h2.emplace_back(
            k.index(q.group.name_of(q.projection[iso.index(g.name_of(x))])), x);
      }
      out = SeparatingPair{'B',
                           k,
                           validate_morphism(g, k, std::move(h1)),
                           validate_morphism(g, k, std::move(h2))};
    }
    if (!verify_separating_pair(*out, sub)) {
      throw std::logic_error("separating_pair: construction does not verify");
    }
    return *out;
  }

  bool verify_separating_pair(SeparatingPair const& p, Subset const& sub) {
    if (p.k1.graph() == p.k2.graph()) {
      return false;
    }
    auto restricted = [&](Morphism const& k) {
      MorphismGraph out;
      for (auto const& pr : k.graph()) {
        if (std::binary_search(sub.begin(), sub.end(), pr.second)) {
          out.push_back(pr);
        }
      }
      return out;
    };
    return restricted(p.k1) == restricted(p.k2);
  }

  std::optional<CancellationWitness> find_non_epi_witness(Morphism const& h) {
    Groupoid const& d = h.target();
    if (!is_surjective(h)) {
      SeparatingPair      sp = separating_pair(d, h.image());
      CancellationWitness w{
          CancellationWitness::Side::epi, sp.probe, sp.k1, sp.k2};
      if (!verify_witness(h, w)) {
        throw std::logic_error("find_non_epi_witness: separating pair fails");
      }
      return w;
    }
    Morphism const id = identity_morphism(d);
    for (auto const& b : all_bisections(d)) {
      if (b == d.units()) {
        continue;
      }
      Morphism a = ad(d, b);
      if (a.graph() == id.graph()) {
        continue;
      }
      if (compose_graphs(a, h) == h.graph()) {
        return CancellationWitness{CancellationWitness::Side::epi, d, a, id};
      }
    }
    return std::nullopt;
  }

}  // namespace relgroupoid
