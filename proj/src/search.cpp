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

#include "relgroupoid/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

namespace relgroupoid {

  namespace {

    using Mask = std::uint64_t;

    std::vector<Morphism> finish(Groupoid const&         g,
                                 Groupoid const&         d,
                                 std::set<MorphismGraph> graphs) {
      std::vector<Morphism> out;
      out.reserve(graphs.size());
      for (auto const& graph : graphs) {
        out.push_back(validate_morphism(g, d, graph));
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Naive enumeration
  ////////////////////////////////////////////////////////////////////////

  std::vector<Morphism> enum_morphisms_naive(Groupoid const&   g,
                                             Groupoid const&   d,
                                             EnumBudget const& budget) {
    std::size_t const n     = g.size();
    std::size_t const k     = d.size();
    std::size_t const pairs = n * k;
    if (pairs > 62 || (pairs > budget.max_pairs && !budget.override_limit)) {
      throw BudgetExceeded("naive enumeration over " + std::to_string(pairs)
                           + " pairs; the cap is "
                           + std::to_string(budget.max_pairs));
    }
    Mask const candidates = Mask{1} << pairs;
    if (candidates > budget.max_candidates && !budget.override_limit) {
      throw BudgetExceeded("naive enumeration over "
                           + std::to_string(candidates)
                           + " candidates; the cap is "
                           + std::to_string(budget.max_candidates));
    }

    Mask unit_mask = 0;
    for (Elem u : d.units()) {
      unit_mask |= Mask{1} << u;
    }
    std::vector<Mask> prod(k * k, 0);
    for (Elem x = 0; x < k; ++x) {
      for (Elem y = 0; y < k; ++y) {
        Elem xy = d.product_or_none(x, y);
        if (xy != no_elem) {
          prod[x * k + y] = Mask{1} << xy;
        }
      }
    }
    auto inverse_of = [&](Mask a) {
      Mask out = 0;
      for (; a != 0; a &= a - 1) {
        out |= Mask{1} << d.inverse(static_cast<Elem>(std::countr_zero(a)));
      }
      return out;
    };
    auto product_of = [&](Mask a, Mask b) {
      Mask out = 0;
      for (; a != 0; a &= a - 1) {
        Elem x = static_cast<Elem>(std::countr_zero(a));
        for (Mask c = b; c != 0; c &= c - 1) {
          out |= prod[x * k + static_cast<Elem>(std::countr_zero(c))];
        }
      }
      return out;
    };

    Mask const              row = k == 0 ? 0 : (Mask{1} << k) - 1;
    std::vector<Mask>       rel(n);
    std::set<MorphismGraph> found;
    for (Mask mask = 0; mask < candidates; ++mask) {
      for (Elem x = 0; x < n; ++x) {
        rel[x] = (mask >> (x * k)) & row;
      }
      Mask units = 0;
      for (Elem u : g.units()) {
        units |= rel[u];
      }
      if (units != unit_mask) {
        continue;
      }
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        ok = rel[g.inverse(x)] == inverse_of(rel[x]);
      }
      for (Elem a = 0; a < n && ok; ++a) {
        for (Elem b = 0; b < n && ok; ++b) {
          Elem ab = g.product_or_none(a, b);
          ok = (ab == no_elem ? 0 : rel[ab]) == product_of(rel[a], rel[b]);
        }
      }
      if (!ok) {
        continue;
      }
      MorphismGraph graph;
      for (Elem x = 0; x < n; ++x) {
        for (Mask a = rel[x]; a != 0; a &= a - 1) {
          graph.emplace_back(static_cast<Elem>(std::countr_zero(a)), x);
        }
      }
      std::sort(graph.begin(), graph.end());
      found.insert(std::move(graph));
    }
    return finish(g, d, std::move(found));
  }

  ////////////////////////////////////////////////////////////////////////
  // Structured enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // All admissible right-fiber data on the component of orbit o, expanded
    // to graphs on the whole component.  A(i, j) is h_f^R(F[j]) for
    // f = fs[i], where F is the right fiber over the least unit a of o.
    std::vector<MorphismGraph> component_options(Groupoid const&          g,
                                                 Groupoid const&          d,
                                                 std::vector<Elem> const& rho,
                                                 Subset const&            orbit,
                                                 Subset const&            comp) {
      Elem const              a = orbit.front();
      std::vector<Elem> const f_fiber = g.right_fiber(a);
      std::vector<Elem>       fs;
      for (Elem f : d.units()) {
        if (rho[f] == a) {
          fs.push_back(f);
        }
      }
      std::size_t const nf = fs.size();
      std::size_t const nF = f_fiber.size();
      std::map<Elem, std::size_t> pos_f, pos_F;
      for (std::size_t i = 0; i < nf; ++i) {
        pos_f[fs[i]] = i;
      }
      for (std::size_t j = 0; j < nF; ++j) {
        pos_F[f_fiber[j]] = j;
      }
      // (gamma1, g) -> gamma1 g inside F, for g in the isotropy at a.
      std::vector<std::array<std::size_t, 3>> mult;  // (j1, jg, jt)
      for (std::size_t jg = 0; jg < nF; ++jg) {
        if (g.left_unit(f_fiber[jg]) != a) {
          continue;
        }
        for (std::size_t j1 = 0; j1 < nF; ++j1) {
          mult.push_back(
              {j1, jg, pos_F.at(g.multiply(f_fiber[j1], f_fiber[jg]))});
        }
      }

      std::vector<std::vector<Elem>> choices(nf * nF);
      for (std::size_t j = 0; j < nF; ++j) {
        for (std::size_t i = 0; i < nf; ++i) {
          auto& c = choices[j * nf + i];
          if (f_fiber[j] == a) {
            c.push_back(fs[i]);
            continue;
          }
          for (Elem delta : d.right_fiber(fs[i])) {
            if (rho[d.left_unit(delta)] == g.left_unit(f_fiber[j])) {
              c.push_back(delta);
            }
          }
        }
      }

      std::vector<Elem> value(nf * nF, no_elem);
      auto at = [&](std::size_t i, std::size_t j) { return value[j * nf + i]; };
      auto consistent = [&](std::size_t i, std::size_t j) {
        for (std::size_t i2 = 0; i2 < i; ++i2) {
          if (d.left_unit(at(i2, j)) == d.left_unit(at(i, j))) {
            return false;
          }
        }
        for (auto const& [j1, jg, jt] : mult) {
          for (std::size_t i0 = 0; i0 < nf; ++i0) {
            Elem ag = at(i0, jg);
            Elem at_ = at(i0, jt);
            if (ag == no_elem || at_ == no_elem) {
              continue;
            }
            Elem a1 = at(pos_f.at(d.left_unit(ag)), j1);
            if (a1 != no_elem && d.multiply(a1, ag) != at_) {
              return false;
            }
          }
        }
        return true;
      };

      // gamma = gamma1 s(gamma2) with gamma1, gamma2 in F.
      std::vector<std::pair<std::size_t, std::size_t>> split;
      for (Elem x : comp) {
        std::size_t j2 = nF;
        for (std::size_t j = 0; j < nF && j2 == nF; ++j) {
          if (g.left_unit(f_fiber[j]) == g.right_unit(x)) {
            j2 = j;
          }
        }
        split.emplace_back(pos_F.at(g.multiply(x, f_fiber[j2])), j2);
      }

      std::vector<MorphismGraph> out;
      auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == value.size()) {
          MorphismGraph graph;
          for (std::size_t c = 0; c < comp.size(); ++c) {
            auto [j1, j2] = split[c];
            for (std::size_t i = 0; i < nf; ++i) {
              graph.emplace_back(
                  d.multiply(at(i, j1), d.inverse(at(i, j2))), comp[c]);
            }
          }
          out.push_back(std::move(graph));
          return;
        }
        std::size_t const j = v / nf;
        std::size_t const i = v % nf;
        for (Elem delta : choices[v]) {
          value[v] = delta;
          if (consistent(i, j)) {
            self(self, v + 1);
          }
        }
        value[v] = no_elem;
      };
      rec(rec, 0);
      return out;
    }

  }  // namespace

  std::vector<Morphism> enum_morphisms(Groupoid const& g, Groupoid const& d) {
    auto const  orbs  = orbits(g);
    auto const  comps = transitive_components(g);
    auto const& ed    = d.units();
    std::vector<std::size_t> orbit_of(g.size(), 0);
    for (std::size_t o = 0; o < orbs.size(); ++o) {
      for (Elem u : orbs[o]) {
        orbit_of[u] = o;
      }
    }

    std::set<MorphismGraph> found;
    std::vector<Elem>       rho(d.size(), no_elem);
    auto leaf = [&] {
      std::vector<std::size_t> hits(orbs.size(), 0);
      std::set<Elem>           image;
      for (Elem f : ed) {
        image.insert(rho[f]);
      }
      for (Elem u : image) {
        ++hits[orbit_of[u]];
      }
      std::vector<std::vector<MorphismGraph>> options;
      for (std::size_t o = 0; o < orbs.size(); ++o) {
        if (hits[o] == 0) {
          continue;
        }
        if (hits[o] != orbs[o].size()) {
          return;
        }
        options.push_back(component_options(g, d, rho, orbs[o], comps[o]));
        if (options.back().empty()) {
          return;
        }
      }
      std::vector<std::size_t> idx(options.size(), 0);
      while (true) {
        MorphismGraph graph;
        for (std::size_t c = 0; c < options.size(); ++c) {
          auto const& part = options[c][idx[c]];
          graph.insert(graph.end(), part.begin(), part.end());
        }
        std::sort(graph.begin(), graph.end());
        graph.erase(std::unique(graph.begin(), graph.end()), graph.end());
        if (is_morphism_pointwise(g, d, graph)) {
          found.insert(std::move(graph));
        }
        std::size_t c = 0;
        for (; c < options.size(); ++c) {
          if (++idx[c] < options[c].size()) {
            break;
          }
          idx[c] = 0;
        }
        if (c == options.size()) {
          break;
        }
      }
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == ed.size()) {
        leaf();
        return;
      }
      for (Elem u : g.units()) {
        rho[ed[i]] = u;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    return finish(g, d, std::move(found));
  }

  ////////////////////////////////////////////////////////////////////////
  // Actions
  ////////////////////////////////////////////////////////////////////////

  std::vector<Action> enum_actions(Groupoid const& g, Names const& x) {
    UniversePtr const     u  = make_universe("X", x);
    Groupoid const        sq = pair_groupoid(u->elements());
    std::vector<Action>   out;
    for (auto const& h : enum_morphisms(g, sq)) {
      out.push_back(morphism_to_action(h, u));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Action> enum_actions_direct(Groupoid const& g, Names const& x) {
    UniversePtr const u  = make_universe("X", x);
    std::size_t const nx = u->size();
    auto const&       e  = g.units();
    std::vector<Action> out;
    std::vector<Elem>   rho(nx, no_elem);
    std::vector<Elem>   table(g.size() * nx, no_elem);
    // Slots (gamma, x) with e_R(gamma) = rho(x) and gamma not a unit.
    std::vector<std::pair<Elem, Elem>> slots;

    auto complete = [&] {
      for (Elem p = 0; p < nx; ++p) {
        for (Elem g2 : g.right_fiber(rho[p])) {
          Elem y = table[g2 * nx + p];
          for (Elem g1 : g.right_fiber(g.left_unit(g2))) {
            if (table[g1 * nx + y] != table[g.multiply(g1, g2) * nx + p]) {
              return false;
            }
          }
        }
      }
      return true;
    };
    auto fill = [&](auto&& self, std::size_t s) -> void {
      if (s == slots.size()) {
        if (!complete()) {
          return;
        }
        std::vector<ActionTriple> t;
        for (Elem a = 0; a < g.size(); ++a) {
          for (Elem p = 0; p < nx; ++p) {
            if (table[a * nx + p] != no_elem) {
              t.push_back({table[a * nx + p], a, p});
            }
          }
        }
        out.push_back(validate_action(g, u, std::move(t)));
        return;
      }
      auto [a, p] = slots[s];
      for (Elem y = 0; y < nx; ++y) {
        if (rho[y] != g.left_unit(a)) {
          continue;
        }
        table[a * nx + p] = y;
        self(self, s + 1);
      }
      table[a * nx + p] = no_elem;
    };
    auto choose_rho = [&](auto&& self, Elem p) -> void {
      if (p == nx) {
        std::fill(table.begin(), table.end(), no_elem);
        slots.clear();
        for (Elem q = 0; q < nx; ++q) {
          table[rho[q] * nx + q] = q;
          for (Elem a : g.right_fiber(rho[q])) {
            if (!g.is_unit(a)) {
              slots.emplace_back(a, q);
            }
          }
        }
        fill(fill, 0);
        return;
      }
      for (Elem unit : e) {
        rho[p] = unit;
        self(self, p + 1);
      }
    };
    choose_rho(choose_rho, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cancellation
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::vector<Elem>> subgroups(GroupTable const& t) {
    std::size_t const n = t.size();
    if (n > 20) {
      throw BudgetExceeded("subgroup search on a group of order "
                           + std::to_string(n));
    }
    std::vector<std::vector<Elem>> out;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      if (!(m >> t.unit() & 1)) {
        continue;
      }
      bool closed = true;
      for (Elem a = 0; a < n && closed; ++a) {
        for (Elem b = 0; b < n && closed; ++b) {
          if ((m >> a & 1) && (m >> b & 1)) {
            closed = m >> t.multiply(a, b) & 1;
          }
        }
      }
      if (closed) {
        std::vector<Elem> h;
        for (Elem a = 0; a < n; ++a) {
          if (m >> a & 1) {
            h.push_back(a);
          }
        }
        out.push_back(std::move(h));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Groupoid> mono_probe_family(Groupoid const& g) {
    Names names = g.names(g.units());
    names.push_back("⊥");
    std::vector<Groupoid> out{set_groupoid(names).renamed("E")};
    for (Elem u : g.units()) {
      GroupTable const t = isotropy_group(g, u);
      for (auto const& h : subgroups(t)) {
        Names hn;
        for (Elem x : h) {
          hn.push_back(t.name_of(x));
        }
        out.push_back(subgroupoid(g, g.subset(hn), "H"));
      }
    }
    return out;
  }

  std::optional<CancellationWitness> check_cancellation(
      Morphism const&              h,
      CancellationWitness::Side    side,
      std::vector<Groupoid> const& probes,
      EnumBudget const&            budget) {
    bool const mono = side == CancellationWitness::Side::mono;
    for (auto const& k : probes) {
      std::vector<Morphism> ws =
          mono ? enum_morphisms(k, h.source()) : enum_morphisms(h.target(), k);
      if (ws.size() > budget.max_candidates) {
        throw BudgetExceeded("cancellation search: probe " + k.name()
                             + " yields " + std::to_string(ws.size())
                             + " morphisms");
      }
      std::map<MorphismGraph, std::size_t> first;
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t j = 0; j < ws.size(); ++j) {
        MorphismGraph c =
            mono ? compose_graphs(h, ws[j]) : compose_graphs(ws[j], h);
        auto [it, fresh] = first.emplace(std::move(c), j);
        if (!fresh) {
          std::pair<std::size_t, std::size_t> cand{it->second, j};
          if (!best || cand < *best) {
            best = cand;
          }
        }
      }
      if (best) {
        return CancellationWitness{
            side, k, ws[best->first], ws[best->second]};
      }
    }
    return std::nullopt;
  }

}  // namespace relgroupoid
