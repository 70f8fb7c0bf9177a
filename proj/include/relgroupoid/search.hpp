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

// Exhaustive enumeration of morphisms and actions between small groupoids.
// Results are sorted by graph.

#ifndef RELGROUPOID_SEARCH_HPP_
#define RELGROUPOID_SEARCH_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "action.hpp"
#include "builders.hpp"
#include "groupoid.hpp"
#include "morphism.hpp"

namespace relgroupoid {

  struct EnumBudget {
    std::size_t max_pairs      = 20;         // cap on |D| * |G| for naive search
    std::size_t max_candidates = 1u << 20;   // cap on candidates or results
    bool        override_limit = false;      // lifts max_pairs up to 62
  };

  // Every subset of D x G that validates.  Throws BudgetExceeded.
  std::vector<Morphism> enum_morphisms_naive(Groupoid const&   source,
                                             Groupoid const&   target,
                                             EnumBudget const& budget = {});

  // Enumerates base maps and one right fiber per transitive component; the
  // rest of each morphism is determined by those values.
  std::vector<Morphism> enum_morphisms(Groupoid const& source,
                                       Groupoid const& target);

  // enum_morphisms(G, pair_groupoid(x)) through morphism_to_action.
  std::vector<Action> enum_actions(Groupoid const& g, Names const& x);
  // Independent search over rho : X -> E and fibered action tables.
  std::vector<Action> enum_actions_direct(Groupoid const& g, Names const& x);

  // Subgroups of t, each as a sorted index vector.
  std::vector<std::vector<Elem>> subgroups(GroupTable const& t);

  // The set groupoid on E + {"⊥"} and subgroupoid(g, H) for every subgroup H
  // of every isotropy group.
  std::vector<Groupoid> mono_probe_family(Groupoid const& g);

  // The first pair w1 < w2 of enumerated morphisms probe -> source (mono) or
  // target -> probe (epi) with equal composites.  Throws BudgetExceeded when
  // a probe yields more than budget.max_candidates morphisms.
  std::optional<CancellationWitness> check_cancellation(
      Morphism const&              h,
      CancellationWitness::Side    side,
      std::vector<Groupoid> const& probes,
      EnumBudget const&            budget = {});

}  // namespace relgroupoid

#endif  // RELGROUPOID_SEARCH_HPP_
