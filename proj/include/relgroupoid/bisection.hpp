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

#ifndef RELGROUPOID_BISECTION_HPP_
#define RELGROUPOID_BISECTION_HPP_

#include <cstddef>
#include <vector>

#include "group_table.hpp"
#include "groupoid.hpp"
#include "morphism.hpp"

namespace relgroupoid {

  // A subset meeting every left fiber and every right fiber exactly once.
  bool is_bisection_by_fibers(Groupoid const& g, Subset const& a);
  // s(A)A = As(A) = E.
  bool is_bisection_by_products(Groupoid const& g, Subset const& a);
  // Both of the above; throws std::logic_error if they disagree.
  bool is_bisection(Groupoid const& g, Subset const& a);

  // A is a section of e_R over e_R(A), resp. As(A) is contained in E.
  bool is_right_section(Groupoid const& g, Subset const& a);
  bool right_products_in_units(Groupoid const& g, Subset const& a);
  // A is a section of e_L over e_L(A), resp. s(A)A is contained in E.
  bool is_left_section(Groupoid const& g, Subset const& a);
  bool left_products_in_units(Groupoid const& g, Subset const& a);

  // Canonically ordered.
  std::vector<Subset> all_bisections(Groupoid const& g);

  Subset subset_mult(Groupoid const& g, Subset const& a, Subset const& b);
  Subset subset_inverse(Groupoid const& g, Subset const& a);

  inline constexpr std::size_t bisection_group_limit = 10000;

  struct BisectionGroup {
    std::vector<Subset> elements;  // index i is the group element "B<i>", zero padded
    GroupTable          table;
  };
  // Throws BudgetExceeded at bisection_group_limit bisections or more.
  BisectionGroup bisection_group(Groupoid const& g);

  // B gamma = gamma' gamma for the unique gamma' in B with
  // e_R(gamma') = e_L(gamma).
  Elem act(Groupoid const& g, Subset const& b, Elem gamma);
  // gamma -> B gamma s(B); a morphism g -> g.
  Morphism ad(Groupoid const& g, Subset const& b);

  // h(B); throws PreconditionError unless b is a bisection of h.source().
  Subset image_bisection(Morphism const& h, Subset const& b);

  struct InducedHom {
    BisectionGroup    source;
    BisectionGroup    target;
    std::vector<Elem> map;  // source index -> target index
  };
  // Asserts the homomorphism law.
  InducedHom induced_hom(Morphism const& h);

}  // namespace relgroupoid

#endif  // RELGROUPOID_BISECTION_HPP_
