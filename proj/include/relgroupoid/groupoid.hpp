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

// Finite groupoids in the relational presentation (G, m, s, e):
//
//   m : G x G -o G,  s : G -o G,  e : {1} -o G
//
// subject to
//
//   m(m x id) = m(id x m),  m(e x id) = m(id x e) = id,
//   s^2 = id,  sm = m sigma (s x s),
//   for every g: the set m(s(g), g) is nonempty and contained in Im(e).
//
// A Groupoid value only exists once these have been verified.  Target and
// source are written e_L(g) = m(g, s(g)) and e_R(g) = m(s(g), g); the pair
// (a, b) is composable iff e_R(a) = e_L(b).

#ifndef RELGROUPOID_GROUPOID_HPP_
#define RELGROUPOID_GROUPOID_HPP_

#include <array>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "group_table.hpp"
#include "relation.hpp"

namespace relgroupoid {

  inline constexpr Elem no_elem = std::numeric_limits<Elem>::max();

  // Sorted vector of element indices of one groupoid.
  using Subset = std::vector<Elem>;

  // Unvalidated groupoid data, as read from a document or produced by a
  // builder.  The inverse may be partial; validation reports that.
  struct RawGroupoid {
    using Triple = std::array<std::string, 3>;  // (a, b, ab)

    std::string                                      name;
    std::vector<std::string>                         elements;
    std::vector<std::string>                         units;
    std::vector<std::pair<std::string, std::string>> inverse;
    std::vector<Triple>                              compose;
  };

  // Axioms in the order they are checked; the first violated one is the
  // reported one.
  enum class Axiom {
    structure,         // dangling names, duplicates, inconsistent inverse
    involution,        // s^2 = id
    unit_law,          // m(e x id) = m(id x e) = id
    inverse_law,       // 0 != m(s(g), g) subset of E
    antihomomorphism,  // sm = m sigma (s x s)
    associativity,     // m(m x id) = m(id x m)
    definition         // derived category laws (never fires after the above)
  };

  std::string_view to_string(Axiom a);

  struct AxiomViolation {
    Axiom       axiom;
    std::string witness;  // first offending tuple in canonical order
    std::string message;
  };

  class AxiomError : public Error {
   public:
    explicit AxiomError(std::vector<AxiomViolation> violations);

    Axiom axiom() const noexcept {
      return _violations.front().axiom;
    }
    std::vector<AxiomViolation> const& violations() const noexcept {
      return _violations;
    }
    bool violates(Axiom a) const noexcept;

   private:
    std::vector<AxiomViolation> _violations;
  };

  class Groupoid {
   public:
    // The empty groupoid.
    Groupoid();

    std::string const& name() const noexcept;
    UniversePtr const& universe() const noexcept;
    Domain             domain() const {
      return Domain(universe());
    }
    std::size_t size() const noexcept;

    std::string const& name_of(Elem g) const;
    Elem               index(std::string_view name) const;
    std::vector<std::string> names(Subset const& s) const;
    Subset                   subset(std::vector<std::string> const& names) const;

    std::vector<Elem> const& units() const noexcept;
    bool                     is_unit(Elem g) const;
    Elem                     inverse(Elem g) const;
    Elem                     left_unit(Elem g) const;   // e_L
    Elem                     right_unit(Elem g) const;  // e_R

    bool composable(Elem a, Elem b) const {
      return right_unit(a) == left_unit(b);
    }
    // Throws PreconditionError if (a, b) is not composable.
    Elem multiply(Elem a, Elem b) const;
    // no_elem if not composable.
    Elem product_or_none(Elem a, Elem b) const;

    // e_L^{-1}(e) and e_R^{-1}(e), sorted.
    std::vector<Elem> const& left_fiber(Elem unit) const;
    std::vector<Elem> const& right_fiber(Elem unit) const;

    FinRel const& multiplication() const noexcept;  // m
    FinRel const& inverse_relation() const noexcept;  // s
    FinRel const& unit_relation() const noexcept;  // e

    RawGroupoid raw() const;
    Groupoid    renamed(std::string name) const;

    // Structural equality; names of groupoids are ignored.
    bool operator==(Groupoid const& other) const noexcept;

   private:
    struct Data;
    explicit Groupoid(std::shared_ptr<Data const> data);
    std::shared_ptr<Data const> _data;

    friend Groupoid validate(RawGroupoid const& raw);
  };

  // Every violated axiom, in checking order.  Structural problems are
  // reported alone since the relations cannot be formed.
  std::vector<AxiomViolation> check_axioms(RawGroupoid const& raw);
  // Throws AxiomError.
  Groupoid validate(RawGroupoid const& raw);
  // Checks the category-style laws (composability criterion, unit and
  // inverse laws, s(ab) = s(b)s(a), two-sided associativity, m single valued
  // on exactly the composable pairs) on validated data; returns
  // descriptions of failures.
  std::vector<std::string> check_category_laws(Groupoid const& g);

  std::vector<std::pair<Elem, Elem>> composable_pairs(Groupoid const& g);

  // Orbits as sorted sets of units, ordered by least member.
  std::vector<Subset> orbits(Groupoid const& g);
  bool                is_transitive(Groupoid const& g);
  Subset              isotropy(Groupoid const& g, Elem unit);
  Subset              isotropy_bundle(Groupoid const& g);
  // e_R^{-1}(O) for each orbit O, in orbit order.
  std::vector<Subset> transitive_components(Groupoid const& g);

  bool is_subgroupoid(Groupoid const& g, Subset const& s);
  bool is_wide(Groupoid const& g, Subset const& s);
  bool is_union_of_components(Groupoid const& g, Subset const& s);
  // Materializes a subgroupoid as a groupoid over the same names.
  Groupoid subgroupoid(Groupoid const& g, Subset const& s, std::string name);

  Groupoid restrict(Groupoid const& g, Subset const& units);
  // Elements become "L:x" and "R:y".
  Groupoid disjoint_union(Groupoid const& g1, Groupoid const& g2);
  // Elements "(a,b)"; multiplication (m1 x m2)(id x sigma x id).
  Groupoid cartesian_product(Groupoid const& g1, Groupoid const& g2);

  GroupTable isotropy_group(Groupoid const& g, Elem unit);

  // A transitive groupoid written as E x G x E.
  struct TransitiveDecomposition {
    Elem              base;      // e0
    std::vector<Elem> units;     // E, in index order
    GroupTable        group;     // isotropy at e0, named as in g
    std::vector<Elem> section;   // p(x) per entry of units
    Groupoid          product;   // product_form(E, group)
    std::vector<Elem> iso;       // element of product -> element of g
  };

  // p(x) is the least element of e_L^{-1}(e0) with e_R = x, and p(e0) = e0.
  // Throws PreconditionError if g is not transitive.
  TransitiveDecomposition decompose_transitive(Groupoid const& g, Elem base);

  // The equivalence relation of the orbits as a groupoid on "(e1,e2)".
  Groupoid orbit_relation(Groupoid const& g);

  // Checks that map (indexed by elements of a) is a bijection onto b that
  // preserves units, inverses and products.
  bool is_isomorphism(Groupoid const&          a,
                      Groupoid const&          b,
                      std::vector<Elem> const& map);
  // Exhaustive search for an isomorphism; small groupoids only.
  std::optional<std::vector<Elem>> find_isomorphism(Groupoid const& a,
                                                    Groupoid const& b);

}  // namespace relgroupoid

#endif  // RELGROUPOID_GROUPOID_HPP_
