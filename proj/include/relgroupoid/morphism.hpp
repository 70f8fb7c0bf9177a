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

// Zakrzewski morphisms h : G -o D, i.e. relations with graph in D x G
// satisfying
//
//   h m = m_D (h x h),   h s = s_D h,   h e = e_D.
//
// Pairs are stored as (delta, gamma), output first.

#ifndef RELGROUPOID_MORPHISM_HPP_
#define RELGROUPOID_MORPHISM_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "builders.hpp"
#include "groupoid.hpp"

namespace relgroupoid {

  using MorphismGraph = std::vector<std::pair<Elem, Elem>>;  // (delta, gamma)

  enum class MorphismLaw {
    structure,       // pair outside D x G
    units,           // h e = e_D
    inverse,         // h s = s_D h
    multiplicative,  // h m = m_D (h x h)
    derived          // base map, domain or image invariant
  };

  std::string_view to_string(MorphismLaw law);

  struct MorphismViolation {
    MorphismLaw law;
    std::string witness;
    std::string message;
  };

  class MorphismError : public Error {
   public:
    explicit MorphismError(MorphismViolation v);
    MorphismLaw law() const noexcept {
      return _violation.law;
    }
    MorphismViolation const& violation() const noexcept {
      return _violation;
    }

   private:
    MorphismViolation _violation;
  };

  class Morphism {
   public:
    Groupoid const& source() const noexcept;
    Groupoid const& target() const noexcept;
    MorphismGraph const& graph() const noexcept;
    FinRel               relation() const;

    // Elements of the target related to g, sorted.
    std::vector<Elem> const& related(Elem g) const;
    bool                     contains(Elem delta, Elem gamma) const;

    // rho_h, indexed by target element; no_elem off the units.
    std::vector<Elem> const& base_map() const noexcept;
    Elem                     base(Elem unit) const;
    Subset const&            domain() const noexcept;
    Subset const&            image() const noexcept;
    Subset const&            kernel() const noexcept;

    std::vector<std::string> render() const;  // "(delta; gamma)" per pair

    bool operator==(Morphism const& other) const noexcept;
    bool operator<(Morphism const& other) const noexcept;

   private:
    struct Data;
    explicit Morphism(std::shared_ptr<Data const> d);
    std::shared_ptr<Data const> _data;

    friend Morphism validate_morphism(Groupoid const&, Groupoid const&, MorphismGraph);
  };

  // Literal relational check; the first failed law, or nothing.
  std::optional<MorphismViolation> check_morphism(Groupoid const&      source,
                                                  Groupoid const&      target,
                                                  MorphismGraph const& graph);
  // Throws MorphismError.
  Morphism validate_morphism(Groupoid const& source,
                             Groupoid const& target,
                             MorphismGraph   graph);
  Morphism validate_morphism(
      Groupoid const&                                         source,
      Groupoid const&                                         target,
      std::vector<std::pair<std::string, std::string>> const& graph);

  // Pointwise evaluation of the three laws; agrees with check_morphism.
  bool is_morphism_pointwise(Groupoid const&      source,
                             Groupoid const&      target,
                             MorphismGraph const& graph);

  Morphism identity_morphism(Groupoid const& g);
  // Graph of k after h, without validation.
  MorphismGraph compose_graphs(Morphism const& k, Morphism const& h);
  // k after h; throws UniverseMismatch unless h.target() == k.source().
  Morphism compose_morphisms(Morphism const& k, Morphism const& h);

  // h_f^L and h_f^R as (gamma, delta) pairs over e_L^{-1}(rho(f)) and
  // e_R^{-1}(rho(f)) respectively.
  std::vector<std::pair<Elem, Elem>> fiber_map_left(Morphism const& h, Elem f);
  std::vector<std::pair<Elem, Elem>> fiber_map_right(Morphism const& h, Elem f);

  bool is_mono(Morphism const& h);
  bool is_surjective(Morphism const& h);

  struct CancellationWitness {
    enum class Side { mono, epi };
    Side     side;
    Groupoid probe;
    // mono: w1, w2 : probe -> source with h w1 = h w2.
    // epi:  w1, w2 : target -> probe with w1 h = w2 h.
    Morphism w1;
    Morphism w2;
  };

  // True iff w1 != w2 and the two composites with h agree.
  bool verify_witness(Morphism const& h, CancellationWitness const& w);
  // Throws PreconditionError if h is mono.
  CancellationWitness mono_witness(Morphism const& h);

  // Standard morphisms.
  Morphism left_regular(Groupoid const& g);  // g -> pair_groupoid(g)
  Morphism component_projection(Groupoid const& g, Subset const& components);
  Morphism wide_inclusion(Groupoid const& g, Subset const& wide);
  Morphism to_orbit_pair(Groupoid const& g);      // g -> E^2
  Morphism to_orbit_relation(Groupoid const& g);  // g -> orbit_relation(g)
  Morphism restrict_to_domain(Morphism const& h);
  std::pair<Morphism, Morphism> product_injections(Groupoid const& g1,
                                                   Groupoid const& g2);
  // i1^T, i2^T : g1 + g2 -> g1, g2.
  std::pair<Morphism, Morphism> union_projections(Groupoid const& g1,
                                                  Groupoid const& g2);

  // Throws PreconditionError naming the failed condition when phi is not a
  // functor or is not bijective on units.
  Morphism functor_to_morphism(Groupoid const&          source,
                               Groupoid const&          target,
                               std::vector<Elem> const& phi);
  bool is_functor(Groupoid const&          source,
                  Groupoid const&          target,
                  std::vector<Elem> const& phi);

  // G -o X^2, pairs ((gx, x), g).
  Morphism group_action_morphism(GroupAction const& a);

  struct IntoGroup {
    Elem              unit;  // e0 in the source
    std::vector<Elem> hom;   // isotropy element of e0 -> target element, by index
                             // of isotropy(source, unit)
  };
  IntoGroup classify_into_group(Morphism const& h);
  Morphism  reconstruct_into_group(Groupoid const&  source,
                                   Groupoid const&  group,
                                   IntoGroup const& data);

  struct KernelQuotient {
    Groupoid quotient;
    Morphism projection;  // source -> quotient
    Morphism reduced;     // quotient -> target, mono
  };
  // Requires D(h) to be the whole source.
  KernelQuotient quotient_by_kernel(Morphism const& h);

  struct Factorization {
    Groupoid middle;
    Morphism epi;   // h1
    Morphism mono;  // h2
  };
  Factorization epi_mono_factorization(Morphism const& h);

  // The unique p : L -> G1 + G2 with i1^T p = p1 and i2^T p = p2.
  Morphism product_pairing(Morphism const& p1, Morphism const& p2);

  struct SeparatingPair {
    char     branch;  // 'A' or 'B'
    Groupoid probe;
    Morphism k1;
    Morphism k2;
  };
  // Throws PreconditionError unless sub is a proper wide subgroupoid.
  SeparatingPair separating_pair(Groupoid const& g, Subset const& sub);
  // True iff k1 != k2 and they agree on sub.
  bool verify_separating_pair(SeparatingPair const& p, Subset const& sub);

  // Semi-decision; nullopt does not mean h is an epimorphism.
  std::optional<CancellationWitness> find_non_epi_witness(Morphism const& h);

}  // namespace relgroupoid

#endif  // RELGROUPOID_MORPHISM_HPP_
