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

// Relational actions Phi : G x X -o X with
//
//   Phi (m x id) = Phi (id x Phi),   Phi (e x id) = id.
//
// Triples are (y; gamma, x), output first.

#ifndef RELGROUPOID_ACTION_HPP_
#define RELGROUPOID_ACTION_HPP_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "builders.hpp"
#include "groupoid.hpp"
#include "morphism.hpp"

namespace relgroupoid {

  using ActionTriple = std::array<Elem, 3>;  // (y, gamma, x)

  enum class ActionLaw {
    structure,    // names outside the declared universes
    composition,  // Phi (m x id) = Phi (id x Phi)
    unit,         // Phi (e x id) = id
    derived,      // a consequence that should follow from the two laws
    classical     // a fibered-action law (rho(x)x = x, associativity, domain)
  };

  std::string_view to_string(ActionLaw law);

  class ActionError : public Error {
   public:
    ActionError(ActionLaw law, std::string const& message);
    ActionLaw law() const noexcept {
      return _law;
    }

   private:
    ActionLaw _law;
  };

  class Action {
   public:
    Groupoid const&    groupoid() const noexcept;
    UniversePtr const& carrier() const noexcept;
    std::size_t        carrier_size() const noexcept;

    std::vector<ActionTriple> const& triples() const noexcept;
    std::vector<std::array<std::string, 3>> named_triples() const;
    // Gamma x X -o X.
    FinRel relation() const;

    // no_elem outside D(Phi).
    Elem apply(Elem gamma, Elem x) const;
    Elem base(Elem x) const;  // rho
    std::vector<Elem> const& base_map() const noexcept;

    bool operator==(Action const& other) const noexcept;
    bool operator<(Action const& other) const noexcept;

   private:
    struct Data;
    explicit Action(std::shared_ptr<Data const> d);
    std::shared_ptr<Data const> _data;

    friend Action validate_action(Groupoid const&, UniversePtr, std::vector<ActionTriple>);
  };

  std::optional<std::pair<ActionLaw, std::string>>
  check_action(Groupoid const& g, UniversePtr const& x, std::vector<ActionTriple> const& triples);
  // Throws ActionError.
  Action validate_action(Groupoid const& g, UniversePtr x, std::vector<ActionTriple> triples);
  Action validate_action(Groupoid const&                                g,
                         Names const&                                   x,
                         std::vector<std::array<std::string, 3>> const& triples);

  // rho : X -> E and a table act[gamma * |X| + x], no_elem off the domain.
  struct ClassicalAction {
    std::vector<Elem> rho;
    std::vector<Elem> table;
  };
  Action          classical_to_relational(Groupoid const&        g,
                                          UniversePtr const&     x,
                                          ClassicalAction const& a);
  ClassicalAction as_mapping(Action const& phi);

  // Examples: left multiplication on G, G on its units, conjugation on the
  // isotropy bundle.
  Action left_multiplication(Groupoid const& g);
  Action unit_action(Groupoid const& g);
  Action conjugation_action(Groupoid const& g);
  Action group_action_relation(GroupAction const& a);

  Morphism action_to_pair_morphism(Action const& phi);
  // h must target pair_groupoid(x).
  Action morphism_to_action(Morphism const& h, UniversePtr const& x);

  // phi acts on the elements of delta.  Throws PreconditionError unless
  // Phi (id x m_D) = m_D (Phi x id).
  Morphism right_commuting_to_morphism(Action const& phi, Groupoid const& delta);

  // h : D -> G and phi a G-action; returns Phi (h x id) as a D-action.
  Action pullback_action(Morphism const& h, Action const& phi);
  // f : X -> Y by index; f Phi = Psi (id x f).
  bool is_equivariant(std::vector<Elem> const& f, Action const& phi, Action const& psi);
  // A bijection X -> Y that is equivariant, if any.  Small carriers only.
  std::optional<std::vector<Elem>> find_equivariant_bijection(Action const& phi,
                                                              Action const& psi);

  struct ActionGroupoid {
    Groupoid                           groupoid;  // elements "(gamma,x)"
    std::vector<std::pair<Elem, Elem>> pairs;     // element -> (gamma, x)
  };
  ActionGroupoid action_groupoid(Action const& phi);

  struct ActionFunctor {
    Action            action;   // phi_h on the units of the target
    ActionGroupoid    domain;   // G x_phi F
    std::vector<Elem> functor;  // element of domain -> target element
  };
  ActionFunctor action_groupoid_functor(Morphism const& h);
  // k maps elements of action_groupoid(phi) to delta.  Throws
  // PreconditionError unless k is a functor with K(e, f) = f.
  Morphism functor_to_zm(Action const& phi, Groupoid const& delta, std::vector<Elem> const& k);

  struct CosetSpace {
    Groupoid          groupoid;
    Subset            sub;
    UniversePtr       classes;     // "[least member]"
    std::vector<Elem> projection;  // element -> class
    Action            action;      // m~_G
  };
  // Throws PreconditionError unless sub is wide.
  CosetSpace coset_space(Groupoid const& g, Subset const& sub);

  struct QuotientGroupoid {
    Groupoid          groupoid;
    Morphism          projection;
    std::vector<Elem> classes;  // element of g -> element of groupoid
  };
  // Requires sub wide, inside the isotropy bundle and normal in every
  // isotropy group.
  QuotientGroupoid quotient_groupoid(Groupoid const& g, Subset const& sub);

  struct Homogeneous {
    Subset            sub;  // G
    CosetSpace        cosets;
    std::vector<Elem> psi;  // carrier element -> class
  };
  // p[i] is the point over the i-th unit of phi.groupoid().
  Homogeneous homogeneous_identification(Action const& phi, std::vector<Elem> const& p);

  struct InducedAction {
    UniversePtr classes;  // "[least member]" of {(gamma,x)}
    Action      action;
  };
  // phi is an action of subgroupoid(g, sub); its base map must hit every
  // unit of sub.
  InducedAction induced_action(Groupoid const& g, Subset const& sub, Action const& phi);

  // The action of product_form(e, G) on "(e,z)" with
  // (e1, gz; e1|g|e2, e2, z).
  Action product_form_action(Names const& e, GroupAction const& a);

  struct TransitiveClassification {
    Elem              z0;
    GroupAction       reduced;  // G on rho^{-1}(e0)
    Action            model;    // product_form_action(E, reduced)
    std::vector<Elem> psi;      // model carrier element -> Z element
  };
  // phi acts on product_form(e, t).  Asserts Psi bijective and
  // Phi (id x Psi) = Psi Phi~.
  TransitiveClassification classify_transitive_action(Names const&       e,
                                                      GroupTable const&  t,
                                                      Action const&      phi,
                                                      std::optional<Elem> z0 = std::nullopt);
  // Any transitive groupoid; transports phi along decompose_transitive.
  TransitiveClassification classify_transitive_action(Action const& phi);

}  // namespace relgroupoid

#endif  // RELGROUPOID_ACTION_HPP_
