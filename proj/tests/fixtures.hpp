// Example constructions and independent checks shared by the unit tests and
// the acceptance binary.  Each check returns an empty string on success and a
// description of the first mismatch otherwise.

#ifndef RELGROUPOID_TESTS_FIXTURES_HPP_
#define RELGROUPOID_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "relgroupoid/action.hpp"
#include "relgroupoid/bisection.hpp"
#include "relgroupoid/builders.hpp"
#include "relgroupoid/groupoid.hpp"
#include "relgroupoid/morphism.hpp"
#include "relgroupoid/search.hpp"

namespace fixtures {

  using namespace relgroupoid;
  using NamedTriple = std::array<std::string, 3>;

  inline std::vector<Groupoid> small_groupoids() {
    return {catalog::s2(), catalog::z2(), catalog::p2(), catalog::one_point()};
  }

  // Every morphism among small_groupoids().
  inline std::vector<Morphism> small_family() {
    std::vector<Morphism> out;
    for (auto const& a : small_groupoids()) {
      for (auto const& b : small_groupoids()) {
        auto hs = enum_morphisms(a, b);
        out.insert(out.end(), hs.begin(), hs.end());
      }
    }
    return out;
  }

  // Transports the coset action along iota (class -> name) and compares the
  // result with expected.  iota is evaluated on a representative of each
  // class and must not depend on the choice.
  inline std::string check_cosets(CosetSpace const&                       cs,
                                  std::function<std::string(Elem)> const& iota,
                                  std::set<NamedTriple> const&            expected) {
    Groupoid const&                    g = cs.groupoid;
    std::map<Elem, std::string>        name_of_class;
    std::set<std::string>              seen;
    for (Elem a = 0; a < g.size(); ++a) {
      std::string n = iota(a);
      auto [it, fresh] = name_of_class.emplace(cs.projection[a], n);
      if (!fresh && it->second != n) {
        return "identification depends on the representative at " + g.name_of(a);
      }
      if (fresh && !seen.insert(n).second) {
        return "identification is not injective at " + n;
      }
    }
    if (name_of_class.size() != cs.classes->size()) {
      return "class count mismatch";
    }
    std::set<NamedTriple> got;
    for (auto const& [y, a, x] : cs.action.triples()) {
      got.insert({name_of_class.at(y), g.name_of(a), name_of_class.at(x)});
    }
    if (got != expected) {
      return "transported action differs (" + std::to_string(got.size()) + " vs "
             + std::to_string(expected.size()) + " triples)";
    }
    return {};
  }

  // Gamma / Gamma is E with the action on units.
  inline std::string example_cosets_whole(Groupoid const& g) {
    Subset all(g.size());
    for (Elem a = 0; a < g.size(); ++a) {
      all[a] = a;
    }
    std::set<NamedTriple> expected;
    for (Elem a = 0; a < g.size(); ++a) {
      expected.insert({g.name_of(g.left_unit(a)), g.name_of(a), g.name_of(g.right_unit(a))});
    }
    return check_cosets(
        coset_space(g, all), [&](Elem a) { return g.name_of(g.left_unit(a)); }, expected);
  }

  // Gamma / Gamma' is the orbit relation R, acted on by
  // (e_L(gamma), e; gamma, e_R(gamma), e).
  inline std::string example_cosets_isotropy(Groupoid const& g) {
    auto pair_of = [&](Elem a, Elem b) { return pair_name(g.name_of(a), g.name_of(b)); };
    std::set<NamedTriple> expected;
    for (Elem a = 0; a < g.size(); ++a) {
      for (Elem b = 0; b < g.size(); ++b) {
        // e ranges over the orbit of e_R(a)
        if (g.right_unit(b) == g.right_unit(a)) {
          Elem e = g.left_unit(b);
          expected.insert({pair_of(g.left_unit(a), e), g.name_of(a), pair_of(g.right_unit(a), e)});
        }
      }
    }
    return check_cosets(
        coset_space(g, isotropy_bundle(g)),
        [&](Elem a) { return pair_of(g.left_unit(a), g.right_unit(a)); },
        expected);
  }

  // X^2 / R is X x Y for Y = X / R, acted on by (x1, y; (x1,x2), (x2, y)).
  inline std::string example_cosets_equivalence(Names const& x, std::vector<Names> const& blocks) {
    Groupoid const g = pair_groupoid(x);
    std::map<std::string, std::string> block_of;
    for (auto const& b : blocks) {
      for (auto const& p : b) {
        block_of[p] = "{" + b.front() + "}";
      }
    }
    Subset r;
    for (auto const& a : x) {
      for (auto const& b : x) {
        if (block_of[a] == block_of[b]) {
          r.push_back(g.index(pair_name(a, b)));
        }
      }
    }
    std::sort(r.begin(), r.end());
    std::set<NamedTriple> expected;
    for (auto const& x1 : x) {
      for (auto const& x2 : x) {
        for (auto const& b : blocks) {
          std::string y = "{" + b.front() + "}";
          expected.insert({pair_name(x1, y), pair_name(x1, x2), pair_name(x2, y)});
        }
      }
    }
    auto iota = [&](Elem a) {
      auto const& name = g.name_of(a);  // "(p,q)"
      auto        c    = name.find(',');
      return pair_name(name.substr(1, c - 1), block_of[name.substr(c + 1, name.size() - c - 2)]);
    };
    return check_cosets(coset_space(g, r), iota, expected);
  }

  // Checks psi against Phi pointwise: (y; gamma, x) in Phi iff
  // (psi(y); gamma, psi(x)) in m~_G.
  inline std::string check_homogeneous(Action const& phi, Homogeneous const& h) {
    std::set<Elem> image(h.psi.begin(), h.psi.end());
    if (image.size() != phi.carrier_size() || image.size() != h.cosets.classes->size()) {
      return "psi is not a bijection";
    }
    std::set<ActionTriple> moved, cosets;
    for (auto const& [y, a, x] : phi.triples()) {
      moved.insert({h.psi[y], a, h.psi[x]});
    }
    for (auto const& t : h.cosets.action.triples()) {
      cosets.insert(t);
    }
    return moved == cosets ? std::string{} : "psi does not intertwine the actions";
  }

  // P2 acting on {x1, x2} by (i,j) x_j = x_i.
  inline Action p2_on_points() {
    return validate_action(catalog::p2(),
                           Names{"x1", "x2"},
                           {{"x1", "(1,1)", "x1"},
                            {"x2", "(2,2)", "x2"},
                            {"x1", "(1,2)", "x2"},
                            {"x2", "(2,1)", "x1"}});
  }

  // The three homogeneous-space examples: (action, p, expected G).
  struct HomogeneousCase {
    std::string       name;
    Action            phi;
    std::vector<Elem> p;
    Subset            expected_sub;
  };

  inline std::vector<HomogeneousCase> homogeneous_cases() {
    std::vector<HomogeneousCase> out;
    Groupoid const g = catalog::product_form_xy_z2();
    {
      Action            phi = left_multiplication(g);
      std::vector<Elem> p;
      for (Elem u : g.units()) {
        p.push_back(phi.carrier()->index(g.name_of(u)));
      }
      out.push_back({"left multiplication", phi, p, g.units()});
    }
    {
      Action            phi = unit_action(g);
      std::vector<Elem> p;
      for (Elem u : g.units()) {
        p.push_back(phi.carrier()->index(g.name_of(u)));
      }
      Subset all(g.size());
      for (Elem a = 0; a < g.size(); ++a) {
        all[a] = a;
      }
      out.push_back({"unit action", phi, p, all});
    }
    {
      // (x1; (1,2), x2) lies in the action, so every arrow of P2 fixes the section.
      Action phi = p2_on_points();
      Subset all;
      for (Elem a = 0; a < phi.groupoid().size(); ++a) {
        all.push_back(a);
      }
      out.push_back({"P2 on points", phi, {phi.carrier()->index("x1"), phi.carrier()->index("x2")}, all});
    }
    return out;
  }

  // E = {x, y} and Z2 acting regularly on itself.
  inline GroupAction z2_regular() {
    return GroupAction(cyclic_group(2),
                       {"0", "1"},
                       {{"0", "0", "0"}, {"1", "0", "1"}, {"1", "1", "0"}, {"0", "1", "1"}});
  }

  // The isotropy group at e0 = "x|0|x" acting on Z through a, as an action of
  // the corresponding subgroupoid of product_form(e, a.group()).
  inline std::pair<Subset, Action> isotropy_action(Names const& e, GroupAction const& a) {
    Groupoid const g  = product_form(e, a.group());
    Elem const     e0 = g.index(product_form_name(e.front(), a.group().name_of(a.group().unit()), e.front()));
    Subset const   sub = isotropy(g, e0);
    Groupoid const k   = subgroupoid(g, sub, "K");
    std::vector<NamedTriple> t;
    for (Elem h = 0; h < a.group().size(); ++h) {
      for (Elem z = 0; z < a.carrier()->size(); ++z) {
        t.push_back({a.carrier()->name(a.act(h, z)),
                     product_form_name(e.front(), a.group().name_of(h), e.front()),
                     a.carrier()->name(z)});
      }
    }
    return {sub, validate_action(k, a.carrier()->elements(), t)};
  }

}  // namespace fixtures

#endif  // RELGROUPOID_TESTS_FIXTURES_HPP_
