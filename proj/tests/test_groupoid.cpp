#include <algorithm>
#include <set>

#include "doctest.h"
#include "relgroupoid/builders.hpp"
#include "relgroupoid/groupoid.hpp"

using namespace relgroupoid;

namespace {

  RawGroupoid z2_raw() {
    return group_groupoid(cyclic_group(2)).raw();
  }

  Axiom first_axiom(RawGroupoid const& r) {
    auto v = check_axioms(r);
    REQUIRE_FALSE(v.empty());
    return v.front().axiom;
  }

  void drop_triple(RawGroupoid& r, RawGroupoid::Triple const& t) {
    auto it = std::find(r.compose.begin(), r.compose.end(), t);
    REQUIRE(it != r.compose.end());
    r.compose.erase(it);
  }

}  // namespace

TEST_CASE("catalog groupoids satisfy the axioms and the category laws") {
  for (auto const& [name, g] : catalog::all()) {
    CAPTURE(name);
    CHECK(check_axioms(g.raw()).empty());
    CHECK(check_category_laws(g).empty());
    CHECK(validate(g.raw()) == g);
  }
}

TEST_CASE("composable pairs are exactly the pairs with e_R(a) = e_L(b)") {
  for (auto const& [name, g] : catalog::all()) {
    CAPTURE(name);
    std::set<std::pair<Elem, Elem>> expected;
    for (auto const& t : g.raw().compose) {
      expected.emplace(g.index(t[0]), g.index(t[1]));
    }
    auto pairs = composable_pairs(g);
    CHECK(std::set<std::pair<Elem, Elem>>(pairs.begin(), pairs.end()) == expected);
    for (auto [a, b] : pairs) {
      CHECK(g.right_unit(a) == g.left_unit(b));
    }
  }
}

TEST_CASE("single mutations name the violated axiom") {
  SUBCASE("missing inverse product") {
    auto r = z2_raw();
    drop_triple(r, {"1", "1", "0"});
    CHECK(first_axiom(r) == Axiom::inverse_law);
  }
  SUBCASE("broken involution") {
    auto r = pair_groupoid({"1", "2"}).raw();
    for (auto& [g, s] : r.inverse) {
      if (g == "(1,1)") {
        s = "(1,2)";
      }
    }
    CHECK(first_axiom(r) == Axiom::involution);
  }
  SUBCASE("broken unit law") {
    auto r = z2_raw();
    for (auto& t : r.compose) {
      if (t[0] == "0" && t[1] == "1") {
        t[2] = "0";
      }
    }
    CHECK(first_axiom(r) == Axiom::unit_law);
  }
  SUBCASE("removed unit") {
    auto r = pair_groupoid({"1", "2"}).raw();
    r.units.erase(r.units.begin());
    CHECK(first_axiom(r) == Axiom::unit_law);
  }
  SUBCASE("dangling name") {
    auto r = z2_raw();
    r.compose.push_back({"0", "7", "7"});
    CHECK(first_axiom(r) == Axiom::structure);
    CHECK_THROWS_AS(validate(r), AxiomError);
  }
}

TEST_CASE("a stray triple in a group breaks the multiplication") {
  auto r = z2_raw();
  r.compose.push_back({"1", "1", "1"});
  auto v = check_axioms(r);
  REQUIRE_FALSE(v.empty());
  try {
    validate(r);
    FAIL("expected AxiomError");
  } catch (AxiomError const& e) {
    CHECK(e.violations().size() == v.size());
  }
}

TEST_CASE("e_L and e_R in Z2 and the bundle") {
  auto z2 = catalog::z2();
  CHECK(z2.size() == 2);
  CHECK(z2.units().size() == 1);
  auto b = catalog::bundle_z2_trivial();
  CHECK(b.size() == 3);
  CHECK(b.units().size() == 2);
  for (Elem g = 0; g < b.size(); ++g) {
    CHECK(b.left_unit(g) == b.right_unit(g));
  }
}

TEST_CASE("orbits and components") {
  auto u = disjoint_union(catalog::p2(), catalog::z2());
  CHECK(transitive_components(u).size() == 2);
  CHECK(orbits(u).size() == 2);
  CHECK(transitive_components(catalog::p3()).size() == 1);
  CHECK(is_transitive(catalog::z2_swap()));
  auto bundle3 = group_bundle({cyclic_group(2), trivial_group(), cyclic_group(3)});
  CHECK(transitive_components(bundle3).size() == 3);
  auto e = catalog::equivalence_12_3();
  auto o = orbits(e);
  REQUIRE(o.size() == 2);
  CHECK(o[0].size() == 2);
  CHECK(o[1].size() == 1);
}

TEST_CASE("isotropy") {
  auto z2 = catalog::z2();
  CHECK(isotropy(z2, z2.units()[0]).size() == 2);
  CHECK(isotropy_bundle(catalog::p3()) == catalog::p3().units());
  auto sw = catalog::z2_swap();
  for (Elem u : sw.units()) {
    CHECK(isotropy(sw, u).size() == 1);
  }
  auto pf = catalog::product_form_xy_z2();
  CHECK(isotropy_bundle(pf).size() == 4);
}

TEST_CASE("subgroupoids") {
  auto z2 = catalog::z2();
  CHECK(is_subgroupoid(z2, z2.units()));
  CHECK(is_wide(z2, z2.units()));
  CHECK_FALSE(is_subgroupoid(z2, z2.subset({"1"})));
  auto p3 = catalog::p3();
  auto r  = restrict(p3, p3.subset({"(1,1)", "(2,2)"}));
  CHECK(r == pair_groupoid({"1", "2"}));
  CHECK_THROWS_AS(restrict(p3, p3.subset({"(1,2)"})), PreconditionError);
}

TEST_CASE("orbit relation") {
  CHECK(orbit_relation(catalog::z2_swap()).size() == 4);
  CHECK(orbit_relation(catalog::bundle_z2_trivial()).size() == 2);
  auto e = orbit_relation(catalog::equivalence_12_3());
  CHECK(e.size() == 5);
  CHECK(transitive_components(e).size() == 2);
  CHECK(orbit_relation(catalog::z4()).size() == 1);
}

TEST_CASE("disjoint union and cartesian product sizes") {
  for (auto const& [n1, g1] : catalog::all()) {
    for (auto const& [n2, g2] : catalog::all()) {
      if (g1.size() * g2.size() > 16) {
        continue;
      }
      CAPTURE(n1);
      CAPTURE(n2);
      auto u = disjoint_union(g1, g2);
      CHECK(u.size() == g1.size() + g2.size());
      CHECK(orbits(u).size() == orbits(g1).size() + orbits(g2).size());
      auto p = cartesian_product(g1, g2);
      CHECK(p.size() == g1.size() * g2.size());
      CHECK(p.units().size() == g1.units().size() * g2.units().size());
    }
  }
}

TEST_CASE("transitive decomposition") {
  for (auto const& [name, g] : catalog::all()) {
    CAPTURE(name);
    if (!is_transitive(g) || g.size() == 0) {
      CHECK_THROWS_AS(decompose_transitive(g, g.units()[0]), PreconditionError);
      continue;
    }
    for (Elem base : g.units()) {
      auto d = decompose_transitive(g, base);
      CHECK(d.group.size() * d.units.size() * d.units.size() == g.size());
      CHECK(is_isomorphism(d.product, g, d.iso));
      CHECK(are_isomorphic(d.group, isotropy_group(g, base)));
    }
  }
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(catalog::z2_swap(), catalog::product_form_xy_z2()) == std::nullopt);
  CHECK(find_isomorphism(catalog::z2_swap(), catalog::p2()).has_value());
  CHECK(find_isomorphism(catalog::z4(), catalog::klein()) == std::nullopt);
  CHECK(find_isomorphism(catalog::z4(), catalog::z4()).has_value());
}
