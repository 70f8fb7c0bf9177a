#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "relgroupoid/relation.hpp"

using namespace relgroupoid;

namespace {

  using PairSet = std::set<std::pair<Code, Code>>;

  PairSet as_set(FinRel const& r) {
    return PairSet(r.graph().begin(), r.graph().end());
  }

  FinRel random_rel(Domain const& x, Domain const& y, std::mt19937& rng) {
    std::vector<Pair> g;
    std::bernoulli_distribution coin(0.35);
    for (Code b = 0; b < y.size(); ++b) {
      for (Code a = 0; a < x.size(); ++a) {
        if (coin(rng)) {
          g.emplace_back(b, a);
        }
      }
    }
    return FinRel(x, y, g);
  }

  UniversePtr const X = make_universe("X", {"x1", "x2", "x3"});
  UniversePtr const Y = make_universe("Y", {"y1", "y2"});
  UniversePtr const Z = make_universe("Z", {"z1", "z2", "z3", "z4"});

}  // namespace

TEST_CASE("universe sorts names and rejects duplicates") {
  auto u = make_universe("U", {"b", "a", "c"});
  CHECK(u->name(0) == "a");
  CHECK(u->index("c") == 2);
  CHECK_FALSE(u->contains("d"));
  CHECK_THROWS_AS(u->index("d"), UnknownElement);
  CHECK_THROWS_AS(make_universe("U", {"a", "a"}), Error);
}

TEST_CASE("product codes follow lexicographic tuple order") {
  Domain d = Domain(X) * Domain(Y);
  CHECK(d.size() == 6);
  Code prev = 0;
  bool first = true;
  for (Elem i = 0; i < 3; ++i) {
    for (Elem j = 0; j < 2; ++j) {
      std::vector<Elem> t{i, j};
      Code c = d.encode(t);
      CHECK(d.decode(c) == t);
      if (!first) {
        CHECK(c == prev + 1);
      }
      prev  = c;
      first = false;
    }
  }
  CHECK(d.render(d.encode(std::vector<Elem>{2, 1})) == "x3,y2");
  CHECK(Domain::point().size() == 1);
  CHECK(Domain::point().render(0) == "1");
}

TEST_CASE("transpose of a single pair") {
  auto r = FinRel::from_names(X, Y, {{{"y1"}, {"x1"}}});
  auto t = transpose(r);
  CHECK(t.source() == Domain(Y));
  CHECK(t.size() == 1);
  CHECK(t.contains(X->index("x1"), Y->index("y1")));
  CHECK(transpose(identity(Domain(X))) == identity(Domain(X)));
}

TEST_CASE("product of single pairs") {
  auto r  = FinRel::from_names(X, Y, {{{"y1"}, {"x1"}}});
  auto r1 = FinRel::from_names(Z, Y, {{{"y2"}, {"z3"}}});
  auto p  = product(r, r1);
  REQUIRE(p.size() == 1);
  CHECK(p.render(p.graph()[0]) == "(y1,y2; x1,z3)");
}

TEST_CASE("composition agrees with brute force") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto r = random_rel(X, Y, rng);
    auto s = random_rel(Y, Z, rng);
    PairSet expected;
    for (auto [y, x] : r.graph()) {
      for (auto [z, y1] : s.graph()) {
        if (y == y1) {
          expected.emplace(z, x);
        }
      }
    }
    CHECK(as_set(compose(s, r)) == expected);
  }
  auto r = random_rel(X, Y, rng);
  CHECK_THROWS_AS(compose(r, r), UniverseMismatch);
}

TEST_CASE("relation algebra laws") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto r = random_rel(X, Y, rng);
    auto s = random_rel(Y, Z, rng);
    auto t = random_rel(Z, X, rng);
    CHECK(compose(t, compose(s, r)) == compose(compose(t, s), r));
    CHECK(compose(identity(Domain(Y)), r) == r);
    CHECK(compose(r, identity(Domain(X))) == r);
    CHECK(transpose(compose(s, r)) == compose(transpose(r), transpose(s)));
    CHECK(transpose(transpose(r)) == r);
    // (s x t)(r x id) = (sr) x t
    CHECK(compose(product(s, t), product(r, identity(Domain(Z))))
          == product(compose(s, r), t));
  }
}

TEST_CASE("flip swaps factors and is an involution") {
  auto f = flip(Domain(X), Domain(Y));
  CHECK(is_mapping(f));
  CHECK(f.size() == 6);
  CHECK(compose(flip(Domain(Y), Domain(X)), f) == identity(Domain(X) * Domain(Y)));
}

TEST_CASE("domain, image, apply and first_difference") {
  auto r = FinRel::from_names(X, Y, {{{"y1"}, {"x1"}}, {{"y2"}, {"x1"}}, {{"y2"}, {"x3"}}});
  CHECK(domain(r) == std::vector<Code>{0, 2});
  CHECK(image(r) == std::vector<Code>{0, 1});
  CHECK(apply(r, 0) == std::vector<Code>{0, 1});
  CHECK_FALSE(is_mapping(r));
  auto r1 = FinRel::from_names(X, Y, {{{"y1"}, {"x1"}}});
  auto d  = first_difference(r, r1);
  REQUIRE(d.has_value());
  CHECK(d->first == Pair{1, 0});
  CHECK(d->second);
  CHECK_FALSE(first_difference(r, r).has_value());
}
