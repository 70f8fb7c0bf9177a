// Acceptance checks.  One line per criterion:
//
//   PASS  3 oracle agreement (0.41 s / 60 s): ...
//
// followed by a summary line listing the failing criteria.  Usage:
//
//   acceptance <path to the relgroupoid tool>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include "json.hpp"
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_support.hpp"
#include "fixtures.hpp"
#include "relgroupoid/document.hpp"

using namespace relgroupoid;

namespace {

  // Collects the first few failures of a criterion.
  class Report {
   public:
    void fail(std::string const& what) {
      if (_failures.size() < 3) {
        _failures.push_back(what);
      }
      ++_count;
    }
    void expect(bool ok, std::string const& what) {
      if (!ok) {
        fail(what);
      }
    }
    void note(std::string const& n) {
      _notes.push_back(n);
    }
    bool ok() const {
      return _count == 0;
    }
    std::string text() const {
      std::string out;
      auto const& parts = ok() ? _notes : _failures;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i == 0 ? "" : "; ") + parts[i];
      }
      if (_count > _failures.size()) {
        out += "; " + std::to_string(_count - _failures.size()) + " more";
      }
      return out;
    }

   private:
    std::vector<std::string> _failures;
    std::vector<std::string> _notes;
    std::size_t              _count = 0;
  };

  struct Criterion {
    int                          id;
    std::string                  title;
    double                       limit;  // seconds
    std::function<void(Report&)> body;
  };

  std::string cli_path;

  bool contains(Subset const& s, Elem x) {
    return std::binary_search(s.begin(), s.end(), x);
  }

  // Graphs as plain pair sets, so that comparisons do not rely on Morphism
  // equality.
  std::set<std::pair<Elem, Elem>> graph_set(Morphism const& h) {
    return {h.graph().begin(), h.graph().end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // 1. Axiom suite

  void replace_output(RawGroupoid& r, std::string const& a, std::string const& b, std::string const& c) {
    for (auto& t : r.compose) {
      if (t[0] == a && t[1] == b) {
        t[2] = c;
      }
    }
  }

  void axiom_suite(Report& rep) {
    std::size_t mutations = 0;
    for (auto const& [name, g] : catalog::all()) {
      rep.expect(check_axioms(g.raw()).empty(), name + " does not validate");
      Elem gamma = no_elem;  // least non-unit
      for (Elem a = 0; a < g.size() && gamma == no_elem; ++a) {
        if (!g.is_unit(a)) {
          gamma = a;
        }
      }
      auto first_is = [&](RawGroupoid const& r, Axiom want, std::string const& what) {
        ++mutations;
        auto v = check_axioms(r);
        if (v.empty()) {
          rep.fail(name + ": " + what + " accepted");
        } else if (v.front().axiom != want) {
          rep.fail(name + ": " + what + " reported " + std::string(to_string(v.front().axiom)));
        }
      };
      auto const n = [&](Elem a) { return g.name_of(a); };
      if (gamma != no_elem) {
        // drop (s(gamma), gamma, e_R(gamma))
        auto r = g.raw();
        std::erase(r.compose, RawGroupoid::Triple{n(g.inverse(gamma)), n(gamma), n(g.right_unit(gamma))});
        first_is(r, Axiom::inverse_law, "dropped inverse product");
      }
      if (g.size() >= 2) {
        // s(x) := y with y != s(x)
        auto r = g.raw();
        auto& [x, sx] = r.inverse.front();
        sx = n(g.index(sx) == 0 ? 1 : 0);
        first_is(r, Axiom::involution, "redirected inverse");
        // e_L(x) x := y with y != x
        r       = g.raw();
        Elem x0 = gamma == no_elem ? 0 : gamma;
        replace_output(r, n(g.left_unit(x0)), n(x0), n(x0 == 0 ? 1 : 0));
        first_is(r, Axiom::unit_law, "redirected unit product");
      }
      {
        auto r = g.raw();
        r.units.erase(r.units.begin());
        first_is(r, Axiom::unit_law, "removed unit");
      }
      {
        // the least triple (a, b, c) not in the table
        auto                         r = g.raw();
        std::set<RawGroupoid::Triple> have(r.compose.begin(), r.compose.end());
        bool                         added = false;
        for (Elem a = 0; a < g.size() && !added; ++a) {
          for (Elem b = 0; b < g.size() && !added; ++b) {
            for (Elem c = 0; c < g.size() && !added; ++c) {
              RawGroupoid::Triple t{n(a), n(b), n(c)};
              if (!have.count(t)) {
                r.compose.push_back(t);
                added = true;
              }
            }
          }
        }
        if (added) {
          ++mutations;
          auto v = check_axioms(r);
          bool assoc = std::any_of(v.begin(), v.end(), [](AxiomViolation const& x) {
            return x.axiom == Axiom::associativity || x.axiom == Axiom::antihomomorphism;
          });
          rep.expect(assoc, name + ": stray triple not reported as an associativity or antihomomorphism violation");
        }
      }
    }
    rep.note(std::to_string(catalog::all().size()) + " groupoids valid, "
             + std::to_string(mutations) + " mutations rejected with the expected axiom");
  }

  ////////////////////////////////////////////////////////////////////////
  // 2. Definition equivalence

  void definition_suite(Report& rep) {
    for (auto const& [name, g] : catalog::all()) {
      for (auto const& f : check_category_laws(g)) {
        rep.fail(name + ": " + f);
      }
      FinRel const& m   = g.multiplication();
      Domain const  gg  = g.domain() * g.domain();
      auto const    dom = domain(m);
      std::set<Code> expected;
      for (Elem a = 0; a < g.size(); ++a) {
        for (Elem b = 0; b < g.size(); ++b) {
          if (g.right_unit(a) == g.left_unit(b)) {
            expected.insert(gg.encode(std::vector<Elem>{a, b}));
          }
        }
      }
      rep.expect(std::set<Code>(dom.begin(), dom.end()) == expected, name + ": D(m) differs from the composable pairs");
      bool single = true;
      for (Code c : dom) {
        single = single && apply(m, c).size() == 1;
      }
      rep.expect(single, name + ": m is not a mapping on its domain");
      auto mul = [&](Elem a, Elem b) {
        auto out = apply(m, gg.encode(std::vector<Elem>{a, b}));
        return out.size() == 1 ? Elem(out[0]) : no_elem;
      };
      for (Elem a = 0; a < g.size(); ++a) {
        Elem l = g.left_unit(a), r = g.right_unit(a), s = g.inverse(a);
        rep.expect(mul(l, a) == a && mul(a, r) == a, name + ": unit law at " + g.name_of(a));
        rep.expect(mul(a, s) == l && mul(s, a) == r, name + ": inverse law at " + g.name_of(a));
        rep.expect(g.inverse(s) == a, name + ": s is not an involution");
        for (Elem b = 0; b < g.size(); ++b) {
          Elem ab = mul(a, b);
          if (ab == no_elem) {
            continue;
          }
          rep.expect(g.left_unit(ab) == l && g.right_unit(ab) == g.right_unit(b),
                     name + ": units of a product");
          rep.expect(mul(g.inverse(b), s) == g.inverse(ab), name + ": s(ab) != s(b)s(a)");
          for (Elem c = 0; c < g.size(); ++c) {
            Elem bc = mul(b, c);
            if (bc != no_elem) {
              rep.expect(mul(ab, c) == mul(a, bc), name + ": associativity");
            }
          }
        }
      }
    }
    rep.note("derived laws hold on all catalog groupoids");
  }

  ////////////////////////////////////////////////////////////////////////
  // 3. Oracle agreement

  void oracle_suite(Report& rep) {
    std::size_t pairs = 0, total = 0;
    for (auto const& [n1, a] : catalog::all()) {
      for (auto const& [n2, b] : catalog::all()) {
        if (a.size() * b.size() > 20) {
          continue;
        }
        ++pairs;
        auto s = enum_morphisms(a, b);
        auto v = enum_morphisms_naive(a, b);
        total += v.size();
        std::set<std::set<std::pair<Elem, Elem>>> gs, gv;
        for (auto const& h : s) {
          gs.insert(graph_set(h));
        }
        for (auto const& h : v) {
          gv.insert(graph_set(h));
        }
        rep.expect(gs == gv && gs.size() == s.size(), n1 + " -> " + n2 + ": enumerators differ");
      }
    }
    auto count = [&](Groupoid const& a, Groupoid const& b, std::size_t want, std::string const& what) {
      std::size_t got = enum_morphisms_naive(a, b).size();
      rep.expect(got == want, what + " has " + std::to_string(got) + " morphisms, expected "
                                  + std::to_string(want));
    };
    count(catalog::z2(), catalog::z2(), 2, "Z2 -> Z2");
    count(catalog::s2(), catalog::s2(), 4, "S2 -> S2");
    count(catalog::p2(), catalog::one_point(), 1, "P2 -> trivial group");
    rep.note(std::to_string(pairs) + " ordered pairs agree (" + std::to_string(total) + " morphisms)");
  }

  ////////////////////////////////////////////////////////////////////////
  // 4. Category laws

  void category_suite(Report& rep) {
    auto        gs = fixtures::small_groupoids();
    std::size_t n  = gs.size();
    std::vector<std::vector<std::vector<Morphism>>> hom(n, std::vector<std::vector<Morphism>>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        hom[i][j] = enum_morphisms(gs[i], gs[j]);
      }
    }
    std::size_t composites = 0, triples = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (auto const& h : hom[i][j]) {
          rep.expect(graph_set(compose_morphisms(h, identity_morphism(gs[i]))) == graph_set(h),
                     "right identity");
          rep.expect(graph_set(compose_morphisms(identity_morphism(gs[j]), h)) == graph_set(h),
                     "left identity");
          for (std::size_t k = 0; k < n; ++k) {
            for (auto const& g : hom[j][k]) {
              ++composites;
              auto graph = compose_graphs(g, h);
              // composite as a plain relation
              FinRel rel = compose(g.relation(), h.relation());
              std::set<std::pair<Elem, Elem>> expect;
              for (auto [a, b] : rel.graph()) {
                expect.emplace(a, b);
              }
              rep.expect(std::set<std::pair<Elem, Elem>>(graph.begin(), graph.end()) == expect,
                         "compose_graphs differs from relation composition");
              rep.expect(!check_morphism(gs[i], gs[k], graph).has_value(), "composite does not validate");
              auto gh = compose_morphisms(g, h);
              for (std::size_t l = 0; l < n; ++l) {
                for (auto const& f : hom[k][l]) {
                  ++triples;
                  rep.expect(compose_morphisms(f, gh) == compose_morphisms(compose_morphisms(f, g), h),
                             "associativity");
                }
              }
            }
          }
        }
      }
    }
    rep.note(std::to_string(composites) + " composites validate, " + std::to_string(triples)
             + " triples associate");
  }

  ////////////////////////////////////////////////////////////////////////
  // 5. Kernel suite

  void kernel_suite(Report& rep) {
    auto family = fixtures::small_family();
    for (auto const& h : family) {
      auto const& g = h.source();
      auto const& t = h.target();
      Subset      ker;  // by definition
      for (Elem a : h.domain()) {
        auto const& r = h.related(a);
        if (std::all_of(r.begin(), r.end(), [&](Elem d) { return t.is_unit(d); })) {
          ker.push_back(a);
        }
      }
      rep.expect(ker == h.kernel(), "kernel differs from its definition");
      for (Elem u : g.units()) {
        if (contains(h.domain(), u)) {
          rep.expect(contains(ker, u), "(1) unit of D(h) outside the kernel");
        }
      }
      for (Elem a : ker) {
        rep.expect(g.left_unit(a) == g.right_unit(a), "(2) kernel leaves the isotropy");
        rep.expect(contains(ker, g.inverse(a)), "(3) not closed under s");
        for (Elem b : ker) {
          Elem ab = g.product_or_none(a, b);
          rep.expect(ab == no_elem || contains(ker, ab), "(4) not closed under m");
        }
        for (Elem c = 0; c < g.size(); ++c) {
          if (g.composable(c, a)) {
            rep.expect(contains(ker, g.multiply(g.multiply(c, a), g.inverse(c))), "(5) not normal");
          }
        }
      }
      for (auto const& b : all_bisections(g)) {
        auto   adb = ad(g, b);
        Subset img;
        for (Elem a : ker) {
          auto const& r = adb.related(a);
          img.insert(img.end(), r.begin(), r.end());
        }
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        rep.expect(img == ker, "(6) Ad_B(ker) != ker");
      }
    }
    rep.note("items (1)-(6) hold for " + std::to_string(family.size()) + " morphisms");
  }

  ////////////////////////////////////////////////////////////////////////
  // 6. Mono suite

  void mono_suite(Report& rep) {
    auto        family = fixtures::small_family();
    std::size_t nonmono = 0;
    for (auto const& h : family) {
      auto w = check_cancellation(h, CancellationWitness::Side::mono, mono_probe_family(h.source()));
      rep.expect(is_mono(h) == !w.has_value(), "is_mono disagrees with cancellation");
      if (w) {
        rep.expect(verify_witness(h, *w), "cancellation witness does not verify");
      }
      if (!is_mono(h)) {
        ++nonmono;
        auto m = mono_witness(h);
        rep.expect(!(m.w1 == m.w2) && verify_witness(h, m), "mono_witness does not verify");
      }
    }
    std::size_t from_p2 = 0;
    for (auto const& [name, g] : catalog::all()) {
      for (auto const& h : enum_morphisms(catalog::p2(), g)) {
        ++from_p2;
        rep.expect(is_mono(h), "morphism P2 -> " + name + " is not mono");
      }
      rep.expect(to_orbit_pair(g).kernel() == isotropy_bundle(g),
                 name + ": kernel of the orbit pair map is not the isotropy bundle");
    }
    rep.note(std::to_string(family.size()) + " morphisms (" + std::to_string(nonmono) + " non-mono), "
             + std::to_string(from_p2) + " out of P2 all mono");
  }

  ////////////////////////////////////////////////////////////////////////
  // 7. Epi suite

  std::vector<Subset> proper_wide_subgroupoids(Groupoid const& g) {
    Subset rest;
    for (Elem a = 0; a < g.size(); ++a) {
      if (!g.is_unit(a)) {
        rest.push_back(a);
      }
    }
    std::vector<Subset> out;
    for (unsigned mask = 0; mask + 1 < (1u << rest.size()); ++mask) {
      Subset s = g.units();
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (mask >> i & 1) {
          s.push_back(rest[i]);
        }
      }
      std::sort(s.begin(), s.end());
      if (is_subgroupoid(g, s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  void epi_suite(Report& rep) {
    std::size_t       subs = 0;
    std::set<char>    branches;
    for (auto const& [name, g] : catalog::all()) {
      if (g.size() > 8) {
        continue;
      }
      for (auto const& s : proper_wide_subgroupoids(g)) {
        ++subs;
        auto p = separating_pair(g, s);
        branches.insert(p.branch);
        rep.expect(verify_separating_pair(p, s) && !(p.k1 == p.k2), name + ": separating pair does not verify");
      }
    }
    rep.expect(branches == std::set<char>{'A', 'B'}, "both proof branches are not covered");

    // Z4 acting on itself by translation, phi(x) = x + 1.
    GroupTable const z4 = cyclic_group(4);
    std::vector<GroupTable::Triple> t;
    for (Elem a = 0; a < 4; ++a) {
      for (Elem x = 0; x < 4; ++x) {
        t.push_back({z4.name_of(z4.multiply(a, x)), z4.name_of(a), z4.name_of(x)});
      }
    }
    GroupAction    act(z4, z4.universe()->elements(), t);
    Morphism const h  = group_action_morphism(act);
    Groupoid const x2 = h.target();
    Subset         phi;
    for (Elem x = 0; x < 4; ++x) {
      phi.push_back(x2.index(pair_name(z4.name_of(z4.multiply(1, x)), z4.name_of(x))));
    }
    std::sort(phi.begin(), phi.end());
    Morphism const adp = ad(x2, phi);
    CancellationWitness w{CancellationWitness::Side::epi, x2, adp, identity_morphism(x2)};
    rep.expect(compose_morphisms(adp, h) == h, "Ad_phi h != h for the translation action");
    rep.expect(verify_witness(h, w), "translation Ad-witness does not verify");
    rep.expect(is_surjective(h), "translation morphism is not surjective");

    auto l  = left_regular(catalog::z2());
    auto lw = find_non_epi_witness(l);
    rep.expect(lw.has_value() && verify_witness(l, *lw), "no verified non-epi witness for l(Z2)");

    std::vector<GroupTable::Triple> bt;
    GroupTable const                s3 = symmetric_group(3);
    for (Elem p = 0; p < s3.size(); ++p) {
      for (char c : std::string("123")) {
        std::string const& perm = s3.name_of(p);
        bt.push_back({std::string(1, perm[c - '1']), perm, std::string(1, c)});
      }
    }
    Morphism const bij = group_action_morphism(GroupAction(s3, {"1", "2", "3"}, bt));
    rep.expect(is_surjective(bij), "Bij({1,2,3}) -> P3 is not surjective");
    rep.expect(is_mono(bij), "Bij({1,2,3}) -> P3 is not mono");
    rep.expect(bij.source().size() == 6 && bij.target().size() == 9, "Bij({1,2,3}) -> P3 sizes");
    rep.note(std::to_string(subs) + " proper wide subgroupoids separated (branches A and B)");
  }

  ////////////////////////////////////////////////////////////////////////
  // 8. Bisection suite

  bool bisection_by_definition(Groupoid const& g, Subset const& a) {
    std::set<Elem> l, r;
    for (Elem x : a) {
      l.insert(g.left_unit(x));
      r.insert(g.right_unit(x));
    }
    return a.size() == g.units().size() && l.size() == a.size() && r.size() == a.size();
  }

  void bisection_suite(Report& rep) {
    std::size_t subsets = 0;
    for (auto const& [name, g] : catalog::all()) {
      if (g.size() > 8) {
        continue;
      }
      for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
        Subset a;
        for (Elem i = 0; i < g.size(); ++i) {
          if (mask >> i & 1) {
            a.push_back(i);
          }
        }
        ++subsets;
        std::set<Elem> l, r;
        for (Elem x : a) {
          l.insert(g.left_unit(x));
          r.insert(g.right_unit(x));
        }
        bool def = bisection_by_definition(g, a);
        rep.expect(is_bisection_by_fibers(g, a) == def && is_bisection_by_products(g, a) == def,
                   name + ": bisection characterization");
        rep.expect(right_products_in_units(g, a) == (r.size() == a.size()), name + ": right section");
        rep.expect(left_products_in_units(g, a) == (l.size() == a.size()), name + ": left section");
      }
    }
    auto bp3 = bisection_group(catalog::p3());
    rep.expect(bp3.elements.size() == 6, "Bis(P3) does not have 6 elements");
    rep.expect(are_isomorphic(bp3.table, symmetric_group(3)), "Bis(P3) is not S3");

    std::size_t checks = 0;
    for (auto const& h : fixtures::small_family()) {
      auto const& a  = h.source();
      auto const& t  = h.target();
      auto        bs = all_bisections(a);
      for (auto const& b : bs) {
        auto hb = image_bisection(h, b);
        rep.expect(is_bisection(t, hb), "h(B) is not a bisection");
        rep.expect(image_bisection(h, subset_inverse(a, b)) == subset_inverse(t, hb), "h(s(B)) != s(h(B))");
        rep.expect(compose_morphisms(h, ad(a, b)) == compose_morphisms(ad(t, hb), h), "h Ad_B != Ad_h(B) h");
        for (auto const& c : bs) {
          ++checks;
          rep.expect(image_bisection(h, subset_mult(a, b, c)) == subset_mult(t, hb, image_bisection(h, c)),
                     "h(BB') != h(B)h(B')");
          rep.expect(ad(a, subset_mult(a, b, c)) == compose_morphisms(ad(a, b), ad(a, c)), "Ad_BC != Ad_B Ad_C");
        }
      }
      auto ih = induced_hom(h);
      auto m  = ih.map;
      std::sort(m.begin(), m.end());
      bool injective = std::adjacent_find(m.begin(), m.end()) == m.end();
      rep.expect(injective == is_mono(h), "induced map injectivity differs from mono");
    }
    rep.note(std::to_string(subsets) + " subsets, Bis(P3) ~ S3, " + std::to_string(checks) + " (h, B, B') checks");
  }

  ////////////////////////////////////////////////////////////////////////
  // 9. Action suite

  void action_suite(Report& rep) {
    std::size_t actions = 0;
    for (auto const& [name, g] : catalog::all()) {
      for (Names x : {Names{"x"}, Names{"x", "y"}, Names{"x", "y", "z"}}) {
        auto as = enum_actions(g, x);
        auto ds = enum_actions_direct(g, x);
        rep.expect(as == ds, name + ": action enumerators differ on " + std::to_string(x.size()) + " points");
        for (auto const& phi : as) {
          ++actions;
          std::set<std::pair<Elem, Elem>> dom;
          std::set<ActionTriple>          tr(phi.triples().begin(), phi.triples().end());
          for (Elem p = 0; p < phi.carrier_size(); ++p) {
            std::size_t fixing = 0;
            for (Elem u : g.units()) {
              fixing += tr.count({p, u, p});
            }
            rep.expect(fixing == 1, "(1) unit fixing a point is not unique");
          }
          for (auto const& [y, a, p] : phi.triples()) {
            rep.expect(dom.emplace(a, p).second, "(5) not a mapping");
            rep.expect(g.right_unit(a) == phi.base(p), "(2) domain");
            rep.expect(phi.base(y) == g.left_unit(a), "(3) rho(y) != e_L");
            rep.expect(tr.count({p, g.inverse(a), y}) == 1, "(4) inverse triple missing");
          }
          std::size_t expected_dom = 0;
          for (Elem a = 0; a < g.size(); ++a) {
            for (Elem p = 0; p < phi.carrier_size(); ++p) {
              expected_dom += g.right_unit(a) == phi.base(p);
            }
          }
          rep.expect(dom.size() == expected_dom, "(2) domain is not the fibered product");
          for (auto [a, b] : composable_pairs(g)) {
            for (Elem p = 0; p < phi.carrier_size(); ++p) {
              Elem bp = phi.apply(b, p);
              if (bp != no_elem) {
                rep.expect(phi.apply(a, bp) == phi.apply(g.multiply(a, b), p), "(5) fibered associativity");
              }
            }
          }
          rep.expect(classical_to_relational(g, phi.carrier(), as_mapping(phi)) == phi, "(6) round trip");
          rep.expect(morphism_to_action(action_to_pair_morphism(phi), phi.carrier()) == phi,
                     "pair-groupoid morphism round trip");
        }
        for (auto const& h : enum_morphisms(g, pair_groupoid(x))) {
          rep.expect(action_to_pair_morphism(morphism_to_action(h, make_universe("X", x))) == h,
                     "morphism round trip");
        }
      }
    }
    auto ag = action_groupoid(group_action_relation(catalog::z2_swap_action()));
    rep.expect(find_isomorphism(ag.groupoid, catalog::z2_swap()).has_value(),
               "action groupoid of the swap is not the transformation groupoid");
    rep.note(std::to_string(actions) + " actions checked, enumerators agree");
  }

  ////////////////////////////////////////////////////////////////////////
  // 10. Quotient suite

  void quotient_suite(Report& rep) {
    for (auto const& [name, g] : catalog::all()) {
      auto a = fixtures::example_cosets_whole(g);
      rep.expect(a.empty(), name + ": G = Gamma: " + a);
      auto b = fixtures::example_cosets_isotropy(g);
      rep.expect(b.empty(), name + ": G = isotropy: " + b);
    }
    auto c = fixtures::example_cosets_equivalence({"1", "2", "3"}, {{"1", "2"}, {"3"}});
    rep.expect(c.empty(), "equivalence relation: " + c);
    auto z4 = catalog::z4();
    auto q  = quotient_groupoid(z4, z4.subset({"0", "2"}));
    rep.expect(find_isomorphism(q.groupoid, catalog::z2()).has_value(), "Z4/{0,2} is not Z2");
    std::size_t full = 0, all = 0;
    for (auto const& [n1, a] : catalog::all()) {
      for (auto const& [n2, b] : catalog::all()) {
        if (a.size() * b.size() > 20) {
          continue;
        }
        for (auto const& h : enum_morphisms(a, b)) {
          ++all;
          auto f = epi_mono_factorization(h);
          rep.expect(is_mono(f.mono) && is_surjective(f.epi) && compose_morphisms(f.mono, f.epi) == h,
                     n1 + " -> " + n2 + ": factorization");
          if (h.domain().size() == a.size()) {
            ++full;
            auto k = quotient_by_kernel(h);
            rep.expect(is_mono(k.reduced) && compose_morphisms(k.reduced, k.projection) == h,
                       n1 + " -> " + n2 + ": kernel quotient");
          }
        }
      }
    }
    rep.note("three coset examples reproduced, " + std::to_string(full) + " kernel quotients, "
             + std::to_string(all) + " factorizations");
  }

  ////////////////////////////////////////////////////////////////////////
  // 11. Homogeneous spaces and classification

  void classification_suite(Report& rep) {
    for (auto const& c : fixtures::homogeneous_cases()) {
      auto h = homogeneous_identification(c.phi, c.p);
      rep.expect(h.sub == c.expected_sub, c.name + ": unexpected subgroupoid");
      auto msg = fixtures::check_homogeneous(c.phi, h);
      rep.expect(msg.empty(), c.name + ": " + msg);
    }
    Names const e{"x", "y"};
    auto const  a        = fixtures::z2_regular();
    auto [sub, iso]      = fixtures::isotropy_action(e, a);
    auto const  g        = product_form(e, a.group());
    auto const  induced  = induced_action(g, sub, iso);
    rep.expect(find_equivariant_bijection(induced.action, product_form_action(e, a)).has_value(),
               "induced action is not the product-form action");
    auto const c = classify_transitive_action(e, a.group(), induced.action);
    // reduced action is the original Z2-set
    rep.expect(find_equivariant_bijection(group_action_relation(c.reduced), group_action_relation(a)).has_value(),
               "reduced action differs from the regular action");
    std::set<Elem> image(c.psi.begin(), c.psi.end());
    rep.expect(image.size() == induced.action.carrier_size() && c.psi.size() == image.size(), "Psi is not bijective");
    std::set<ActionTriple> phi(induced.action.triples().begin(), induced.action.triples().end());
    std::size_t            moved = 0;
    for (auto const& [y, gm, x] : c.model.triples()) {
      ++moved;
      rep.expect(phi.count({c.psi[y], gm, c.psi[x]}) == 1, "Psi is not equivariant");
    }
    rep.expect(moved == phi.size(), "model and action differ in size");
    auto p = classify_transitive_action(fixtures::p2_on_points());
    rep.expect(p.reduced.carrier()->size() == 1, "P2 classification is not a singleton");
    rep.note("three homogeneous examples, induced/classified round trip");
  }

  ////////////////////////////////////////////////////////////////////////
  // 12. Disjoint union is a product

  void product_suite(Report& rep) {
    std::size_t pairs = 0;
    std::vector<Groupoid> factors{catalog::z2(), catalog::s2()};
    for (auto const& lam : fixtures::small_groupoids()) {
      for (auto const& g1 : factors) {
        for (auto const& g2 : factors) {
          auto [i1, i2] = union_projections(g1, g2);
          auto into     = enum_morphisms(lam, disjoint_union(g1, g2));
          for (auto const& p1 : enum_morphisms(lam, g1)) {
            for (auto const& p2 : enum_morphisms(lam, g2)) {
              ++pairs;
              auto        p = product_pairing(p1, p2);
              std::size_t matches = 0;
              bool        found   = false;
              for (auto const& q : into) {
                if (compose_morphisms(i1, q) == p1 && compose_morphisms(i2, q) == p2) {
                  ++matches;
                  found = found || graph_set(q) == graph_set(p);
                }
              }
              rep.expect(matches == 1 && found, lam.name() + ": pairing is not the unique solution");
            }
          }
        }
      }
    }
    rep.note(std::to_string(pairs) + " pairs, each with a unique pairing");
  }

  ////////////////////////////////////////////////////////////////////////
  // 13. Command line

  void cli_suite(Report& rep) {
    cli::Sandbox box(cli_path, "acceptance");
    std::size_t  docs = 0;
    auto round_trip = [&](std::string const& label, std::string const& text) {
      ++docs;
      box.write("in.doc", text);
      auto r = box.run("--output out.doc validate in.doc");
      rep.expect(r.status == 0 && box.read("out.doc") == text, label + ": canonical round trip");
      // compact, non-canonical spelling of the same document
      box.write("compact.doc", nlohmann::json::parse(text).dump());
      r = box.run("--output out2.doc validate compact.doc");
      rep.expect(r.status == 0 && box.read("out2.doc") == text, label + ": re-serialization");
    };
    for (auto const& [name, g] : catalog::all()) {
      round_trip(name, serialize(g));
    }
    round_trip("identity morphism", serialize(identity_morphism(catalog::p2())));
    round_trip("action", serialize(fixtures::p2_on_points()));

    box.write("z2.gpd", serialize(catalog::z2()));
    box.write("p2.gpd", serialize(catalog::p2()));
    box.write("p3.gpd", serialize(catalog::p3()));
    box.write("bad.gpd", R"j({"kind": "groupoid", "name": "bad", "elements": ["0", "1"], "units": ["0"],
      "inverse": {"0": "0", "1": "0"}, "compose": [["0","0","0"],["0","1","1"],["1","0","1"],["1","1","0"]]})j");
    box.write("junk.gpd", "{\"kind\": \"groupoid\", \"elements\": [");
    box.write("id.mor", serialize(identity_morphism(catalog::z2())));
    box.write("triv.mor", serialize(enum_morphisms(catalog::z2(), catalog::one_point()).front()));
    box.write("junk.mor", R"j({"kind": "morphism", "source": "z2.gpd", "target": "z2.gpd", "graph": [["0", "7"]]})j");
    box.write("pts.act", serialize(fixtures::p2_on_points()));
    box.write("bad.act", R"j({"kind": "action", "name": "phi", "groupoid": "p2.gpd", "carrier": ["x1", "x2"],
      "graph": [["x1","(1,1)","x1"],["x2","(2,2)","x2"],["x1","(1,2)","x2"]]})j");
    box.write("junk.act", R"j({"kind": "action", "groupoid": "p2.gpd", "carrier": "x1"})j");

    struct Case {
      std::string group, args;
      int         status;
    };
    std::vector<Case> cases{
        {"build", "build group --group Z2", 0},
        {"build", "build equiv --points 1,2,3 --blocks '1,2'", 1},
        {"build", "build group --group Q7", 2},
        {"groupoid", "validate z2.gpd", 0},
        {"groupoid", "validate bad.gpd", 1},
        {"groupoid", "validate junk.gpd", 2},
        {"morphism", "morphism mono id.mor", 0},
        {"morphism", "morphism mono triv.mor", 1},
        {"morphism", "morphism mono junk.mor", 2},
        {"bisections", "bisections ad p2.gpd --bisection '(1,2),(2,1)'", 0},
        {"bisections", "bisections ad p2.gpd --bisection '(1,2)'", 1},
        {"bisections", "bisections list junk.gpd", 2},
        {"action", "action validate pts.act", 0},
        {"action", "action validate bad.act", 1},
        {"action", "action validate junk.act", 2},
        {"enum", "enum morphisms z2.gpd z2.gpd", 0},
        {"enum", "enum morphisms p3.gpd p3.gpd --naive", 1},
        {"enum", "enum morphisms z2.gpd junk.gpd", 2},
    };
    for (auto const& c : cases) {
      auto r = box.run(c.args);
      rep.expect(r.status == c.status, c.group + ": \"" + c.args + "\" exited " + std::to_string(r.status)
                                           + ", expected " + std::to_string(c.status));
    }
    auto r = box.run("validate z2.gpd");
    rep.expect(r.out == "valid: 2 elements, 1 unit, 1 orbit\n", "validate summary");
    r = box.run("morphism mono triv.mor");
    rep.expect(r.out.find("kernel {0, 1}") != std::string::npos, "non-mono kernel not printed");
    r = box.run("enum morphisms z2.gpd z2.gpd");
    rep.expect(r.out.rfind("2 morphisms\n", 0) == 0, "enum morphisms count");
    rep.note(std::to_string(docs) + " documents round trip, " + std::to_string(cases.size()) + " exit codes");
  }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <relgroupoid tool>\n";
    return 2;
  }
  cli_path = std::filesystem::absolute(argv[1]).string();
  std::vector<Criterion> criteria{
      {1, "axiom suite", 1, axiom_suite},
      {2, "definition equivalence", 1, definition_suite},
      {3, "oracle agreement", 60, oracle_suite},
      {4, "category laws", 60, category_suite},
      {5, "kernel suite", 120, kernel_suite},
      {6, "mono suite", 120, mono_suite},
      {7, "epi suite", 120, epi_suite},
      {8, "bisection suite", 300, bisection_suite},
      {9, "action suite", 300, action_suite},
      {10, "quotient suite", 120, quotient_suite},
      {11, "homogeneous and classification suite", 60, classification_suite},
      {12, "disjoint union is a product", 120, product_suite},
      {13, "command line", 10, cli_suite},
  };
  std::vector<int> failing;
  for (auto const& c : criteria) {
    Report rep;
    auto   start = std::chrono::steady_clock::now();
    try {
      c.body(rep);
    } catch (std::exception const& e) {
      rep.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit) {
      rep.fail("time limit exceeded");
    }
    bool ok = rep.ok();
    if (!ok) {
      failing.push_back(c.id);
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %g s", secs, c.limit);
    std::cout << (ok ? "PASS " : "FAIL ") << (c.id < 10 ? " " : "") << c.id << " " << c.title << " ("
              << timing << "): " << rep.text() << std::endl;
  }
  std::cout << "summary: " << criteria.size() - failing.size() << "/" << criteria.size() << " passed; failing:";
  if (failing.empty()) {
    std::cout << " none";
  }
  for (int id : failing) {
    std::cout << " " << id;
  }
  std::cout << std::endl;
  return failing.empty() ? 0 : 1;
}
