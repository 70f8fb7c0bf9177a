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

// Command line front end.  Exit status: 0 success or true, 1 well formed
// but false or invalid, 2 usage, IO or parse error.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relgroupoid/action.hpp"
#include "relgroupoid/bisection.hpp"
#include "relgroupoid/builders.hpp"
#include "relgroupoid/document.hpp"
#include "relgroupoid/groupoid.hpp"
#include "relgroupoid/morphism.hpp"
#include "relgroupoid/search.hpp"

using namespace relgroupoid;

namespace {

  constexpr int ok_exit      = 0;
  constexpr int false_exit   = 1;
  constexpr int usage_exit   = 2;

  std::string output_path;

  // Separators inside brackets belong to the name, e.g. "(1,2)".
  Names split(std::string const& s, char sep = ',') {
    Names       out;
    std::string item;
    int         depth = 0;
    auto        flush = [&] {
      if (!item.empty()) {
        out.push_back(item);
      }
      item.clear();
    };
    for (char c : s) {
      if (c == '(' || c == '[' || c == '{') {
        ++depth;
      } else if ((c == ')' || c == ']' || c == '}') && depth > 0) {
        --depth;
      }
      if (c == sep && depth == 0) {
        flush();
      } else {
        item += c;
      }
    }
    flush();
    return out;
  }

  std::string join(std::vector<std::string> const& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i == 0 ? "" : ", ") + v[i];
    }
    return out;
  }

  std::string braces(std::vector<std::string> const& v) {
    return "{" + join(v) + "}";
  }

  std::string plural(std::size_t n, std::string const& word) {
    return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
  }

  // Writes a canonical document to --output or standard output.
  int emit(std::string const& text) {
    if (output_path.empty()) {
      std::cout << text;
      return ok_exit;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out || !(out << text)) {
      throw ParseError("cannot write \"" + output_path + "\"");
    }
    return ok_exit;
  }

  Document load_kind(std::string const& path, DocumentKind kind) {
    Document d = load_document(path);
    if (d.kind != kind) {
      throw ParseError("\"" + path + "\" is a " + std::string(to_string(d.kind))
                       + " document, expected a "
                       + std::string(to_string(kind)));
    }
    return d;
  }

  Groupoid load_groupoid(std::string const& path) {
    return *load_kind(path, DocumentKind::groupoid).groupoid;
  }

  Morphism load_morphism(std::string const& path) {
    return *load_kind(path, DocumentKind::morphism).morphism;
  }

  Action load_action(std::string const& path) {
    return *load_kind(path, DocumentKind::action).action;
  }

  GroupTable parse_group(std::string const& spec) {
    auto number = [&](std::size_t from) {
      std::size_t n = 0;
      try {
        n = std::stoul(spec.substr(from));
      } catch (std::exception const&) {
        throw CLI::ValidationError("group", "unknown group \"" + spec + "\"");
      }
      return n;
    };
    if (spec == "1" || spec == "trivial") {
      return trivial_group();
    }
    if (spec == "V4") {
      return klein_four_group();
    }
    if (spec.size() > 1 && spec[0] == 'Z') {
      return cyclic_group(number(1));
    }
    if (spec.size() > 1 && spec[0] == 'S') {
      return symmetric_group(number(1));
    }
    throw CLI::ValidationError("group", "unknown group \"" + spec + "\"");
  }

  std::string graph_line(Morphism const& h) {
    return braces(h.render());
  }

  std::string triples_line(Action const& phi) {
    std::vector<std::string> parts;
    for (auto const& [y, g, x] : phi.named_triples()) {
      parts.push_back("(" + y + "; " + g + ", " + x + ")");
    }
    return braces(parts);
  }

  std::string set_line(Groupoid const& g, Subset const& s) {
    return braces(g.names(s));
  }

  // X from the units "(x,x)" of a pair groupoid.
  Names pair_points(Groupoid const& sq) {
    Names out;
    for (auto const& u : sq.names(sq.units())) {
      if (u.size() < 3 || u.front() != '(' || u.back() != ')') {
        throw PreconditionError("target is not a pair groupoid");
      }
      out.push_back(u.substr(1, (u.size() - 3) / 2));
    }
    return out;
  }

  Groupoid renamed_if(Groupoid const& g, std::string const& name) {
    return name.empty() ? g : g.renamed(name);
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  int cmd_validate(std::string const& path) {
    Document d = load_document(path);
    switch (d.kind) {
      case DocumentKind::groupoid: {
        Groupoid const& g = *d.groupoid;
        std::cout << "valid: " << plural(g.size(), "element") << ", "
                  << plural(g.units().size(), "unit") << ", "
                  << plural(orbits(g).size(), "orbit") << "\n";
        break;
      }
      case DocumentKind::morphism:
        std::cout << "valid: morphism with "
                  << plural(d.morphism->graph().size(), "pair") << "\n";
        break;
      case DocumentKind::action:
        std::cout << "valid: action with "
                  << plural(d.action->triples().size(), "triple") << "\n";
        break;
    }
    if (!output_path.empty()) {
      return emit(serialize(d));
    }
    return ok_exit;
  }

  int cmd_info(std::string const& path) {
    Groupoid const g = load_groupoid(path);
    std::cout << "name: " << g.name() << "\n"
              << "elements: " << set_line(g, [&] {
                   Subset all;
                   for (Elem x = 0; x < g.size(); ++x) {
                     all.push_back(x);
                   }
                   return all;
                 }()) << "\n"
              << "units: " << set_line(g, g.units()) << "\n";
    for (auto const& o : orbits(g)) {
      std::cout << "orbit: " << set_line(g, o) << "\n";
    }
    for (Elem u : g.units()) {
      std::cout << "isotropy " << g.name_of(u) << ": "
                << set_line(g, isotropy(g, u)) << "\n";
    }
    std::cout << "transitive: " << (is_transitive(g) ? "yes" : "no") << "\n";
    return ok_exit;
  }

  int cmd_decompose(std::string const& path, std::string const& base) {
    Groupoid const g = load_groupoid(path);
    Elem const     b = base.empty() ? g.units().front() : g.index(base);
    auto const     d = decompose_transitive(g, b);
    if (!output_path.empty()) {
      return emit(serialize(d.product));
    }
    std::cout << "base: " << g.name_of(d.base) << "\n";
    for (std::size_t i = 0; i < d.units.size(); ++i) {
      std::cout << "section " << g.name_of(d.units[i]) << ": "
                << g.name_of(d.section[i]) << "\n";
    }
    std::cout << "group: " << braces(d.group.universe()->elements()) << "\n";
    for (Elem x = 0; x < d.product.size(); ++x) {
      std::cout << d.product.name_of(x) << " -> " << g.name_of(d.iso[x]) << "\n";
    }
    return ok_exit;
  }

  int cmd_mono(std::string const& path) {
    Morphism const h = load_morphism(path);
    if (is_mono(h)) {
      std::cout << "mono\n";
      return ok_exit;
    }
    std::cout << "not mono: kernel " << set_line(h.source(), h.kernel()) << "\n";
    auto w = mono_witness(h);
    std::cout << "witness probe " << w.probe.name() << "\n"
              << "w1: " << graph_line(w.w1) << "\n"
              << "w2: " << graph_line(w.w2) << "\n";
    return false_exit;
  }

  int cmd_epi_witness(std::string const& path) {
    Morphism const h = load_morphism(path);
    auto           w = find_non_epi_witness(h);
    if (!w) {
      std::cout << "no witness found\n";
      return false_exit;
    }
    std::cout << "not epi: witness probe " << w->probe.name() << "\n"
              << "w1: " << graph_line(w->w1) << "\n"
              << "w2: " << graph_line(w->w2) << "\n";
    return ok_exit;
  }

  int cmd_factor(std::string const& path) {
    Morphism const h = load_morphism(path);
    auto           f = epi_mono_factorization(h);
    std::cout << "middle: " << plural(f.middle.size(), "element") << ", "
              << plural(f.middle.units().size(), "unit") << "\n"
              << "epi: " << graph_line(f.epi) << "\n"
              << "mono: " << graph_line(f.mono) << "\n";
    return ok_exit;
  }

  int cmd_classify_into_group(std::string const& path) {
    Morphism const h    = load_morphism(path);
    auto const     data = classify_into_group(h);
    Subset const   iso  = isotropy(h.source(), data.unit);
    std::cout << "unit: " << h.source().name_of(data.unit) << "\n";
    for (std::size_t i = 0; i < iso.size(); ++i) {
      std::cout << h.source().name_of(iso[i]) << " -> "
                << h.target().name_of(data.hom[i]) << "\n";
    }
    return ok_exit;
  }

  int cmd_bisection_list(std::string const& path) {
    Groupoid const g  = load_groupoid(path);
    auto const     bs = all_bisections(g);
    std::cout << plural(bs.size(), "bisection") << "\n";
    for (auto const& b : bs) {
      std::cout << set_line(g, b) << "\n";
    }
    return ok_exit;
  }

  int cmd_bisection_group(std::string const& path) {
    Groupoid const g  = load_groupoid(path);
    auto const     bg = bisection_group(g);
    std::cout << "order: " << bg.elements.size() << "\n";
    for (Elem i = 0; i < bg.elements.size(); ++i) {
      std::cout << bg.table.name_of(i) << " = " << set_line(g, bg.elements[i])
                << "\n";
    }
    for (Elem i = 0; i < bg.table.size(); ++i) {
      std::vector<std::string> row;
      for (Elem j = 0; j < bg.table.size(); ++j) {
        row.push_back(bg.table.name_of(bg.table.multiply(i, j)));
      }
      std::cout << bg.table.name_of(i) << ": " << join(row) << "\n";
    }
    return ok_exit;
  }

  int cmd_classify(std::string const& path) {
    Action const phi = load_action(path);
    auto const   c   = classify_transitive_action(phi);
    Universe const& z = *phi.carrier();
    std::cout << "z0: " << z.name(c.z0) << "\n";
    for (auto const& [gz, g, x] : c.reduced.triples()) {
      std::cout << g << " . " << x << " = " << gz << "\n";
    }
    for (Elem i = 0; i < c.psi.size(); ++i) {
      std::cout << "psi " << c.model.carrier()->name(i) << " -> "
                << z.name(c.psi[i]) << "\n";
    }
    return ok_exit;
  }

  int cmd_homogeneous(std::string const& path, std::string const& points) {
    Action const      phi = load_action(path);
    std::vector<Elem> p;
    for (auto const& n : split(points)) {
      p.push_back(phi.carrier()->index(n));
    }
    auto const hom = homogeneous_identification(phi, p);
    std::cout << "stabilizer: " << set_line(phi.groupoid(), hom.sub) << "\n";
    for (Elem x = 0; x < hom.psi.size(); ++x) {
      std::cout << "psi " << phi.carrier()->name(x) << " -> "
                << hom.cosets.classes->name(hom.psi[x]) << "\n";
    }
    return ok_exit;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groupoids, Zakrzewski morphisms and groupoid actions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", output_path, "Write the resulting document here");

  std::function<int()> run;
  auto on = [&](CLI::App* sub, std::function<int()> f) {
    sub->callback([&run, f]() { run = f; });
  };

  // build
  auto*       build = app.add_subcommand("build", "Build a standard groupoid");
  build->require_subcommand(1);
  std::string name, points, group_spec, groups, blocks, carrier, perm;
  auto named = [&](CLI::App* s) {
    s->add_option("--name", name, "Groupoid name");
    return s;
  };
  {
    auto* s = named(build->add_subcommand("pair", "Pair groupoid X x X"));
    s->add_option("--points", points, "Comma separated points")->required();
    on(s, [&] { return emit(serialize(renamed_if(pair_groupoid(split(points)), name))); });
  }
  {
    auto* s = named(build->add_subcommand("set", "Set groupoid (units only)"));
    s->add_option("--points", points, "Comma separated points")->required();
    on(s, [&] { return emit(serialize(renamed_if(set_groupoid(split(points)), name))); });
  }
  {
    auto* s = named(build->add_subcommand("group", "One-unit groupoid of a group"));
    s->add_option("--group", group_spec, "1, Zn, Sn or V4")->required();
    on(s, [&] {
      return emit(serialize(renamed_if(group_groupoid(parse_group(group_spec)), name)));
    });
  }
  {
    auto* s = named(build->add_subcommand("bundle", "Group bundle"));
    s->add_option("--groups", groups, "Comma separated fibers, e.g. Z2,1")->required();
    on(s, [&] {
      std::vector<GroupTable> fibers;
      for (auto const& g : split(groups)) {
        fibers.push_back(parse_group(g));
      }
      return emit(serialize(renamed_if(group_bundle(fibers), name)));
    });
  }
  {
    auto* s = named(build->add_subcommand("equiv", "Equivalence relation groupoid"));
    s->add_option("--points", points, "Comma separated points")->required();
    s->add_option("--blocks", blocks, "Blocks like 1,2;3")->required();
    on(s, [&] {
      std::vector<Names> bs;
      for (auto const& b : split(blocks, ';')) {
        bs.push_back(split(b));
      }
      return emit(serialize(renamed_if(equivalence_groupoid(split(points), bs), name)));
    });
  }
  {
    auto* s = named(build->add_subcommand("product-form", "E x G x E"));
    s->add_option("--points", points, "Comma separated E")->required();
    s->add_option("--group", group_spec, "1, Zn, Sn or V4")->required();
    on(s, [&] {
      return emit(serialize(
          renamed_if(product_form(split(points), parse_group(group_spec)), name)));
    });
  }
  {
    auto* s = named(build->add_subcommand(
        "transformation", "Transformation groupoid of a cyclic group action"));
    s->add_option("--group", group_spec, "Zn")->required();
    s->add_option("--carrier", carrier, "Comma separated points")->required();
    s->add_option("--perm", perm, "Images of the carrier points under 1")->required();
    on(s, [&] {
      GroupTable const t = parse_group(group_spec);
      Names const      x = split(carrier);
      Names const      p = split(perm);
      if (t.name().empty() || t.name()[0] != 'Z' || p.size() != x.size()) {
        throw CLI::ValidationError("perm", "needs a cyclic group and one image per point");
      }
      std::map<std::string, std::string> step;
      for (std::size_t i = 0; i < x.size(); ++i) {
        step[x[i]] = p[i];
      }
      std::vector<GroupTable::Triple> triples;
      for (std::size_t k = 0; k < t.size(); ++k) {
        for (auto const& pt : x) {
          std::string y = pt;
          for (std::size_t j = 0; j < k; ++j) {
            y = step.at(y);
          }
          triples.push_back({y, std::to_string(k), pt});
        }
      }
      return emit(serialize(
          renamed_if(transformation_groupoid(GroupAction(t, x, triples)), name)));
    });
  }

  // groupoid commands
  std::string file, file2, units, sub, bisection, base;
  {
    auto* s = app.add_subcommand("validate", "Validate a document");
    s->add_option("file", file, "Document path or -")->required();
    on(s, [&] { return cmd_validate(file); });
  }
  {
    auto* s = app.add_subcommand("info", "Summarize a groupoid");
    s->add_option("file", file)->required();
    on(s, [&] { return cmd_info(file); });
  }
  {
    auto* s = app.add_subcommand("restrict", "Restriction to a set of units");
    s->add_option("file", file)->required();
    s->add_option("--units", units, "Comma separated units")->required();
    on(s, [&] {
      Groupoid g = load_groupoid(file);
      return emit(serialize(restrict(g, g.subset(split(units)))));
    });
  }
  {
    auto* s = app.add_subcommand("union", "Disjoint union");
    s->add_option("first", file)->required();
    s->add_option("second", file2)->required();
    on(s, [&] {
      return emit(serialize(disjoint_union(load_groupoid(file), load_groupoid(file2))));
    });
  }
  {
    auto* s = app.add_subcommand("product", "Cartesian product");
    s->add_option("first", file)->required();
    s->add_option("second", file2)->required();
    on(s, [&] {
      return emit(serialize(cartesian_product(load_groupoid(file), load_groupoid(file2))));
    });
  }
  {
    auto* s = app.add_subcommand("decompose", "Write a transitive groupoid as E x G x E");
    s->add_option("file", file)->required();
    s->add_option("--base", base, "Base unit");
    on(s, [&] { return cmd_decompose(file, base); });
  }

  // morphism
  auto* morph = app.add_subcommand("morphism", "Morphism operations");
  morph->require_subcommand(1);
  {
    auto* s = morph->add_subcommand("validate", "Validate a morphism document");
    s->add_option("file", file)->required();
    on(s, [&] { return cmd_validate(file); });
  }
  {
    auto* s = morph->add_subcommand("compose", "Second after first");
    s->add_option("first", file)->required();
    s->add_option("second", file2)->required();
    on(s, [&] {
      return emit(serialize(compose_morphisms(load_morphism(file2), load_morphism(file))));
    });
  }
  {
    auto* s = morph->add_subcommand("kernel", "Print the kernel");
    s->add_option("file", file)->required();
    on(s, [&] {
      Morphism h = load_morphism(file);
      std::cout << "kernel: " << set_line(h.source(), h.kernel()) << "\n";
      return ok_exit;
    });
  }
  {
    auto* s = morph->add_subcommand("mono", "Decide mono; exit 1 if not");
    s->add_option("file", file)->required();
    on(s, [&] { return cmd_mono(file); });
  }
  {
    auto* s = morph->add_subcommand("surjective", "Decide surjectivity; exit 1 if not");
    s->add_option("file", file)->required();
    on(s, [&] {
      Morphism h = load_morphism(file);
      if (is_surjective(h)) {
        std::cout << "surjective\n";
        return ok_exit;
      }
      std::cout << "not surjective: image " << set_line(h.target(), h.image()) << "\n";
      return false_exit;
    });
  }
  {
    auto* s = morph->add_subcommand("epi-witness", "Search for a non-epi witness");
    s->add_option("file", file)->required();
    on(s, [&] { return cmd_epi_witness(file); });
  }
  {
    auto* s = morph->add_subcommand("factor", "Epi-mono factorization");
    s->add_option("file", file)->required();
    on(s, [&] { return cmd_factor(file); });
  }
  {
    auto* s = morph->add_subcommand("classify-into-group", "Morphism into a group as a homomorphism");
    s->add_option("file", file)->required();
    on(s, [&] { return cmd_classify_into_group(file); });
  }

  // bisections
  auto* bis = app.add_subcommand("bisections", "Bisection operations");
  bis->require_subcommand(1);
  {
    auto* s = bis->add_subcommand("list", "All bisections");
    s->add_option("file", file)->required();
    on(s, [&] { return cmd_bisection_list(file); });
  }
  {
    auto* s = bis->add_subcommand("group", "Bisection group table");
    s->add_option("file", file)->required();
    on(s, [&] { return cmd_bisection_group(file); });
  }
  {
    auto* s = bis->add_subcommand("ad", "The morphism Ad_B");
    s->add_option("file", file)->required();
    s->add_option("--bisection", bisection, "Comma separated elements")->required();
    on(s, [&] {
      Groupoid g = load_groupoid(file);
      Subset   b = g.subset(split(bisection));
      if (!is_bisection(g, b)) {
        std::cout << "not a bisection: " << set_line(g, b) << "\n";
        return false_exit;
      }
      return emit(serialize(ad(g, b), "Ad"));
    });
  }

  // action
  auto* act = app.add_subcommand("action", "Action operations");
  act->require_subcommand(1);
  {
    auto* s = act->add_subcommand("validate", "Validate an action document");
    s->add_option("file", file)->required();
    on(s, [&] { return cmd_validate(file); });
  }
  {
    auto* s = act->add_subcommand("to-morphism", "Action as a morphism into X x X");
    s->add_option("file", file)->required();
    on(s, [&] { return emit(serialize(action_to_pair_morphism(load_action(file)))); });
  }
  {
    auto* s = act->add_subcommand("from-morphism", "Morphism into a pair groupoid as an action");
    s->add_option("file", file)->required();
    on(s, [&] {
      Morphism h = load_morphism(file);
      return emit(serialize(morphism_to_action(h, make_universe("X", pair_points(h.target())))));
    });
  }
  {
    auto* s = act->add_subcommand("groupoid", "Action groupoid");
    s->add_option("file", file)->required();
    on(s, [&] { return emit(serialize(action_groupoid(load_action(file)).groupoid)); });
  }
  {
    auto* s = act->add_subcommand("coset", "Left multiplication on cosets of a wide subgroupoid");
    s->add_option("file", file)->required();
    s->add_option("--sub", sub, "Comma separated elements")->required();
    on(s, [&] {
      Groupoid g = load_groupoid(file);
      return emit(serialize(coset_space(g, g.subset(split(sub))).action));
    });
  }
  {
    auto* s = act->add_subcommand("quotient", "Quotient by a normal subgroupoid of the isotropy");
    s->add_option("file", file)->required();
    s->add_option("--sub", sub, "Comma separated elements")->required();
    on(s, [&] {
      Groupoid g = load_groupoid(file);
      return emit(serialize(quotient_groupoid(g, g.subset(split(sub))).groupoid));
    });
  }
  {
    auto* s = act->add_subcommand("induce", "Induce an action from a wide subgroupoid");
    s->add_option("groupoid", file)->required();
    s->add_option("action", file2)->required();
    s->add_option("--sub", sub, "Comma separated elements")->required();
    on(s, [&] {
      Groupoid g = load_groupoid(file);
      return emit(serialize(induced_action(g, g.subset(split(sub)), load_action(file2)).action));
    });
  }
  {
    auto* s = act->add_subcommand("classify", "Classify an action of a transitive groupoid");
    s->add_option("file", file)->required();
    on(s, [&] { return cmd_classify(file); });
  }
  {
    auto* s = act->add_subcommand("homogeneous", "Identify a transitive action with a coset space");
    s->add_option("file", file)->required();
    s->add_option("--points", points, "One point per unit, in unit order")->required();
    on(s, [&] { return cmd_homogeneous(file, points); });
  }

  // enum
  auto* en = app.add_subcommand("enum", "Exhaustive enumeration");
  en->require_subcommand(1);
  bool naive = false, direct = false, override_limit = false;
  {
    auto* s = en->add_subcommand("morphisms", "All morphisms source -> target");
    s->add_option("source", file)->required();
    s->add_option("target", file2)->required();
    s->add_flag("--naive", naive, "Filter every subset of target x source");
    s->add_flag("--override", override_limit, "Lift the naive size cap");
    on(s, [&] {
      Groupoid   g = load_groupoid(file);
      Groupoid   d = load_groupoid(file2);
      EnumBudget b;
      b.override_limit = override_limit;
      auto hs = naive ? enum_morphisms_naive(g, d, b) : enum_morphisms(g, d);
      std::cout << plural(hs.size(), "morphism") << "\n";
      for (auto const& h : hs) {
        std::cout << graph_line(h) << "\n";
      }
      return ok_exit;
    });
  }
  {
    auto* s = en->add_subcommand("actions", "All actions on a carrier");
    s->add_option("groupoid", file)->required();
    s->add_option("--carrier", carrier, "Comma separated points")->required();
    s->add_flag("--direct", direct, "Search fibered action tables directly");
    on(s, [&] {
      Groupoid g  = load_groupoid(file);
      auto     as = direct ? enum_actions_direct(g, split(carrier))
                           : enum_actions(g, split(carrier));
      std::cout << plural(as.size(), "action") << "\n";
      for (auto const& a : as) {
        std::cout << triples_line(a) << "\n";
      }
      return ok_exit;
    });
  }
  {
    auto* s = en->add_subcommand("bisections", "All bisections");
    s->add_option("file", file)->required();
    on(s, [&] { return cmd_bisection_list(file); });
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? ok_exit : usage_exit;
  }

  try {
    return run ? run() : usage_exit;
  } catch (CLI::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage_exit;
  } catch (ParseError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage_exit;
  } catch (AxiomError const& e) {
    std::cout << "invalid:\n";
    for (auto const& v : e.violations()) {
      std::cout << "  " << to_string(v.axiom) << ": " << v.message << "\n";
    }
    return false_exit;
  } catch (Error const& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return false_exit;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return usage_exit;
  }
}
