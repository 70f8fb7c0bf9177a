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

#include "relgroupoid/document.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "json.hpp"

namespace relgroupoid {

  using json = nlohmann::json;

  std::string_view to_string(DocumentKind k) {
    switch (k) {
      case DocumentKind::groupoid:
        return "groupoid";
      case DocumentKind::morphism:
        return "morphism";
      case DocumentKind::action:
        return "action";
    }
    return "unknown";
  }

  ParseError::ParseError(std::string const& message, std::size_t line)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        _line(line) {}

  namespace {

    // Source text, used only to recover line numbers.
    struct Context {
      std::string const&    text;
      std::filesystem::path base;

      std::size_t line_at(std::size_t offset) const {
        offset = std::min(offset, text.size());
        return 1 + std::count(text.begin(), text.begin() + offset, '\n');
      }

      std::size_t find(std::string const& token, std::size_t from = 0) const {
        return text.find(token, from);
      }

      // Line of the first quoted occurrence of name after the key.
      std::size_t line_of(std::string const& key, std::string const& name) const {
        std::size_t k = find(json(key).dump());
        std::size_t from = k == std::string::npos ? 0 : k;
        std::size_t n = find(json(name).dump(), from);
        if (n == std::string::npos) {
          n = k;
        }
        return n == std::string::npos ? 0 : line_at(n);
      }

      std::size_t line_of_key(std::string const& key) const {
        std::size_t k = find(json(key).dump());
        return k == std::string::npos ? 0 : line_at(k);
      }
    };

    json const& member(json const& j, Context const& ctx, std::string const& key) {
      auto it = j.find(key);
      if (it == j.end()) {
        throw ParseError("missing key \"" + key + "\"", ctx.line_of_key("kind"));
      }
      return *it;
    }

    std::string string_at(json const& j, Context const& ctx, std::string const& key) {
      json const& v = member(j, ctx, key);
      if (!v.is_string()) {
        throw ParseError("\"" + key + "\" must be a string", ctx.line_of_key(key));
      }
      return v.get<std::string>();
    }

    std::vector<std::string> strings(json const&        v,
                                     Context const&     ctx,
                                     std::string const& key) {
      if (!v.is_array()) {
        throw ParseError("\"" + key + "\" must be an array", ctx.line_of_key(key));
      }
      std::vector<std::string> out;
      for (auto const& s : v) {
        if (!s.is_string()) {
          throw ParseError("\"" + key + "\" must contain strings",
                           ctx.line_of_key(key));
        }
        out.push_back(s.get<std::string>());
      }
      return out;
    }

    // Arrays of fixed-length string tuples.
    std::vector<std::vector<std::string>> tuples(json const&        j,
                                                 Context const&     ctx,
                                                 std::string const& key,
                                                 std::size_t        arity) {
      json const& v = member(j, ctx, key);
      if (!v.is_array()) {
        throw ParseError("\"" + key + "\" must be an array", ctx.line_of_key(key));
      }
      std::vector<std::vector<std::string>> out;
      for (auto const& t : v) {
        auto s = strings(t, ctx, key);
        if (s.size() != arity) {
          throw ParseError("\"" + key + "\" entries must have "
                               + std::to_string(arity) + " names",
                           ctx.line_of_key(key));
        }
        out.push_back(std::move(s));
      }
      return out;
    }

    void require_known(std::set<std::string> const& known,
                       std::string const&           name,
                       Context const&               ctx,
                       std::string const&           key) {
      if (!known.count(name)) {
        throw ParseError("unknown element \"" + name + "\" in \"" + key + "\"",
                         ctx.line_of(key, name));
      }
    }

    void require_kind(json const& j, Context const& ctx, DocumentKind k) {
      std::string kind = string_at(j, ctx, "kind");
      if (kind != to_string(k)) {
        throw ParseError("expected a " + std::string(to_string(k))
                             + " document, found \"" + kind + "\"",
                         ctx.line_of_key("kind"));
      }
    }

    json parse_json(std::string const& text) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        std::size_t line = 1 + std::count(text.begin(),
                                          text.begin()
                                              + std::min(e.byte, text.size()),
                                          '\n');
        throw ParseError("malformed document: " + std::string(e.what()), line);
      }
    }

    RawGroupoid raw_from_json(json const& j, Context const& ctx) {
      if (!j.is_object()) {
        throw ParseError("a groupoid document must be an object", 1);
      }
      require_kind(j, ctx, DocumentKind::groupoid);
      RawGroupoid r;
      r.name     = string_at(j, ctx, "name");
      r.elements = strings(member(j, ctx, "elements"), ctx, "elements");
      r.units    = strings(member(j, ctx, "units"), ctx, "units");
      std::set<std::string> const known(r.elements.begin(), r.elements.end());
      for (auto const& u : r.units) {
        require_known(known, u, ctx, "units");
      }
      json const& inv = member(j, ctx, "inverse");
      if (!inv.is_object()) {
        throw ParseError("\"inverse\" must be an object",
                         ctx.line_of_key("inverse"));
      }
      for (auto const& [k, v] : inv.items()) {
        if (!v.is_string()) {
          throw ParseError("\"inverse\" values must be strings",
                           ctx.line_of_key("inverse"));
        }
        require_known(known, k, ctx, "inverse");
        require_known(known, v.get<std::string>(), ctx, "inverse");
        r.inverse.emplace_back(k, v.get<std::string>());
      }
      for (auto const& t : tuples(j, ctx, "compose", 3)) {
        for (auto const& n : t) {
          require_known(known, n, ctx, "compose");
        }
        r.compose.push_back({t[0], t[1], t[2]});
      }
      return r;
    }

    Document from_json(json const& j, Context const& ctx);

    Groupoid groupoid_ref(json const& j, Context const& ctx, std::string const& key) {
      json const& v = member(j, ctx, key);
      if (v.is_string()) {
        Document d = load_document((ctx.base / v.get<std::string>()).string());
        if (d.kind != DocumentKind::groupoid) {
          throw ParseError("\"" + key + "\" must name a groupoid document",
                           ctx.line_of_key(key));
        }
        return *d.groupoid;
      }
      if (!v.is_object()) {
        throw ParseError("\"" + key + "\" must be a path or a groupoid",
                         ctx.line_of_key(key));
      }
      return validate(raw_from_json(v, ctx));
    }

    std::set<std::string> known_names(Groupoid const& g) {
      auto const& e = g.universe()->elements();
      return {e.begin(), e.end()};
    }

    Document from_json(json const& j, Context const& ctx) {
      if (!j.is_object()) {
        throw ParseError("a document must be an object", 1);
      }
      std::string const kind = string_at(j, ctx, "kind");
      if (kind == "groupoid") {
        Groupoid g = validate(raw_from_json(j, ctx));
        return {DocumentKind::groupoid, g.name(), g, std::nullopt, std::nullopt};
      }
      if (kind == "morphism") {
        std::string name = j.contains("name") ? string_at(j, ctx, "name") : "h";
        Groupoid    s    = groupoid_ref(j, ctx, "source");
        Groupoid    t    = groupoid_ref(j, ctx, "target");
        auto const  ks   = known_names(s);
        auto const  kt   = known_names(t);
        std::vector<std::pair<std::string, std::string>> graph;
        for (auto const& p : tuples(j, ctx, "graph", 2)) {
          require_known(kt, p[0], ctx, "graph");
          require_known(ks, p[1], ctx, "graph");
          graph.emplace_back(p[0], p[1]);
        }
        return {DocumentKind::morphism,
                name,
                std::nullopt,
                validate_morphism(s, t, graph),
                std::nullopt};
      }
      if (kind == "action") {
        std::string name = j.contains("name") ? string_at(j, ctx, "name") : "phi";
        Groupoid    g    = groupoid_ref(j, ctx, "groupoid");
        auto const  carrier = strings(member(j, ctx, "carrier"), ctx, "carrier");
        std::set<std::string> const kx(carrier.begin(), carrier.end());
        if (kx.size() != carrier.size()) {
          throw ParseError("duplicate carrier element", ctx.line_of_key("carrier"));
        }
        auto const kg = known_names(g);
        std::vector<std::array<std::string, 3>> triples;
        for (auto const& t : tuples(j, ctx, "graph", 3)) {
          require_known(kx, t[0], ctx, "graph");
          require_known(kg, t[1], ctx, "graph");
          require_known(kx, t[2], ctx, "graph");
          triples.push_back({t[0], t[1], t[2]});
        }
        return {DocumentKind::action,
                name,
                std::nullopt,
                std::nullopt,
                validate_action(g, carrier, triples)};
      }
      throw ParseError("unknown document kind \"" + kind + "\"",
                       ctx.line_of_key("kind"));
    }

    json to_json(Groupoid const& g) {
      json j;
      j["kind"]     = "groupoid";
      j["name"]     = g.name();
      j["elements"] = g.universe()->elements();
      j["units"]    = g.names(g.units());
      json inv      = json::object();
      for (Elem x = 0; x < g.size(); ++x) {
        inv[g.name_of(x)] = g.name_of(g.inverse(x));
      }
      j["inverse"] = inv;
      auto pairs   = composable_pairs(g);
      std::sort(pairs.begin(), pairs.end());
      json compose = json::array();
      for (auto const& [a, b] : pairs) {
        compose.push_back(
            json::array({g.name_of(a), g.name_of(b), g.name_of(g.multiply(a, b))}));
      }
      j["compose"] = compose;
      return j;
    }

    json to_json(Morphism const& h, std::string const& name) {
      json j;
      j["kind"]   = "morphism";
      j["name"]   = name;
      j["source"] = to_json(h.source());
      j["target"] = to_json(h.target());
      json graph  = json::array();
      for (auto const& [d, g] : h.graph()) {
        graph.push_back(
            json::array({h.target().name_of(d), h.source().name_of(g)}));
      }
      j["graph"] = graph;
      return j;
    }

    json to_json(Action const& phi, std::string const& name) {
      json j;
      j["kind"]     = "action";
      j["name"]     = name;
      j["groupoid"] = to_json(phi.groupoid());
      j["carrier"]  = phi.carrier()->elements();
      json graph    = json::array();
      for (auto const& t : phi.named_triples()) {
        graph.push_back(json::array({t[0], t[1], t[2]}));
      }
      j["graph"] = graph;
      return j;
    }

    std::string dump(json const& j) {
      return j.dump(2) + "\n";
    }

  }  // namespace

  Document parse_document(std::string const& text, std::filesystem::path const& base) {
    Context const ctx{text, base};
    return from_json(parse_json(text), ctx);
  }

  RawGroupoid parse_raw_groupoid(std::string const& text) {
    Context const ctx{text, {}};
    return raw_from_json(parse_json(text), ctx);
  }

  Document load_document(std::string const& path) {
    std::string           text;
    std::filesystem::path base;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin),
                  std::istreambuf_iterator<char>());
    } else {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw ParseError("cannot read \"" + path + "\"");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
      base = std::filesystem::path(path).parent_path();
    }
    return parse_document(text, base);
  }

  std::string serialize(Groupoid const& g) {
    return dump(to_json(g));
  }

  std::string serialize(Morphism const& h, std::string const& name) {
    return dump(to_json(h, name));
  }

  std::string serialize(Action const& phi, std::string const& name) {
    return dump(to_json(phi, name));
  }

  std::string serialize(Document const& d) {
    switch (d.kind) {
      case DocumentKind::groupoid:
        return serialize(*d.groupoid);
      case DocumentKind::morphism:
        return serialize(*d.morphism, d.name);
      case DocumentKind::action:
        return serialize(*d.action, d.name);
    }
    return {};
  }

}  // namespace relgroupoid
