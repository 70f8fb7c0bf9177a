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

// Text documents for groupoids, morphisms and actions.
//
//   {"kind": "groupoid", "name": ..., "elements": [...], "units": [...],
//    "inverse": {g: s(g)}, "compose": [[a, b, ab], ...]}
//   {"kind": "morphism", "name": ..., "source": <path or inline>,
//    "target": <path or inline>, "graph": [[delta, gamma], ...]}
//   {"kind": "action", "name": ..., "groupoid": <path or inline>,
//    "carrier": [...], "graph": [[y, gamma, x], ...]}
//
// Canonical text has sorted keys, arrays in element order, two-space
// indentation and a trailing newline.

#ifndef RELGROUPOID_DOCUMENT_HPP_
#define RELGROUPOID_DOCUMENT_HPP_

#include <filesystem>
#include <optional>
#include <string>

#include "action.hpp"
#include "groupoid.hpp"
#include "morphism.hpp"

namespace relgroupoid {

  enum class DocumentKind { groupoid, morphism, action };

  std::string_view to_string(DocumentKind k);

  // Malformed text, unknown names or unreadable files.  line() is 0 when
  // unknown.
  class ParseError : public Error {
   public:
    ParseError(std::string const& message, std::size_t line = 0);
    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  struct Document {
    DocumentKind            kind;
    std::string             name;
    std::optional<Groupoid> groupoid;
    std::optional<Morphism> morphism;
    std::optional<Action>   action;
  };

  // Relative paths inside the text resolve against base.  Axiom, morphism
  // and action violations propagate as AxiomError, MorphismError and
  // ActionError.
  Document parse_document(std::string const&           text,
                          std::filesystem::path const& base = {});
  // "-" reads standard input.
  Document load_document(std::string const& path);

  // Parses a groupoid document without validating it.
  RawGroupoid parse_raw_groupoid(std::string const& text);

  std::string serialize(Groupoid const& g);
  std::string serialize(Morphism const& h, std::string const& name = "h");
  std::string serialize(Action const& phi, std::string const& name = "phi");
  std::string serialize(Document const& d);

}  // namespace relgroupoid

#endif  // RELGROUPOID_DOCUMENT_HPP_
