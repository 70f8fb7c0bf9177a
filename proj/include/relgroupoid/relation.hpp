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

// Finite relations between finite universes.
//
// A relation r : X -o Y is stored through its graph Gr(r), a subset of
// Y x X, as pairs (output, input).  Universes may be cartesian products of
// named universes; elements of a product are addressed by a mixed-radix code
// so that the numeric order of codes is the lexicographic order of tuples.

#ifndef RELGROUPOID_RELATION_HPP_
#define RELGROUPOID_RELATION_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace relgroupoid {

  using Elem = std::size_t;
  using Code = std::uint64_t;

  // A finite set of distinct identifiers kept in lexicographic order; the
  // position of a name in that order is its index.
  class Universe {
   public:
    Universe(std::string id, std::vector<std::string> elements);

    std::string const& id() const noexcept {
      return _id;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::vector<std::string> const& elements() const noexcept {
      return _elements;
    }
    std::string const& name(Elem i) const {
      return _elements.at(i);
    }

    bool               contains(std::string_view name) const;
    std::optional<Elem> find(std::string_view name) const;
    // Throws UnknownElement.
    Elem index(std::string_view name) const;

    // Universes compare by their element sets; the id is only a label.
    bool operator==(Universe const& other) const noexcept {
      return _elements == other._elements;
    }

   private:
    std::string                           _id;
    std::vector<std::string>              _elements;
    std::unordered_map<std::string, Elem> _lookup;
  };

  using UniversePtr = std::shared_ptr<Universe const>;

  UniversePtr make_universe(std::string id, std::vector<std::string> elements);

  // Cartesian product of universes.  The empty product is the one point set
  // {1}, whose only element has code 0.
  class Domain {
   public:
    Domain() = default;
    Domain(UniversePtr u);  // NOLINT(runtime/explicit)
    explicit Domain(std::vector<UniversePtr> factors);

    static Domain point() {
      return Domain();
    }

    std::size_t arity() const noexcept {
      return _factors.size();
    }
    Code size() const noexcept {
      return _size;
    }
    std::vector<UniversePtr> const& factors() const noexcept {
      return _factors;
    }
    UniversePtr const& factor(std::size_t i) const {
      return _factors.at(i);
    }

    Code              encode(std::span<Elem const> tuple) const;
    std::vector<Elem> decode(Code c) const;
    Code              code(std::span<std::string const> names) const;
    // Renders a tuple as "x,y"; a 1-tuple as its name; the point as "1".
    std::string render(Code c) const;
    // "X*Y" built from universe ids.
    std::string label() const;

    bool operator==(Domain const& other) const noexcept;

   private:
    std::vector<UniversePtr> _factors;
    Code                     _size = 1;
  };

  Domain operator*(Domain const& left, Domain const& right);

  using Pair = std::pair<Code, Code>;  // (output, input)

  class FinRel {
   public:
    FinRel() = default;
    // The graph is deduplicated and sorted; every code is range checked.
    FinRel(Domain source, Domain target, std::vector<Pair> graph);

    // Trusts that graph is sorted, unique and in range.
    static FinRel from_canonical(Domain            source,
                                 Domain            target,
                                 std::vector<Pair> graph);

    // Pairs given as (output tuple names, input tuple names).
    static FinRel from_names(
        Domain                                                          source,
        Domain                                                          target,
        std::vector<std::pair<std::vector<std::string>,
                              std::vector<std::string>>> const&         pairs);

    Domain const& source() const noexcept {
      return _source;
    }
    Domain const& target() const noexcept {
      return _target;
    }
    std::vector<Pair> const& graph() const noexcept {
      return _graph;
    }
    std::size_t size() const noexcept {
      return _graph.size();
    }
    bool empty() const noexcept {
      return _graph.empty();
    }
    bool contains(Code out, Code in) const;

    std::string render(Pair const& p) const;

    bool operator==(FinRel const& other) const noexcept {
      return _graph == other._graph && _source == other._source
             && _target == other._target;
    }

   private:
    Domain            _source;
    Domain            _target;
    std::vector<Pair> _graph;
  };

  // Gr(sr) = {(z, x) : exists y, (z, y) in s, (y, x) in r}.
  // Throws UniverseMismatch if r.target() != s.source().
  FinRel compose(FinRel const& s, FinRel const& r);
  FinRel transpose(FinRel const& r);
  FinRel product(FinRel const& r, FinRel const& r1);
  FinRel identity(Domain const& x);
  // sigma : X x Y -o Y x X, (x, y) -> (y, x).
  FinRel flip(Domain const& x, Domain const& y);

  std::vector<Code> domain(FinRel const& r);
  std::vector<Code> image(FinRel const& r);
  std::vector<Code> apply(FinRel const& r, Code x);
  bool              is_mapping(FinRel const& r);

  // First pair of the symmetric difference in canonical order, together
  // with a flag telling whether it belongs to the left relation.
  std::optional<std::pair<Pair, bool>> first_difference(FinRel const& left,
                                                        FinRel const& right);

}  // namespace relgroupoid

#endif  // RELGROUPOID_RELATION_HPP_
