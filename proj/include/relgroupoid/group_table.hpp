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

#ifndef RELGROUPOID_GROUP_TABLE_HPP_
#define RELGROUPOID_GROUP_TABLE_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "relation.hpp"

namespace relgroupoid {

  // A finite group given by its full Cayley table.  Construction checks
  // closure, associativity, the unit laws and invertibility.
  class GroupTable {
   public:
    using Triple = std::array<std::string, 3>;  // (a, b, ab)

    GroupTable(std::string                name,
               std::vector<std::string>   elements,
               std::string const&         unit,
               std::vector<Triple> const& table);

    std::string const& name() const noexcept {
      return _name;
    }
    UniversePtr const& universe() const noexcept {
      return _universe;
    }
    std::size_t size() const noexcept {
      return _universe->size();
    }
    Elem unit() const noexcept {
      return _unit;
    }
    std::string const& name_of(Elem g) const {
      return _universe->name(g);
    }
    Elem index(std::string_view name) const {
      return _universe->index(name);
    }
    Elem multiply(Elem a, Elem b) const {
      return _table[a * size() + b];
    }
    Elem inverse(Elem a) const {
      return _inverse[a];
    }
    std::vector<Triple> triples() const;

    bool operator==(GroupTable const& other) const noexcept {
      return *_universe == *other._universe && _unit == other._unit
             && _table == other._table;
    }

   private:
    std::string       _name;
    UniversePtr       _universe;
    Elem              _unit;
    std::vector<Elem> _table;
    std::vector<Elem> _inverse;
  };

  GroupTable trivial_group();
  // Elements "0", ..., "n-1" under addition mod n.
  GroupTable cyclic_group(std::size_t n);
  // Elements "e", "a", "b", "c".
  GroupTable klein_four_group();
  // Permutations of {1..n} written in one-line notation, e.g. "132";
  // (pq)(i) = p(q(i)).  Requires 1 <= n <= 9.
  GroupTable symmetric_group(std::size_t n);

  // Subsets of a group are sorted vectors of indices.
  bool is_subgroup(GroupTable const& g, std::vector<Elem> const& h);
  bool is_normal_subgroup(GroupTable const& g, std::vector<Elem> const& h);

  // Cosets gH named "[g]" for the least member g, together with the
  // canonical projection.  Requires h normal.
  struct QuotientGroup {
    GroupTable        group;
    std::vector<Elem> projection;  // element of g -> element of quotient
  };
  QuotientGroup quotient_group(GroupTable const&        g,
                               std::vector<Elem> const& h);

  // Brute-force isomorphism test over all bijections fixing the unit;
  // intended for groups of order at most 8.
  bool are_isomorphic(GroupTable const& a, GroupTable const& b);

}  // namespace relgroupoid

#endif  // RELGROUPOID_GROUP_TABLE_HPP_
