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

#include "relgroupoid/relation.hpp"

#include <algorithm>
#include <limits>

namespace relgroupoid {

  ////////////////////////////////////////////////////////////////////////
  // Universe
  ////////////////////////////////////////////////////////////////////////

  Universe::Universe(std::string id, std::vector<std::string> elements)
      : _id(std::move(id)), _elements(std::move(elements)) {
    std::sort(_elements.begin(), _elements.end());
    auto dup = std::adjacent_find(_elements.begin(), _elements.end());
    if (dup != _elements.end()) {
      throw Error("duplicate element \"" + *dup + "\" in universe \"" + _id
                  + "\"");
    }
    _lookup.reserve(_elements.size());
    for (Elem i = 0; i < _elements.size(); ++i) {
      _lookup.emplace(_elements[i], i);
    }
  }

  bool Universe::contains(std::string_view name) const {
    return find(name).has_value();
  }

  std::optional<Elem> Universe::find(std::string_view name) const {
    auto it = _lookup.find(std::string(name));
    if (it == _lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Elem Universe::index(std::string_view name) const {
    auto i = find(name);
    if (!i) {
      throw UnknownElement(_id, std::string(name));
    }
    return *i;
  }

  UniversePtr make_universe(std::string id, std::vector<std::string> elements) {
    return std::make_shared<Universe const>(std::move(id), std::move(elements));
  }

  ////////////////////////////////////////////////////////////////////////
  // Domain
  ////////////////////////////////////////////////////////////////////////

  Domain::Domain(UniversePtr u) : Domain(std::vector<UniversePtr>{std::move(u)}) {}

  Domain::Domain(std::vector<UniversePtr> factors)
      : _factors(std::move(factors)), _size(1) {
    for (auto const& f : _factors) {
      if (f == nullptr) {
        throw std::invalid_argument("null universe in domain");
      }
      Code n = f->size();
      if (n != 0 && _size > std::numeric_limits<Code>::max() / n) {
        throw BudgetExceeded("domain " + label() + " is too large to encode");
      }
      _size *= n;
    }
  }

  Code Domain::encode(std::span<Elem const> tuple) const {
    if (tuple.size() != _factors.size()) {
      throw std::invalid_argument("tuple arity does not match domain "
                                  + label());
    }
    Code c = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i] >= _factors[i]->size()) {
        throw std::out_of_range("tuple component out of range in domain "
                                + label());
      }
      c = c * _factors[i]->size() + tuple[i];
    }
    return c;
  }

  std::vector<Elem> Domain::decode(Code c) const {
    std::vector<Elem> tuple(_factors.size());
    for (std::size_t i = _factors.size(); i-- > 0;) {
      Code n   = _factors[i]->size();
      tuple[i] = static_cast<Elem>(c % n);
      c /= n;
    }
    return tuple;
  }

  Code Domain::code(std::span<std::string const> names) const {
    if (names.size() != _factors.size()) {
      throw std::invalid_argument("tuple arity does not match domain "
                                  + label());
    }
    std::vector<Elem> tuple(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      tuple[i] = _factors[i]->index(names[i]);
    }
    return encode(tuple);
  }

  std::string Domain::render(Code c) const {
    if (_factors.empty()) {
      return "1";
    }
    auto        tuple = decode(c);
    std::string out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += _factors[i]->name(tuple[i]);
    }
    return out;
  }

  std::string Domain::label() const {
    if (_factors.empty()) {
      return "{1}";
    }
    std::string out;
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      if (i != 0) {
        out += '*';
      }
      out += _factors[i]->id();
    }
    return out;
  }

  bool Domain::operator==(Domain const& other) const noexcept {
    if (_factors.size() != other._factors.size()) {
      return false;
    }
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      if (_factors[i] != other._factors[i]
          && !(*_factors[i] == *other._factors[i])) {
        return false;
      }
    }
    return true;
  }

  Domain operator*(Domain const& left, Domain const& right) {
    std::vector<UniversePtr> factors = left.factors();
    factors.insert(
        factors.end(), right.factors().begin(), right.factors().end());
    return Domain(std::move(factors));
  }

  ////////////////////////////////////////////////////////////////////////
  // FinRel
  ////////////////////////////////////////////////////////////////////////

  FinRel::FinRel(Domain source, Domain target, std::vector<Pair> graph)
      : _source(std::move(source)),
        _target(std::move(target)),
        _graph(std::move(graph)) {
    for (auto const& [out, in] : _graph) {
      if (out >= _target.size() || in >= _source.size()) {
        throw std::out_of_range("relation pair out of range for "
                                + _source.label() + " -o " + _target.label());
      }
    }
    std::sort(_graph.begin(), _graph.end());
    _graph.erase(std::unique(_graph.begin(), _graph.end()), _graph.end());
  }

  FinRel FinRel::from_canonical(Domain            source,
                                Domain            target,
                                std::vector<Pair> graph) {
    FinRel r;
    r._source = std::move(source);
    r._target = std::move(target);
    r._graph  = std::move(graph);
    return r;
  }

  FinRel FinRel::from_names(
      Domain                                                  source,
      Domain                                                  target,
      std::vector<std::pair<std::vector<std::string>,
                            std::vector<std::string>>> const& pairs) {
    std::vector<Pair> graph;
    graph.reserve(pairs.size());
    for (auto const& [out, in] : pairs) {
      graph.emplace_back(target.code(out), source.code(in));
    }
    return FinRel(std::move(source), std::move(target), std::move(graph));
  }

  bool FinRel::contains(Code out, Code in) const {
    return std::binary_search(_graph.begin(), _graph.end(), Pair(out, in));
  }

  std::string FinRel::render(Pair const& p) const {
    return "(" + _target.render(p.first) + "; " + _source.render(p.second)
           + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  FinRel compose(FinRel const& s, FinRel const& r) {
    if (!(r.target() == s.source())) {
      throw UniverseMismatch(r.target().label(), s.source().label());
    }
    // s indexed by its input y.
    std::vector<Pair> s_by_input;
    s_by_input.reserve(s.size());
    for (auto const& [z, y] : s.graph()) {
      s_by_input.emplace_back(y, z);
    }
    std::sort(s_by_input.begin(), s_by_input.end());

    std::vector<Pair> out;
    for (auto const& [y, x] : r.graph()) {
      auto it = std::lower_bound(
          s_by_input.begin(), s_by_input.end(), Pair(y, 0));
      for (; it != s_by_input.end() && it->first == y; ++it) {
        out.emplace_back(it->second, x);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return FinRel::from_canonical(r.source(), s.target(), std::move(out));
  }

  FinRel transpose(FinRel const& r) {
    std::vector<Pair> out;
    out.reserve(r.size());
    for (auto const& [y, x] : r.graph()) {
      out.emplace_back(x, y);
    }
    std::sort(out.begin(), out.end());
    return FinRel::from_canonical(r.target(), r.source(), std::move(out));
  }

  FinRel product(FinRel const& r, FinRel const& r1) {
    Code const        n_out = r1.target().size();
    Code const        n_in  = r1.source().size();
    std::vector<Pair> out;
    out.reserve(r.size() * r1.size());
    // Lexicographic order of (y, x) then (y1, x1) is not the order of the
    // combined codes, so sort afterwards.
    for (auto const& [y, x] : r.graph()) {
      for (auto const& [y1, x1] : r1.graph()) {
        out.emplace_back(y * n_out + y1, x * n_in + x1);
      }
    }
    std::sort(out.begin(), out.end());
    return FinRel::from_canonical(
        r.source() * r1.source(), r.target() * r1.target(), std::move(out));
  }

  FinRel identity(Domain const& x) {
    std::vector<Pair> out;
    out.reserve(x.size());
    for (Code c = 0; c < x.size(); ++c) {
      out.emplace_back(c, c);
    }
    return FinRel::from_canonical(x, x, std::move(out));
  }

  FinRel flip(Domain const& x, Domain const& y) {
    std::vector<Pair> out;
    out.reserve(x.size() * y.size());
    for (Code a = 0; a < x.size(); ++a) {
      for (Code b = 0; b < y.size(); ++b) {
        out.emplace_back(b * x.size() + a, a * y.size() + b);
      }
    }
    std::sort(out.begin(), out.end());
    return FinRel::from_canonical(x * y, y * x, std::move(out));
  }

  std::vector<Code> domain(FinRel const& r) {
    std::vector<Code> out;
    out.reserve(r.size());
    for (auto const& p : r.graph()) {
      out.push_back(p.second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Code> image(FinRel const& r) {
    std::vector<Code> out;
    out.reserve(r.size());
    for (auto const& p : r.graph()) {
      if (out.empty() || out.back() != p.first) {
        out.push_back(p.first);
      }
    }
    return out;
  }

  std::vector<Code> apply(FinRel const& r, Code x) {
    if (x >= r.source().size()) {
      throw std::out_of_range("apply: input out of range for "
                              + r.source().label());
    }
    std::vector<Code> out;
    for (auto const& [y, in] : r.graph()) {
      if (in == x) {
        out.push_back(y);
      }
    }
    return out;
  }

  bool is_mapping(FinRel const& r) {
    std::vector<std::size_t> count(r.source().size(), 0);
    for (auto const& p : r.graph()) {
      if (++count[p.second] > 1) {
        return false;
      }
    }
    return std::all_of(
        count.begin(), count.end(), [](std::size_t c) { return c == 1; });
  }

  std::optional<std::pair<Pair, bool>> first_difference(FinRel const& left,
                                                        FinRel const& right) {
    auto const& a = left.graph();
    auto const& b = right.graph();
    auto        i = a.begin();
    auto        j = b.begin();
    while (i != a.end() || j != b.end()) {
      if (j == b.end() || (i != a.end() && *i < *j)) {
        return std::make_pair(*i, true);
      }
      if (i == a.end() || *j < *i) {
        return std::make_pair(*j, false);
      }
      ++i;
      ++j;
    }
    return std::nullopt;
  }

}  // namespace relgroupoid
