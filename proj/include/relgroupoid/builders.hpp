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

#ifndef RELGROUPOID_BUILDERS_HPP_
#define RELGROUPOID_BUILDERS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "group_table.hpp"
#include "groupoid.hpp"

namespace relgroupoid {

  using Names = std::vector<std::string>;

  // "(x,y)"
  std::string pair_name(std::string const& x, std::string const& y);
  // "x|g|y"
  std::string product_form_name(std::string const& x,
                                std::string const& g,
                                std::string const& y);

  Groupoid pair_groupoid(Names const& x);
  Groupoid set_groupoid(Names const& x);
  Groupoid group_groupoid(GroupTable const& t);
  // Fiber i contributes elements "i:g".
  Groupoid group_bundle(std::vector<GroupTable> const& fibers);
  // Throws PreconditionError unless blocks partition x.
  Groupoid equivalence_groupoid(Names const& x, std::vector<Names> const& blocks);
  Groupoid product_form(Names const& e, GroupTable const& t);

  // A left action of a finite group on a finite set, as a full table.
  class GroupAction {
   public:
    // triples are (g.x, g, x); throws PreconditionError unless they form a
    // total action.
    GroupAction(GroupTable group, Names carrier, std::vector<GroupTable::Triple> const& triples);

    GroupTable const& group() const noexcept {
      return _group;
    }
    UniversePtr const& carrier() const noexcept {
      return _carrier;
    }
    Elem act(Elem g, Elem x) const {
      return _table[g * _carrier->size() + x];
    }
    std::vector<GroupTable::Triple> triples() const;
    bool                            is_effective() const;
    bool                            is_transitive() const;

   private:
    GroupTable        _group;
    UniversePtr       _carrier;
    std::vector<Elem> _table;
  };

  // Elements "(g,x)" with (g, hx)(h, x) = (gh, x).
  Groupoid transformation_groupoid(GroupAction const& a);

  namespace catalog {
    Groupoid one_point();
    Groupoid s2();   // set groupoid on {a, b}
    Groupoid p2();   // pair groupoid on {1, 2}
    Groupoid p3();   // pair groupoid on {1, 2, 3}
    Groupoid z2();
    Groupoid z4();
    Groupoid klein();
    Groupoid bundle_z2_trivial();
    Groupoid z2_swap();  // transformation groupoid of Z2 swapping {p, q}
    Groupoid product_form_xy_z2();
    Groupoid equivalence_12_3();

    GroupAction z2_swap_action();

    // All of the above, in the order listed, with their catalog names.
    std::vector<std::pair<std::string, Groupoid>> all();
  }  // namespace catalog

}  // namespace relgroupoid

#endif  // RELGROUPOID_BUILDERS_HPP_
