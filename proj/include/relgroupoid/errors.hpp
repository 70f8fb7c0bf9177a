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

#ifndef RELGROUPOID_ERRORS_HPP_
#define RELGROUPOID_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace relgroupoid {

  // Base of every error raised for bad input. Internal invariant failures
  // (things that cannot happen for validated data) use std::logic_error.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class UnknownElement : public Error {
   public:
    UnknownElement(std::string const& universe, std::string const& element)
        : Error("unknown element \"" + element + "\" in universe \""
                + universe + "\""),
          _element(element) {}

    std::string const& element() const noexcept {
      return _element;
    }

   private:
    std::string _element;
  };

  class UniverseMismatch : public Error {
   public:
    UniverseMismatch(std::string const& left, std::string const& right)
        : Error("universe mismatch: \"" + left + "\" vs \"" + right + "\"") {}
  };

  // Raised when an operation's precondition on otherwise valid data fails
  // (e.g. restricting to a non-unit, decomposing a non-transitive groupoid).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Raised by exhaustive searches when the requested instance exceeds the
  // configured budget.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace relgroupoid

#endif  // RELGROUPOID_ERRORS_HPP_
