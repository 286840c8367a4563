/*
   Copyright 2026 The llab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LLAB_ERRORS_HPP
#define LLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace llab {

// Faults. Normal negative answers (not divisible, not cyclotomic, not of
// nested product, invalid move) are returned as empty optionals instead.

struct BadInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivideByZero : std::domain_error {
    DivideByZero() : std::domain_error("division by the zero polynomial") {}
};

struct NonTermination : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace llab

#endif
