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

#ifndef LLAB_RAMANUJAN_HPP
#define LLAB_RAMANUJAN_HPP

#include <cstdint>

namespace llab {

/// Largest e with p^e | z. Throws BadInput if z == 0 or p is not prime.
unsigned padic_valuation(std::uint64_t p, std::uint64_t z);

/// Ramanujan sum C_d(k): the sum of k-th powers of the primitive d-th roots
/// of unity. Evaluated multiplicatively over the prime powers of d:
///
///   C_{p^n}(k) = p^n - p^(n-1)   if v_p(k) >= n
///              = -p^(n-1)        if v_p(k) == n-1
///              = 0               otherwise.
///
/// d, k >= 1.
std::int64_t ramanujan_sum(std::uint64_t d, std::uint64_t k);

/// T_n(k) = C_1(k) + C_2(k) + ... + C_{2^n}(k) - C_{2^(n+1)}(k), which
/// telescopes to 2^(n+1) when v_2(k) == n and to 0 otherwise.
std::int64_t t_sum(unsigned n, std::uint64_t k);

}  // namespace llab

#endif
