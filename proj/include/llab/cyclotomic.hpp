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

#ifndef LLAB_CYCLOTOMIC_HPP
#define LLAB_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "llab/intpoly.hpp"

namespace llab {

/// Phi_d, built by exact division of x^d - 1 by Phi_e for the proper
/// divisors e of d. Memoized; safe to call from several threads. The
/// returned reference stays valid for the life of the process.
const IntPoly& cyclotomic_poly(std::uint64_t d);

/// Factorization sign * prod_{d | 2N} Phi_d^e(d) of a polynomial of degree N-1.
struct ExponentMap {
    std::uint64_t n_value = 0;
    std::map<std::uint64_t, unsigned> factors;  // nonzero exponents only
    int outer_sign = 1;

    unsigned exponent(std::uint64_t d) const;
    /// Stores e, erasing the key when e == 0.
    void set_exponent(std::uint64_t d, unsigned e);

    friend bool operator==(const ExponentMap&, const ExponentMap&) = default;
};

/// The map of 1 + x + ... + x^(N-1): e(d) = 1 for every 1 < d | N.
ExponentMap uniform_map(std::uint64_t n);

/// Throws BadInput unless the sign is +-1, every key divides 2N and
/// sum e(d) * phi(d) == N - 1.
void check_exponent_map(const ExponentMap& ev);

/// Odd-coefficient structure with N = 2^t M: for each d | M the chain sum
/// e(d) + sum_{n=1}^{t+1} 2^(n-1) e(2^n d) equals 2^t, or 2^t - 1 when d == 1.
bool has_odd_coefficient_structure(const ExponentMap& ev);

/// Factors an odd-coefficient polynomial of degree N-1 over Phi_d, d | 2N,
/// by repeated trial division in ascending d. Returns nullopt when the
/// residual quotient is not a constant +-1. Throws BadInput when the degree
/// is not N-1 or a coefficient is even.
std::optional<ExponentMap> factor_cyclotomic(const IntPoly& p, std::uint64_t n);

/// outer_sign * prod Phi_d^e(d).
IntPoly expand(const ExponentMap& ev);

/// Factors grouped by chain (ascending odd d, then d, 2d, 4d, ...), e.g.
/// "-Φ1·Φ2^2·Φ24". An empty product renders as "1".
std::string format_factorization(const ExponentMap& ev);

/// Parses "2:1,4:1,24:1" into a map with the given sign; N is inferred from
/// the degree. Throws BadInput on malformed text or keys not dividing 2N.
ExponentMap parse_factor_list(std::string_view text, int sign = 1);

}  // namespace llab

#endif
