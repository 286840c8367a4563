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

#ifndef LLAB_NUMTHEORY_HPP
#define LLAB_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace llab {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// All divisors of n >= 1, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Prime factorization by trial division, primes ascending. Empty for n == 1.
std::vector<PrimePower> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Euler's totient.
std::uint64_t totient(std::uint64_t n);

/// Number of prime factors counted with multiplicity.
unsigned big_omega(std::uint64_t n);

/// n = 2^t * M with M odd.
struct TwoAdicSplit {
    unsigned t;
    std::uint64_t odd;
};
TwoAdicSplit split_two_adic(std::uint64_t n);

}  // namespace llab

#endif
