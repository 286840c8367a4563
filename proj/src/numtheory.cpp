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

#include "llab/numtheory.hpp"

#include <algorithm>

#include "llab/errors.hpp"

namespace llab {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw BadInput("divisors: n must be positive");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n == 0) throw BadInput("factorize: n must be positive");
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::uint64_t totient(std::uint64_t n) {
    std::uint64_t phi = n;
    for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

unsigned big_omega(std::uint64_t n) {
    unsigned r = 0;
    for (const auto& pp : factorize(n)) r += pp.exponent;
    return r;
}

TwoAdicSplit split_two_adic(std::uint64_t n) {
    if (n == 0) throw BadInput("split_two_adic: n must be positive");
    unsigned t = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++t;
    }
    return {t, n};
}

}  // namespace llab
