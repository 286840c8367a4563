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

#include "llab/ramanujan.hpp"

#include "llab/errors.hpp"
#include "llab/numtheory.hpp"

namespace llab {

unsigned padic_valuation(std::uint64_t p, std::uint64_t z) {
    if (z == 0) throw BadInput("padic_valuation: valuation of 0 is infinite");
    if (!is_prime(p)) throw BadInput("padic_valuation: base must be prime");
    unsigned e = 0;
    while (z % p == 0) {
        z /= p;
        ++e;
    }
    return e;
}

namespace {

std::int64_t prime_power_sum(std::uint64_t p, unsigned n, std::uint64_t k) {
    std::int64_t lower = 1;
    for (unsigned j = 1; j < n; ++j) lower *= static_cast<std::int64_t>(p);
    const unsigned v = padic_valuation(p, k);
    if (v >= n) return lower * static_cast<std::int64_t>(p) - lower;
    if (v + 1 == n) return -lower;
    return 0;
}

}  // namespace

std::int64_t ramanujan_sum(std::uint64_t d, std::uint64_t k) {
    if (d == 0 || k == 0) throw BadInput("ramanujan_sum: d and k must be positive");
    std::int64_t c = 1;
    for (const auto& [p, n] : factorize(d)) {
        c *= prime_power_sum(p, n, k);
        if (c == 0) break;
    }
    return c;
}

std::int64_t t_sum(unsigned n, std::uint64_t k) {
    if (k == 0) throw BadInput("t_sum: k must be positive");
    return padic_valuation(2, k) == n ? (std::int64_t{2} << n) : 0;
}

}  // namespace llab
