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

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "llab/conjecture.hpp"
#include "llab/errors.hpp"
#include "llab/numtheory.hpp"

namespace llab {

namespace {

std::uint64_t reverse_low_bits(std::uint64_t x, unsigned width) {
    x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
    x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
    x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
    x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
    x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
    x = (x >> 32) | (x << 32);
    return x >> (64 - width);
}

// Bit k set means a_k = -1.
IntPoly poly_from_mask(std::uint64_t mask, unsigned n) {
    std::vector<BigInt> v(n);
    for (unsigned k = 0; k < n; ++k) v[k] = (mask >> k) & 1 ? -1 : 1;
    return IntPoly(std::move(v));
}

std::vector<IntPoly> sorted_unique(std::set<std::string> signs) {
    std::vector<IntPoly> out;
    out.reserve(signs.size());
    for (const auto& s : signs) out.push_back(parse_sign_string(s));
    return out;
}

std::vector<IntPoly> enumerate_naive(unsigned n, const EnumerationOptions& opt) {
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const unsigned workers = std::max(1u, opt.workers);
    const std::uint64_t chunks = std::min<std::uint64_t>(total, std::uint64_t{workers} * 16);
    const std::uint64_t chunk_len = (total + chunks - 1) / chunks;

    std::atomic<std::uint64_t> next{0};
    std::mutex merge_mutex;
    std::set<std::string> found;
    std::exception_ptr failure;

    auto work = [&] {
        std::set<std::string> local;
        try {
            for (std::uint64_t c = next++; c < chunks; c = next++) {
                const std::uint64_t lo = c * chunk_len;
                const std::uint64_t hi = std::min(total, lo + chunk_len);
                for (std::uint64_t idx = lo; idx < hi; ++idx) {
                    const std::uint64_t mask = (idx ^ (idx >> 1)) << 1;
                    if (opt.reciprocity_screen) {
                        const std::uint64_t rev = reverse_low_bits(mask, n);
                        if (rev != mask && rev != (~mask & full)) continue;
                    }
                    const IntPoly p = poly_from_mask(mask, n);
                    if (factor_cyclotomic(p, n)) local.insert(to_sign_string(canonical_form(p).poly));
                }
            }
        } catch (...) {
            std::lock_guard lock(merge_mutex);
            if (!failure) failure = std::current_exception();
        }
        std::lock_guard lock(merge_mutex);
        found.merge(local);
    };

    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return sorted_unique(std::move(found));
}

std::vector<IntPoly> enumerate_structured(std::uint64_t n) {
    const auto [t, m] = split_two_adic(n);
    const auto bases = divisors(m);
    std::vector<std::vector<std::vector<unsigned>>> options;
    for (std::uint64_t d : bases) options.push_back(chain_solutions(t, d == 1));

    std::set<std::string> found;
    std::vector<std::size_t> pick(bases.size(), 0);
    while (true) {
        ExponentMap ev;
        ev.n_value = n;
        for (std::size_t c = 0; c < bases.size(); ++c) {
            const auto& w = options[c][pick[c]];
            for (unsigned k = 0; k < w.size(); ++k) ev.set_exponent(bases[c] << k, w[k]);
        }
        const IntPoly p = expand(ev);
        if (p.is_littlewood()) found.insert(to_sign_string(canonical_form(p).poly));

        std::size_t c = 0;
        while (c < pick.size() && ++pick[c] == options[c].size()) pick[c++] = 0;
        if (c == pick.size()) break;
    }
    return sorted_unique(std::move(found));
}

void fill_solutions(std::vector<unsigned>& w, unsigned idx, std::uint64_t remaining,
                    std::vector<std::vector<unsigned>>& out) {
    if (idx == 0) {
        w[0] = static_cast<unsigned>(remaining);
        out.push_back(w);
        return;
    }
    const std::uint64_t unit = std::uint64_t{1} << (idx - 1);
    for (std::uint64_t k = 0; k * unit <= remaining; ++k) {
        w[idx] = static_cast<unsigned>(k);
        fill_solutions(w, idx - 1, remaining - k * unit, out);
    }
    w[idx] = 0;
}

}  // namespace

std::vector<std::vector<unsigned>> chain_solutions(unsigned t, bool unit) {
    const std::uint64_t target = (std::uint64_t{1} << t) - (unit ? 1 : 0);
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> w(t + 2, 0);
    // The unit chain never uses its top slot: 2^t exceeds its sum.
    fill_solutions(w, unit ? t : t + 1, target, out);
    std::sort(out.begin(), out.end());
    return out;
}

void require_within_cap(std::uint64_t n, const EnumerationOptions& options) {
    const unsigned cap = std::min(options.naive_cap, kNaiveCapCeiling);
    if (n > kNaiveCapCeiling || (n > cap && !options.allow_over_cap))
        throw CapExceeded("naive enumeration for N=" + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(options.allow_over_cap ? kNaiveCapCeiling : cap));
}

std::vector<IntPoly> enumerate_lc(std::uint64_t n, Method method, const EnumerationOptions& options) {
    if (n < 2) throw BadInput("enumerate_lc: N must be at least 2");
    if (method == Method::structured) return enumerate_structured(n);
    require_within_cap(n, options);
    return enumerate_naive(static_cast<unsigned>(n), options);
}

}  // namespace llab
