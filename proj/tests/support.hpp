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

#ifndef LLAB_TESTS_SUPPORT_HPP
#define LLAB_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "llab/conjecture.hpp"
#include "llab/intpoly.hpp"

namespace llab::testing {

// The eight canonical N = 12 polynomials, labelled P1..P8 in the order the
// witness checks refer to them.
inline const std::map<int, std::string>& n12_labels() {
    static const std::map<int, std::string> labels{
        {1, "++++++++++++"}, {2, "++++----++++"}, {3, "++--++++--++"}, {4, "++--++--++--"},
        {5, "++----++++--"}, {6, "++++++------"}, {7, "+++---+++---"}, {8, "+++------+++"},
    };
    return labels;
}

inline IntPoly labelled_poly(int label) { return parse_sign_string(n12_labels().at(label)); }

// Canonical LC(N), naive route, computed once per N per test binary.
inline const std::vector<IntPoly>& lc(std::uint64_t n) {
    static std::mutex guard;
    static std::map<std::uint64_t, std::vector<IntPoly>> memo;
    std::lock_guard lock(guard);
    auto it = memo.find(n);
    if (it == memo.end()) {
        EnumerationOptions opts;
        opts.workers = 2;
        it = memo.emplace(n, enumerate_lc(n, Method::naive, opts)).first;
    }
    return it->second;
}

// Small deterministic generator for property tests (xorshift64*).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }
    long long between(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

inline IntPoly random_poly(Rng& rng, std::size_t max_len, long long bound) {
    std::vector<BigInt> c(static_cast<std::size_t>(rng.between(1, static_cast<long long>(max_len))));
    for (auto& x : c) x = rng.between(-bound, bound);
    return IntPoly(std::move(c));
}

}  // namespace llab::testing

#endif
