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

#include "llab/powersums.hpp"

#include "llab/errors.hpp"
#include "llab/numtheory.hpp"
#include "llab/ramanujan.hpp"

namespace llab {

namespace {

PowerSumProfile make_profile(std::uint64_t n, std::vector<std::int64_t> sums) {
    PowerSumProfile prof;
    prof.n_value = n;
    prof.sums = std::move(sums);
    for (std::size_t k = 1; k <= prof.sums.size(); ++k)
        if (prof.sums[k - 1] != -1) prof.defect_set.push_back(k);
    if (!prof.defect_set.empty()) prof.first_defect = prof.defect_set.front();
    return prof;
}

int sign_at(const IntPoly& p, std::size_t k) { return p.coeffs()[k] == 1 ? 1 : -1; }

}  // namespace

PowerSumProfile newton_power_sums(const IntPoly& p) {
    if (!p.is_littlewood()) throw BadInput("newton_power_sums: coefficients must be +-1");
    if (p.coeffs()[0] != 1) throw BadInput("newton_power_sums: a_0 must be +1");
    if (p.degree() < 2) throw BadInput("newton_power_sums: degree must be at least 2");
    const std::uint64_t n = p.degree() + 1;
    std::vector<std::int64_t> s(n - 2);
    for (std::uint64_t k = 1; k <= n - 2; ++k) {
        std::int64_t acc = static_cast<std::int64_t>(k) * sign_at(p, k);
        for (std::uint64_t j = 1; j < k; ++j) acc += sign_at(p, j) * s[k - j - 1];
        s[k - 1] = -acc;
    }
    return make_profile(n, std::move(s));
}

PowerSumProfile power_sums_from_exponents(const ExponentMap& ev) {
    check_exponent_map(ev);
    const std::uint64_t n = ev.n_value;
    std::vector<std::int64_t> s(n >= 2 ? n - 2 : 0, 0);
    for (std::uint64_t k = 1; k + 2 <= n; ++k)
        for (const auto& [d, e] : ev.factors) s[k - 1] += static_cast<std::int64_t>(e) * ramanujan_sum(d, k);
    return make_profile(n, std::move(s));
}

std::set<std::uint64_t> least_type_divisors(const std::set<std::uint64_t>& s) {
    std::set<std::uint64_t> out;
    for (std::uint64_t a : s) {
        bool least = true;
        for (std::uint64_t c : s) {
            if (c >= a) break;
            if (c != 0 && a % c == 0) {
                least = false;
                break;
            }
        }
        if (least) out.insert(a);
    }
    return out;
}

std::set<std::uint64_t> least_type_defects(const PowerSumProfile& profile) {
    return least_type_divisors({profile.defect_set.begin(), profile.defect_set.end()});
}

std::set<unsigned> effective_t_set(const PowerSumProfile& a, const PowerSumProfile& b) {
    if (a.n_value != b.n_value || a.sums.size() != b.sums.size())
        throw BadInput("effective_t_set: profiles have different N");
    std::set<unsigned> out;
    for (std::size_t k = 1; k <= a.sums.size(); ++k)
        if (a.sums[k - 1] != b.sums[k - 1]) out.insert(padic_valuation(2, k));
    return out;
}

std::set<unsigned> effective_t_set(const PowerSumProfile& a) {
    std::set<unsigned> out;
    for (std::uint64_t k : a.defect_set) out.insert(padic_valuation(2, k));
    return out;
}

namespace {

// Calls law(m, j) for every (m, j) meeting the block hypothesis.
template <class Law>
void for_each_block_instance(const IntPoly& p, const PowerSumProfile& profile, Law&& law) {
    if (!profile.first_defect) return;
    const std::uint64_t i = *profile.first_defect;
    const std::uint64_t n = profile.n_value;
    for (std::uint64_t m = 1; m + 1 <= (n - 1) / i; ++m) {
        bool constant = true;
        for (std::uint64_t l = 0; l < m && constant; ++l)
            for (std::uint64_t j = 1; j < i; ++j)
                if (p.coeffs()[l * i + j] != p.coeffs()[l * i]) {
                    constant = false;
                    break;
                }
        if (!constant) break;
        for (std::uint64_t j = 1; j < i; ++j) law(m, j);
    }
}

}  // namespace

LawCheck check_block_law(const IntPoly& p, const PowerSumProfile& profile) {
    LawCheck r;
    for_each_block_instance(p, profile, [&](std::uint64_t m, std::uint64_t j) {
        const std::uint64_t i = *profile.first_defect;
        const std::uint64_t k = m * i + j;
        if (k + 2 > profile.n_value) return;
        ++r.applicable;
        const std::int64_t lhs = profile.at(k) + 1 + static_cast<std::int64_t>(k) * (sign_at(p, k) - sign_at(p, k - 1));
        if (lhs != 0) ++r.violations;
    });
    return r;
}

LawCheck check_next_block_law(const IntPoly& p, const PowerSumProfile& profile) {
    LawCheck r;
    for_each_block_instance(p, profile, [&](std::uint64_t m, std::uint64_t j) {
        const std::uint64_t i = *profile.first_defect;
        const std::uint64_t k = m * i + j;
        const std::uint64_t next = k + i;
        if (next + 2 > profile.n_value) return;
        ++r.applicable;
        const auto kn = static_cast<std::int64_t>(next);
        const std::int64_t lhs = (profile.at(next) + 1) + 2 * kn * (sign_at(p, k) - sign_at(p, k - 1)) +
                                 kn * (sign_at(p, next) - sign_at(p, next - 1));
        if (lhs != 0) ++r.violations;
    });
    return r;
}

bool has_block_periodicity(const IntPoly& p, std::uint64_t block) {
    if (block == 0 || p.is_zero()) return false;
    const std::uint64_t n = p.degree() + 1;
    for (std::uint64_t l = 0; l * block < n; ++l)
        for (std::uint64_t j = 1; j < block && l * block + j < n; ++j)
            if (p.coeffs()[l * block + j] != p.coeffs()[l * block]) return false;
    return true;
}

}  // namespace llab
