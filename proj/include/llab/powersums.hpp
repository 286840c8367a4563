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

#ifndef LLAB_POWERSUMS_HPP
#define LLAB_POWERSUMS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "llab/cyclotomic.hpp"
#include "llab/intpoly.hpp"

namespace llab {

/// S_1 ... S_{N-2} of the roots of a degree N-1 polynomial, the defect set
/// {k : S_k != -1} and its minimum (the defect index i).
struct PowerSumProfile {
    std::uint64_t n_value = 0;
    std::vector<std::int64_t> sums;  // sums[k-1] == S_k
    std::vector<std::uint64_t> defect_set;
    std::optional<std::uint64_t> first_defect;

    std::int64_t at(std::uint64_t k) const { return sums.at(k - 1); }
    friend bool operator==(const PowerSumProfile&, const PowerSumProfile&) = default;
};

/// Power sums by Newton's recursion S_k + a_1 S_{k-1} + ... + a_{k-1} S_1 + k a_k = 0.
/// The input must be a cyclotomic Littlewood polynomial with a_0 = +1 and
/// degree >= 2 (the recursion relies on self-reciprocity; cyclotomicity is
/// the caller's promise). Throws BadInput when a_0 != 1 or a coefficient
/// is not +-1.
PowerSumProfile newton_power_sums(const IntPoly& p);

/// S_k = sum_{d | 2N} e(d) C_d(k); independent of the outer sign.
PowerSumProfile power_sums_from_exponents(const ExponentMap& ev);

/// Elements of s with no proper divisor in s.
std::set<std::uint64_t> least_type_divisors(const std::set<std::uint64_t>& s);

/// K(P): the least-type divisors of the defect set.
std::set<std::uint64_t> least_type_defects(const PowerSumProfile& profile);

/// {v_2(k) : S_k(a) != S_k(b)}. Throws BadInput on mismatched N.
std::set<unsigned> effective_t_set(const PowerSumProfile& a, const PowerSumProfile& b);
/// Same, against the all -1 profile of 1 + x + ... + x^(N-1).
std::set<unsigned> effective_t_set(const PowerSumProfile& a);

/// Outcome of checking a coefficient/power-sum law on one polynomial:
/// how many index instances met the hypothesis and how many violated it.
struct LawCheck {
    unsigned applicable = 0;
    unsigned violations = 0;
};

/// For P in LC(N,i): whenever the first m blocks of length i are constant
/// (a_{li+j} = a_{li}, 0 <= l <= m-1, 1 <= j <= i-1) with
/// 1 <= m <= (N-1)/i - 1, check
///   S_{mi+j} + 1 + (mi+j)(a_{mi+j} - a_{mi+j-1}) == 0
/// for each 1 <= j <= i-1 with mi+j <= N-2.
LawCheck check_block_law(const IntPoly& p, const PowerSumProfile& profile);

/// Companion law one block further, under the same hypothesis:
///   (S_{(m+1)i+j} + 1) + 2((m+1)i+j)(a_{mi+j} - a_{mi+j-1})
///     + ((m+1)i+j)(a_{(m+1)i+j} - a_{(m+1)i+j-1}) == 0
/// for (m+1)i+j <= N-2.
LawCheck check_next_block_law(const IntPoly& p, const PowerSumProfile& profile);

/// a_{li+j} == a_{li} for 0 <= l <= N/i - 1 and 1 <= j <= i-1.
bool has_block_periodicity(const IntPoly& p, std::uint64_t block);

}  // namespace llab

#endif
