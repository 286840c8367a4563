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

#ifndef LLAB_NORMS_HPP
#define LLAB_NORMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "llab/intpoly.hpp"

namespace llab {

/// ||P||_4^4 = sum over lags k in [-deg, deg] of c_|k|^2, with c the autocorrelation.
BigInt l4_fourth_power(const IntPoly& p);

/// ||P||_4^4 / N^2 as an exact fraction; N = number of coefficients.
struct NormRecord {
    std::uint64_t n_value = 0;
    BigInt l4_fourth;
    BigInt ratio_num;  // l4_fourth
    BigInt ratio_den;  // N^2
    double ratio() const;
};

NormRecord norm_record(const IntPoly& p);

/// The extremal L4 value u_r = ||Phi_2(-x) Phi_2(-x^2) ... Phi_2(-x^(2^(r-1)))||_4^4:
/// the closed form (1/2 + 5 sqrt17/34)(1 + sqrt17)^r - (-1/2 + 5 sqrt17/34)(1 - sqrt17)^r
/// in floating point, and exactly via u_r = 2 u_{r-1} + 16 u_{r-2}, u_0 = 1, u_1 = 6.
struct ExtremalValue {
    double closed_form = 0;
    BigInt exact;
};

ExtremalValue theorem13_value(unsigned r);

/// Phi_2(-x) Phi_2(-x^2) ... Phi_2(-x^(2^(r-1))); 1 for r == 0.
IntPoly extremal_product(unsigned r);

struct BoundEntry {
    std::string signs;
    NormRecord norm;
};

struct BoundReport {
    std::uint64_t n_value = 0;
    unsigned r = 0;  // prime factors of N with multiplicity
    BigInt u_r;
    BigInt bound_den;  // 4^r
    std::vector<BoundEntry> entries;  // nested product polynomials only
    unsigned skipped = 0;             // polynomials without a nested product decomposition
    std::optional<std::size_t> minimizer;
    bool passed = true;

    double bound() const;
};

/// ||P||_4^4 / N^2 >= u_r / 4^r for every nested product polynomial in lc,
/// compared exactly.
BoundReport verify_bound(std::uint64_t n, const std::vector<IntPoly>& lc);

}  // namespace llab

#endif
