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

#ifndef LLAB_VERIFY_HPP
#define LLAB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "llab/conjecture.hpp"
#include "llab/cyclotomic.hpp"
#include "llab/etransform.hpp"
#include "llab/powersums.hpp"

namespace llab {

/// Everything derived from one canonical cyclotomic Littlewood polynomial.
struct PolyRecord {
    IntPoly poly;
    std::string signs;
    ExponentMap factors;
    PowerSumProfile profile;
    std::set<std::uint64_t> least_defects;  // K(P)
    std::set<unsigned> t_eff;
    EPath path;  // from the uniform map to factors
    std::set<unsigned> t_path;
    std::optional<Form11Decomposition> form11;

    std::optional<std::uint64_t> defect_index() const { return profile.first_defect; }
};

/// Throws BadInput unless p is a canonical (a_0 = a_1 = 1) cyclotomic
/// Littlewood polynomial.
PolyRecord analyze(const IntPoly& p);

enum class Check { c12, t39, c43 };

std::string to_string(Check c);
Check parse_check(std::string_view s);

enum class WitnessStatus {
    not_applicable,  // the uniform polynomial
    found,
    covered,  // no witness, but |T_eff| <= 1 already settles it
    missing,
};

std::string to_string(WitnessStatus s);

struct Witness {
    std::string partner;  // sign string of P_2
    unsigned t_level = 0;
};

struct ReportEntry {
    PolyRecord record;
    bool form11_ok = false;
    bool biconditional_ok = false;  // |K(P)| <= 1 <=> nested product
    WitnessStatus witness_status = WitnessStatus::not_applicable;
    std::vector<Witness> witnesses;  // every qualifying P_2, sorted by sign string
};

struct VerificationReport {
    std::uint64_t n_value = 0;
    Method method = Method::naive;
    Check check = Check::c12;
    std::vector<ReportEntry> entries;  // sorted by sign string
    unsigned reverse_samples = 0;
    unsigned reverse_misses = 0;
    /// Entries whose move-level set differs in size from the effective set.
    unsigned path_sensitive = 0;
    bool passed = true;
    std::optional<std::string> first_failure;
};

/// Every polynomial must decompose in nested product and satisfy the K(P)
/// biconditional; `samples` random nested product expansions must all appear
/// in `lc`. The sampler is seeded from N so reports are reproducible.
VerificationReport verify_conjecture12(std::uint64_t n, const std::vector<IntPoly>& lc, Method method,
                                       unsigned samples = 200);

/// |K(P)| <= 1 iff check_form11 succeeds, for every polynomial.
VerificationReport verify_theorem39(std::uint64_t n, const std::vector<IntPoly>& lc, Method method);

/// For every P_1 != uniform with defect index i, look for P_2 != P_1 with
/// the same i such that |T_eff(P_1)| <= |T_eff(P_2)| + 1 and the effective
/// set between them is a single level t' >= v_2(i). Fails only when a P_1
/// with |T_eff| >= 2 has no witness.
VerificationReport verify_conjecture43(std::uint64_t n, const std::vector<IntPoly>& lc, Method method);

}  // namespace llab

#endif
