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

#include "llab/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "llab/errors.hpp"
#include "llab/numtheory.hpp"
#include "llab/ramanujan.hpp"

namespace llab {

PolyRecord analyze(const IntPoly& p) {
    if (!p.is_littlewood() || p.degree() < 1 || p.coeffs()[0] != 1 || p.coeffs()[1] != 1)
        throw BadInput("analyze: expected a canonical Littlewood polynomial");
    const std::uint64_t n = p.degree() + 1;
    auto ev = factor_cyclotomic(p, n);
    if (!ev) throw BadInput("analyze: polynomial is not cyclotomic");

    PolyRecord rec;
    rec.poly = p;
    rec.signs = to_sign_string(p);
    rec.factors = std::move(*ev);
    // There are no power sums S_1..S_{N-2} to recurse on when N == 2.
    rec.profile = n >= 3 ? newton_power_sums(p) : power_sums_from_exponents(rec.factors);
    rec.least_defects = least_type_defects(rec.profile);
    rec.t_eff = effective_t_set(rec.profile);
    rec.path = reverse_path(path_to_uniform(rec.factors));
    rec.t_path = path_t_set(rec.path);
    rec.form11 = check_form11(p);
    return rec;
}

std::string to_string(Check c) {
    switch (c) {
        case Check::c12: return "c12";
        case Check::t39: return "t39";
        case Check::c43: return "c43";
    }
    return "?";
}

Check parse_check(std::string_view s) {
    if (s == "c12") return Check::c12;
    if (s == "t39") return Check::t39;
    if (s == "c43") return Check::c43;
    throw BadInput("unknown check '" + std::string(s) + "'");
}

std::string to_string(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::not_applicable: return "n/a";
        case WitnessStatus::found: return "found";
        case WitnessStatus::covered: return "covered";
        case WitnessStatus::missing: return "missing";
    }
    return "?";
}

namespace {

VerificationReport base_report(std::uint64_t n, const std::vector<IntPoly>& lc, Method method, Check check) {
    VerificationReport rep;
    rep.n_value = n;
    rep.method = method;
    rep.check = check;
    for (const IntPoly& p : lc) {
        ReportEntry e;
        e.record = analyze(p);
        e.form11_ok = e.record.form11.has_value();
        e.biconditional_ok = (e.record.least_defects.size() <= 1) == e.form11_ok;
        if (e.record.t_path.size() != e.record.t_eff.size()) ++rep.path_sensitive;
        rep.entries.push_back(std::move(e));
    }
    std::sort(rep.entries.begin(), rep.entries.end(),
              [](const ReportEntry& a, const ReportEntry& b) { return a.record.signs < b.record.signs; });
    return rep;
}

void fail(VerificationReport& rep, std::string why) {
    if (rep.passed) rep.first_failure = std::move(why);
    rep.passed = false;
}

Form11Decomposition random_form11(std::uint64_t n, std::mt19937_64& rng) {
    std::vector<std::uint64_t> primes;
    for (const auto& [p, e] : factorize(n))
        for (unsigned j = 0; j < e; ++j) primes.push_back(p);
    std::shuffle(primes.begin(), primes.end(), rng);
    std::bernoulli_distribution coin(0.5);
    Form11Decomposition dec;
    dec.outer_sign = coin(rng) ? 1 : -1;
    for (std::uint64_t p : primes) dec.steps.push_back({p, coin(rng) ? 1 : -1});
    return dec;
}

}  // namespace

VerificationReport verify_conjecture12(std::uint64_t n, const std::vector<IntPoly>& lc, Method method,
                                       unsigned samples) {
    VerificationReport rep = base_report(n, lc, method, Check::c12);
    for (const auto& e : rep.entries) {
        if (!e.form11_ok) fail(rep, e.record.signs + ": no nested product decomposition");
        if (!e.biconditional_ok) fail(rep, e.record.signs + ": |K(P)| <= 1 disagrees with nested product");
    }

    std::set<std::string> known;
    for (const auto& e : rep.entries) known.insert(e.record.signs);
    std::mt19937_64 rng(n);
    for (unsigned s = 0; s < samples; ++s) {
        const Form11Decomposition dec = random_form11(n, rng);
        const IntPoly p = expand_form11(dec);
        ++rep.reverse_samples;
        if (!p.is_littlewood() || !known.count(to_sign_string(canonical_form(p).poly))) {
            ++rep.reverse_misses;
            fail(rep, format_form11(dec) + ": expansion missing from the enumerated set");
        }
    }
    return rep;
}

VerificationReport verify_theorem39(std::uint64_t n, const std::vector<IntPoly>& lc, Method method) {
    VerificationReport rep = base_report(n, lc, method, Check::t39);
    for (const auto& e : rep.entries)
        if (!e.biconditional_ok) fail(rep, e.record.signs + ": |K(P)| <= 1 disagrees with nested product");
    return rep;
}

VerificationReport verify_conjecture43(std::uint64_t n, const std::vector<IntPoly>& lc, Method method) {
    VerificationReport rep = base_report(n, lc, method, Check::c43);
    for (auto& e1 : rep.entries) {
        const auto i = e1.record.defect_index();
        if (!i) continue;
        const unsigned min_level = padic_valuation(2, *i);
        for (const auto& e2 : rep.entries) {
            if (&e2 == &e1 || e2.record.defect_index() != i) continue;
            if (e1.record.t_eff.size() > e2.record.t_eff.size() + 1) continue;
            const auto between = effective_t_set(e2.record.profile, e1.record.profile);
            if (between.size() != 1 || *between.begin() < min_level) continue;
            e1.witnesses.push_back({e2.record.signs, *between.begin()});
        }
        if (!e1.witnesses.empty())
            e1.witness_status = WitnessStatus::found;
        else if (e1.record.t_eff.size() <= 1)
            e1.witness_status = WitnessStatus::covered;
        else {
            e1.witness_status = WitnessStatus::missing;
            fail(rep, e1.record.signs + ": no witness P_2");
        }
    }
    return rep;
}

}  // namespace llab
