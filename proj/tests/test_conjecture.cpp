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

#include "doctest.h"
#include "llab/conjecture.hpp"
#include "llab/cyclotomic.hpp"
#include "llab/errors.hpp"
#include "llab/numtheory.hpp"
#include "llab/verify.hpp"
#include "support.hpp"

using namespace llab;
using llab::testing::lc;
using llab::testing::n12_labels;
using llab::testing::labelled_poly;

namespace {

std::vector<std::string> signs_of(const std::vector<IntPoly>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(to_sign_string(p));
    return out;
}

const ReportEntry& entry_for(const VerificationReport& rep, int label) {
    const std::string& s = n12_labels().at(label);
    auto it = std::find_if(rep.entries.begin(), rep.entries.end(), [&](const auto& e) { return e.record.signs == s; });
    REQUIRE(it != rep.entries.end());
    return *it;
}

}  // namespace

TEST_CASE("canonical_form") {
    const IntPoly f12 = labelled_poly(1);
    auto c = canonical_form(f12);
    CHECK(c.poly == f12);
    CHECK(c.applied == Symmetry::identity);

    c = canonical_form({1, -1, 1});
    CHECK(c.poly == IntPoly{1, 1, 1});
    CHECK(c.applied == Symmetry::reflect);

    c = canonical_form(negate(labelled_poly(2)));
    CHECK(c.poly == labelled_poly(2));
    CHECK(c.applied == Symmetry::negate);

    c = canonical_form(negate(reflect(labelled_poly(5))));
    CHECK(c.poly == labelled_poly(5));
    CHECK(c.applied == Symmetry::negate_reflect);

    CHECK_THROWS_AS((canonical_form(IntPoly{1, 2, 1})), BadInput);
    CHECK_THROWS_AS((canonical_form(IntPoly{1})), BadInput);
}

TEST_CASE("check_form11 examples") {
    const auto u = check_form11(labelled_poly(1));
    REQUIRE(u);
    CHECK(u->outer_sign == 1);
    CHECK(u->steps == std::vector<Form11Step>{{2, 1}, {2, 1}, {3, 1}});
    CHECK(format_form11(*u) == "+Φ2(x)·Φ2(x^2)·Φ3(x^4)");

    const auto p8 = check_form11(labelled_poly(8));
    REQUIRE(p8);
    std::uint64_t prod = 1;
    for (const auto& s : p8->steps) prod *= s.prime;
    CHECK(prod == 12);
    CHECK(expand_form11(*p8) == labelled_poly(8));

    CHECK_FALSE(check_form11({1, 1, -1, 1}));
    CHECK_THROWS_AS((check_form11(IntPoly{1, 0, 1})), BadInput);

    for (int label = 1; label <= 8; ++label) {
        const auto dec = check_form11(labelled_poly(label));
        REQUIRE(dec);
        CHECK(expand_form11(*dec) == labelled_poly(label));
    }
}

TEST_CASE("nested product expansions are cyclotomic Littlewood polynomials") {
    // Every product over the ordered factorizations of 12 with all sign choices.
    const std::vector<std::vector<std::uint64_t>> orders{{2, 2, 3}, {2, 3, 2}, {3, 2, 2}};
    for (const auto& primes : orders)
        for (unsigned signs = 0; signs < 16; ++signs) {
            Form11Decomposition dec{(signs & 8) ? -1 : 1, {}};
            for (std::size_t j = 0; j < primes.size(); ++j) dec.steps.push_back({primes[j], (signs >> j & 1) ? -1 : 1});
            const IntPoly p = expand_form11(dec);
            CHECK(p.is_littlewood());
            CHECK(p.degree() == 11);
            CHECK(factor_cyclotomic(p, 12));
            CHECK(check_form11(p));
        }
}

TEST_CASE("classify_known_case") {
    CHECK(classify_known_case(9, nullptr) == std::set<KnownCase>{KnownCase::odd_n});
    CHECK(classify_known_case(16, nullptr) == std::set<KnownCase>{KnownCase::power_of_two});
    CHECK(classify_known_case(18, nullptr) == std::set<KnownCase>{KnownCase::two_p_power});
    CHECK(to_string(KnownCase::odd_n) == "odd_N");
}

TEST_CASE("enumerate_lc examples") {
    std::vector<std::string> labels;
    for (const auto& [label, s] : n12_labels()) labels.push_back(s);
    std::sort(labels.begin(), labels.end());
    CHECK(signs_of(lc(12)) == labels);
    for (Method m : {Method::naive, Method::structured})
        CHECK(signs_of(enumerate_lc(3, m)) == std::vector<std::string>{"+++"});
    CHECK(signs_of(enumerate_lc(2, Method::naive)) == std::vector<std::string>{"++"});
    CHECK_THROWS_AS(enumerate_lc(1, Method::naive), BadInput);
}

TEST_CASE("class sizes at N = 12") {
    // 16 sign vectors with a_0 = +1 are cyclotomic: two per class.
    unsigned raw = 0;
    std::set<std::string> classes;
    for (unsigned mask = 0; mask < (1u << 11); ++mask) {
        std::vector<BigInt> c(12, 1);
        for (unsigned j = 1; j < 12; ++j) c[j] = (mask >> (j - 1) & 1) ? -1 : 1;
        const IntPoly p(c);
        if (!factor_cyclotomic(p, 12)) continue;
        ++raw;
        classes.insert(to_sign_string(canonical_form(p).poly));
    }
    CHECK(raw == 16);
    CHECK(classes.size() == 8);
}

TEST_CASE("naive and structured enumeration agree, N <= 24") {
    const std::vector<std::size_t> counts{1, 1, 2, 1, 3, 1, 4, 2, 3, 1, 8, 1, 3, 3, 8};
    for (std::uint64_t n = 2; n <= 24; ++n) {
        INFO("N=" << n);
        CHECK(signs_of(lc(n)) == signs_of(enumerate_lc(n, Method::structured)));
        if (n <= 16) CHECK(lc(n).size() == counts[n - 2]);
    }
}

TEST_CASE("worker count and reciprocity screen do not change the result") {
    for (std::uint64_t n = 2; n <= 16; ++n) {
        EnumerationOptions plain;
        plain.workers = 1;
        plain.reciprocity_screen = false;
        const auto reference = signs_of(enumerate_lc(n, Method::naive, plain));
        for (unsigned workers : {1u, 3u, 8u}) {
            EnumerationOptions o;
            o.workers = workers;
            CHECK(signs_of(enumerate_lc(n, Method::naive, o)) == reference);
        }
    }
}

TEST_CASE("enumeration caps") {
    EnumerationOptions o;
    CHECK_THROWS_AS(require_within_cap(27, o), CapExceeded);
    CHECK_NOTHROW(require_within_cap(26, o));
    o.allow_over_cap = true;
    CHECK_NOTHROW(require_within_cap(30, o));
    CHECK_THROWS_AS(require_within_cap(35, o), CapExceeded);
    CHECK_THROWS_AS(enumerate_lc(40, Method::naive), CapExceeded);
    CHECK(enumerate_lc(40, Method::structured).size() > 0);
}

TEST_CASE("parse helpers") {
    CHECK(parse_method("naive") == Method::naive);
    CHECK(parse_method("structured") == Method::structured);
    CHECK_THROWS_AS(parse_method("fast"), BadInput);
    CHECK(parse_check("c43") == Check::c43);
    CHECK_THROWS_AS(parse_check("c44"), BadInput);
}

TEST_CASE("verify_conjecture12") {
    const auto r12 = verify_conjecture12(12, lc(12), Method::naive);
    CHECK(r12.passed);
    CHECK(r12.entries.size() == 8);
    CHECK(r12.reverse_samples == 200);
    CHECK(r12.reverse_misses == 0);
    CHECK(verify_conjecture12(8, lc(8), Method::naive).passed);
    const auto r15 = verify_conjecture12(15, lc(15), Method::naive);
    CHECK(r15.passed);
    CHECK(r15.entries.size() == 3);

    // A list missing a member is caught by the reverse sampling.
    std::vector<IntPoly> partial = lc(12);
    partial.pop_back();
    CHECK_FALSE(verify_conjecture12(12, partial, Method::naive).passed);
}

TEST_CASE("verify_theorem39") {
    for (std::uint64_t n = 2; n <= 24; ++n) {
        const auto rep = verify_theorem39(n, lc(n), Method::naive);
        CHECK(rep.passed);
        for (const auto& e : rep.entries) CHECK(e.biconditional_ok);
    }
}

TEST_CASE("verify_conjecture43 at N = 12") {
    const auto rep = verify_conjecture43(12, lc(12), Method::naive);
    CHECK(rep.passed);
    const auto& p5 = entry_for(rep, 5);
    CHECK(p5.witness_status == WitnessStatus::found);
    CHECK(std::any_of(p5.witnesses.begin(), p5.witnesses.end(),
                      [](const Witness& w) { return w.partner == n12_labels().at(4) && w.t_level == 2; }));
    const auto& p8 = entry_for(rep, 8);
    CHECK(p8.witness_status == WitnessStatus::found);
    CHECK(std::any_of(p8.witnesses.begin(), p8.witnesses.end(),
                      [](const Witness& w) { return w.partner == n12_labels().at(7) && w.t_level == 1; }));
    CHECK(entry_for(rep, 1).witness_status == WitnessStatus::not_applicable);

    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
        const auto vacuous = verify_conjecture43(p, lc(p), Method::naive);
        CHECK(vacuous.passed);
        CHECK(std::all_of(vacuous.entries.begin(), vacuous.entries.end(),
                          [](const auto& e) { return e.witness_status == WitnessStatus::not_applicable; }));
    }
}

TEST_CASE("analyze") {
    const PolyRecord r = analyze(labelled_poly(5));
    CHECK(r.defect_index() == 2u);
    CHECK(r.least_defects == std::set<std::uint64_t>{2});
    CHECK(r.t_eff == std::set<unsigned>{1, 2});
    CHECK(r.form11);
    CHECK(format_factorization(r.factors) == "-Φ1·Φ2^2·Φ24");
    CHECK_THROWS_AS(analyze(reflect(labelled_poly(5))), BadInput);
    CHECK_NOTHROW(analyze(IntPoly{1, 1}));
}
