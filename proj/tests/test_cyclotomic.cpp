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

#include <thread>

#include "doctest.h"
#include "llab/cyclotomic.hpp"
#include "llab/errors.hpp"
#include "llab/numtheory.hpp"
#include "support.hpp"

using namespace llab;
using llab::testing::labelled_poly;

TEST_CASE("cyclotomic_poly examples") {
    CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
    CHECK(cyclotomic_poly(5) == IntPoly{1, 1, 1, 1, 1});
    CHECK(cyclotomic_poly(12) == IntPoly{1, 0, -1, 0, 1});
    CHECK(cyclotomic_poly(12) == *exact_div(IntPoly::monomial(1, 12) - IntPoly{1},
                                            cyclotomic_poly(1) * cyclotomic_poly(2) * cyclotomic_poly(3) *
                                                cyclotomic_poly(4) * cyclotomic_poly(6)));
}

TEST_CASE("product over divisors is x^d - 1 for d <= 200") {
    for (std::uint64_t d = 1; d <= 200; ++d) {
        IntPoly prod{1};
        for (std::uint64_t e : divisors(d)) prod = prod * cyclotomic_poly(e);
        REQUIRE(prod == IntPoly::monomial(1, d) - IntPoly{1});
        CHECK(cyclotomic_poly(d).degree() == totient(d));
    }
}

TEST_CASE("cyclotomic_poly is safe under concurrent first use") {
    std::vector<std::thread> pool;
    std::vector<IntPoly> seen(8);
    for (int w = 0; w < 8; ++w)
        pool.emplace_back([&seen, w] { seen[w] = cyclotomic_poly(420 + 2); });
    for (auto& t : pool) t.join();
    for (const auto& p : seen) CHECK(p == seen[0]);
    CHECK(seen[0].degree() == totient(422));
}

TEST_CASE("factor_cyclotomic examples") {
    const auto f12 = factor_cyclotomic(labelled_poly(1), 12);
    REQUIRE(f12);
    CHECK(f12->outer_sign == 1);
    CHECK(f12->factors == std::map<std::uint64_t, unsigned>{{2, 1}, {3, 1}, {4, 1}, {6, 1}, {12, 1}});
    CHECK(*f12 == uniform_map(12));

    const auto f8 = factor_cyclotomic(labelled_poly(8), 12);
    REQUIRE(f8);
    CHECK(f8->outer_sign == 1);
    CHECK(f8->factors == std::map<std::uint64_t, unsigned>{{1, 2}, {2, 1}, {3, 3}, {6, 1}});

    CHECK_THROWS_AS(factor_cyclotomic(labelled_poly(1), 11), BadInput);
    CHECK_THROWS_AS((factor_cyclotomic(IntPoly{1, 2, 1}, 3)), BadInput);
}

TEST_CASE("exactly 32 length-12 sign vectors are cyclotomic") {
    unsigned hits = 0;
    std::optional<IntPoly> outsider;
    for (unsigned mask = 0; mask < (1u << 12); ++mask) {
        std::vector<BigInt> c(12);
        for (unsigned j = 0; j < 12; ++j) c[j] = (mask >> j & 1) ? -1 : 1;
        const IntPoly p(c);
        if (factor_cyclotomic(p, 12))
            ++hits;
        else if (!outsider)
            outsider = p;
    }
    CHECK(hits == 32);
    REQUIRE(outsider);
    CHECK_FALSE(factor_cyclotomic(*outsider, 12));
}

TEST_CASE("expand") {
    ExponentMap empty;
    CHECK(expand(empty) == IntPoly{1});
    CHECK(expand(parse_factor_list("2:1,4:1,24:1")) == labelled_poly(2));
    const auto f6 = factor_cyclotomic(labelled_poly(6), 12);
    REQUIRE(f6);
    CHECK(expand(*f6) == labelled_poly(6));
    for (int label = 1; label <= 8; ++label) {
        const auto ev = factor_cyclotomic(labelled_poly(label), 12);
        REQUIRE(ev);
        CHECK(expand(*ev) == labelled_poly(label));
        CHECK(has_odd_coefficient_structure(*ev));
        CHECK_NOTHROW(check_exponent_map(*ev));
    }
}

TEST_CASE("factor lists and formatting") {
    const ExponentMap p5 = parse_factor_list("1:1,2:2,24:1", -1);
    CHECK(p5.n_value == 12);
    CHECK(p5.outer_sign == -1);
    CHECK(format_factorization(p5) == "-Φ1·Φ2^2·Φ24");
    CHECK(format_factorization(uniform_map(12)) == "Φ2·Φ4·Φ3·Φ6·Φ12");
    CHECK(expand(p5) == labelled_poly(5));
    CHECK_THROWS_AS(parse_factor_list("2:1,4:"), BadInput);
    CHECK_THROWS_AS(parse_factor_list("5:1,2:1"), BadInput);

    ExponentMap bad = uniform_map(12);
    bad.set_exponent(5, 1);
    CHECK_THROWS_AS(check_exponent_map(bad), BadInput);
    bad = uniform_map(12);
    bad.outer_sign = 3;
    CHECK_THROWS_AS(check_exponent_map(bad), BadInput);
}

TEST_CASE("uniform maps satisfy the chain sums") {
    for (std::uint64_t n = 2; n <= 64; ++n) {
        const ExponentMap u = uniform_map(n);
        CHECK(has_odd_coefficient_structure(u));
        CHECK(expand(u) == IntPoly(std::vector<BigInt>(n, 1)));
    }
}
