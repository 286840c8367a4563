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

#include "llab/cyclotomic.hpp"

#include <charconv>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "llab/errors.hpp"
#include "llab/numtheory.hpp"

namespace llab {

namespace {

std::shared_mutex memo_mutex;
std::map<std::uint64_t, IntPoly>& memo() {
    static std::map<std::uint64_t, IntPoly> table;
    return table;
}

IntPoly build_cyclotomic(std::uint64_t d) {
    IntPoly num = IntPoly::monomial(1, d) - IntPoly{1};
    for (std::uint64_t e : divisors(d)) {
        if (e == d) break;
        auto q = exact_div(num, cyclotomic_poly(e));
        if (!q) throw std::logic_error("cyclotomic construction: inexact division");
        num = std::move(*q);
    }
    return num;
}

}  // namespace

const IntPoly& cyclotomic_poly(std::uint64_t d) {
    if (d == 0) throw BadInput("cyclotomic_poly: d must be positive");
    {
        std::shared_lock lock(memo_mutex);
        auto it = memo().find(d);
        if (it != memo().end()) return it->second;
    }
    IntPoly phi = build_cyclotomic(d);
    std::unique_lock lock(memo_mutex);
    return memo().try_emplace(d, std::move(phi)).first->second;
}

unsigned ExponentMap::exponent(std::uint64_t d) const {
    auto it = factors.find(d);
    return it == factors.end() ? 0 : it->second;
}

void ExponentMap::set_exponent(std::uint64_t d, unsigned e) {
    if (e == 0)
        factors.erase(d);
    else
        factors[d] = e;
}

ExponentMap uniform_map(std::uint64_t n) {
    ExponentMap ev;
    ev.n_value = n;
    for (std::uint64_t d : divisors(n))
        if (d > 1) ev.factors[d] = 1;
    return ev;
}

void check_exponent_map(const ExponentMap& ev) {
    if (ev.n_value == 0) throw BadInput("exponent map: N must be positive");
    if (ev.outer_sign != 1 && ev.outer_sign != -1) throw BadInput("exponent map: sign must be +-1");
    std::uint64_t degree = 0;
    for (const auto& [d, e] : ev.factors) {
        if (d == 0 || (2 * ev.n_value) % d != 0)
            throw BadInput("exponent map: key " + std::to_string(d) + " does not divide 2N");
        degree += e * totient(d);
    }
    if (degree + 1 != ev.n_value)
        throw BadInput("exponent map: degree " + std::to_string(degree) + " != N-1");
}

bool has_odd_coefficient_structure(const ExponentMap& ev) {
    const auto [t, m] = split_two_adic(ev.n_value);
    for (const auto& [d, e] : ev.factors) {
        if ((2 * ev.n_value) % d != 0) return false;
    }
    for (std::uint64_t d : divisors(m)) {
        std::uint64_t sum = ev.exponent(d);
        for (unsigned n = 1; n <= t + 1; ++n) sum += (std::uint64_t{1} << (n - 1)) * ev.exponent(d << n);
        const std::uint64_t want = (std::uint64_t{1} << t) - (d == 1 ? 1 : 0);
        if (sum != want) return false;
    }
    return ev.exponent(std::uint64_t{1} << (t + 1)) == 0;
}

std::optional<ExponentMap> factor_cyclotomic(const IntPoly& p, std::uint64_t n) {
    if (n == 0 || p.is_zero() || p.degree() + 1 != n)
        throw BadInput("factor_cyclotomic: degree must be N-1");
    if (!p.has_odd_coeffs()) throw BadInput("factor_cyclotomic: coefficients must be odd");

    ExponentMap ev;
    ev.n_value = n;
    IntPoly rest = p;
    for (std::uint64_t d : divisors(2 * n)) {
        const IntPoly& phi = cyclotomic_poly(d);
        unsigned e = 0;
        while (rest.degree() >= phi.degree()) {
            auto q = exact_div(rest, phi);
            if (!q) break;
            rest = std::move(*q);
            ++e;
        }
        ev.set_exponent(d, e);
        if (rest.degree() == 0) break;
    }
    if (rest.degree() != 0) return std::nullopt;
    const BigInt& c = rest.coeffs()[0];
    if (c != 1 && c != -1) return std::nullopt;
    ev.outer_sign = c == 1 ? 1 : -1;
    return ev;
}

IntPoly expand(const ExponentMap& ev) {
    IntPoly r{ev.outer_sign};
    for (const auto& [d, e] : ev.factors)
        for (unsigned j = 0; j < e; ++j) r = r * cyclotomic_poly(d);
    return r;
}

std::string format_factorization(const ExponentMap& ev) {
    std::ostringstream os;
    if (ev.outer_sign < 0) os << '-';
    bool first = true;
    const auto [t, m] = split_two_adic(ev.n_value == 0 ? 1 : ev.n_value);
    auto emit = [&](std::uint64_t d, unsigned e) {
        if (!first) os << "·";
        os << "Φ" << d;
        if (e > 1) os << '^' << e;
        first = false;
    };
    std::map<std::uint64_t, unsigned> rest = ev.factors;
    for (std::uint64_t d : divisors(m)) {
        for (unsigned n = 0; n <= t + 1; ++n) {
            auto it = rest.find(d << n);
            if (it == rest.end()) continue;
            emit(it->first, it->second);
            rest.erase(it);
        }
    }
    for (const auto& [d, e] : rest) emit(d, e);
    if (first) os << '1';
    return os.str();
}

ExponentMap parse_factor_list(std::string_view text, int sign) {
    if (sign != 1 && sign != -1) throw BadInput("factor list: sign must be +-1");
    ExponentMap ev;
    ev.outer_sign = sign;
    std::uint64_t degree = 0;
    auto parse_uint = [](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw BadInput("factor list: bad number '" + std::string(s) + "'");
        return v;
    };
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        auto colon = item.find(':');
        if (colon == std::string_view::npos) throw BadInput("factor list: expected d:e, got '" + std::string(item) + "'");
        std::uint64_t d = parse_uint(item.substr(0, colon));
        std::uint64_t e = parse_uint(item.substr(colon + 1));
        if (d == 0) throw BadInput("factor list: d must be positive");
        if (ev.factors.count(d)) throw BadInput("factor list: repeated d=" + std::to_string(d));
        ev.set_exponent(d, static_cast<unsigned>(e));
        degree += e * totient(d);
    }
    ev.n_value = degree + 1;
    check_exponent_map(ev);
    return ev;
}

}  // namespace llab
