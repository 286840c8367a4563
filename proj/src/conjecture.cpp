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

#include "llab/conjecture.hpp"

#include <sstream>

#include "llab/errors.hpp"
#include "llab/numtheory.hpp"

namespace llab {

std::string to_string(Symmetry s) {
    switch (s) {
        case Symmetry::identity: return "identity";
        case Symmetry::reflect: return "reflect";
        case Symmetry::negate: return "negate";
        case Symmetry::negate_reflect: return "negate_reflect";
    }
    return "?";
}

CanonicalForm canonical_form(const IntPoly& p) {
    if (!p.is_littlewood() || p.degree() < 1)
        throw BadInput("canonical_form: need a +-1 polynomial of degree >= 1");
    const IntPoly members[] = {p, reflect(p), -p, -reflect(p)};
    const Symmetry tags[] = {Symmetry::identity, Symmetry::reflect, Symmetry::negate, Symmetry::negate_reflect};
    for (int j = 0; j < 4; ++j)
        if (members[j].coeffs()[0] == 1 && members[j].coeffs()[1] == 1) return {members[j], tags[j]};
    throw BadInput("canonical_form: no class member has a_0 = a_1 = 1");
}

namespace {

// Q with p == Phi_q(sign x) * Q(x^q), if it exists and is Littlewood.
std::optional<IntPoly> peel(const IntPoly& p, std::uint64_t q, int sign) {
    const IntPoly& phi = cyclotomic_poly(q);
    auto quot = exact_div(p, sign > 0 ? phi : reflect(phi));
    if (!quot || quot->is_zero()) return std::nullopt;
    std::vector<BigInt> contracted;
    for (std::size_t k = 0; k < quot->size(); ++k) {
        const BigInt& c = quot->coeffs()[k];
        if (k % q == 0)
            contracted.push_back(c);
        else if (c != 0)
            return std::nullopt;
    }
    IntPoly inner(std::move(contracted));
    if (!inner.is_littlewood()) return std::nullopt;
    return inner;
}

bool decompose(const IntPoly& p, std::vector<Form11Step>& steps) {
    const std::size_t n = p.degree() + 1;
    if (n == 1) return p.coeffs()[0] == 1;
    for (const auto& [q, e] : factorize(n)) {
        for (int sign : {1, -1}) {
            auto inner = peel(p, q, sign);
            if (!inner) continue;
            steps.push_back({q, sign});
            if (decompose(*inner, steps)) return true;
            steps.pop_back();
        }
    }
    return false;
}

}  // namespace

std::optional<Form11Decomposition> check_form11(const IntPoly& p) {
    if (!p.is_littlewood()) throw BadInput("check_form11: coefficients must be +-1");
    for (int outer : {1, -1}) {
        Form11Decomposition dec{outer, {}};
        if (decompose(outer > 0 ? p : -p, dec.steps)) return dec;
    }
    return std::nullopt;
}

IntPoly expand_form11(const Form11Decomposition& dec) {
    IntPoly r{dec.outer_sign};
    std::uint64_t stride = 1;
    for (const auto& s : dec.steps) {
        const IntPoly& phi = cyclotomic_poly(s.prime);
        r = r * compose_power(s.sign > 0 ? phi : reflect(phi), static_cast<unsigned>(stride));
        stride *= s.prime;
    }
    return r;
}

std::string format_form11(const Form11Decomposition& dec) {
    std::ostringstream os;
    os << (dec.outer_sign > 0 ? '+' : '-');
    std::uint64_t stride = 1;
    for (std::size_t j = 0; j < dec.steps.size(); ++j) {
        const auto& s = dec.steps[j];
        os << (j ? "·" : "") << "Φ" << s.prime << '(' << (s.sign > 0 ? "" : "-") << 'x';
        if (stride > 1) os << '^' << stride;
        os << ')';
        stride *= s.prime;
    }
    if (dec.steps.empty()) os << '1';
    return os.str();
}

std::string to_string(KnownCase c) {
    switch (c) {
        case KnownCase::square_free: return "square_free";
        case KnownCase::odd_n: return "odd_N";
        case KnownCase::power_of_two: return "power_of_two";
        case KnownCase::two_p_power: return "two_p_power";
        case KnownCase::two_m_e4: return "two_M_e4";
    }
    return "?";
}

std::set<KnownCase> classify_known_case(std::uint64_t n, const ExponentMap* ev) {
    std::set<KnownCase> out;
    if (n == 0) return out;
    const auto [t, m] = split_two_adic(n);
    if (t == 0) out.insert(KnownCase::odd_n);
    if (m == 1 && t >= 1) out.insert(KnownCase::power_of_two);
    if (t == 1) {
        const auto pf = factorize(m);
        if (pf.size() == 1) out.insert(KnownCase::two_p_power);
    }
    if (ev) {
        bool square_free = true;
        for (const auto& [d, e] : ev->factors)
            if (e > 1) square_free = false;
        if (square_free) out.insert(KnownCase::square_free);
        if (t == 1) {
            bool no_e4 = true;
            for (std::uint64_t d : divisors(m))
                if (ev->exponent(4 * d) != 0) no_e4 = false;
            if (no_e4) out.insert(KnownCase::two_m_e4);
        }
    }
    return out;
}

std::string to_string(Method m) { return m == Method::naive ? "naive" : "structured"; }

Method parse_method(std::string_view s) {
    if (s == "naive") return Method::naive;
    if (s == "structured") return Method::structured;
    throw BadInput("unknown enumeration method '" + std::string(s) + "'");
}

}  // namespace llab
