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

#include "llab/intpoly.hpp"

#include <sstream>
#include <utility>

#include "llab/errors.hpp"

namespace llab {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t k) {
    if (c == 0) return {};
    std::vector<BigInt> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPoly::degree() const {
    if (coeffs_.empty()) throw BadInput("degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

BigInt IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

bool IntPoly::is_littlewood() const {
    if (coeffs_.empty()) return false;
    for (const auto& c : coeffs_)
        if (c != 1 && c != -1) return false;
    return true;
}

bool IntPoly::has_odd_coeffs() const {
    if (coeffs_.empty()) return false;
    for (const auto& c : coeffs_)
        if (!bit_test(c, 0)) return false;
    return true;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
    std::vector<BigInt> v(std::max(p.size(), q.size()));
    for (std::size_t k = 0; k < p.size(); ++k) v[k] += p.coeffs_[k];
    for (std::size_t k = 0; k < q.size(); ++k) v[k] += q.coeffs_[k];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) { return p + (-q); }

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<BigInt> v(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }

std::optional<IntPoly> exact_div(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw DivideByZero();
    if (p.is_zero()) return IntPoly{};
    const std::size_t dq = q.degree();
    if (p.degree() < dq) return std::nullopt;

    std::vector<BigInt> rem = p.coeffs();
    const BigInt& lead = q.coeffs().back();
    std::vector<BigInt> quot(p.degree() - dq + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& top = rem[k + dq];
        if (top == 0) continue;
        BigInt c, r;
        divide_qr(top, lead, c, r);
        if (r != 0) return std::nullopt;
        quot[k] = c;
        for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= c * q.coeffs()[j];
    }
    for (std::size_t k = 0; k < dq; ++k)
        if (rem[k] != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

IntPoly compose_power(const IntPoly& p, unsigned m) {
    if (m == 0) throw BadInput("compose_power: exponent must be positive");
    if (p.is_zero() || m == 1) return p;
    std::vector<BigInt> v(p.degree() * m + 1);
    for (std::size_t k = 0; k < p.size(); ++k) v[k * m] = p.coeffs()[k];
    return IntPoly(std::move(v));
}

IntPoly reflect(const IntPoly& p) {
    std::vector<BigInt> v = p.coeffs();
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return IntPoly(std::move(v));
}

IntPoly negate(const IntPoly& p) { return -p; }

std::vector<BigInt> autocorrelation(const IntPoly& p) {
    const auto& a = p.coeffs();
    std::vector<BigInt> c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t j = 0; j + k < a.size(); ++j) c[k] += a[j] * a[j + k];
    return c;
}

std::string to_sign_string(const IntPoly& p) {
    if (!p.is_littlewood()) throw BadInput("sign string requires a +-1 coefficient polynomial");
    std::string s;
    s.reserve(p.size());
    for (const auto& c : p.coeffs()) s.push_back(c == 1 ? '+' : '-');
    return s;
}

IntPoly parse_sign_string(std::string_view signs) {
    if (signs.empty()) throw BadInput("empty sign string");
    std::vector<BigInt> v;
    v.reserve(signs.size());
    for (char ch : signs) {
        if (ch == '+')
            v.emplace_back(1);
        else if (ch == '-')
            v.emplace_back(-1);
        else
            throw BadInput(std::string("bad character in sign string: '") + ch + "'");
    }
    return IntPoly(std::move(v));
}

std::string to_monomial_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const BigInt& c = p.coeffs()[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (mag != 1 || k == 0) os << mag;
        if (k >= 1) os << 'x';
        if (k >= 2) os << '^' << k;
        first = false;
    }
    return os.str();
}

}  // namespace llab
