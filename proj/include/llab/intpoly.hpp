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

#ifndef LLAB_INTPOLY_HPP
#define LLAB_INTPOLY_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace llab {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial with exact integer coefficients, lowest exponent first.
///
/// The highest stored coefficient is always nonzero; the zero polynomial is
/// the empty sequence and has no degree.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    /// c * x^k
    static IntPoly monomial(const BigInt& c, std::size_t k);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Throws BadInput on the zero polynomial.
    std::size_t degree() const;
    std::size_t size() const noexcept { return coeffs_.size(); }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^k; zero beyond the degree.
    BigInt coeff(std::size_t k) const;

    /// All coefficients are +1 or -1 (and the polynomial is nonzero).
    bool is_littlewood() const;
    /// All coefficients are odd integers.
    bool has_odd_coeffs() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
    friend bool operator==(const IntPoly& p, const IntPoly& q) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

IntPoly mul(const IntPoly& p, const IntPoly& q);

/// Returns r with q*r == p, or nullopt when q does not divide p over Z.
/// Throws DivideByZero when q is zero.
std::optional<IntPoly> exact_div(const IntPoly& p, const IntPoly& q);

/// p(x^m), m >= 1.
IntPoly compose_power(const IntPoly& p, unsigned m);

/// p(-x).
IntPoly reflect(const IntPoly& p);

/// -p(x).
IntPoly negate(const IntPoly& p);

/// (c_0, ..., c_deg) with c_k = sum_j a_j a_{j+k}. Empty for the zero polynomial.
std::vector<BigInt> autocorrelation(const IntPoly& p);

/// "+" for +1 and "-" for -1, lowest exponent first. Throws BadInput unless
/// the polynomial is Littlewood.
std::string to_sign_string(const IntPoly& p);

/// Inverse of to_sign_string. Throws BadInput on an empty string or any
/// character other than '+' / '-'.
IntPoly parse_sign_string(std::string_view signs);

/// "1+x-x^2+3x^5"; "0" for the zero polynomial.
std::string to_monomial_string(const IntPoly& p);

}  // namespace llab

#endif
