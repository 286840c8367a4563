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

#ifndef LLAB_CONJECTURE_HPP
#define LLAB_CONJECTURE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "llab/cyclotomic.hpp"
#include "llab/intpoly.hpp"

namespace llab {

enum class Symmetry { identity, reflect, negate, negate_reflect };

std::string to_string(Symmetry s);

struct CanonicalForm {
    IntPoly poly;
    Symmetry applied = Symmetry::identity;
};

/// The unique member of {P(x), P(-x), -P(x), -P(-x)} with a_0 = a_1 = +1,
/// i.e. 1 + x + ... + x^(N-1) itself or a member of LC(N,i) for some i >= 2.
/// Throws BadInput unless p is Littlewood of degree >= 1.
CanonicalForm canonical_form(const IntPoly& p);

/// One factor Phi_p(sign * x^(p_1 ... p_{j-1})).
struct Form11Step {
    std::uint64_t prime = 2;
    int sign = 1;
    friend bool operator==(const Form11Step&, const Form11Step&) = default;
};

/// outer_sign * Phi_{p_1}(e_1 x) Phi_{p_2}(e_2 x^{p_1}) ...
struct Form11Decomposition {
    int outer_sign = 1;
    std::vector<Form11Step> steps;
    friend bool operator==(const Form11Decomposition&, const Form11Decomposition&) = default;
};

/// Searches for a nested product decomposition: outer sign +1 before -1, then
/// primes q | N ascending, then inner sign +1 before -1, peeling
/// Phi_q(e x) * Q(x^q) and recursing on Q. First success wins. nullopt
/// when none exists. Throws BadInput unless p is Littlewood.
std::optional<Form11Decomposition> check_form11(const IntPoly& p);

IntPoly expand_form11(const Form11Decomposition& dec);

/// "+Φ2(x)·Φ2(x^2)·Φ3(-x^4)" style rendering.
std::string format_form11(const Form11Decomposition& dec);

/// Cases in which the conjecture is known to hold.
enum class KnownCase { square_free, odd_n, power_of_two, two_p_power, two_m_e4 };

std::string to_string(KnownCase c);

/// Labels that apply to N (and, for square_free / two_m_e4, to ev).
std::set<KnownCase> classify_known_case(std::uint64_t n, const ExponentMap* ev);

enum class Method { naive, structured };

std::string to_string(Method m);
/// Throws BadInput on anything but "naive" / "structured".
Method parse_method(std::string_view s);

inline constexpr unsigned kNaiveCapDefault = 26;
inline constexpr unsigned kNaiveCapCeiling = 34;

struct EnumerationOptions {
    unsigned workers = 1;
    unsigned naive_cap = kNaiveCapDefault;
    bool allow_over_cap = false;
    /// Reject sign vectors that are neither palindromic nor antipalindromic
    /// before trial division. Every cyclotomic polynomial is one or the
    /// other, so this never changes the result.
    bool reciprocity_screen = true;
};

/// Throws CapExceeded when a naive scan of N is not allowed by the options.
void require_within_cap(std::uint64_t n, const EnumerationOptions& options);

/// Canonical cyclotomic Littlewood polynomials of degree N-1, sorted by sign
/// string ('+' before '-').
///
/// naive: every sign vector with a_0 = +1 (2^(N-1) of them, visited in Gray
/// code order and split into disjoint index ranges across workers) is run
/// through factor_cyclotomic.
///
/// structured: every exponent map satisfying the chain sums is expanded and
/// kept when all coefficients are +-1.
///
/// Throws CapExceeded when naive is asked for N above the cap (or above the
/// hard ceiling even with allow_over_cap), BadInput when N < 2.
std::vector<IntPoly> enumerate_lc(std::uint64_t n, Method method, const EnumerationOptions& options = {});

/// All weight vectors of length t + 2 with the chain sum of a regular
/// (unit == false) or unit chain, in lexicographic order.
std::vector<std::vector<unsigned>> chain_solutions(unsigned t, bool unit);

}  // namespace llab

#endif
