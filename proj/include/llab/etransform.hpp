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

#ifndef LLAB_ETRANSFORM_HPP
#define LLAB_ETRANSFORM_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "llab/cyclotomic.hpp"

namespace llab {

/// Exponents (e(d), e(2d), ..., e(2^(t+1) d)) for one odd divisor d of M,
/// where N = 2^t M. The d == 1 chain is the unit chain; its weighted sum is
/// 2^t - 1 instead of 2^t.
struct Chain {
    std::uint64_t base = 1;
    std::vector<unsigned> weights;  // t + 2 entries

    bool is_unit() const noexcept { return base == 1; }
    unsigned t() const noexcept { return static_cast<unsigned>(weights.size()) - 2; }

    friend bool operator==(const Chain&, const Chain&) = default;
};

/// w_0 + sum_{n>=1} 2^(n-1) w_n.
std::uint64_t weighted_sum(const std::vector<unsigned>& weights);

/// Weighted sum equals 2^t (regular) or 2^t - 1 (unit), and for the unit
/// chain the last weight is zero.
bool is_valid_chain(const Chain& c);

/// One chain per odd divisor of M, ascending.
std::vector<Chain> chains_of(const ExponentMap& ev);

/// The chain of 1 + x + ... + x^(N-1): (1,...,1,0), or (0,1,...,1,0) for the unit chain.
Chain normal_chain(std::uint64_t base, unsigned t);

/// E(P | t', d') with the given sign: +sign on e(d'), ..., e(2^t' d') and
/// -sign on e(2^(t'+1) d').
struct EMove {
    unsigned t = 0;
    std::uint64_t d = 1;
    int sign = 1;
    friend bool operator==(const EMove&, const EMove&) = default;
};

struct EPath {
    std::vector<EMove> moves;
    friend bool operator==(const EPath&, const EPath&) = default;
};

/// Applies a move to chain weights; nullopt if some weight would go negative.
std::optional<std::vector<unsigned>> apply_move(const std::vector<unsigned>& weights, unsigned t, int sign);

/// Applies a move to a full exponent map; nullopt when the move is invalid
/// (an exponent would go negative, t' > t, or d' is not an odd divisor of M).
std::optional<ExponentMap> apply_move(const ExponentMap& ev, const EMove& m);

/// Applies each move in order; nullopt at the first invalid prefix.
std::optional<ExponentMap> apply_path(const ExponentMap& ev, const EPath& path);

/// Moves taking a valid chain to its normal form, tagged with the chain's base.
///
///  1. t' = 0 moves until w_0 == w_1 (regular) or w_0 == w_1 - 1 (unit).
///  2. r = min{n : w_n == 0}, R = max{n : w_n >= 2} (-1 when absent).
///     Stop at R == -1.
///  3. r < R: t' = R-1 with sign +. r > R: t' = R with sign -. Back to 2.
///     If a state repeats, the cycle is dropped; the chain is broken down to
///     (2^t,0,...,0) (or (2^t-1,0,...,0)) and rebuilt to the normal form.
///  4. The remaining square-free pattern (0,...,0,1), or (1,0,1,...,1,0) for
///     the unit chain, takes one final move.
///
/// Throws NonTermination past 4^(t+2) iterations and BadInput on an invalid chain.
EPath normalize_chain(const Chain& c);

/// Concatenated normalize_chain over all chains in ascending base order;
/// applied to ev it yields uniform_map(N).
EPath path_to_uniform(const ExponentMap& ev);

/// Moves in reverse order with flipped signs.
EPath reverse_path(const EPath& p);

/// -1 + sum over moves of sign * T_t'(k) * C_d'(k), for a path that starts
/// at the uniform map.
std::int64_t predicted_power_sum(const EPath& path, std::uint64_t k);

/// {t' : (t', d') in the path}.
std::set<unsigned> path_t_set(const EPath& path);

/// "(1,1,1,0)" style rendering; the unit chain drops its always-zero last entry.
std::string format_weights(const Chain& c);

}  // namespace llab

#endif
