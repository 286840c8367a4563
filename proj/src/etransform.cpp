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

#include "llab/etransform.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "llab/errors.hpp"
#include "llab/numtheory.hpp"
#include "llab/ramanujan.hpp"

namespace llab {

std::uint64_t weighted_sum(const std::vector<unsigned>& weights) {
    if (weights.empty()) return 0;
    std::uint64_t s = weights[0];
    for (std::size_t n = 1; n < weights.size(); ++n) s += (std::uint64_t{1} << (n - 1)) * weights[n];
    return s;
}

bool is_valid_chain(const Chain& c) {
    if (c.weights.size() < 2 || c.base % 2 == 0) return false;
    const std::uint64_t target = (std::uint64_t{1} << c.t()) - (c.is_unit() ? 1 : 0);
    if (weighted_sum(c.weights) != target) return false;
    return !c.is_unit() || c.weights.back() == 0;
}

std::vector<Chain> chains_of(const ExponentMap& ev) {
    const auto [t, m] = split_two_adic(ev.n_value);
    std::vector<Chain> out;
    for (std::uint64_t d : divisors(m)) {
        Chain c{d, std::vector<unsigned>(t + 2)};
        for (unsigned n = 0; n <= t + 1; ++n) c.weights[n] = ev.exponent(d << n);
        out.push_back(std::move(c));
    }
    return out;
}

Chain normal_chain(std::uint64_t base, unsigned t) {
    Chain c{base, std::vector<unsigned>(t + 2, 1)};
    c.weights.back() = 0;
    if (c.is_unit()) c.weights.front() = 0;
    return c;
}

std::optional<std::vector<unsigned>> apply_move(const std::vector<unsigned>& weights, unsigned t, int sign) {
    if (t + 1 >= weights.size() || (sign != 1 && sign != -1)) return std::nullopt;
    std::vector<unsigned> w = weights;
    auto bump = [](unsigned& x, int delta) {
        if (delta < 0 && x == 0) return false;
        x = static_cast<unsigned>(static_cast<int>(x) + delta);
        return true;
    };
    for (unsigned n = 0; n <= t; ++n)
        if (!bump(w[n], sign)) return std::nullopt;
    if (!bump(w[t + 1], -sign)) return std::nullopt;
    return w;
}

std::optional<ExponentMap> apply_move(const ExponentMap& ev, const EMove& m) {
    const auto [t, odd] = split_two_adic(ev.n_value);
    if (m.t > t || m.d % 2 == 0 || odd % m.d != 0) return std::nullopt;
    std::vector<unsigned> w(m.t + 2);
    for (unsigned n = 0; n <= m.t + 1; ++n) w[n] = ev.exponent(m.d << n);
    auto moved = apply_move(w, m.t, m.sign);
    if (!moved) return std::nullopt;
    ExponentMap out = ev;
    for (unsigned n = 0; n <= m.t + 1; ++n) out.set_exponent(m.d << n, (*moved)[n]);
    return out;
}

std::optional<ExponentMap> apply_path(const ExponentMap& ev, const EPath& path) {
    ExponentMap cur = ev;
    for (const EMove& m : path.moves) {
        auto next = apply_move(cur, m);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

namespace {

// Breaks the highest nonzero entry above w_0 until every unit of weight sits
// in w_0. Each break lowers w_1 + 2 w_2 + 4 w_3 + ... by exactly one.
std::vector<EMove> break_down(std::vector<unsigned> w, std::uint64_t base) {
    std::vector<EMove> moves;
    for (std::size_t h = w.size() - 1; h >= 1;) {
        if (w[h] == 0) {
            --h;
            continue;
        }
        const unsigned tp = static_cast<unsigned>(h - 1);
        w = *apply_move(w, tp, 1);
        moves.push_back({tp, base, 1});
        h = w.size() - 1;
    }
    return moves;
}

}  // namespace

EPath normalize_chain(const Chain& c) {
    if (!is_valid_chain(c)) throw BadInput("normalize_chain: invalid chain");
    const unsigned t = c.t();
    const std::size_t len = c.weights.size();
    const bool unit = c.is_unit();
    std::vector<unsigned> w = c.weights;
    EPath path;

    auto step = [&](unsigned tp, int sign) {
        auto next = apply_move(w, tp, sign);
        if (!next) throw std::logic_error("normalize_chain: algorithm produced an invalid move");
        w = std::move(*next);
        path.moves.push_back({tp, c.base, sign});
    };

    // Step 1. For t >= 1, w_0 - w_1 has the parity of the target sum, so
    // t' = 0 moves (which change the difference by 2) reach 0 or -1 exactly.
    // For t == 0 every achievable chain is already square-free.
    if (t >= 1) {
        const long goal = unit ? -1 : 0;
        while (static_cast<long>(w[0]) - static_cast<long>(w[1]) != goal)
            step(0, static_cast<long>(w[0]) - static_cast<long>(w[1]) > goal ? -1 : 1);
    }

    // Steps 2 and 3. The rule can revisit a state, e.g. (0,0,4,2,0,0): a
    // t' = 2 push down from R = 3 is undone by the t' = 2 pull up that follows.
    // On a revisit the cycle is cut off; the chain is then broken down to
    // (2^t,0,...,0) and rebuilt along the reversed break down of the target.
    const std::uint64_t guard = std::uint64_t{1} << (2 * (t + 2));
    std::map<std::vector<unsigned>, std::size_t> seen{{w, path.moves.size()}};
    for (std::uint64_t iter = 0;; ++iter) {
        if (iter > guard) throw NonTermination("normalize_chain: exceeded iteration guard");
        long r = -1, big = -1;
        for (std::size_t n = 0; n < len; ++n)
            if (w[n] == 0) {
                r = static_cast<long>(n);
                break;
            }
        for (std::size_t n = len; n-- > 0;)
            if (w[n] >= 2) {
                big = static_cast<long>(n);
                break;
            }
        if (big == -1) break;
        if (r < big)
            step(static_cast<unsigned>(big - 1), 1);
        else
            step(static_cast<unsigned>(big), -1);
        auto [it, fresh] = seen.emplace(w, path.moves.size());
        if (!fresh) {
            path.moves.resize(it->second);
            for (const EMove& m : break_down(w, c.base)) step(m.t, m.sign);
            const EPath rebuild = reverse_path(EPath{break_down(normal_chain(c.base, t).weights, c.base)});
            for (const EMove& m : rebuild.moves) step(m.t, m.sign);
            return path;
        }
    }

    // Step 4.
    const Chain target = normal_chain(c.base, t);
    if (w == target.weights) return path;
    if (!unit) {
        std::vector<unsigned> lone(len, 0);
        lone.back() = 1;
        if (w == lone) {
            step(t, 1);
            return path;
        }
    } else {
        std::vector<unsigned> swapped = target.weights;
        swapped[0] = 1;
        swapped[1] = 0;
        if (w == swapped) {
            step(0, -1);
            return path;
        }
    }
    throw std::logic_error("normalize_chain: unexpected square-free residue");
}

EPath path_to_uniform(const ExponentMap& ev) {
    EPath path;
    for (const Chain& c : chains_of(ev)) {
        EPath part = normalize_chain(c);
        path.moves.insert(path.moves.end(), part.moves.begin(), part.moves.end());
    }
    return path;
}

EPath reverse_path(const EPath& p) {
    EPath r;
    r.moves.reserve(p.moves.size());
    for (auto it = p.moves.rbegin(); it != p.moves.rend(); ++it) r.moves.push_back({it->t, it->d, -it->sign});
    return r;
}

std::int64_t predicted_power_sum(const EPath& path, std::uint64_t k) {
    std::int64_t s = -1;
    for (const EMove& m : path.moves) {
        const std::int64_t level = t_sum(m.t, k);
        if (level != 0) s += m.sign * level * ramanujan_sum(m.d, k);
    }
    return s;
}

std::set<unsigned> path_t_set(const EPath& path) {
    std::set<unsigned> out;
    for (const EMove& m : path.moves) out.insert(m.t);
    return out;
}

std::string format_weights(const Chain& c) {
    std::ostringstream os;
    const std::size_t shown = c.is_unit() ? c.weights.size() - 1 : c.weights.size();
    os << '(';
    for (std::size_t n = 0; n < shown; ++n) os << (n ? "," : "") << c.weights[n];
    os << ')';
    return os.str();
}

}  // namespace llab
