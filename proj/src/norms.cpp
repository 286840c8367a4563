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

#include "llab/norms.hpp"

#include <cmath>

#include "llab/conjecture.hpp"
#include "llab/cyclotomic.hpp"
#include "llab/errors.hpp"
#include "llab/numtheory.hpp"

namespace llab {

BigInt l4_fourth_power(const IntPoly& p) {
    const auto c = autocorrelation(p);
    BigInt total = 0;
    for (std::size_t k = 0; k < c.size(); ++k) total += (k == 0 ? 1 : 2) * c[k] * c[k];
    return total;
}

double NormRecord::ratio() const {
    return ratio_num.convert_to<double>() / ratio_den.convert_to<double>();
}

NormRecord norm_record(const IntPoly& p) {
    NormRecord r;
    r.n_value = p.size();
    r.l4_fourth = l4_fourth_power(p);
    r.ratio_num = r.l4_fourth;
    r.ratio_den = BigInt(r.n_value) * r.n_value;
    return r;
}

ExtremalValue theorem13_value(unsigned r) {
    const double s17 = std::sqrt(17.0);
    const double a = 5.0 * s17 / 34.0;
    ExtremalValue v;
    v.closed_form = (0.5 + a) * std::pow(1.0 + s17, r) - (-0.5 + a) * std::pow(1.0 - s17, r);

    BigInt prev = 1, cur = 6;
    if (r == 0) {
        v.exact = prev;
        return v;
    }
    for (unsigned j = 2; j <= r; ++j) {
        BigInt next = 2 * cur + 16 * prev;
        prev = cur;
        cur = next;
    }
    v.exact = cur;
    return v;
}

IntPoly extremal_product(unsigned r) {
    IntPoly p{1};
    const IntPoly base = reflect(cyclotomic_poly(2));
    for (unsigned j = 0; j < r; ++j) p = p * compose_power(base, 1u << j);
    return p;
}

double BoundReport::bound() const { return u_r.convert_to<double>() / bound_den.convert_to<double>(); }

BoundReport verify_bound(std::uint64_t n, const std::vector<IntPoly>& lc) {
    BoundReport rep;
    rep.n_value = n;
    rep.r = big_omega(n);
    rep.u_r = theorem13_value(rep.r).exact;
    rep.bound_den = BigInt(1) << (2 * rep.r);
    for (const IntPoly& p : lc) {
        if (!check_form11(p)) {
            ++rep.skipped;
            continue;
        }
        BoundEntry e{to_sign_string(p), norm_record(p)};
        // l4 / N^2 >= u_r / 4^r
        if (e.norm.ratio_num * rep.bound_den < rep.u_r * e.norm.ratio_den) rep.passed = false;
        rep.entries.push_back(std::move(e));
        const std::size_t idx = rep.entries.size() - 1;
        if (!rep.minimizer || rep.entries[idx].norm.l4_fourth < rep.entries[*rep.minimizer].norm.l4_fourth)
            rep.minimizer = idx;
    }
    return rep;
}

}  // namespace llab
