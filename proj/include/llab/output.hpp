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

#ifndef LLAB_OUTPUT_HPP
#define LLAB_OUTPUT_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "llab/conjecture.hpp"
#include "llab/cyclotomic.hpp"
#include "llab/etransform.hpp"
#include "llab/norms.hpp"
#include "llab/powersums.hpp"
#include "llab/verify.hpp"

namespace llab {

using Json = nlohmann::ordered_json;

/// {"sign": +-1, "factors": {"d": e, ...}}, keys in ascending numeric order.
Json to_json(const ExponentMap& ev);
/// Inverse of to_json(ExponentMap); N is inferred from the degree.
ExponentMap exponent_map_from_json(const Json& j);

/// {"N": n, "S": [...], "defects": [...], "i": k | null}
Json to_json(const PowerSumProfile& p);

/// [{"t": t', "d": d', "sign": +-1}, ...]
Json to_json(const EPath& path);

/// {"sign": +-1, "steps": [{"p": p, "sign": +-1}, ...]}
Json to_json(const Form11Decomposition& dec);

Json to_json(const PolyRecord& rec);
Json to_json(const VerificationReport& rep);
Json to_json(const BoundReport& rep);

/// Cache payload {"N": n, "method": m, "polynomials": [sign strings]}.
Json enumeration_to_json(std::uint64_t n, Method method, const std::vector<IntPoly>& polys);
/// Throws BadInput when the payload does not describe (n, method).
std::vector<IntPoly> enumeration_from_json(const Json& j, std::uint64_t n, Method method);

/// "∅" or "1,2".
template <class T>
std::string format_set(const std::set<T>& s) {
    if (s.empty()) return "∅";
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

inline constexpr const char* kCsvHeader = "signs,i,factors,K,T_eff,form11,witness";
std::string csv_row(const PolyRecord& rec, const std::string& witness = "");
std::string csv_row(const ReportEntry& entry);

/// The E-transformation table: one row per polynomial with its defect
/// index, each chain's start and end weights (blank when unchanged), the
/// effective T set and the factorization.
std::string render_table(std::uint64_t n, const std::vector<PolyRecord>& records);

/// Per-chain arrows along an E-path from the uniform map, including every
/// intermediate state, e.g. "d=3: (1,1,1,0)→(2,2,0,0)→(3,1,0,0)".
std::vector<std::string> render_chain_walks(std::uint64_t n, const EPath& path);

}  // namespace llab

#endif
