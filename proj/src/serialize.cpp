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

#include "llab/output.hpp"

#include <algorithm>
#include <sstream>

#include "llab/errors.hpp"
#include "llab/numtheory.hpp"

namespace llab {

Json to_json(const ExponentMap& ev) {
    Json factors = Json::object();
    for (const auto& [d, e] : ev.factors) factors[std::to_string(d)] = e;
    return Json{{"sign", ev.outer_sign}, {"factors", std::move(factors)}};
}

ExponentMap exponent_map_from_json(const Json& j) {
    try {
        std::string list;
        for (const auto& [key, val] : j.at("factors").items())
            list += (list.empty() ? "" : ",") + key + ":" + std::to_string(val.get<unsigned>());
        return parse_factor_list(list, j.at("sign").get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(std::string("exponent map json: ") + e.what());
    }
}

Json to_json(const PowerSumProfile& p) {
    Json j{{"N", p.n_value}, {"S", p.sums}, {"defects", p.defect_set}};
    j["i"] = p.first_defect ? Json(*p.first_defect) : Json(nullptr);
    return j;
}

Json to_json(const EPath& path) {
    Json arr = Json::array();
    for (const EMove& m : path.moves) arr.push_back(Json{{"t", m.t}, {"d", m.d}, {"sign", m.sign}});
    return arr;
}

Json to_json(const Form11Decomposition& dec) {
    Json steps = Json::array();
    for (const auto& s : dec.steps) steps.push_back(Json{{"p", s.prime}, {"sign", s.sign}});
    return Json{{"sign", dec.outer_sign}, {"steps", std::move(steps)}};
}

Json to_json(const PolyRecord& rec) {
    Json j;
    j["signs"] = rec.signs;
    j["i"] = rec.defect_index() ? Json(*rec.defect_index()) : Json(nullptr);
    j["factors"] = to_json(rec.factors);
    j["power_sums"] = to_json(rec.profile);
    j["K"] = rec.least_defects;
    j["T_eff"] = rec.t_eff;
    j["T_path"] = rec.t_path;
    j["path"] = to_json(rec.path);
    j["form11"] = rec.form11 ? to_json(*rec.form11) : Json(nullptr);
    return j;
}

Json to_json(const VerificationReport& rep) {
    Json j;
    j["N"] = rep.n_value;
    j["check"] = to_string(rep.check);
    j["method"] = to_string(rep.method);
    j["passed"] = rep.passed;
    j["first_failure"] = rep.first_failure ? Json(*rep.first_failure) : Json(nullptr);
    if (rep.check == Check::c12) {
        j["reverse_samples"] = rep.reverse_samples;
        j["reverse_misses"] = rep.reverse_misses;
    }
    if (rep.check == Check::c43) j["path_sensitive"] = rep.path_sensitive;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je = to_json(e.record);
        je["form11_ok"] = e.form11_ok;
        je["biconditional_ok"] = e.biconditional_ok;
        if (rep.check == Check::c43) {
            je["witness_status"] = to_string(e.witness_status);
            Json ws = Json::array();
            for (const auto& w : e.witnesses) ws.push_back(Json{{"partner", w.partner}, {"t", w.t_level}});
            je["witnesses"] = std::move(ws);
        }
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json to_json(const BoundReport& rep) {
    Json j;
    j["N"] = rep.n_value;
    j["check"] = "bound";
    j["passed"] = rep.passed;
    j["r"] = rep.r;
    j["u_r"] = rep.u_r.str();
    j["bound"] = rep.u_r.str() + "/" + rep.bound_den.str();
    j["skipped"] = rep.skipped;
    j["minimizer"] = rep.minimizer ? Json(rep.entries[*rep.minimizer].signs) : Json(nullptr);
    Json entries = Json::array();
    for (const auto& e : rep.entries)
        entries.push_back(Json{{"signs", e.signs},
                               {"l4_fourth", e.norm.l4_fourth.str()},
                               {"ratio", e.norm.ratio_num.str() + "/" + e.norm.ratio_den.str()}});
    j["entries"] = std::move(entries);
    return j;
}

Json enumeration_to_json(std::uint64_t n, Method method, const std::vector<IntPoly>& polys) {
    Json list = Json::array();
    for (const IntPoly& p : polys) list.push_back(to_sign_string(p));
    return Json{{"N", n}, {"method", to_string(method)}, {"polynomials", std::move(list)}};
}

std::vector<IntPoly> enumeration_from_json(const Json& j, std::uint64_t n, Method method) {
    try {
        if (j.at("N").get<std::uint64_t>() != n || j.at("method").get<std::string>() != to_string(method))
            throw BadInput("enumeration cache describes a different run");
        std::vector<IntPoly> out;
        for (const auto& s : j.at("polynomials")) {
            IntPoly p = parse_sign_string(s.get<std::string>());
            if (p.size() != n) throw BadInput("enumeration cache: wrong length");
            out.push_back(std::move(p));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(std::string("enumeration cache: ") + e.what());
    }
}

namespace {

std::string join_set(const auto& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : ";") + std::to_string(x);
    return out;
}

// Display width in code points; every glyph used here is single-width.
std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) {
    return s + std::string(width > display_width(s) ? width - display_width(s) : 0, ' ');
}

std::string chain_header(const Chain& c) {
    std::ostringstream os;
    const std::size_t shown = c.is_unit() ? c.weights.size() - 1 : c.weights.size();
    os << '(';
    for (std::size_t k = 0; k < shown; ++k) os << (k ? "," : "") << "e(" << (c.base << k) << ')';
    os << ')';
    return os.str();
}

}  // namespace

std::string csv_row(const PolyRecord& rec, const std::string& witness) {
    std::ostringstream os;
    os << rec.signs << ',' << (rec.defect_index() ? std::to_string(*rec.defect_index()) : "") << ','
       << format_factorization(rec.factors) << ',' << join_set(rec.least_defects) << ',' << join_set(rec.t_eff)
       << ',' << (rec.form11 ? format_form11(*rec.form11) : "none") << ',' << witness;
    return os.str();
}

std::string csv_row(const ReportEntry& entry) {
    std::string witness = to_string(entry.witness_status);
    for (const auto& w : entry.witnesses) witness += ";" + w.partner + "@" + std::to_string(w.t_level);
    return csv_row(entry.record, witness);
}

std::string render_table(std::uint64_t n, const std::vector<PolyRecord>& records) {
    const auto uniform_chains = chains_of(uniform_map(n));
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"signs", "i"};
    for (const Chain& c : uniform_chains) header.push_back(chain_header(c));
    header.push_back("T(E)");
    header.push_back("factorization");
    rows.push_back(header);

    for (const PolyRecord& rec : records) {
        std::vector<std::string> row{rec.signs, rec.defect_index() ? std::to_string(*rec.defect_index()) : "-"};
        const auto chains = chains_of(rec.factors);
        for (std::size_t c = 0; c < chains.size(); ++c)
            row.push_back(chains[c] == uniform_chains[c]
                              ? ""
                              : format_weights(uniform_chains[c]) + "→" + format_weights(chains[c]));
        row.push_back(format_set(rec.t_eff));
        row.push_back(format_factorization(rec.factors));
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> widths(header.size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));

    const auto [t, m] = split_two_adic(n);
    std::ostringstream os;
    os << "N=" << n << " (t=" << t << ", M=" << m << "): " << records.size() << " polynomials\n";
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const bool last = c + 1 == row.size();
            line += last ? row[c] : pad(row[c], widths[c]) + " | ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

std::vector<std::string> render_chain_walks(std::uint64_t n, const EPath& path) {
    ExponentMap cur = uniform_map(n);
    const auto start = chains_of(cur);
    std::vector<std::string> walks;
    for (const Chain& c : start) walks.push_back("d=" + std::to_string(c.base) + ": " + format_weights(c));
    for (const EMove& m : path.moves) {
        auto next = apply_move(cur, m);
        if (!next) throw BadInput("render_chain_walks: path contains an invalid move");
        cur = std::move(*next);
        const auto chains = chains_of(cur);
        for (std::size_t c = 0; c < chains.size(); ++c)
            if (chains[c].base == m.d) walks[c] += "→" + format_weights(chains[c]);
    }
    return walks;
}

}  // namespace llab
