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

#include "llab/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "llab/conjecture.hpp"
#include "llab/errors.hpp"
#include "llab/numtheory.hpp"
#include "llab/output.hpp"

namespace llab {

namespace {

struct InvalidArguments : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    RunConfig config;
    std::ostream& out;
    std::ostream& err;

    EnumerationOptions enumeration() const {
        EnumerationOptions o;
        o.workers = config.workers;
        o.naive_cap = config.naive_cap;
        o.allow_over_cap = config.allow_over_cap;
        return o;
    }
};

std::uint64_t parse_positive(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
        throw InvalidArguments(std::string("invalid ") + what + ": '" + s + "'");
    return v;
}

// "12" or "2..24".
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const auto n = parse_positive(s, "N");
        return {n, n};
    }
    const auto lo = parse_positive(s.substr(0, dots), "range start");
    const auto hi = parse_positive(s.substr(dots + 2), "range end");
    if (lo > hi) throw InvalidArguments("empty range '" + s + "'");
    return {lo, hi};
}

void require_n(std::uint64_t n) {
    if (n < 2) throw InvalidArguments("N must be at least 2");
}

std::filesystem::path cache_file(const RunConfig& cfg, std::uint64_t n, Method m) {
    return cfg.cache_dir / ("N=" + std::to_string(n) + "-" + to_string(m) + ".json");
}

void write_json_file(const std::filesystem::path& path, const Json& j, std::ostream& err) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream f(path);
    if (!f) {
        err << "warning: cannot write " << path.string() << '\n';
        return;
    }
    f << j.dump(2) << '\n';
}

std::vector<IntPoly> load_lc(const Context& ctx, std::uint64_t n, Method m) {
    if (m == Method::naive) require_within_cap(n, ctx.enumeration());
    const auto path = cache_file(ctx.config, n, m);
    if (ctx.config.use_cache && std::filesystem::exists(path)) {
        try {
            std::ifstream f(path);
            return enumeration_from_json(Json::parse(f), n, m);
        } catch (const std::exception& e) {
            ctx.err << "warning: ignoring unreadable cache " << path.string() << ": " << e.what() << '\n';
        }
    }
    auto lc = enumerate_lc(n, m, ctx.enumeration());
    if (ctx.config.use_cache) write_json_file(path, enumeration_to_json(n, m, lc), ctx.err);
    return lc;
}

std::vector<PolyRecord> analyze_all(const std::vector<IntPoly>& lc) {
    std::vector<PolyRecord> recs;
    recs.reserve(lc.size());
    for (const IntPoly& p : lc) recs.push_back(analyze(p));
    return recs;
}

std::string defect_text(const PolyRecord& r) {
    return r.defect_index() ? std::to_string(*r.defect_index()) : "-";
}

// --poly / --factors input shared by factor, check-form11 and epath.
struct PolyInput {
    std::string poly;
    std::string factors;
    int sign = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--poly", poly, "sign string, lowest exponent first (e.g. ++++----++++)");
        cmd->add_option("--factors", factors, "cyclotomic exponents d:e,... (e.g. 2:1,4:1,24:1)");
        cmd->add_option("--sign", sign, "outer sign for --factors")->check(CLI::IsMember({1, -1}));
    }

    IntPoly polynomial() const {
        if (poly.empty() == factors.empty()) throw InvalidArguments("give exactly one of --poly or --factors");
        if (!poly.empty()) return parse_sign_string(poly);
        return expand(parse_factor_list(factors, sign));
    }
};

int cmd_enumerate(const Context& ctx, std::uint64_t n, Method m) {
    require_n(n);
    const auto recs = analyze_all(load_lc(ctx, n, m));
    switch (ctx.config.output_format) {
        case OutputFormat::json: {
            Json list = Json::array();
            for (const auto& r : recs)
                list.push_back(Json{{"signs", r.signs},
                                    {"i", r.defect_index() ? Json(*r.defect_index()) : Json(nullptr)},
                                    {"factors", to_json(r.factors)}});
            ctx.out << Json{{"N", n}, {"method", to_string(m)}, {"polynomials", list}}.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            ctx.out << kCsvHeader << '\n';
            for (const auto& r : recs) ctx.out << csv_row(r) << '\n';
            break;
        case OutputFormat::text:
            ctx.out << "N=" << n << " " << to_string(m) << ": " << recs.size() << " polynomials\n";
            for (const auto& r : recs)
                ctx.out << r.signs << "  i=" << defect_text(r) << "  " << format_factorization(r.factors) << '\n';
            break;
    }
    return exit_code::ok;
}

int cmd_table(const Context& ctx, std::uint64_t n, Method m) {
    require_n(n);
    const auto recs = analyze_all(load_lc(ctx, n, m));
    switch (ctx.config.output_format) {
        case OutputFormat::json: {
            Json list = Json::array();
            for (const auto& r : recs) list.push_back(to_json(r));
            ctx.out << list.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            ctx.out << kCsvHeader << '\n';
            for (const auto& r : recs) ctx.out << csv_row(r) << '\n';
            break;
        case OutputFormat::text:
            ctx.out << render_table(n, recs);
            break;
    }
    return exit_code::ok;
}

int cmd_factor(const Context& ctx, const PolyInput& in) {
    const IntPoly p = in.polynomial();
    if (p.degree() < 1) throw InvalidArguments("polynomial must have degree >= 1");
    if (!p.has_odd_coeffs()) throw InvalidArguments("factor expects odd coefficients");
    const std::uint64_t n = p.degree() + 1;
    const auto ev = factor_cyclotomic(p, n);
    const std::string shown = p.is_littlewood() ? to_sign_string(p) : to_monomial_string(p);
    switch (ctx.config.output_format) {
        case OutputFormat::json: {
            Json j{{"N", n}, {"poly", shown}};
            j["cyclotomic"] = ev.has_value();
            j["factorization"] = ev ? to_json(*ev) : Json(nullptr);
            ctx.out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            ctx.out << "poly,N,factors\n" << shown << ',' << n << ',' << (ev ? format_factorization(*ev) : "none") << '\n';
            break;
        case OutputFormat::text:
            ctx.out << shown << "  N=" << n << "  " << (ev ? format_factorization(*ev) : "not cyclotomic") << '\n';
            break;
    }
    return exit_code::ok;
}

int cmd_check_form11(const Context& ctx, const PolyInput& in) {
    const IntPoly p = in.polynomial();
    if (!p.is_littlewood()) throw InvalidArguments("check-form11 expects a +-1 polynomial");
    const auto dec = check_form11(p);
    const std::string signs = to_sign_string(p);
    switch (ctx.config.output_format) {
        case OutputFormat::json:
            ctx.out << Json{{"signs", signs}, {"form11", dec ? to_json(*dec) : Json(nullptr)}}.dump(2) << '\n';
            break;
        case OutputFormat::csv:
            ctx.out << "signs,form11\n" << signs << ',' << (dec ? format_form11(*dec) : "none") << '\n';
            break;
        case OutputFormat::text:
            ctx.out << signs << "  " << (dec ? format_form11(*dec) : "not a nested product") << '\n';
            break;
    }
    return exit_code::ok;
}

int cmd_epath(const Context& ctx, const PolyInput& in) {
    const IntPoly p = in.polynomial();
    if (p.degree() < 1 || !p.has_odd_coeffs()) throw InvalidArguments("epath expects odd coefficients, degree >= 1");
    const std::uint64_t n = p.degree() + 1;
    const auto ev = factor_cyclotomic(p, n);
    if (!ev) throw InvalidArguments("polynomial is not cyclotomic");
    const EPath path = reverse_path(path_to_uniform(*ev));
    const auto before = chains_of(uniform_map(n));
    const auto after = chains_of(*ev);
    switch (ctx.config.output_format) {
        case OutputFormat::json: {
            Json chains = Json::array();
            for (std::size_t c = 0; c < before.size(); ++c)
                chains.push_back(Json{{"d", before[c].base}, {"before", before[c].weights}, {"after", after[c].weights}});
            ctx.out << Json{{"N", n}, {"factors", to_json(*ev)}, {"path", to_json(path)}, {"chains", chains}}.dump(2)
                    << '\n';
            break;
        }
        case OutputFormat::csv:
            ctx.out << "t,d,sign\n";
            for (const EMove& m : path.moves) ctx.out << m.t << ',' << m.d << ',' << m.sign << '\n';
            break;
        case OutputFormat::text:
            ctx.out << "N=" << n << "  " << format_factorization(*ev) << '\n';
            ctx.out << "path from the uniform polynomial: " << path.moves.size() << " moves\n";
            for (const EMove& m : path.moves)
                ctx.out << "  t'=" << m.t << " d'=" << m.d << " sign=" << (m.sign > 0 ? '+' : '-') << '\n';
            ctx.out << "chains (before→after):\n";
            for (std::size_t c = 0; c < before.size(); ++c)
                ctx.out << "  d=" << before[c].base << ": " << format_weights(before[c]) << "→"
                        << format_weights(after[c]) << '\n';
            ctx.out << "walk:\n";
            for (const auto& w : render_chain_walks(n, path)) ctx.out << "  " << w << '\n';
            ctx.out << "T_path: " << format_set(path_t_set(path)) << '\n';
            break;
    }
    return exit_code::ok;
}

int cmd_norms(const Context& ctx, unsigned r_max) {
    struct Row {
        unsigned r;
        ExtremalValue v;
        double rel;
    };
    std::vector<Row> rows;
    for (unsigned r = 0; r <= r_max; ++r) {
        const auto v = theorem13_value(r);
        const double exact = v.exact.convert_to<double>();
        rows.push_back({r, v, std::fabs(v.closed_form - exact) / exact});
    }
    auto sci = [](double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12e", x);
        return std::string(buf);
    };
    auto rel = [](double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", x);
        return std::string(buf);
    };
    switch (ctx.config.output_format) {
        case OutputFormat::json: {
            Json list = Json::array();
            for (const auto& row : rows)
                list.push_back(Json{{"r", row.r},
                                    {"u_r", row.v.exact.str()},
                                    {"closed_form", sci(row.v.closed_form)},
                                    {"rel_diff", rel(row.rel)}});
            ctx.out << list.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            ctx.out << "r,u_r,closed_form,rel_diff\n";
            for (const auto& row : rows)
                ctx.out << row.r << ',' << row.v.exact.str() << ',' << sci(row.v.closed_form) << ',' << rel(row.rel) << '\n';
            break;
        case OutputFormat::text:
            ctx.out << std::left << std::setw(4) << "r" << std::setw(22) << "u_r" << std::setw(22) << "closed form"
                    << "rel diff\n";
            for (const auto& row : rows)
                ctx.out << std::setw(4) << row.r << std::setw(22) << row.v.exact.str() << std::setw(22)
                        << sci(row.v.closed_form) << rel(row.rel) << '\n';
            break;
    }
    return exit_code::ok;
}

void print_report(const Context& ctx, const VerificationReport& rep, Json& json_out) {
    switch (ctx.config.output_format) {
        case OutputFormat::json:
            json_out.push_back(to_json(rep));
            break;
        case OutputFormat::csv:
            for (const auto& e : rep.entries) ctx.out << csv_row(e) << '\n';
            break;
        case OutputFormat::text: {
            ctx.out << "N=" << rep.n_value << " " << to_string(rep.check) << " " << (rep.passed ? "PASS" : "FAIL")
                    << "  polynomials=" << rep.entries.size();
            if (rep.check == Check::c12)
                ctx.out << "  reverse=" << rep.reverse_samples - rep.reverse_misses << "/" << rep.reverse_samples;
            if (rep.check == Check::c43) ctx.out << "  path_sensitive=" << rep.path_sensitive;
            ctx.out << '\n';
            if (rep.first_failure) ctx.out << "  first failure: " << *rep.first_failure << '\n';
            if (rep.check == Check::c43) {
                for (const auto& e : rep.entries) {
                    if (e.witness_status == WitnessStatus::not_applicable) continue;
                    ctx.out << "  " << e.record.signs << "  i=" << defect_text(e.record)
                            << "  T=" << format_set(e.record.t_eff) << "  " << to_string(e.witness_status);
                    for (const auto& w : e.witnesses) ctx.out << "  " << w.partner << "@t'=" << w.t_level;
                    ctx.out << '\n';
                }
            }
            break;
        }
    }
}

void print_bound(const Context& ctx, const BoundReport& rep, Json& json_out) {
    switch (ctx.config.output_format) {
        case OutputFormat::json:
            json_out.push_back(to_json(rep));
            break;
        case OutputFormat::csv:
            for (const auto& e : rep.entries)
                ctx.out << e.signs << ',' << e.norm.l4_fourth.str() << ',' << e.norm.ratio_num.str() << '/'
                        << e.norm.ratio_den.str() << '\n';
            break;
        case OutputFormat::text: {
            ctx.out << "N=" << rep.n_value << " bound " << (rep.passed ? "PASS" : "FAIL") << "  r=" << rep.r
                    << "  bound=" << rep.u_r.str() << "/" << rep.bound_den.str();
            if (rep.minimizer) {
                const auto& m = rep.entries[*rep.minimizer];
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.6f", m.norm.ratio());
                ctx.out << "  min=" << m.signs << " (" << m.norm.l4_fourth.str() << "/" << m.norm.ratio_den.str()
                        << " = " << buf << ")";
            }
            if (rep.skipped) ctx.out << "  skipped=" << rep.skipped;
            ctx.out << '\n';
            break;
        }
    }
}

int cmd_verify(const Context& ctx, const std::string& range, const std::string& which, Method m, unsigned samples) {
    const auto [lo, hi] = parse_range(range);
    require_n(lo);
    const bool bound = which == "bound";
    std::optional<Check> check;
    if (!bound) {
        try {
            check = parse_check(which);
        } catch (const BadInput& e) {
            throw InvalidArguments(e.what());
        }
    }
    if (m == Method::naive)
        for (std::uint64_t n = lo; n <= hi; ++n) require_within_cap(n, ctx.enumeration());

    if (ctx.config.output_format == OutputFormat::csv)
        ctx.out << (bound ? "signs,l4_fourth,ratio" : kCsvHeader) << '\n';
    Json json_out = Json::array();
    bool all_passed = true;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        const auto lc = load_lc(ctx, n, m);
        Json saved;
        if (bound) {
            const auto rep = verify_bound(n, lc);
            all_passed = all_passed && rep.passed;
            print_bound(ctx, rep, json_out);
            saved = to_json(rep);
        } else {
            VerificationReport rep;
            switch (*check) {
                case Check::c12: rep = verify_conjecture12(n, lc, m, samples); break;
                case Check::t39: rep = verify_theorem39(n, lc, m); break;
                case Check::c43: rep = verify_conjecture43(n, lc, m); break;
            }
            all_passed = all_passed && rep.passed;
            print_report(ctx, rep, json_out);
            saved = to_json(rep);
        }
        write_json_file(ctx.config.cache_dir / ("report-" + which + "-N=" + std::to_string(n) + ".json"), saved,
                        ctx.err);
    }
    if (ctx.config.output_format == OutputFormat::json) ctx.out << json_out.dump(2) << '\n';
    return all_passed ? exit_code::ok : exit_code::verification_failed;
}

unsigned default_workers(std::ostream& err, bool& bad_env) {
    unsigned w = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LLAB_WORKERS")) {
        try {
            w = static_cast<unsigned>(parse_positive(env, "LLAB_WORKERS"));
        } catch (const InvalidArguments& e) {
            err << "error: " << e.what() << '\n';
            bad_env = true;
        }
    }
    return w;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    bool bad_env = false;
    RunConfig cfg;
    cfg.workers = default_workers(err, bad_env);
    if (bad_env) return exit_code::invalid_arguments;

    CLI::App app{"Cyclotomic Littlewood polynomial toolkit"};
    app.require_subcommand(1);
    std::string out_format = "text";
    std::string cache_dir = cfg.cache_dir.string();
    app.add_option("--workers", cfg.workers, "worker threads (default: cores, or LLAB_WORKERS)")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--naive-cap", cfg.naive_cap, "largest N for naive enumeration")
        ->check(CLI::Range(2u, kNaiveCapCeiling));
    app.add_flag("--allow-over-cap", cfg.allow_over_cap, "allow naive enumeration above --naive-cap");
    app.add_option("--cache-dir", cache_dir, "enumeration cache and report directory");
    app.add_flag("--no-cache", "recompute instead of reusing cached enumerations");
    app.add_option("--out", out_format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

    std::uint64_t n = 0;
    std::string method = "naive";
    auto add_n_method = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "N (degree + 1)")->required();
        cmd->add_option("--method", method, "naive | structured")->check(CLI::IsMember({"naive", "structured"}));
    };

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list canonical cyclotomic Littlewood polynomials");
    add_n_method(enumerate_cmd);
    auto* table_cmd = app.add_subcommand("table", "E-transformation table for N");
    add_n_method(table_cmd);

    PolyInput factor_in, form11_in, epath_in;
    auto* factor_cmd = app.add_subcommand("factor", "cyclotomic factorization of a polynomial");
    factor_in.attach(factor_cmd);
    auto* form11_cmd = app.add_subcommand("check-form11", "search for a nested product decomposition");
    form11_in.attach(form11_cmd);
    auto* epath_cmd = app.add_subcommand("epath", "E-path from the uniform polynomial");
    epath_in.attach(epath_cmd);

    unsigned r_max = 20;
    auto* norms_cmd = app.add_subcommand("norms", "extremal L4 values: recurrence vs closed form");
    norms_cmd->add_option("--r-max", r_max, "largest r")->check(CLI::Range(0u, 60u));

    std::string range, which;
    unsigned samples = 200;
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive verification over N or a range a..b");
    verify_cmd->add_option("--n", range, "N or a..b")->required();
    verify_cmd->add_option("--which", which, "c12 | c43 | t39 | bound")
        ->required()
        ->check(CLI::IsMember({"c12", "c43", "t39", "bound"}));
    verify_cmd->add_option("--method", method, "naive | structured")->check(CLI::IsMember({"naive", "structured"}));
    verify_cmd->add_option("--samples", samples, "random nested product expansions per N (c12)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> argv_store{"llab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_arguments;
    }

    cfg.cache_dir = cache_dir;
    cfg.use_cache = app.count("--no-cache") == 0;
    cfg.output_format = out_format == "json" ? OutputFormat::json
                        : out_format == "csv" ? OutputFormat::csv
                                              : OutputFormat::text;
    Context ctx{cfg, out, err};

    try {
        const Method m = parse_method(method);
        if (enumerate_cmd->parsed()) return cmd_enumerate(ctx, n, m);
        if (table_cmd->parsed()) return cmd_table(ctx, n, m);
        if (factor_cmd->parsed()) return cmd_factor(ctx, factor_in);
        if (form11_cmd->parsed()) return cmd_check_form11(ctx, form11_in);
        if (epath_cmd->parsed()) return cmd_epath(ctx, epath_in);
        if (norms_cmd->parsed()) return cmd_norms(ctx, r_max);
        if (verify_cmd->parsed()) return cmd_verify(ctx, range, which, m, samples);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << " (use --allow-over-cap or --method structured)\n";
        return exit_code::cap_exceeded;
    } catch (const InvalidArguments& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_arguments;
    } catch (const BadInput& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_arguments;
    }
    return exit_code::invalid_arguments;
}

}  // namespace llab
