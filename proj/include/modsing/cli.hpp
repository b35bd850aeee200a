#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modsing/classify.hpp"
#include "modsing/cyclic_rep.hpp"
#include "modsing/determinantal.hpp"
#include "modsing/ff_oracle.hpp"
#include "modsing/picard.hpp"
#include "modsing/report_io.hpp"

namespace modsing::cli {

enum class Format { text, json, csv };

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

using json = nlohmann::ordered_json;

inline void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

// --- discrepancy -----------------------------------------------------------

inline void discrepancy(std::ostream& os, Format fmt, const determinantal::DetPairSpec& p) {
    const auto discs = determinantal::log_discrepancies(p);
    const auto cls = determinantal::classify_pair(p);
    const std::string tag(determinantal::to_string(cls.tag));
    const std::string mld = cls.mld ? cls.mld->str() : "undefined";

    switch (fmt) {
        case Format::text:
            os << "pair: g=" << p.g << " f=" << p.f << " q=" << p.q << " k=" << p.k << " base_r=" << p.base_r << '\n';
            os << "i\ta(E_i)\n";
            for (const auto& d : discs) os << d.i << '\t' << d.value << '\n';
            os << "class: " << tag << '\n' << "mld: " << mld << '\n';
            break;
        case Format::json: {
            json j{{"g", p.g}, {"f", p.f}, {"q", p.q}, {"k", p.k}, {"base_r", p.base_r}};
            j["log_discrepancies"] = json::array();
            for (const auto& d : discs) j["log_discrepancies"].push_back({{"i", d.i}, {"a", d.value.str()}});
            j["class"] = tag;
            j["mld"] = mld;
            emit_json(os, j);
            break;
        }
        case Format::csv:
            os << "g,f,q,k,base_r,i,a,class,mld\n";
            for (const auto& d : discs)
                os << p.g << ',' << p.f << ',' << p.q << ',' << p.k << ',' << p.base_r << ',' << d.i << ','
                   << d.value << ',' << tag << ',' << mld << '\n';
            break;
    }
}

// --- rsbt ------------------------------------------------------------------

inline std::string rsbt_verdict(std::int64_t r, const Rational& alpha) {
    if (r == 1) return "trivial stabilizer";
    if (alpha > Rational(1)) return "terminal";
    if (alpha == Rational(1)) return "canonical boundary";
    return "below 1 (not canonical)";
}

inline void rsbt(std::ostream& os, Format fmt, std::int64_t n, std::int64_t e, std::int64_t r) {
    const auto t = tangent_rep_multiple_cover(n, e, r);
    const auto total = t.total();
    const auto alpha = rsbt_invariant(total);
    const auto verdict = rsbt_verdict(r, alpha);
    std::optional<Rational> closed;
    if (r >= 2) closed = multiple_cover_invariant_closed_form(n, e, r);
    const std::string closed_text = closed ? closed->str() : "not-applicable: r >= 2";

    std::vector<std::pair<std::size_t, Rational>> by_unit;
    for (auto u : units(total.order())) by_unit.emplace_back(u, rsbt_invariant_wrt(total, static_cast<std::int64_t>(u)));
    const std::vector<std::pair<std::string, const CyclicRep*>> parts{
        {"grassmann_trivial", &t.grassmann_trivial}, {"vert_cover", &t.vert_cover}, {"normal_copies", &t.normal_copies}};

    switch (fmt) {
        case Format::text:
            os << "n=" << n << " e=" << e << " r=" << r << '\n';
            os << "dimension: " << total.dimension() << '\n';
            for (const auto& [name, rep] : parts)
                os << name << ": dim " << rep->dimension() << ", alpha " << rsbt_invariant(*rep) << '\n';
            for (const auto& [u, a] : by_unit) os << "alpha[u=" << u << "]: " << a << '\n';
            os << "alpha: " << alpha << '\n';
            os << "closed_form: " << closed_text << '\n';
            os << "det_character: " << det_character(total) << '\n';
            os << "verdict: " << verdict << '\n';
            break;
        case Format::json: {
            json j{{"n", n}, {"e", e}, {"r", r}, {"dimension", total.dimension()}};
            j["parts"] = json::object();
            for (const auto& [name, rep] : parts) {
                j["parts"][name] = {{"dimension", rep->dimension()},
                                    {"alpha", rsbt_invariant(*rep).str()},
                                    {"mult", std::vector<std::size_t>(rep->multiplicities().begin(),
                                                                      rep->multiplicities().end())}};
            }
            j["alpha_by_generator"] = json::object();
            for (const auto& [u, a] : by_unit) j["alpha_by_generator"][std::to_string(u)] = a.str();
            j["alpha"] = alpha.str();
            j["closed_form"] = closed_text;
            j["det_character"] = det_character(total);
            j["verdict"] = verdict;
            emit_json(os, j);
            break;
        }
        case Format::csv:
            os << "n,e,r,u,alpha,dimension,verdict\n";
            for (const auto& [u, a] : by_unit)
                os << n << ',' << e << ',' << r << ',' << u << ',' << a << ',' << total.dimension() << ',' << verdict
                   << '\n';
            break;
    }
}

// --- canonical-class -------------------------------------------------------

inline std::vector<std::int64_t> parse_tuple(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size() || v < 1) throw UsageError("malformed --tuple '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("malformed --tuple '" + text + "'");
    return out;
}

inline void canonical_class(std::ostream& os, Format fmt, std::int64_t n, std::int64_t e, std::int64_t marks,
                            const std::vector<std::int64_t>& degrees) {
    const auto cls = (marks == 0 && degrees.size() == 1) ? picard::canonical_hypersurface(n, degrees.front(), e)
                                                         : picard::canonical_ci(n, degrees, e, marks);
    const auto rank = picard::rank_P_tuple(e, degrees);

    switch (fmt) {
        case Format::text:
            os << "class: " << cls.render() << '\n' << "rank: " << rank << '\n';
            break;
        case Format::json: {
            json j{{"n", n}, {"e", e}, {"marks", marks}, {"degrees", degrees}, {"class", cls.render()}};
            j["coefficients"] = json::object();
            for (const auto& [k, v] : cls.terms()) j["coefficients"][k.str()] = v.str();
            j["rank"] = rank;
            emit_json(os, j);
            break;
        }
        case Format::csv:
            os << "basis_element,coefficient\n";
            for (const auto& [k, v] : cls.terms()) os << io::detail::csv_escape(k.str()) << ',' << v << '\n';
            break;
    }
}

// --- classify / scan -------------------------------------------------------

inline void reports(std::ostream& os, Format fmt, const std::vector<classify::Report>& reps, bool single) {
    switch (fmt) {
        case Format::text:
            for (std::size_t i = 0; i < reps.size(); ++i) {
                if (i) os << '\n';
                io::write_text(os, reps[i]);
            }
            break;
        case Format::json:
            if (single) {
                emit_json(os, io::to_json(reps.front()));
            } else {
                json arr = json::array();
                for (const auto& r : reps) arr.push_back(io::to_json(r));
                emit_json(os, arr);
            }
            break;
        case Format::csv:
            io::write_csv(os, reps);
            break;
    }
}

// --- oracle ----------------------------------------------------------------

inline void oracle(std::ostream& os, Format fmt, std::int64_t p, std::int64_t g, std::int64_t f) {
    const auto counts = ff_oracle::count_by_rank(p, g, f);
    if (fmt == Format::json) {
        json j{{"p", p}, {"g", g}, {"f", f}, {"skipped", !counts.has_value()}};
        j["rows"] = json::array();
        if (counts)
            for (std::size_t k = 0; k < counts->counts.size(); ++k)
                j["rows"].push_back({{"k", k},
                                     {"count", counts->counts[k]},
                                     {"qanalog", ff_oracle::qanalog_count(p, g, f, static_cast<std::int64_t>(k)).str()}});
        emit_json(os, j);
        return;
    }
    os << "p,g,f,k,count\n";
    if (!counts) {
        os << p << ',' << g << ',' << f << ",,skipped\n";
        return;
    }
    for (std::size_t k = 0; k < counts->counts.size(); ++k)
        os << p << ',' << g << ',' << f << ',' << k << ',' << counts->counts[k] << '\n';
}

}  // namespace detail

/*
 * Entry point shared by the modsing binary and the tests. args excludes the
 * program name. Exit codes: 0 success, 1 domain error, 2 usage error.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact discrepancy, RSBT and canonical-class calculator for moduli of rational curves", "modsing"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format_name = "text";
    std::string out_path;
    app.add_option("--format", format_name, "Output format: text, json or csv (default text)")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->option_text("FORMAT");
    app.add_option("--out", out_path, "Write output to PATH instead of standard output")->option_text("PATH");

    const auto positive = CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max());
    const auto non_negative = CLI::Range(std::int64_t{0}, std::numeric_limits<std::int64_t>::max());

    determinantal::DetPairSpec pair;
    auto* disc = app.add_subcommand("discrepancy", "Log discrepancies and class of a generic determinantal pair");
    disc->add_option("--g", pair.g, "Rank of the source bundle")->required()->check(positive);
    disc->add_option("--f", pair.f, "Rank of the target bundle")->required()->check(positive);
    disc->add_option("--q", pair.q, "Multiplicity of the stratum")->required()->check(non_negative);
    disc->add_option("--k", pair.k, "Rank of the stratum")->required()->check(non_negative);
    disc->add_option("--base-r", pair.base_r, "Tower level")->check(non_negative);

    std::int64_t n = 0, d = 0, e = 0, r = 0, marks = 0, p = 0, g = 0, f = 0;
    auto* rsbt = app.add_subcommand("rsbt", "RSBT invariant at a cyclic multiple cover of a line");
    rsbt->add_option("--n", n, "Ambient dimension")->required()->check(positive);
    rsbt->add_option("--e", e, "Degree")->required()->check(positive);
    rsbt->add_option("--r", r, "Stabilizer order (divides e)")->required()->check(positive);

    std::string tuple;
    auto* canon = app.add_subcommand("canonical-class", "Canonical class on the space of stable maps to X");
    canon->add_option("--n", n, "Ambient dimension")->required()->check(positive);
    auto* d_opt = canon->add_option("--d", d, "Hypersurface degree")->check(positive);
    canon->add_option("--e", e, "Degree of the maps")->required()->check(positive);
    canon->add_option("--marks", marks, "Number of marked points")->check(non_negative);
    auto* tuple_opt = canon->add_option("--tuple", tuple, "Complete-intersection degrees d1,d2,...");
    d_opt->excludes(tuple_opt);

    auto* cls = app.add_subcommand("classify", "Full classification report for (n, d, e)");
    cls->add_option("--n", n, "Ambient dimension")->required()->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()));
    cls->add_option("--d", d, "Hypersurface degree")->required()->check(positive);
    cls->add_option("--e", e, "Degree of the maps")->required()->check(positive);

    std::string n_range, d_range, e_range, filter_name;
    auto* scan = app.add_subcommand("scan", "Reports over inclusive ranges A..B");
    scan->add_option("--n", n_range, "Range of n")->required();
    scan->add_option("--d", d_range, "Range of d")->required();
    scan->add_option("--e", e_range, "Range of e")->required();
    scan->add_option("--filter", filter_name, "Keep reports matching NAME");

    auto* orc = app.add_subcommand("oracle", "Rank counts of g x f matrices over F_p");
    orc->add_option("--p", p, "Prime field size (2, 3, 5 or 7)")->required()->check(CLI::IsMember({2, 3, 5, 7}));
    orc->add_option("--g", g, "Rows")->required()->check(positive);
    orc->add_option("--f", f, "Columns")->required()->check(positive);

    std::vector<std::string> argv_store{"modsing"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex, out, err);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex, out, err);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex, err, err);
        return exit_usage;
    }

    const Format fmt = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::text;
    std::ostringstream buffer;
    try {
        if (disc->parsed()) {
            detail::discrepancy(buffer, fmt, pair);
        } else if (rsbt->parsed()) {
            detail::rsbt(buffer, fmt, n, e, r);
        } else if (canon->parsed()) {
            std::vector<std::int64_t> degrees;
            if (!tuple.empty()) degrees = detail::parse_tuple(tuple);
            else if (d_opt->count() > 0) degrees = {d};
            else throw UsageError("one of --d or --tuple is required");
            detail::canonical_class(buffer, fmt, n, e, marks, degrees);
        } else if (cls->parsed()) {
            detail::reports(buffer, fmt, {classify::full_report(n, d, e)}, true);
        } else if (scan->parsed()) {
            classify::IntRange nr, dr, er;
            classify::ReportFilter filter;
            try {
                nr = classify::parse_range(n_range);
                dr = classify::parse_range(d_range);
                er = classify::parse_range(e_range);
                filter = classify::parse_filter(filter_name);
            } catch (const Error& ex) {
                throw UsageError(ex.what());
            }
            detail::reports(buffer, fmt, classify::scan(nr, dr, er, filter), false);
        } else if (orc->parsed()) {
            detail::oracle(buffer, fmt, p, g, f);
        }
    } catch (const UsageError& ex) {
        err << "usage error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_domain;
    }

    if (out_path.empty()) {
        out << buffer.str();
        return exit_ok;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << buffer.str())) {
        err << "error: cannot write " << out_path << '\n';
        return exit_domain;
    }
    return exit_ok;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace modsing::cli
