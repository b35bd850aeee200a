#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "modsing/determinantal.hpp"
#include "modsing/error.hpp"
#include "modsing/picard.hpp"

namespace modsing::classify {

enum class CoarseStatus { terminal, canonical, excluded };
enum class Gorenstein { yes, no, excluded };

constexpr std::string_view to_string(CoarseStatus s) noexcept {
    switch (s) {
        case CoarseStatus::terminal: return "terminal";
        case CoarseStatus::canonical: return "canonical";
        case CoarseStatus::excluded: return "excluded";
    }
    return "unknown";
}

constexpr std::string_view to_string(Gorenstein g) noexcept {
    switch (g) {
        case Gorenstein::yes: return "yes";
        case Gorenstein::no: return "no";
        case Gorenstein::excluded: return "excluded";
    }
    return "unknown";
}

inline bool is_excluded_pair(std::int64_t n, std::int64_t e) { return e == 2 && (n == 1 || n == 2); }

/// Coarse space of unpointed degree-e maps to P^n.
inline CoarseStatus coarse_space_status(std::int64_t n, std::int64_t e) {
    detail::require(n >= 1 && e >= 1, ErrorKind::out_of_bounds, "need n, e >= 1");
    if (is_excluded_pair(n, e)) return CoarseStatus::excluded;
    if ((n == 1 && e >= 3) || (n == 3 && e == 2)) return CoarseStatus::canonical;
    return CoarseStatus::terminal;
}

/// Not Gorenstein exactly when n and e are both even.
inline Gorenstein gorenstein_status(std::int64_t n, std::int64_t e) {
    detail::require(n >= 1 && e >= 1, ErrorKind::out_of_bounds, "need n, e >= 1");
    if (is_excluded_pair(n, e)) return Gorenstein::excluded;
    return (n % 2 == 0 && e % 2 == 0) ? Gorenstein::no : Gorenstein::yes;
}

struct CoarseCdStatus {
    bool klt = false;
    bool iso_away_codim2 = false;
    bool canonical_if_conjecture = false;

    friend bool operator==(const CoarseCdStatus&, const CoarseCdStatus&) = default;
};

inline CoarseCdStatus coarse_Cd_status(std::int64_t n, std::int64_t d, std::int64_t e) {
    const bool fits = d + e <= n;
    return {
        .klt = e >= 2 && fits,
        .iso_away_codim2 = e >= 3 && fits,
        .canonical_if_conjecture = (e >= 3 && fits) || (e == 2 && d + 3 <= n),
    };
}

/// A report value, or the gating hypothesis that failed.
template <typename T>
struct Gated {
    std::optional<T> value;
    std::string gate;

    static Gated of(T v) { return {std::move(v), {}}; }
    static Gated not_applicable(std::string why) { return {std::nullopt, std::move(why)}; }

    bool applicable() const { return value.has_value(); }
    std::string reason() const { return "not-applicable: " + gate; }

    friend bool operator==(const Gated&, const Gated&) = default;
};

struct Report {
    struct Input {
        std::int64_t n = 0, d = 0, e = 0;
        friend bool operator==(const Input&, const Input&) = default;
    } input;
    struct StackCd {
        bool theorem_applies = false;
        std::string status;
        friend bool operator==(const StackCd&, const StackCd&) = default;
    } stack_Cd;
    struct KbmX {
        Gated<std::int64_t> expected_dim;
        Gated<bool> canonical_if_general;
        Gated<std::int64_t> coarse_noniso_codim;  // e = 2 only
        friend bool operator==(const KbmX&, const KbmX&) = default;
    } kbm_X;
    struct CoarsePn {
        Gated<std::string> status;
        Gated<std::string> gorenstein;
        friend bool operator==(const CoarsePn&, const CoarsePn&) = default;
    } coarse_kbm_Pn;
    CoarseCdStatus coarse_Cd;
    Gated<std::string> canonical_class;
    struct Bigness {
        Gated<bool> hypotheses_ok;
        Gated<bool> sufficient_test;
        friend bool operator==(const Bigness&, const Bigness&) = default;
    } bigness;
    bool general_type_conditional = false;

    friend bool operator==(const Report&, const Report&) = default;
};

inline Report full_report(std::int64_t n, std::int64_t d, std::int64_t e) {
    detail::require(n >= 2 && d >= 1 && e >= 1, ErrorKind::out_of_bounds, "need n >= 2, d >= 1, e >= 1");
    Report rep;
    rep.input = {n, d, e};

    const auto main = determinantal::main_theorem_status(n, d, e);
    rep.stack_Cd = {main.applies, main.cd_status};

    if (e == 1) {
        const auto lines = determinantal::lines_fano_status(n, d);
        if (lines.nonempty_general) {
            rep.kbm_X.expected_dim = Gated<std::int64_t>::of(*lines.smooth_expected_dim);
            rep.kbm_X.canonical_if_general = Gated<bool>::of(true);
        } else {
            rep.kbm_X.expected_dim = Gated<std::int64_t>::not_applicable("d <= 2n-3 fails (general fiber empty)");
            rep.kbm_X.canonical_if_general = Gated<bool>::not_applicable("d <= 2n-3 fails (general fiber empty)");
        }
        rep.coarse_kbm_Pn.status = Gated<std::string>::not_applicable("e >= 2 (no nontrivial stabilizers at e = 1)");
        rep.coarse_kbm_Pn.gorenstein = rep.coarse_kbm_Pn.status;
    } else {
        if (main.applies) {
            rep.kbm_X.expected_dim = Gated<std::int64_t>::of(main.kbm_expected_dim);
            rep.kbm_X.canonical_if_general = Gated<bool>::of(true);
        } else {
            rep.kbm_X.expected_dim = Gated<std::int64_t>::not_applicable("d+e <= n fails");
            rep.kbm_X.canonical_if_general = Gated<bool>::not_applicable("d+e <= n fails");
        }
        rep.coarse_kbm_Pn.status = Gated<std::string>::of(std::string(to_string(coarse_space_status(n, e))));
        rep.coarse_kbm_Pn.gorenstein = Gated<std::string>::of(std::string(to_string(gorenstein_status(n, e))));
    }

    // Locus Y of double covers (dim 2n-d-1) inside the (3n-d-2)-dimensional space.
    if (e == 2 && d + e <= n)
        rep.kbm_X.coarse_noniso_codim = Gated<std::int64_t>::of(n - 1);
    else
        rep.kbm_X.coarse_noniso_codim = Gated<std::int64_t>::not_applicable("e = 2 and d+e <= n");

    rep.coarse_Cd = coarse_Cd_status(n, d, e);

    if (is_excluded_pair(n, e)) {
        rep.canonical_class = Gated<std::string>::not_applicable("(n,e) != (2,2)");
        rep.bigness.hypotheses_ok = Gated<bool>::not_applicable("(n,e) != (2,2)");
        rep.bigness.sufficient_test = Gated<bool>::not_applicable("(n,e) != (2,2)");
    } else {
        const auto cls = picard::canonical_hypersurface(n, d, e);
        const auto hyp = picard::general_hypersurface_hypotheses(n, d);
        rep.canonical_class = Gated<std::string>::of(cls.render());
        rep.bigness.hypotheses_ok = Gated<bool>::of(hyp.birational_generic && hyp.irreducible_generic);
        rep.bigness.sufficient_test = Gated<bool>::of(picard::is_big_sufficient(cls, hyp).big);
    }

    rep.general_type_conditional =
        rep.coarse_Cd.canonical_if_conjecture && rep.bigness.sufficient_test.value.value_or(false);
    return rep;
}

/// Inclusive integer range; lo > hi is the empty range.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    bool empty() const { return lo > hi; }
};

/// Parses "A..B" (or a single integer "A").
inline IntRange parse_range(std::string_view text) {
    auto to_int = [&](std::string_view s) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(std::string(s), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        detail::require(!s.empty() && used == s.size(), ErrorKind::invalid_argument,
                        "malformed range '" + std::string(text) + "'");
        return v;
    };
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        auto v = to_int(text);
        return {v, v};
    }
    return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

using ReportFilter = std::function<bool(const Report&)>;

/*
 * Named scan filters: all, theorem_applies, big, general_type_conditional,
 * klt, iso_away_codim2, canonical_if_conjecture, coarse=<status>,
 * gorenstein=<yes|no|excluded>.
 */
inline ReportFilter parse_filter(std::string_view name) {
    if (name.empty() || name == "all") return [](const Report&) { return true; };
    if (name == "theorem_applies") return [](const Report& r) { return r.stack_Cd.theorem_applies; };
    if (name == "big") return [](const Report& r) { return r.bigness.sufficient_test.value.value_or(false); };
    if (name == "general_type_conditional") return [](const Report& r) { return r.general_type_conditional; };
    if (name == "klt") return [](const Report& r) { return r.coarse_Cd.klt; };
    if (name == "iso_away_codim2") return [](const Report& r) { return r.coarse_Cd.iso_away_codim2; };
    if (name == "canonical_if_conjecture") return [](const Report& r) { return r.coarse_Cd.canonical_if_conjecture; };

    auto keyed = [&](std::string_view key, auto&& allowed) -> std::optional<std::string> {
        if (!name.starts_with(key)) return std::nullopt;
        std::string value(name.substr(key.size()));
        detail::require(std::ranges::find(allowed, value) != std::ranges::end(allowed), ErrorKind::invalid_argument,
                        "unknown filter value '" + std::string(name) + "'");
        return value;
    };
    const std::vector<std::string> gor{"yes", "no", "excluded"};
    const std::vector<std::string> coarse{"terminal", "canonical", "excluded"};
    if (auto v = keyed("gorenstein=", gor))
        return [v = *v](const Report& r) { return r.coarse_kbm_Pn.gorenstein.value == v; };
    if (auto v = keyed("coarse=", coarse))
        return [v = *v](const Report& r) { return r.coarse_kbm_Pn.status.value == v; };
    throw Error(ErrorKind::invalid_argument, "unknown filter '" + std::string(name) + "'");
}

/// Reports for every (n, d, e) in the ranges that pass the filter, in lexicographic order.
inline std::vector<Report> scan(IntRange ns, IntRange ds, IntRange es, const ReportFilter& filter) {
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> triples;
    for (auto n = ns.lo; n <= ns.hi; ++n)
        for (auto d = ds.lo; d <= ds.hi; ++d)
            for (auto e = es.lo; e <= es.hi; ++e) triples.emplace_back(n, d, e);

    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t chunk = std::max<std::size_t>(1, (triples.size() + workers - 1) / workers);
    std::vector<std::future<std::vector<Report>>> parts;
    for (std::size_t begin = 0; begin < triples.size(); begin += chunk) {
        const std::size_t end = std::min(triples.size(), begin + chunk);
        parts.push_back(std::async(std::launch::async, [&triples, &filter, begin, end] {
            std::vector<Report> out;
            for (std::size_t i = begin; i < end; ++i) {
                auto [n, d, e] = triples[i];
                auto rep = full_report(n, d, e);
                if (filter(rep)) out.push_back(std::move(rep));
            }
            return out;
        }));
    }
    std::vector<Report> reports;
    for (auto& part : parts) {
        auto chunk_reports = part.get();
        std::ranges::move(chunk_reports, std::back_inserter(reports));
    }
    std::ranges::sort(reports, {}, [](const Report& r) { return std::tie(r.input.n, r.input.d, r.input.e); });
    return reports;
}

}  // namespace modsing::classify
