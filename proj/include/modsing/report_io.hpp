#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "modsing/classify.hpp"

namespace modsing::io {

using json = nlohmann::ordered_json;

namespace detail {

template <typename T>
json gated(const classify::Gated<T>& g) {
    if (g.value) return json(*g.value);
    return json(g.reason());
}

template <typename T>
std::string gated_text(const classify::Gated<T>& g) {
    if (!g.value) return g.reason();
    if constexpr (std::is_same_v<T, bool>) return *g.value ? "true" : "false";
    else if constexpr (std::is_same_v<T, std::string>) return *g.value;
    else return std::to_string(*g.value);
}

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline const char* boolean(bool b) { return b ? "true" : "false"; }

}  // namespace detail

inline json to_json(const classify::Report& r) {
    json j;
    j["input"] = {{"n", r.input.n}, {"d", r.input.d}, {"e", r.input.e}};
    j["stack_Cd"] = {{"theorem_applies", r.stack_Cd.theorem_applies}, {"status", r.stack_Cd.status}};
    j["kbm_X"] = {{"expected_dim", detail::gated(r.kbm_X.expected_dim)},
                  {"canonical_if_general", detail::gated(r.kbm_X.canonical_if_general)},
                  {"coarse_noniso_codim", detail::gated(r.kbm_X.coarse_noniso_codim)}};
    j["coarse_kbm_Pn"] = {{"status", detail::gated(r.coarse_kbm_Pn.status)},
                          {"gorenstein", detail::gated(r.coarse_kbm_Pn.gorenstein)}};
    j["coarse_Cd"] = {{"klt", r.coarse_Cd.klt},
                      {"iso_away_codim2", r.coarse_Cd.iso_away_codim2},
                      {"canonical_if_conjecture", r.coarse_Cd.canonical_if_conjecture}};
    j["canonical_class"] = detail::gated(r.canonical_class);
    j["bigness"] = {{"hypotheses_ok", detail::gated(r.bigness.hypotheses_ok)},
                    {"sufficient_test", detail::gated(r.bigness.sufficient_test)}};
    j["general_type_conditional"] = r.general_type_conditional;
    return j;
}

inline const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols{
        "n", "d", "e",
        "stack_Cd.theorem_applies", "stack_Cd.status",
        "kbm_X.expected_dim", "kbm_X.canonical_if_general", "kbm_X.coarse_noniso_codim",
        "coarse_kbm_Pn.status", "coarse_kbm_Pn.gorenstein",
        "coarse_Cd.klt", "coarse_Cd.iso_away_codim2", "coarse_Cd.canonical_if_conjecture",
        "canonical_class",
        "bigness.hypotheses_ok", "bigness.sufficient_test",
        "general_type_conditional",
    };
    return cols;
}

inline std::vector<std::string> csv_fields(const classify::Report& r) {
    using detail::boolean;
    using detail::gated_text;
    return {
        std::to_string(r.input.n), std::to_string(r.input.d), std::to_string(r.input.e),
        boolean(r.stack_Cd.theorem_applies), r.stack_Cd.status,
        gated_text(r.kbm_X.expected_dim), gated_text(r.kbm_X.canonical_if_general),
        gated_text(r.kbm_X.coarse_noniso_codim),
        gated_text(r.coarse_kbm_Pn.status), gated_text(r.coarse_kbm_Pn.gorenstein),
        boolean(r.coarse_Cd.klt), boolean(r.coarse_Cd.iso_away_codim2), boolean(r.coarse_Cd.canonical_if_conjecture),
        gated_text(r.canonical_class),
        gated_text(r.bigness.hypotheses_ok), gated_text(r.bigness.sufficient_test),
        boolean(r.general_type_conditional),
    };
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << detail::csv_escape(fields[i]);
    }
    os << '\n';
}

inline void write_csv(std::ostream& os, const std::vector<classify::Report>& reports) {
    write_csv_row(os, csv_columns());
    for (const auto& r : reports) write_csv_row(os, csv_fields(r));
}

/// Human-readable "field: value" block.
inline void write_text(std::ostream& os, const classify::Report& r) {
    const auto& cols = csv_columns();
    const auto fields = csv_fields(r);
    for (std::size_t i = 0; i < cols.size(); ++i) os << cols[i] << ": " << fields[i] << '\n';
}

}  // namespace modsing::io
