#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modsing/error.hpp"
#include "modsing/rational.hpp"

namespace modsing::determinantal {

/*
 * Generic determinantal pair (M^(base_r), q * M^(base_r)_k) over the space
 * of maps from a rank-g bundle to a rank-f bundle. M_k is the locus of rank
 * at most k and M^(base_r) the base_r-th level of the blow-up tower along
 * the strata M_0, M_1, ...
 */
struct DetPairSpec {
    std::int64_t g = 1;
    std::int64_t f = 1;
    std::int64_t q = 0;
    std::int64_t k = 0;
    std::int64_t base_r = 0;
};

inline void validate(const DetPairSpec& p) {
    detail::require(p.g >= 1, ErrorKind::out_of_bounds, "g must be at least 1");
    detail::require(p.f >= p.g, ErrorKind::out_of_bounds, "f must be at least g");
    detail::require(p.q >= 0, ErrorKind::out_of_bounds, "q must be non-negative");
    detail::require(p.k >= 0 && p.k <= p.g - 1, ErrorKind::out_of_bounds, "k must lie in [0, g-1]");
    detail::require(p.base_r >= 0 && p.base_r <= p.k, ErrorKind::out_of_bounds,
                    "base_r must lie in [0, k]");
}

// Ordered weakest to strongest.
enum class SingularityTag { not_log_canonical, log_canonical, kawamata_log_terminal, canonical, terminal };

constexpr std::string_view to_string(SingularityTag tag) noexcept {
    switch (tag) {
        case SingularityTag::not_log_canonical: return "not_log_canonical";
        case SingularityTag::log_canonical: return "log_canonical";
        case SingularityTag::kawamata_log_terminal: return "kawamata_log_terminal";
        case SingularityTag::canonical: return "canonical";
        case SingularityTag::terminal: return "terminal";
    }
    return "unknown";
}

struct SingularityClass {
    SingularityTag tag = SingularityTag::not_log_canonical;
    std::optional<Rational> mld;  // present iff log canonical

    bool is_lc() const { return tag >= SingularityTag::log_canonical; }
    bool is_klt() const { return tag >= SingularityTag::kawamata_log_terminal; }
    bool is_canonical() const { return tag >= SingularityTag::canonical; }
    bool is_terminal() const { return tag == SingularityTag::terminal; }

    friend bool operator==(const SingularityClass&, const SingularityClass&) = default;
};

struct LogDiscrepancy {
    std::int64_t i = 0;
    Rational value;

    friend bool operator==(const LogDiscrepancy&, const LogDiscrepancy&) = default;
};

/// Codimension (f-k)(g-k) of the rank <= k locus in g x f matrices.
inline std::int64_t stratum_codim(std::int64_t g, std::int64_t f, std::int64_t k) {
    detail::require(0 <= k && k <= g && g <= f, ErrorKind::out_of_bounds, "need 0 <= k <= g <= f");
    return (f - k) * (g - k);
}

/// a(E_i) = (f-i)(g-i) - q(k+1-i) for i = base_r..k.
inline std::vector<LogDiscrepancy> log_discrepancies(const DetPairSpec& p) {
    validate(p);
    std::vector<LogDiscrepancy> out;
    for (std::int64_t i = p.base_r; i <= p.k; ++i)
        out.push_back({i, Rational((p.f - i) * (p.g - i) - p.q * (p.k + 1 - i))});
    return out;
}

/*
 * With a the minimum log discrepancy: lc iff a >= 0 (mld = min(1, a)),
 * klt iff a > 0, canonical iff a >= 1. Terminal is reported only for a > 1;
 * at a = 1 the pair is canonical but never claimed terminal.
 */
inline SingularityClass classify_pair(const DetPairSpec& p) {
    auto discs = log_discrepancies(p);
    Rational a = discs.front().value;
    for (const auto& d : discs) a = min(a, d.value);

    SingularityClass c;
    if (a.sign() < 0) return c;
    c.mld = min(Rational(1), a);
    if (a > Rational(1)) c.tag = SingularityTag::terminal;
    else if (a >= Rational(1)) c.tag = SingularityTag::canonical;
    else if (a.sign() > 0) c.tag = SingularityTag::kawamata_log_terminal;
    else c.tag = SingularityTag::log_canonical;
    return c;
}

/// Relative Grassmannian cone of rank quot_rank quotients of a cokernel.
struct ConeSpec {
    std::int64_t b = 0;           // base dimension
    std::int64_t coker_rank = 1;  // generic cokernel rank f - g
    std::int64_t quot_rank = 1;   // 1 <= quot_rank <= coker_rank
    std::vector<std::int64_t> stratum_codims;  // codim(B_k - B_{k-1}), k = 0..g-1
};

inline void validate(const ConeSpec& c) {
    detail::require(c.b >= 0, ErrorKind::out_of_bounds, "base dimension must be non-negative");
    detail::require(c.quot_rank >= 1 && c.quot_rank <= c.coker_rank, ErrorKind::out_of_bounds,
                    "quotient rank must lie in [1, coker_rank]");
    detail::require(std::ranges::all_of(c.stratum_codims, [](auto v) { return v >= 0; }),
                    ErrorKind::out_of_bounds, "stratum codimensions must be non-negative");
}

inline std::int64_t cone_expected_dim(const ConeSpec& c) {
    validate(c);
    return c.b + c.quot_rank * (c.coker_rank - c.quot_rank);
}

namespace detail {

inline bool codims_exceed(const ConeSpec& c, std::int64_t g, std::int64_t slack) {
    validate(c);
    modsing::detail::require(g >= 0, ErrorKind::out_of_bounds, "g must be non-negative");
    modsing::detail::require(static_cast<std::int64_t>(c.stratum_codims.size()) == g,
                             ErrorKind::invalid_argument, "stratum_codims must have g entries");
    for (std::int64_t k = 0; k < g; ++k)
        if (c.stratum_codims[static_cast<std::size_t>(k)] < c.quot_rank * (g - k) + slack) return false;
    return true;
}

}  // namespace detail

/// codim(B_k - B_{k-1}) >= r(g-k) + 1 for all k; vacuous when g = 0.
inline bool cone_irreducible(const ConeSpec& c, std::int64_t g) { return detail::codims_exceed(c, g, 1); }

/// Sufficient condition for regularity in codimension one: >= r(g-k) + 2.
inline bool cone_r1(const ConeSpec& c, std::int64_t g) { return detail::codims_exceed(c, g, 2); }

/*
 * lc / klt / canonical transfer unchanged from the pair (B, r B_{g-1}) to
 * the cone. Terminal does not transfer: a log discrepancy equal to 1 can
 * make the pair canonical while the cone is smooth, so it is capped.
 */
inline SingularityClass cone_class_from_pair(const SingularityClass& pair) {
    SingularityClass out = pair;
    if (out.tag == SingularityTag::terminal) out.tag = SingularityTag::canonical;
    return out;
}

struct DirectSumConeResult {
    bool applies = false;
    std::int64_t dim_offset = 0;  // dim(C) = dim(S) + dim_offset
    std::optional<SingularityClass> cone_class;

    std::string dim_formula() const { return "dim(S) + " + std::to_string(dim_offset); }
};

/*
 * Cone of rank-r quotients of coker(Id_A (x) phi) (+) A', with rank A = a,
 * rank A' = a_prime. Inside the criterion a*r <= f-g it is canonical of
 * dimension dim(S) + f g + r((a(f-g) + a') - r). The class is derived by
 * classifying the pair (M^(0), a r M^(0)_{g-1}) and transferring it.
 */
inline DirectSumConeResult direct_sum_cone_classify(std::int64_t g, std::int64_t f, std::int64_t a,
                                                    std::int64_t a_prime, std::int64_t r) {
    modsing::detail::require(g >= 1 && f >= 2 && f >= g, ErrorKind::out_of_bounds, "need g >= 1, f >= 2, f >= g");
    modsing::detail::require(a >= 1 && a_prime >= 0 && r >= 1, ErrorKind::out_of_bounds,
                             "need a >= 1, a' >= 0, r >= 1");
    DirectSumConeResult out;
    out.dim_offset = f * g + r * ((a * (f - g) + a_prime) - r);
    if (a * r > f - g) return out;
    out.applies = true;
    out.cone_class = cone_class_from_pair(classify_pair({g, f, a * r, g - 1, 0}));
    return out;
}

/// (i, (f-i)(g-i) - 1) for i = base_r..s-1: K_{M^(s)} - u^* K_{M^(base_r)}.
inline std::vector<LogDiscrepancy> relative_canonical_coeffs(std::int64_t g, std::int64_t f,
                                                             std::int64_t base_r, std::int64_t s) {
    modsing::detail::require(g >= 1 && f >= g, ErrorKind::out_of_bounds, "need 1 <= g <= f");
    modsing::detail::require(0 <= base_r && base_r < s && s <= g, ErrorKind::out_of_bounds,
                             "need 0 <= base_r < s <= g");
    std::vector<LogDiscrepancy> out;
    for (std::int64_t i = base_r; i < s; ++i) out.push_back({i, Rational((f - i) * (g - i) - 1)});
    return out;
}

struct PullbackCycle {
    std::optional<std::int64_t> strict_mult;  // coefficient of [M^(s)_k], present iff k >= s
    std::vector<std::pair<std::int64_t, std::int64_t>> exceptional;  // (i, coefficient of E_i)

    friend bool operator==(const PullbackCycle&, const PullbackCycle&) = default;
};

/*
 * Cycle of the pullback of (I_k)^q from M^(base_r) to M^(s):
 *   q [M^(s)_k] + sum_{i=base_r}^{min(s,k+1)-1} q (k+1-i) E_i
 * with the strict term absent when k < s. q = 0 gives the empty cycle.
 */
inline PullbackCycle fitting_pullback_cycle(std::int64_t g, std::int64_t f, std::int64_t q, std::int64_t k,
                                            std::int64_t base_r, std::int64_t s) {
    modsing::detail::require(g >= 1 && f >= g, ErrorKind::out_of_bounds, "need 1 <= g <= f");
    modsing::detail::require(q >= 0, ErrorKind::out_of_bounds, "q must be non-negative");
    modsing::detail::require(0 <= k && k < g, ErrorKind::out_of_bounds, "need 0 <= k < g");
    modsing::detail::require(0 <= base_r && base_r < s && s <= g, ErrorKind::out_of_bounds,
                             "need 0 <= base_r < s <= g");
    PullbackCycle out;
    if (q == 0) return out;
    if (k >= s) out.strict_mult = q;
    for (std::int64_t i = base_r; i < std::min(s, k + 1); ++i) out.exceptional.emplace_back(i, q * (k + 1 - i));
    return out;
}

namespace detail {

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    BigInt acc = 1;
    for (std::int64_t j = 1; j <= k; ++j) acc = acc * (n - k + j) / j;
    return acc;
}

}  // namespace detail

/*
 * Numerical data of the stratum of multiple covers of lines feeding the
 * direct-sum cone criterion: a (rows = e-1) x (cols = n-1) map tensored with
 * a rank-d bundle, plus the trivial summand (F^2)^dual of rank
 * C(n+d, d) - (d+1) - (n-1)d. The criterion a r <= f - g becomes d <= n - e.
 */
struct KbmStratumData {
    std::int64_t coker_rows = 0;
    std::int64_t coker_cols = 0;
    std::int64_t copies_a = 0;
    BigInt extra_rank_a_prime = 0;
    bool criterion = false;
};

inline KbmStratumData kbm_stratum_data(std::int64_t n, std::int64_t d, std::int64_t e) {
    modsing::detail::require(e != 1, ErrorKind::out_of_bounds,
                             "e = 1 has no multiple-cover stratum; use lines_fano_status");
    modsing::detail::require(n >= 2 && e >= 2 && d >= 1, ErrorKind::out_of_bounds, "need n >= 2, d >= 1, e >= 2");
    KbmStratumData out;
    out.coker_rows = e - 1;
    out.coker_cols = n - 1;
    out.copies_a = d;
    out.extra_rank_a_prime = detail::binomial(n + d, d) - (d + 1) - BigInt(n - 1) * d;
    modsing::detail::require(out.extra_rank_a_prime >= 0, ErrorKind::out_of_bounds,
                             "negative filtration rank: invalid (n, d)");
    out.criterion = d <= n - e;
    return out;
}

struct MainTheoremStatus {
    bool applies = false;
    std::string cd_status;
    std::int64_t kbm_expected_dim = 0;  // (n+1-d)e + (n-3)
};

inline MainTheoremStatus main_theorem_status(std::int64_t n, std::int64_t d, std::int64_t e) {
    modsing::detail::require(n >= 1 && d >= 1 && e >= 1, ErrorKind::out_of_bounds, "need n, d, e >= 1");
    MainTheoremStatus out;
    out.kbm_expected_dim = (n + 1 - d) * e + (n - 3);
    if (e == 1) {
        out.cd_status = "e = 1: projective bundle over the Grassmannian of lines, smooth of the expected dimension";
    } else if (d + e <= n) {
        out.applies = true;
        out.cd_status = "integral, normal, local complete intersection, expected dimension, canonical";
    } else {
        out.cd_status = "not-applicable: d+e <= n fails";
    }
    return out;
}

/// Fano scheme of lines on a general degree-d hypersurface in P^n.
struct LinesFanoStatus {
    bool nonempty_general = false;
    std::optional<std::int64_t> smooth_expected_dim;  // 2n - d - 3
    bool connected_general = false;
};

inline LinesFanoStatus lines_fano_status(std::int64_t n, std::int64_t d) {
    modsing::detail::require(n >= 2 && d >= 1, ErrorKind::out_of_bounds, "need n >= 2, d >= 1");
    LinesFanoStatus out;
    out.nonempty_general = d <= 2 * n - 3;
    if (out.nonempty_general) out.smooth_expected_dim = 2 * n - d - 3;
    out.connected_general = d < 2 * n - 3 && !(d == 2 && n == 3);
    return out;
}

}  // namespace modsing::determinantal
