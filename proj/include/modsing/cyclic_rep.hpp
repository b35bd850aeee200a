#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "modsing/error.hpp"
#include "modsing/rational.hpp"

namespace modsing {

/*
 * A finite-dimensional representation of the cyclic group of order r,
 * stored as the multiplicity vector over the r characters zeta^0..zeta^{r-1}
 * against one fixed generator zeta of the character group. Other generators
 * are handled by re-indexing at query time, never by mutating the storage.
 */
class CyclicRep {
public:
    explicit CyclicRep(std::size_t order) : mult_(checked_order(order), 0) {}

    CyclicRep(std::size_t order, std::vector<std::size_t> mult) : mult_(std::move(mult)) {
        checked_order(order);
        detail::require(mult_.size() == order, ErrorKind::invalid_argument,
                        "multiplicity vector length must equal the group order");
    }

    static CyclicRep trivial(std::size_t order, std::size_t dim) {
        CyclicRep rep(order);
        rep.mult_[0] = dim;
        return rep;
    }

    /// The regular representation k[Gamma]: every character once.
    static CyclicRep regular(std::size_t order, std::size_t copies = 1) {
        return CyclicRep(order, std::vector<std::size_t>(checked_order(order), copies));
    }

    /// L_{zeta^index}^{copies}; index is reduced mod order.
    static CyclicRep character(std::size_t order, std::int64_t index, std::size_t copies = 1) {
        CyclicRep rep(order);
        rep.mult_[reduce(index, order)] = copies;
        return rep;
    }

    std::size_t order() const noexcept { return mult_.size(); }
    std::span<const std::size_t> multiplicities() const noexcept { return mult_; }
    std::size_t mult(std::int64_t index) const { return mult_[reduce(index, order())]; }

    std::size_t dimension() const noexcept {
        return std::accumulate(mult_.begin(), mult_.end(), std::size_t{0});
    }

    bool has_trivial_summand() const noexcept { return mult_[0] != 0; }

    void add(std::int64_t index, std::size_t copies = 1) { mult_[reduce(index, order())] += copies; }

    friend bool operator==(const CyclicRep&, const CyclicRep&) = default;

    static std::size_t reduce(std::int64_t index, std::size_t order) {
        auto r = static_cast<std::int64_t>(order);
        return static_cast<std::size_t>(((index % r) + r) % r);
    }

private:
    static std::size_t checked_order(std::size_t order) {
        detail::require(order >= 1, ErrorKind::invalid_argument, "group order must be positive");
        return order;
    }

    std::vector<std::size_t> mult_;
};

namespace detail {

inline void require_same_order(const CyclicRep& a, const CyclicRep& b) {
    require(a.order() == b.order(), ErrorKind::order_mismatch,
            "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()) + " differ");
}

// Inverse of u modulo r, or 0 when u is not a unit (r = 1 maps everything to 0).
inline std::size_t unit_inverse(std::int64_t u, std::size_t r) {
    auto ur = CyclicRep::reduce(u, r);
    if (r == 1) return 0;
    if (std::gcd(ur, r) != 1) return 0;
    // extended Euclid on signed values
    std::int64_t a = static_cast<std::int64_t>(ur), m = static_cast<std::int64_t>(r);
    std::int64_t x0 = 1, x1 = 0;
    while (m != 0) {
        std::int64_t q = a / m;
        std::tie(a, m) = std::make_pair(m, a - q * m);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    return CyclicRep::reduce(x0, r);
}

}  // namespace detail

inline bool is_unit(std::int64_t u, std::size_t order) {
    return order == 1 || std::gcd(CyclicRep::reduce(u, order), order) == 1;
}

/// Units of Z/r in ascending order; {0} for the trivial group.
inline std::vector<std::size_t> units(std::size_t order) {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < order; ++u)
        if (is_unit(static_cast<std::int64_t>(u), order)) out.push_back(u);
    return out;
}

/*
 * RSBT invariant with respect to the generator zeta^u:
 *   alpha = (1/r) * sum_i b_i * i
 * where b is the multiplicity vector re-indexed against zeta^u, so the
 * character zeta^i contributes at index i * u^{-1} mod r.
 */
inline Rational rsbt_invariant_wrt(const CyclicRep& rep, std::int64_t u) {
    const std::size_t r = rep.order();
    detail::require(is_unit(u, r), ErrorKind::invalid_generator,
                    std::to_string(u) + " is not a unit modulo " + std::to_string(r));
    const std::size_t inv = detail::unit_inverse(u, r);
    BigInt total = 0;
    auto mult = rep.multiplicities();
    for (std::size_t i = 0; i < r; ++i) {
        if (mult[i] == 0) continue;
        total += BigInt((i * inv) % r) * mult[i];
    }
    return Rational(total, BigInt(r));
}

/// Minimum of rsbt_invariant_wrt over all generators of the character group.
inline Rational rsbt_invariant(const CyclicRep& rep) {
    auto us = units(rep.order());
    Rational best = rsbt_invariant_wrt(rep, static_cast<std::int64_t>(us.front()));
    for (std::size_t k = 1; k < us.size(); ++k)
        best = min(best, rsbt_invariant_wrt(rep, static_cast<std::int64_t>(us[k])));
    return best;
}

inline CyclicRep direct_sum(const CyclicRep& a, const CyclicRep& b) {
    detail::require_same_order(a, b);
    CyclicRep out = a;
    for (std::size_t i = 0; i < b.order(); ++i) out.add(static_cast<std::int64_t>(i), b.multiplicities()[i]);
    return out;
}

/// Character convolution: mult[k] = sum_{i+j = k mod r} a[i] b[j].
inline CyclicRep tensor(const CyclicRep& a, const CyclicRep& b) {
    detail::require_same_order(a, b);
    const std::size_t r = a.order();
    CyclicRep out(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (a.multiplicities()[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j)
            out.add(static_cast<std::int64_t>(i + j), a.multiplicities()[i] * b.multiplicities()[j]);
    }
    return out;
}

inline CyclicRep dual(const CyclicRep& a) {
    CyclicRep out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out.add(-static_cast<std::int64_t>(i), a.multiplicities()[i]);
    return out;
}

inline CyclicRep scale(const CyclicRep& a, std::size_t copies) {
    CyclicRep out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out.add(static_cast<std::int64_t>(i), a.multiplicities()[i] * copies);
    return out;
}

/*
 * Induction from the index-s subgroup (order r/s) to the full group of
 * order r. The subgroup character l goes to L_{l} + L_{l + r/s} + ... +
 * L_{l + (s-1) r/s}.
 */
inline CyclicRep induce(const CyclicRep& v, std::size_t s, std::size_t order) {
    detail::require(s >= 1 && order % s == 0, ErrorKind::non_divisor,
                    std::to_string(s) + " does not divide " + std::to_string(order));
    const std::size_t sub = order / s;
    detail::require(v.order() == sub, ErrorKind::order_mismatch,
                    "representation order must equal order / s");
    CyclicRep out(order);
    for (std::size_t l = 0; l < sub; ++l) {
        auto m = v.multiplicities()[l];
        if (m == 0) continue;
        for (std::size_t j = 0; j < s; ++j) out.add(static_cast<std::int64_t>(l + j * sub), m);
    }
    return out;
}

inline CyclicRep induce(const CyclicRep& v, std::size_t s) { return induce(v, s, v.order() * s); }

/// Index of det(rep) as a character: sum i * a_i mod r. Zero means trivial.
inline std::size_t det_character(const CyclicRep& rep) {
    std::size_t acc = 0;
    const std::size_t r = rep.order();
    for (std::size_t i = 0; i < r; ++i) acc = (acc + (i * (rep.multiplicities()[i] % r)) % r) % r;
    return acc;
}

/*
 * Tangent space of the moduli stack at an r-fold cyclic multiple cover of a
 * line in P^n, as a representation of the stabilizer subgroup of order r.
 *
 *   grassmann_trivial  T(Grassmannian of lines), trivial, dim 2(n-1)
 *   vert_cover         reg^{2(e/r-1)} + Q,  Q = sum_{j=0}^{r-2} (L_j + L_{-j})
 *   normal_copies      (n-1) copies of dual(R_f),
 *                      R_f = R_h (x) R_g + R_g + R_h,
 *                      R_g = k[Gamma] minus the trivial character,
 *                      R_h = trivial of dim e/r - 1
 */
struct TangentAssembly {
    std::int64_t n = 0;
    std::int64_t e = 0;
    std::int64_t r = 0;
    CyclicRep grassmann_trivial{1};
    CyclicRep vert_cover{1};
    CyclicRep normal_copies{1};

    CyclicRep total() const { return direct_sum(direct_sum(grassmann_trivial, vert_cover), normal_copies); }
};

inline CyclicRep cover_quotient_local(std::size_t r) {
    CyclicRep q(r);
    if (r < 2) return q;
    for (std::size_t j = 0; j + 2 <= r; ++j) {
        q.add(static_cast<std::int64_t>(j));
        q.add(-static_cast<std::int64_t>(j));
    }
    return q;
}

inline CyclicRep residual_space(std::size_t order, std::size_t sheets) {
    CyclicRep rg(order);
    for (std::size_t i = 1; i < order; ++i) rg.add(static_cast<std::int64_t>(i));
    CyclicRep rh = CyclicRep::trivial(order, sheets - 1);
    return direct_sum(direct_sum(tensor(rh, rg), rg), rh);
}

inline TangentAssembly tangent_rep_multiple_cover(std::int64_t n, std::int64_t e, std::int64_t r) {
    detail::require(n >= 1, ErrorKind::out_of_bounds, "n must be at least 1");
    detail::require(e >= 1, ErrorKind::out_of_bounds, "e must be at least 1");
    detail::require(r >= 1, ErrorKind::out_of_bounds, "r must be at least 1");
    detail::require(e % r == 0, ErrorKind::non_divisor,
                    std::to_string(r) + " does not divide " + std::to_string(e));
    const auto order = static_cast<std::size_t>(r);
    const auto sheets = static_cast<std::size_t>(e / r);

    TangentAssembly t;
    t.n = n;
    t.e = e;
    t.r = r;
    t.grassmann_trivial = CyclicRep::trivial(order, static_cast<std::size_t>(2 * (n - 1)));
    t.vert_cover = direct_sum(CyclicRep::regular(order, 2 * (sheets - 1)), cover_quotient_local(order));
    t.normal_copies = scale(dual(residual_space(order, sheets)), static_cast<std::size_t>(n - 1));
    return t;
}

/// e(n+1)/2 * (1 - 1/r) - 1, the invariant of the assembly for r >= 2.
inline Rational multiple_cover_invariant_closed_form(std::int64_t n, std::int64_t e, std::int64_t r) {
    return Rational(e * (n + 1), 2) * (Rational(1) - Rational(1, r)) - Rational(1);
}

}  // namespace modsing
