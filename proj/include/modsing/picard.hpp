#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modsing/error.hpp"
#include "modsing/rational.hpp"

namespace modsing::picard {

/*
 * Q-Picard basis of the stack of r-pointed genus-0 stable maps of degree e
 * to P^n: H, L_1..L_r, and the boundary classes D[i,j] (e_A = i, |A| = j)
 * for 0 <= i <= floor(e/2), 0 <= j <= r over valid weighted partitions.
 *
 * When i = e/2 the partitions with |A| = j and |A| = r - j coincide, so
 * D[e/2, j] is stored under j <= floor(r/2).
 */
struct PicBasis {
    std::int64_t n = 2;
    std::int64_t e = 1;
    std::int64_t r = 0;

    bool is_valid_boundary(std::int64_t i, std::int64_t j) const {
        if (i < 0 || 2 * i > e || j < 0 || j > r) return false;
        if (r == 0) return i >= 1;
        if (i == 0 && j < 2) return false;
        if (e - i == 0 && r - j < 2) return false;
        return true;
    }

    std::int64_t canonical_j(std::int64_t i, std::int64_t j) const {
        if (r > 0 && 2 * i == e) return std::min(j, r - j);
        return j;
    }

    friend bool operator==(const PicBasis&, const PicBasis&) = default;
};

inline PicBasis make_basis(std::int64_t n, std::int64_t e, std::int64_t r) {
    detail::require(n > 1 && e > 0 && r >= 0, ErrorKind::out_of_bounds, "need n > 1, e > 0, r >= 0");
    detail::require(!(n == 2 && e == 2), ErrorKind::excluded_case, "(n, e) = (2, 2) is excluded");
    return {n, e, r};
}

struct BasisElement {
    enum class Kind { H, L, D };

    Kind kind = Kind::H;
    std::int64_t a = 0;  // marked point p for L, i for D
    std::int64_t b = 0;  // j for D

    static BasisElement H() { return {Kind::H, 0, 0}; }
    static BasisElement L(std::int64_t p) { return {Kind::L, p, 0}; }
    static BasisElement D(std::int64_t i, std::int64_t j) { return {Kind::D, i, j}; }

    std::string str() const {
        switch (kind) {
            case Kind::H: return "H";
            case Kind::L: return "L_" + std::to_string(a);
            case Kind::D: return "D[" + std::to_string(a) + "," + std::to_string(b) + "]";
        }
        return "?";
    }

    friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

/// Sparse Q-linear combination of basis elements; absent keys are zero.
class DivisorClass {
public:
    explicit DivisorClass(PicBasis basis) : basis_(basis) {}

    const PicBasis& basis() const noexcept { return basis_; }
    const std::map<BasisElement, Rational>& terms() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Rational coeff(const BasisElement& key) const {
        auto it = coeffs_.find(canonical(key));
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    DivisorClass& add(const BasisElement& key, const Rational& value) {
        const BasisElement k = canonical(key);
        Rational& slot = coeffs_[k];
        slot += value;
        if (slot.is_zero()) coeffs_.erase(k);
        return *this;
    }

    DivisorClass& operator+=(const DivisorClass& other) {
        require_same_basis(other);
        for (const auto& [k, v] : other.coeffs_) add(k, v);
        return *this;
    }

    DivisorClass& operator*=(const Rational& s) {
        if (s.is_zero()) coeffs_.clear();
        for (auto& [k, v] : coeffs_) v *= s;
        return *this;
    }

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a += b * Rational(-1); }
    friend DivisorClass operator*(DivisorClass a, const Rational& s) { return a *= s; }
    friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    /// "c*H + c*L_p + c*D[i,j]" in basis order, zero terms omitted, "0" when empty.
    std::string render() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [k, v] : coeffs_) {
            if (!out.empty()) out += " + ";
            out += v.str() + "*" + k.str();
        }
        return out;
    }

private:
    BasisElement canonical(const BasisElement& key) const {
        switch (key.kind) {
            case BasisElement::Kind::H:
                return BasisElement::H();
            case BasisElement::Kind::L:
                detail::require(key.a >= 1 && key.a <= basis_.r, ErrorKind::invalid_argument,
                                "no class " + key.str() + " in this basis");
                return key;
            case BasisElement::Kind::D:
                detail::require(basis_.is_valid_boundary(key.a, key.b), ErrorKind::invalid_argument,
                                "no class " + key.str() + " in this basis");
                return BasisElement::D(key.a, basis_.canonical_j(key.a, key.b));
        }
        return key;
    }

    void require_same_basis(const DivisorClass& other) const {
        detail::require(basis_ == other.basis_, ErrorKind::invalid_argument, "classes live in different bases");
    }

    PicBasis basis_;
    std::map<BasisElement, Rational> coeffs_;
};

namespace detail {

// Adds value(i, j) * D[i,j] over i in [i_from, floor(e/2)], j in [0, r],
// skipping invalid partitions and folding the i = e/2 symmetry.
template <typename F>
void add_boundary_sum(DivisorClass& cls, std::int64_t i_from, F&& value) {
    const auto& b = cls.basis();
    for (std::int64_t i = i_from; 2 * i <= b.e; ++i)
        for (std::int64_t j = 0; j <= b.r; ++j)
            if (b.is_valid_boundary(i, j)) cls.add(BasisElement::D(i, j), value(i, j));
}

}  // namespace detail

/// Dualizing sheaf of the unpointed stack:
/// (1/2e)[ -(n+1)(e+1) H + sum_{i>=1} ((n+1)(e-i)i - 4e) D[i,0] ].
inline DivisorClass omega_r0(std::int64_t n, std::int64_t e) {
    DivisorClass cls(make_basis(n, e, 0));
    const Rational pre(1, 2 * e);
    cls.add(BasisElement::H(), pre * Rational(-(n + 1) * (e + 1)));
    detail::add_boundary_sum(cls, 1, [&](std::int64_t i, std::int64_t) {
        return pre * Rational((n + 1) * (e - i) * i - 4 * e);
    });
    return cls;
}

/// First Chern class of the dualizing sheaf with r marked points.
inline DivisorClass c1_omega(std::int64_t n, std::int64_t e, std::int64_t r) {
    DivisorClass cls(make_basis(n, e, r));
    const Rational pre(1, 2 * e * e);
    cls.add(BasisElement::H(), pre * Rational(-(n + 1) * (e + 1) * e + 2 * r));
    for (std::int64_t p = 1; p <= r; ++p) cls.add(BasisElement::L(p), Rational(-1, 2 * e));
    detail::add_boundary_sum(cls, 0, [&](std::int64_t i, std::int64_t j) {
        return pre * Rational((n + 1) * e * (e - i) * i + 2 * e * e * j - 4 * e * i * j + 2 * r * i * i - 4 * e * e);
    });
    return cls;
}

inline std::int64_t rank_Pd(std::int64_t e, std::int64_t d) { return e * d + 1; }

/// C_1(P_d) = (d/2e)[ (ed+1) H - sum_{i>=1, j} i(e-i) D[i,j] ].
inline DivisorClass c1_Pd(std::int64_t n, std::int64_t e, std::int64_t r, std::int64_t d) {
    modsing::detail::require(d >= 0, ErrorKind::out_of_bounds, "d must be non-negative");
    DivisorClass cls(make_basis(n, e, r));
    const Rational pre(d, 2 * e);
    cls.add(BasisElement::H(), pre * Rational(e * d + 1));
    detail::add_boundary_sum(cls, 1, [&](std::int64_t i, std::int64_t) { return -pre * Rational(i * (e - i)); });
    return cls;
}

inline std::int64_t rank_P_tuple(std::int64_t e, std::span<const std::int64_t> ds) {
    return std::accumulate(ds.begin(), ds.end(), std::int64_t{0}) * e + static_cast<std::int64_t>(ds.size());
}

/*
 * (1/2e) prod_k (e d_k + 1) [ (sum_k d_k) H - (sum_k d_k/(e d_k + 1)) sum_{i>=1, j} i(e-i) D[i,j] ]
 * The boundary sign is the one under which a one-entry tuple reproduces c1_Pd.
 */
inline DivisorClass c1_P_tuple(std::int64_t n, std::int64_t e, std::int64_t r, std::span<const std::int64_t> ds) {
    modsing::detail::require(!ds.empty(), ErrorKind::invalid_argument, "degree tuple must be non-empty");
    DivisorClass cls(make_basis(n, e, r));
    Rational product(1), degree_sum(0), weighted(0);
    for (auto d : ds) {
        modsing::detail::require(d >= 1, ErrorKind::out_of_bounds, "tuple degrees must be positive");
        product *= Rational(e * d + 1);
        degree_sum += Rational(d);
        weighted += Rational(d, e * d + 1);
    }
    const Rational pre = Rational(1, 2 * e) * product;
    cls.add(BasisElement::H(), pre * degree_sum);
    detail::add_boundary_sum(cls, 1, [&](std::int64_t i, std::int64_t) {
        return -pre * weighted * Rational(i * (e - i));
    });
    return cls;
}

/// Canonical class of the stack of degree-e maps to a degree-d hypersurface: omega + C_1(P_d).
inline DivisorClass canonical_hypersurface(std::int64_t n, std::int64_t d, std::int64_t e) {
    modsing::detail::require(d >= 1, ErrorKind::out_of_bounds, "d must be at least 1");
    return omega_r0(n, e) + c1_Pd(n, e, 0, d);
}

/// The same class from its closed form:
/// (1/2e)[ ((d^2-n-1)e - (n+1-d)) H + sum_i ((n+1-d) i(e-i) - 4e) D[i,0] ].
inline DivisorClass canonical_hypersurface_closed_form(std::int64_t n, std::int64_t d, std::int64_t e) {
    modsing::detail::require(d >= 1, ErrorKind::out_of_bounds, "d must be at least 1");
    DivisorClass cls(make_basis(n, e, 0));
    const Rational pre(1, 2 * e);
    cls.add(BasisElement::H(), pre * Rational((d * d - n - 1) * e - (n + 1 - d)));
    detail::add_boundary_sum(cls, 1, [&](std::int64_t i, std::int64_t) {
        return pre * Rational((n + 1 - d) * i * (e - i) - 4 * e);
    });
    return cls;
}

/// Complete intersection of multidegree ds with r marked points, by adjunction.
inline DivisorClass canonical_ci(std::int64_t n, std::span<const std::int64_t> ds, std::int64_t e, std::int64_t r) {
    return c1_omega(n, e, r) + c1_P_tuple(n, e, r, ds);
}

struct BignessHypotheses {
    bool birational_generic = false;
    bool irreducible_generic = false;
};

struct BignessResult {
    bool big = false;
    std::string certificate;
};

/*
 * One-sided test: under the hypotheses H is big and every D[i,0] is
 * effective, so positive*H + sum nonneg*D[i,0] is big. A false result
 * proves nothing.
 */
inline BignessResult is_big_sufficient(const DivisorClass& cls, const BignessHypotheses& hyp) {
    modsing::detail::require(cls.basis().r == 0, ErrorKind::unsupported_basis,
                             "bigness test needs the unpointed basis (r = 0)");
    if (!hyp.birational_generic || !hyp.irreducible_generic)
        return {false, "hypotheses not met: generic birationality and irreducible domain required"};

    const Rational h = cls.coeff(BasisElement::H());
    if (h.sign() <= 0) return {false, "indefinite: H coefficient " + h.str() + " is not positive"};

    std::string effective;
    for (std::int64_t i = 1; 2 * i <= cls.basis().e; ++i) {
        const Rational c = cls.coeff(BasisElement::D(i, 0));
        if (c.sign() < 0) return {false, "indefinite: D[" + std::to_string(i) + ",0] coefficient " + c.str() + " < 0"};
        effective += " + " + c.str() + "*D[" + std::to_string(i) + ",0]";
    }
    return {true, "big: " + h.str() + "*H" + effective + " (positive multiple of big H plus effective boundary)"};
}

struct KbigRegion {
    struct EventuallyBig {
        bool holds_hypotheses = false;
        std::optional<std::int64_t> e_threshold;
    } item1;
    struct AlwaysBig {
        bool holds_hypotheses = false;
        bool big_for_all_e = false;
    } item2;
};

/// Generic hypotheses of the bigness test hold for a general hypersurface when 2d < n+1.
inline BignessHypotheses general_hypersurface_hypotheses(std::int64_t n, std::int64_t d) {
    const bool ok = 2 * d < n + 1;
    return {ok, ok};
}

/*
 * Scans e = 1..e_max for the canonical class of maps to a general degree-d
 * hypersurface in P^n.
 *   item1: d < min(n-3, (n+1)/2) and d^2 >= n+2; e_threshold is the
 *          smallest e0 such that the test passes for every e in [e0, e_max].
 *   item2: d < min(n-6, (n+1)/2) and d^2 + d >= 2n+2; big_for_all_e is
 *          whether the test passes for every e in [1, e_max].
 * (n, e) = (2, 2) is skipped.
 */
inline KbigRegion kbig_region(std::int64_t n, std::int64_t d, std::int64_t e_max) {
    modsing::detail::require(n > 1 && d >= 1 && e_max >= 1, ErrorKind::out_of_bounds, "need n > 1, d >= 1, e_max >= 1");
    const auto hyp = general_hypersurface_hypotheses(n, d);
    const bool below_half = 2 * d < n + 1;

    KbigRegion out;
    out.item1.holds_hypotheses = d < n - 3 && below_half && d * d >= n + 2;
    out.item2.holds_hypotheses = d < n - 6 && below_half && d * d + d >= 2 * n + 2;

    std::vector<bool> passes;
    for (std::int64_t e = 1; e <= e_max; ++e) {
        if (n == 2 && e == 2) {
            passes.push_back(true);
            continue;
        }
        passes.push_back(is_big_sufficient(canonical_hypersurface(n, d, e), hyp).big);
    }
    out.item2.big_for_all_e = std::ranges::all_of(passes, [](bool b) { return b; });
    for (std::int64_t e = e_max; e >= 1 && passes[static_cast<std::size_t>(e - 1)]; --e) out.item1.e_threshold = e;
    return out;
}

}  // namespace modsing::picard
