#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <optional>
#include <thread>
#include <vector>

#include "modsing/error.hpp"
#include "modsing/rational.hpp"

// Brute-force rank statistics of matrix spaces over small prime fields, used
// to check the determinantal codimension formula independently of it.
namespace modsing::ff_oracle {

inline constexpr std::int64_t max_cells = 12;
inline constexpr std::uint64_t max_matrices = 100'000'000;

struct RankCount {
    std::int64_t p = 0;
    std::int64_t g = 0;
    std::int64_t f = 0;
    std::vector<std::uint64_t> counts;  // counts[k] = #{g x f matrices of rank exactly k}
};

namespace detail {

inline bool is_supported_prime(std::int64_t p) { return p == 2 || p == 3 || p == 5 || p == 7; }

inline std::optional<std::uint64_t> matrix_space_size(std::int64_t p, std::int64_t cells) {
    std::uint64_t total = 1;
    for (std::int64_t c = 0; c < cells; ++c) {
        total *= static_cast<std::uint64_t>(p);
        if (total > max_matrices) return std::nullopt;
    }
    return total;
}

inline int rank_mod_p(std::array<int, max_cells>& m, int rows, int cols, int p, const std::array<int, 8>& inv) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int row = rank; row < rows; ++row)
            if (m[row * cols + col] != 0) { pivot = row; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < cols; ++c) std::swap(m[pivot * cols + c], m[rank * cols + c]);
        const int scale = inv[m[rank * cols + col]];
        for (int c = col; c < cols; ++c) m[rank * cols + c] = m[rank * cols + c] * scale % p;
        for (int row = rank + 1; row < rows; ++row) {
            const int factor = m[row * cols + col];
            if (factor == 0) continue;
            for (int c = col; c < cols; ++c)
                m[row * cols + c] = ((m[row * cols + c] - factor * m[rank * cols + c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Counts by rank for matrix indices [begin, end) of the base-p enumeration.
inline std::vector<std::uint64_t> count_chunk(int p, int g, int f, std::uint64_t begin, std::uint64_t end) {
    std::array<int, 8> inv{};
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b)
            if (a * b % p == 1) inv[a] = b;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::min(g, f)) + 1, 0);
    std::array<int, max_cells> m{};
    const int cells = g * f;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint64_t rest = idx;
        for (int c = 0; c < cells; ++c) {
            m[c] = static_cast<int>(rest % static_cast<std::uint64_t>(p));
            rest /= static_cast<std::uint64_t>(p);
        }
        ++counts[static_cast<std::size_t>(rank_mod_p(m, g, f, p, inv))];
    }
    return counts;
}

}  // namespace detail

/*
 * Exact rank distribution by exhaustive enumeration of all p^{gf} matrices.
 * Returns nullopt ("skipped") when p^{gf} exceeds max_matrices.
 */
inline std::optional<RankCount> count_by_rank(std::int64_t p, std::int64_t g, std::int64_t f) {
    modsing::detail::require(detail::is_supported_prime(p), ErrorKind::out_of_bounds, "p must be one of 2, 3, 5, 7");
    modsing::detail::require(g >= 1 && f >= 1, ErrorKind::out_of_bounds, "g and f must be positive");
    modsing::detail::require(g * f <= max_cells, ErrorKind::enumeration_bound, "g*f must not exceed 12");
    auto total = detail::matrix_space_size(p, g * f);
    if (!total) return std::nullopt;

    const std::uint64_t workers = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t chunk = (*total + workers - 1) / workers;
    std::vector<std::future<std::vector<std::uint64_t>>> parts;
    for (std::uint64_t begin = 0; begin < *total; begin += chunk) {
        const std::uint64_t end = std::min(*total, begin + chunk);
        parts.push_back(std::async(std::launch::async, detail::count_chunk, static_cast<int>(p),
                                   static_cast<int>(g), static_cast<int>(f), begin, end));
    }
    RankCount out{p, g, f, std::vector<std::uint64_t>(static_cast<std::size_t>(std::min(g, f)) + 1, 0)};
    for (auto& part : parts) {
        auto counts = part.get();
        for (std::size_t k = 0; k < counts.size(); ++k) out.counts[k] += counts[k];
    }
    return out;
}

namespace detail {

inline BigInt pow(const BigInt& base, std::int64_t exp) {
    BigInt acc = 1;
    for (std::int64_t i = 0; i < exp; ++i) acc *= base;
    return acc;
}

}  // namespace detail

/// prod_{i<k} (q^g - q^i)(q^f - q^i) / (q^k - q^i): rank-k g x f matrices over F_q.
inline BigInt qanalog_count(std::int64_t q, std::int64_t g, std::int64_t f, std::int64_t k) {
    modsing::detail::require(q >= 2, ErrorKind::out_of_bounds, "q must be at least 2");
    modsing::detail::require(g >= 0 && f >= 0 && k >= 0 && k <= std::min(g, f), ErrorKind::out_of_bounds,
                             "need 0 <= k <= min(g, f)");
    const BigInt qq = q;
    BigInt num = 1, den = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        const BigInt qi = detail::pow(qq, i);
        num *= (detail::pow(qq, g) - qi) * (detail::pow(qq, f) - qi);
        den *= detail::pow(qq, k) - qi;
    }
    return num / den;
}

/// Integer polynomial in q, coefficients low degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// x^hi - x^lo
    static Poly binomial_difference(std::int64_t hi, std::int64_t lo) {
        std::vector<BigInt> c(static_cast<std::size_t>(std::max(hi, lo)) + 1, 0);
        c[static_cast<std::size_t>(hi)] += 1;
        c[static_cast<std::size_t>(lo)] -= 1;
        return Poly(std::move(c));
    }

    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt operator()(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }

    /// Exact division by a monic polynomial; throws if a remainder is left.
    Poly divide_exact(const Poly& monic) const {
        modsing::detail::require(!monic.c_.empty() && monic.c_.back() == 1, ErrorKind::invalid_argument,
                                 "divisor must be monic");
        if (c_.empty()) return {};
        std::vector<BigInt> rem = c_;
        const auto dd = monic.c_.size() - 1;
        modsing::detail::require(rem.size() - 1 >= dd, ErrorKind::invalid_argument, "inexact polynomial division");
        std::vector<BigInt> quot(rem.size() - dd, 0);
        for (std::size_t pos = rem.size(); pos-- > dd;) {
            const BigInt lead = rem[pos];
            quot[pos - dd] = lead;
            for (std::size_t j = 0; j <= dd; ++j) rem[pos - dd + j] -= lead * monic.c_[j];
        }
        modsing::detail::require(std::ranges::all_of(rem, [](const BigInt& v) { return v == 0; }),
                                 ErrorKind::invalid_argument, "inexact polynomial division");
        return Poly(std::move(quot));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// The q-analog count as a polynomial in q.
inline Poly rank_count_polynomial(std::int64_t g, std::int64_t f, std::int64_t k) {
    modsing::detail::require(g >= 0 && f >= 0 && k >= 0 && k <= std::min(g, f), ErrorKind::out_of_bounds,
                             "need 0 <= k <= min(g, f)");
    Poly num({1}), den({1});
    for (std::int64_t i = 0; i < k; ++i) {
        num = num * Poly::binomial_difference(g, i) * Poly::binomial_difference(f, i);
        den = den * Poly::binomial_difference(k, i);
    }
    return num.divide_exact(den);
}

inline constexpr std::array<std::int64_t, 3> verification_primes{2, 3, 5};

/*
 * True iff the number of g x f matrices of rank <= k is a polynomial in q of
 * degree gf - (f-k)(g-k), and the brute-force counts over F_2, F_3, F_5
 * agree with the q-analog product and its polynomial for every rank.
 * Primes whose enumeration exceeds the cap are not checked.
 */
inline bool verify_codim(std::int64_t g, std::int64_t f, std::int64_t k) {
    modsing::detail::require(g >= 1 && f >= 1 && g * f <= max_cells, ErrorKind::enumeration_bound,
                             "g*f must lie in [1, 12]");
    modsing::detail::require(k >= 0 && k <= std::min(g, f), ErrorKind::out_of_bounds, "need 0 <= k <= min(g, f)");

    Poly at_most_k;
    for (std::int64_t j = 0; j <= k; ++j) at_most_k = at_most_k + rank_count_polynomial(g, f, j);
    if (at_most_k.degree() != g * f - (f - k) * (g - k)) return false;

    for (auto p : verification_primes) {
        auto counts = count_by_rank(p, g, f);
        if (!counts) continue;
        for (std::int64_t j = 0; j <= std::min(g, f); ++j) {
            const BigInt brute = counts->counts[static_cast<std::size_t>(j)];
            if (brute != qanalog_count(p, g, f, j)) return false;
            if (brute != rank_count_polynomial(g, f, j)(BigInt(p))) return false;
        }
    }
    return true;
}

}  // namespace modsing::ff_oracle
