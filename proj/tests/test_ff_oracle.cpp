#include <gtest/gtest.h>

#include "modsing/ff_oracle.hpp"

using namespace modsing;
using namespace modsing::ff_oracle;

namespace {

BigInt ipow(std::int64_t b, std::int64_t e) {
    BigInt acc = 1;
    for (std::int64_t i = 0; i < e; ++i) acc *= b;
    return acc;
}

}  // namespace

TEST(CountByRank, Examples) {
    auto c = count_by_rank(2, 2, 2);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->counts, (std::vector<std::uint64_t>{1, 9, 6}));

    auto v = count_by_rank(2, 1, 2);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->counts, (std::vector<std::uint64_t>{1, 3}));

    for (std::int64_t p : {2, 3, 5, 7}) {
        auto z = count_by_rank(p, 2, 2);
        ASSERT_TRUE(z.has_value());
        EXPECT_EQ(z->counts[0], 1u);
    }
}

TEST(CountByRank, SingularTwoByTwoOverF2) {
    auto c = count_by_rank(2, 2, 2);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->counts[0] + c->counts[1], 10u);
}

TEST(CountByRank, TotalsAndAgreement) {
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t g = 1; g <= 4; ++g)
            for (std::int64_t f = g; g * f <= max_cells; ++f) {
                auto c = count_by_rank(p, g, f);
                if (!c) continue;
                BigInt total = 0;
                for (std::size_t k = 0; k < c->counts.size(); ++k) {
                    total += c->counts[k];
                    EXPECT_EQ(BigInt(c->counts[k]), qanalog_count(p, g, f, static_cast<std::int64_t>(k)));
                }
                EXPECT_EQ(total, ipow(p, g * f));
                EXPECT_EQ(c->counts.size(), static_cast<std::size_t>(std::min(g, f) + 1));
            }
}

TEST(CountByRank, CapAndErrors) {
    EXPECT_FALSE(count_by_rank(7, 3, 4).has_value());
    EXPECT_FALSE(count_by_rank(5, 3, 4).has_value());
    EXPECT_TRUE(count_by_rank(3, 3, 4).has_value());
    try {
        count_by_rank(2, 4, 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::enumeration_bound);
    }
    EXPECT_THROW(count_by_rank(4, 2, 2), Error);
}

TEST(CountByRank, TransposeSymmetry) {
    for (std::int64_t p : {2, 3}) {
        auto a = count_by_rank(p, 2, 3);
        auto b = count_by_rank(p, 3, 2);
        ASSERT_TRUE(a && b);
        EXPECT_EQ(a->counts, b->counts);
    }
}

TEST(QAnalog, Examples) {
    EXPECT_EQ(qanalog_count(2, 2, 2, 2), 6);
    for (std::int64_t q = 2; q <= 9; ++q) EXPECT_EQ(qanalog_count(q, 3, 4, 0), 1);
    auto c = count_by_rank(3, 2, 3);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(qanalog_count(3, 2, 3, 1), BigInt(c->counts[1]));
}

TEST(QAnalog, PolynomialMatchesProductEverywhere) {
    for (std::int64_t g = 1; g <= 4; ++g)
        for (std::int64_t f = g; f <= 5; ++f)
            for (std::int64_t k = 0; k <= g; ++k) {
                const auto poly = rank_count_polynomial(g, f, k);
                EXPECT_EQ(poly.degree(), g * f - (f - k) * (g - k));
                for (std::int64_t q = 2; q <= 11; ++q) EXPECT_EQ(poly(BigInt(q)), qanalog_count(q, g, f, k));
            }
}

TEST(QAnalog, SingularTwoByTwoPolynomial) {
    // rank <= 1 count of 2x2 matrices is q^3 + q^2 - q.
    const auto p = rank_count_polynomial(2, 2, 0) + rank_count_polynomial(2, 2, 1);
    EXPECT_EQ(p.coeffs(), (std::vector<BigInt>{0, -1, 1, 1}));
}

TEST(VerifyCodim, Examples) {
    EXPECT_TRUE(verify_codim(2, 2, 1));
    EXPECT_TRUE(verify_codim(1, 2, 0));
    EXPECT_TRUE(verify_codim(3, 3, 2));
    EXPECT_THROW(verify_codim(4, 4, 1), Error);
}

TEST(VerifyCodim, AllSmallShapes) {
    for (std::int64_t g = 1; g <= 3; ++g)
        for (std::int64_t f = g; f <= 3; ++f)
            for (std::int64_t k = 0; k <= g; ++k) EXPECT_TRUE(verify_codim(g, f, k)) << g << ' ' << f << ' ' << k;
}
