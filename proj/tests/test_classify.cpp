#include <gtest/gtest.h>

#include "modsing/classify.hpp"
#include "modsing/cyclic_rep.hpp"
#include "modsing/report_io.hpp"
#include "report_schema.hpp"

using namespace modsing;
using namespace modsing::classify;

TEST(CoarseStatus, Examples) {
    EXPECT_EQ(coarse_space_status(1, 3), CoarseStatus::canonical);
    EXPECT_EQ(coarse_space_status(3, 2), CoarseStatus::canonical);
    EXPECT_EQ(coarse_space_status(5, 4), CoarseStatus::terminal);
    EXPECT_EQ(coarse_space_status(1, 2), CoarseStatus::excluded);
    EXPECT_EQ(coarse_space_status(2, 2), CoarseStatus::excluded);
}

TEST(Gorenstein, Examples) {
    EXPECT_EQ(gorenstein_status(4, 2), Gorenstein::no);
    EXPECT_EQ(gorenstein_status(4, 3), Gorenstein::yes);
    EXPECT_EQ(gorenstein_status(1, 2), Gorenstein::excluded);
}

TEST(Gorenstein, ParityRule) {
    for (std::int64_t n = 1; n <= 12; ++n)
        for (std::int64_t e = 1; e <= 12; ++e) {
            if (is_excluded_pair(n, e)) {
                EXPECT_EQ(gorenstein_status(n, e), Gorenstein::excluded);
                continue;
            }
            EXPECT_EQ(gorenstein_status(n, e) == Gorenstein::no, n % 2 == 0 && e % 2 == 0);
        }
}

TEST(CoarseCd, Examples) {
    EXPECT_EQ(coarse_Cd_status(10, 5, 3), (CoarseCdStatus{true, true, true}));
    EXPECT_EQ(coarse_Cd_status(10, 7, 3), (CoarseCdStatus{true, true, true}));
    EXPECT_EQ(coarse_Cd_status(5, 1, 2), (CoarseCdStatus{true, false, true}));
    EXPECT_EQ(coarse_Cd_status(5, 3, 2), (CoarseCdStatus{true, false, false}));
    EXPECT_EQ(coarse_Cd_status(5, 4, 2), (CoarseCdStatus{false, false, false}));
    EXPECT_EQ(coarse_Cd_status(5, 1, 1), (CoarseCdStatus{false, false, false}));
}

TEST(FullReport, BoundaryTriple) {
    const auto r = full_report(13, 6, 2);
    EXPECT_TRUE(r.stack_Cd.theorem_applies);
    EXPECT_EQ(r.coarse_kbm_Pn.status.value, "terminal");
    EXPECT_EQ(r.coarse_kbm_Pn.gorenstein.value, "yes");
    EXPECT_EQ(r.canonical_class.value, "9/1*H");
    EXPECT_EQ(r.bigness.sufficient_test.value, true);
    EXPECT_TRUE(r.general_type_conditional);
    EXPECT_EQ(r.kbm_X.coarse_noniso_codim.value, 12);
}

TEST(FullReport, Examples) {
    const auto a = full_report(5, 2, 3);
    EXPECT_TRUE(a.stack_Cd.theorem_applies);
    EXPECT_EQ(a.kbm_X.expected_dim.value, 14);
    EXPECT_EQ(a.coarse_kbm_Pn.status.value, "terminal");
    EXPECT_EQ(a.coarse_kbm_Pn.gorenstein.value, "yes");

    const auto b = full_report(4, 3, 2);
    EXPECT_FALSE(b.stack_Cd.theorem_applies);
    EXPECT_FALSE(b.kbm_X.expected_dim.applicable());
    EXPECT_EQ(b.kbm_X.expected_dim.reason(), "not-applicable: d+e <= n fails");
}

TEST(FullReport, ExcludedPairIsClassFree) {
    const auto r = full_report(2, 1, 2);
    EXPECT_EQ(r.coarse_kbm_Pn.status.value, "excluded");
    EXPECT_FALSE(r.canonical_class.applicable());
    EXPECT_FALSE(r.bigness.sufficient_test.applicable());
    EXPECT_FALSE(r.general_type_conditional);
}

TEST(FullReport, LinesRouteToFanoScheme) {
    const auto r = full_report(3, 3, 1);
    EXPECT_EQ(r.kbm_X.expected_dim.value, 0);
    EXPECT_FALSE(r.coarse_kbm_Pn.status.applicable());
    const auto empty = full_report(3, 4, 1);
    EXPECT_FALSE(empty.kbm_X.expected_dim.applicable());
}

TEST(FullReport, RejectsBadInput) { EXPECT_THROW(full_report(1, 1, 3), Error); }

TEST(FullReport, GatingSoundness) {
    for (std::int64_t n = 2; n <= 12; ++n)
        for (std::int64_t d = 1; d <= 8; ++d)
            for (std::int64_t e = 1; e <= 8; ++e) {
                const auto r = full_report(n, d, e);
                EXPECT_EQ(r, full_report(n, d, e));
                if (d + e > n || e < 2) { EXPECT_FALSE(r.stack_Cd.theorem_applies); }
                if (e >= 2 && d + e > n) { EXPECT_FALSE(r.kbm_X.expected_dim.applicable()); }
                if (!r.coarse_Cd.canonical_if_conjecture) { EXPECT_FALSE(r.general_type_conditional); }
                if (r.general_type_conditional) { EXPECT_EQ(r.bigness.sufficient_test.value, true); }
                if (2 * d >= n + 1 && r.bigness.sufficient_test.applicable()) {
                    EXPECT_EQ(r.bigness.sufficient_test.value, false);
                }
                EXPECT_TRUE(report_schema::validate(io::to_json(r)).empty());
            }
}

TEST(CrossModule, TerminalMeansInvariantAboveOne) {
    for (std::int64_t n = 1; n <= 8; ++n)
        for (std::int64_t e = 2; e <= 12; ++e) {
            const auto status = coarse_space_status(n, e);
            Rational lowest(1000);
            bool hits_one = false;
            for (std::int64_t r = 2; r <= e; ++r) {
                if (e % r) continue;
                const auto alpha = rsbt_invariant(tangent_rep_multiple_cover(n, e, r).total());
                lowest = min(lowest, alpha);
                hits_one = hits_one || alpha == Rational(1);
                if (status == CoarseStatus::terminal) { EXPECT_GT(alpha, Rational(1)) << n << ' ' << e << ' ' << r; }
            }
            if (status == CoarseStatus::canonical) { EXPECT_GE(lowest, Rational(1)) << n << ' ' << e; }
        }
    // The two boundary cases reach exactly 1 at a multiple cover.
    EXPECT_EQ(rsbt_invariant(tangent_rep_multiple_cover(1, 3, 3).total()), Rational(1));
    EXPECT_EQ(rsbt_invariant(tangent_rep_multiple_cover(3, 2, 2).total()), Rational(1));
}

TEST(Scan, RangesAndFilters) {
    EXPECT_EQ(parse_range("3..7").lo, 3);
    EXPECT_EQ(parse_range("3..7").hi, 7);
    EXPECT_EQ(parse_range("5").hi, 5);
    EXPECT_TRUE(parse_range("4..2").empty());
    EXPECT_THROW(parse_range("a..3"), Error);
    EXPECT_THROW(parse_range("3.."), Error);
    EXPECT_THROW(parse_filter("bigg"), Error);
    EXPECT_THROW(parse_filter("gorenstein=maybe"), Error);

    EXPECT_TRUE(scan(parse_range("4..2"), parse_range("1"), parse_range("1"), parse_filter("all")).empty());
}

TEST(Scan, OrderedAndDeterministic) {
    const auto a = scan({2, 9}, {1, 5}, {1, 6}, parse_filter("all"));
    ASSERT_EQ(a.size(), 8u * 5u * 6u);
    for (std::size_t i = 1; i < a.size(); ++i)
        EXPECT_LT(std::tie(a[i - 1].input.n, a[i - 1].input.d, a[i - 1].input.e),
                  std::tie(a[i].input.n, a[i].input.d, a[i].input.e));
    EXPECT_EQ(a, scan({2, 9}, {1, 5}, {1, 6}, parse_filter("all")));
}

TEST(Scan, GorensteinFilterIsBothEven) {
    const auto reps = scan({2, 10}, {1, 1}, {1, 10}, parse_filter("gorenstein=no"));
    std::size_t expected = 0;
    for (std::int64_t n = 2; n <= 10; ++n)
        for (std::int64_t e = 1; e <= 10; ++e)
            if (n % 2 == 0 && e % 2 == 0 && !is_excluded_pair(n, e)) ++expected;
    EXPECT_EQ(reps.size(), expected);
    for (const auto& r : reps) {
        EXPECT_EQ(r.input.n % 2, 0);
        EXPECT_EQ(r.input.e % 2, 0);
    }
}

TEST(Scan, BignessRegionAllBig) {
    for (std::int64_t n = 2; n <= 30; ++n)
        for (std::int64_t d = 1; 2 * d < n + 1 && d < n - 6; ++d) {
            if (d * d + d < 2 * n + 3) continue;
            for (const auto& r : scan({n, n}, {d, d}, {1, 20}, parse_filter("all")))
                EXPECT_EQ(r.bigness.sufficient_test.value, true) << n << ' ' << d << ' ' << r.input.e;
        }
}

TEST(ReportIo, CsvShape) {
    std::ostringstream os;
    io::write_csv(os, {full_report(5, 2, 3), full_report(3, 2, 2)});
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("n,d,e,stack_Cd.theorem_applies", 0), 0u);
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 2);
    EXPECT_EQ(io::csv_columns().size(), io::csv_fields(full_report(5, 2, 3)).size());
}
