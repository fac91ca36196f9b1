#include "oracles.hpp"
#include "test_util.hpp"

#include <gfano/double_cover.hpp>
#include <gfano/surface.hpp>

#include <gtest/gtest.h>

using namespace gfano;
using gfano::testing::error_of;

TEST(DoubleCover, BranchClass)
{
    EXPECT_EQ(branch_for_taut_anticanonical(Scroll{5, 1, 0}).branch, (DivisorClass{4, -8}));
    EXPECT_EQ(branch_for_taut_anticanonical(Scroll{3, 0, -1}).branch, (DivisorClass{4, 0}));
    EXPECT_EQ(branch_for_taut_anticanonical(Scroll{1, 1, 0}).branch, (DivisorClass{4, 0}));
    for (Int m = 3; m <= 30; ++m)
        EXPECT_EQ(branch_for_taut_anticanonical(Scroll{m, m - 4, 0}).branch, (DivisorClass{4, -(4 * m - 12)}));
    EXPECT_EQ(error_of([] { branch_for_taut_anticanonical(Scroll{4, 0}); }), Errc::WrongRank);
}

TEST(DoubleCover, AdjunctionClosesAndDegreeDoubles)
{
    for (Int a = -2; a <= 8; ++a)
        for (Int b = -2; b <= 8; ++b)
            for (Int c = -2; c <= 8; ++c) {
                const Scroll s{a, b, c};
                const auto spec = branch_for_taut_anticanonical(s);
                ASSERT_EQ(spec.branch, 2 * spec.half);
                ASSERT_EQ(canonical_class(s) + spec.half + kTautological, DivisorClass{});
                if (s.delta() >= 1) {
                    ASSERT_EQ(cover_degree(spec), 2 * s.delta());
                }
            }
}

TEST(DoubleCover, CoverDegreeExamples)
{
    EXPECT_EQ(cover_degree(branch_for_taut_anticanonical(Scroll{5, 1, 0})), 12);
    EXPECT_EQ(cover_degree(branch_for_taut_anticanonical(Scroll{12, 8, 0})), 40);
    EXPECT_EQ(cover_degree(branch_for_taut_anticanonical(Scroll{1, 1, 0})), 4);
}

TEST(DoubleCover, AnalyzeExamples)
{
    const auto r13 = analyze_um(13);
    EXPECT_EQ(r13.fiber_mult, 4);
    EXPECT_EQ(r13.verdict, Verdict::FailsDuValNecessary);
    EXPECT_EQ(r13.b_mult, 1);

    const auto r12 = analyze_um(12);
    EXPECT_EQ(r12.fiber_mult, 3);
    EXPECT_EQ(r12.verdict, Verdict::PassesDuValNecessary);

    const auto r3 = analyze_um(3);
    EXPECT_EQ(r3.base, (Scroll{3, 0, -1}));
    ASSERT_TRUE(r3.fiber_mult.has_value());
    EXPECT_LE(*r3.fiber_mult, 1);
    EXPECT_EQ(r3.verdict, Verdict::PassesDuValNecessary);
    // The branch divisor can avoid B when m = 3: x_2^4 has a constant coefficient.
    EXPECT_EQ(oracle::h0_by_monomials({3, 0, -1}, 4, 0), 61);
    EXPECT_EQ(oracle::h0_by_monomials({3, 0, -1}, 3, 3), 60);
    EXPECT_EQ(r3.b_mult, 0);

    EXPECT_EQ(error_of([] { analyze_um(2); }), Errc::InvalidM);
}

TEST(DoubleCover, VerdictBoundary)
{
    for (Int m = 3; m <= 30; ++m) {
        const auto r = analyze_um(m);
        EXPECT_EQ(r.verdict == Verdict::PassesDuValNecessary, m <= 12) << "m = " << m;
        EXPECT_EQ(r.b_class, (DivisorClass{1, -m}));
        EXPECT_EQ(r.residual_class, (DivisorClass{3, -(3 * m - 12)}));
        EXPECT_EQ(r.rbs, 0);
        if (m >= 4) {
            EXPECT_EQ(r.b_mult, 1) << "m = " << m;
        }
        if (m >= 13) {
            EXPECT_EQ(r.fiber_mult, 4);
        }
    }
}

TEST(DoubleCover, RestrictionToSigmaFour)
{
    for (Int m = 4; m <= 30; ++m) {
        const auto r = analyze_um(m);
        const auto [sub, c] = restrict_to_subscroll(r.base, {0, 1}, r.branch);
        EXPECT_EQ(from_scroll(sub, c), (SurfaceClass{4, 4, 12})) << "m = " << m;
    }
}
