#include "test_util.hpp"

#include <gfano/k3_pencil.hpp>

#include <gtest/gtest.h>

using namespace gfano;
using gfano::testing::error_of;

TEST(K3Pencil, Dot)
{
    EXPECT_EQ(dot({1, 2}, {1, 0}), 0);
    EXPECT_EQ(dot({0, 1}, {0, 1}), 0);
    EXPECT_EQ(dot({1, 5}, {1, 0}), 3);
    for (Int m = -5; m <= 40; ++m)
        EXPECT_EQ(dot({1, m}, {1, 0}), m - 2);
}

TEST(K3Pencil, LatticeIsEven)
{
    for (Int g = -20; g <= 20; ++g)
        for (Int l = -20; l <= 20; ++l)
            ASSERT_EQ(square({g, l}) % 2, 0);
}

TEST(K3Pencil, SaintDonatForm)
{
    EXPECT_EQ(saint_donat_form({1, 4}), 4);
    EXPECT_EQ(error_of([] { saint_donat_form({1, 1}); }), Errc::NotElephantShape);
    EXPECT_EQ(error_of([] { saint_donat_form({2, 5}); }), Errc::NotElephantShape);
}

TEST(K3Pencil, BaseLocusAndDegree)
{
    EXPECT_EQ(base_locus_dimension(2), 0);
    EXPECT_EQ(base_locus_dimension(3), 1);
    EXPECT_EQ(base_locus_dimension(12), 1);
    EXPECT_EQ(error_of([] { base_locus_dimension(1); }), Errc::InvalidM);
    EXPECT_EQ(fano_degree(2), 2);
    EXPECT_EQ(fano_degree(4), 6);
    EXPECT_EQ(fano_degree(12), 22);
    for (Int m = 2; m <= 100; ++m)
        ASSERT_EQ(fano_degree(m), square({1, m}));
    EXPECT_EQ(error_of([] { fano_degree(0); }), Errc::InvalidM);
}

TEST(K3Pencil, CoverPullback)
{
    EXPECT_EQ(cover_pullback({4, 1, 7}), (PencilClass{2, 7}));
    EXPECT_EQ(cover_pullback(surface_fiber(4)), (PencilClass{0, 1}));
    EXPECT_EQ(square(cover_pullback({4, 1, 5})), 12);
    EXPECT_EQ(intersect2({4, 1, 5}, {4, 1, 5}), 6);
    EXPECT_EQ(error_of([] { cover_pullback({3, 1, 3}); }), Errc::WrongSurface);
    for (Int xi = -8; xi <= 8; ++xi)
        for (Int fib = -15; fib <= 15; ++fib) {
            const SurfaceClass c{4, xi, fib};
            ASSERT_EQ(square(cover_pullback(c)), 2 * intersect2(c, c));
        }
}

TEST(K3Pencil, BlowupSectionReduce)
{
    EXPECT_EQ(blowup_section_reduce({2, 9}), (PencilClass{1, 9}));
    EXPECT_EQ(blowup_section_reduce({1, 2}), (PencilClass{0, 2}));
    EXPECT_EQ(square(blowup_section_reduce({1, 7})), 0);
    EXPECT_EQ(error_of([] { blowup_section_reduce({0, 3}); }), Errc::NoSection);
    for (Int m = 2; m <= 30; ++m)
        EXPECT_EQ(blowup_section_reduce(cover_pullback({4, 1, m})), (PencilClass{1, m}));
}
