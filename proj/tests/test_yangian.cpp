#include "wkit/parse.hpp"
#include "wkit/yangian.hpp"

#include <gtest/gtest.h>

using namespace wkit;

namespace {

bool quartic_vanishes_everywhere(const Poly& s2, int bound)
{
    for (int i = 0; i <= bound; ++i)
        for (int j = 0; j <= bound; ++j)
            if (!quartic_residual_w(i, j, s2).is_zero())
                return false;
    return true;
}

void expect_same_report(const SweepReport& a, const SweepReport& b)
{
    ASSERT_EQ(a.cells.size(), b.cells.size());
    for (std::size_t k = 0; k < a.cells.size(); ++k) {
        EXPECT_EQ(a.cells[k].relation, b.cells[k].relation);
        EXPECT_EQ(a.cells[k].indices, b.cells[k].indices);
        EXPECT_EQ(a.cells[k].vanishes_by_sign, b.cells[k].vanishes_by_sign);
        EXPECT_EQ(a.cells[k].passes, b.cells[k].passes);
    }
    EXPECT_EQ(a.discovered_sign, b.discovered_sign);
    EXPECT_EQ(a.all_pass, b.all_pass);
}

} // namespace

TEST(Sigma, SymmetricFunctionsOfThreeParameters)
{
    EXPECT_EQ(sigma2(), parse_poly("-t1^2 - t1*t2 - t2^2"));
    EXPECT_EQ(sigma3(), parse_poly("-t1^2*t2 - t1*t2^2"));
}

TEST(QuarticW, OnlyMinusTFourthVanishes)
{
    EXPECT_FALSE(quartic_vanishes_everywhere(parse_poly("t^2"), 3));
    EXPECT_FALSE(quartic_vanishes_everywhere(parse_poly("-t^2"), 3));
    EXPECT_FALSE(quartic_vanishes_everywhere(parse_poly("t^4"), 3));
    EXPECT_TRUE(quartic_vanishes_everywhere(parse_poly("-t^4"), 4));
}

TEST(QuarticW, SignVariants)
{
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            EXPECT_TRUE(check_quartic(i, j, Model::w_deformed, SignVariant::plus).is_zero()) << i << "," << j;
    EXPECT_FALSE(check_quartic(0, 0, Model::w_deformed, SignVariant::minus).is_zero());
}

TEST(QuarticShuffle, StandardKernelSatisfiesRelation)
{
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            EXPECT_TRUE(check_quartic(i, j, Model::shuffle, SignVariant::plus).is_zero()) << i << "," << j;
            EXPECT_FALSE(check_quartic(i, j, Model::shuffle, SignVariant::minus).is_zero()) << i << "," << j;
        }
}

TEST(QuarticShuffle, WrongKernelIsDetected)
{
    ShuffleKernel wrong = ShuffleKernel::parse("(x+t1)(x+t2)/(x)");
    bool any_nonzero = false;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            any_nonzero = any_nonzero || !check_quartic(i, j, Model::shuffle, SignVariant::plus, wrong).is_zero();
    EXPECT_TRUE(any_nonzero);
}

TEST(Serre, HoldsInBothModels)
{
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                EXPECT_TRUE(check_serre(a, b, c, Model::w_deformed).is_zero());
                EXPECT_TRUE(check_serre(a, b, c, Model::shuffle).is_zero());
            }
}

TEST(Sweep, DiscoversPrintedSign)
{
    SweepReport w = sweep(3, 2, Model::w_deformed);
    EXPECT_TRUE(w.all_pass);
    ASSERT_TRUE(w.discovered_sign.has_value());
    EXPECT_EQ(*w.discovered_sign, SignVariant::plus);
    EXPECT_EQ(w.cells.size(), 16u + 27u);
}

TEST(Sweep, ThreadCountDoesNotChangeReport)
{
    expect_same_report(sweep(3, 2, Model::w_deformed, ShuffleKernel::standard(), 1),
                       sweep(3, 2, Model::w_deformed, ShuffleKernel::standard(), 4));
    expect_same_report(sweep({Relation::quartic}, 2, Model::shuffle, ShuffleKernel::standard(), 1),
                       sweep({Relation::quartic}, 2, Model::shuffle, ShuffleKernel::standard(), 3));
}

TEST(Residual, PrintsZeroWhenVanishing)
{
    EXPECT_EQ(check_quartic(1, 0, Model::w_deformed, SignVariant::plus).residual_string(), "0");
    EXPECT_EQ(parse_model("w"), Model::w_deformed);
    EXPECT_EQ(parse_model("shuffle"), Model::shuffle);
}
