#include "wkit/character.hpp"
#include "wkit/errors.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace wkit;

namespace {

struct Element {
    int weight;
    int degree;
};

// Symmetric algebra on even elements: enumerate multisets by nondecreasing index.
std::map<std::pair<int, int>, long> symmetric_power_dims(const std::vector<Element>& basis, int max_weight)
{
    std::map<std::pair<int, int>, long> out;
    std::function<void(std::size_t, int, int)> walk = [&](std::size_t from, int w, int deg) {
        out[{w, deg}] += 1;
        for (std::size_t i = from; i < basis.size(); ++i)
            if (w + basis[i].weight <= max_weight)
                walk(i, w + basis[i].weight, deg + basis[i].degree);
    };
    walk(0, 0, 0);
    return out;
}

Character from_dims(const std::map<std::pair<int, int>, long>& dims, Convention c, const Window& w)
{
    Character out(c, w);
    for (const auto& [key, d] : dims)
        out.add(out.t_exponent(key.first), key.second, d);
    return out;
}

// The undeformed BPS series: one element in every weight >= 1 and every even degree >= -2.
std::vector<Element> bps_undeformed_basis(int max_weight, int max_degree)
{
    std::vector<Element> basis;
    for (int w = 1; w <= max_weight; ++w)
        for (int deg = -2; deg <= max_degree; deg += 2)
            basis.push_back({w, deg});
    return basis;
}

} // namespace

TEST(Convention, ParseAndExponents)
{
    EXPECT_EQ(parse_convention("plain"), Convention::plain);
    EXPECT_EQ(parse_convention("doubled"), Convention::doubled);
    EXPECT_THROW(parse_convention("tripled"), ParseError);
    Character c(Convention::doubled, {3, 0, 0});
    EXPECT_EQ(c.t_exponent(3), 6);
    EXPECT_EQ(c.weight_of(5), -1);
    EXPECT_FALSE(c.in_window(8, 0));
}

TEST(ClosedForm, GrWDoubled)
{
    Window w{3, -4, 4};
    Character c = char_closed_form(ClosedForm::grW, w, Convention::doubled);
    for (int weight = 0; weight <= 3; ++weight)
        for (int k = -4; k <= 4; ++k) {
            int want = weight >= 1 && k >= -2 && k % 2 == 0 ? 1 : 0;
            EXPECT_EQ(c.coefficient(2 * weight, k), want) << weight << "," << k;
        }
    EXPECT_EQ(c.terms().size(), 3u * 4u);
}

TEST(ClosedForm, BpsSeriesPlain)
{
    Window w{3, -2, 4};
    Character und = char_closed_form(ClosedForm::bps_undeformed, w, Convention::plain);
    Character def = char_closed_form(ClosedForm::bps_deformed, w, Convention::plain);
    for (int weight = 1; weight <= 3; ++weight)
        for (int j = 0; j <= 3; ++j) {
            EXPECT_EQ(und.coefficient(weight, 2 * j - 2), 1);
            EXPECT_EQ(def.coefficient(weight, 2 * j - 2), j + 1);
        }
    EXPECT_EQ(und.coefficient(0, 0), 0);
    EXPECT_EQ(char_closed_form(ClosedForm::bps_undeformed, w, Convention::doubled),
              und.converted(Convention::doubled));
}

TEST(ClosedForm, ParseNames)
{
    for (auto f : {ClosedForm::grW, ClosedForm::bps_undeformed, ClosedForm::bps_deformed})
        EXPECT_EQ(parse_closed_form(to_string(f)), f);
    EXPECT_THROW(parse_closed_form("nope"), ParseError);
}

TEST(Plethystic, GeometricSeries)
{
    Window w{5, 0, 0};
    Character x(Convention::plain, w);
    x.add(1, 0, 1);
    Character pe = plethystic_exp(x, w);
    for (int n = 0; n <= 5; ++n)
        EXPECT_EQ(pe.coefficient(n, 0), 1);
    Character two(Convention::plain, w);
    two.add(1, 0, 2);
    Character pe2 = plethystic_exp(two, w);
    for (int n = 0; n <= 5; ++n)
        EXPECT_EQ(pe2.coefficient(n, 0), n + 1);
}

TEST(Plethystic, PartitionsCountedByWeight)
{
    Window w{8, 0, 0};
    Character c(Convention::plain, w);
    for (int k = 1; k <= 8; ++k)
        c.add(k, 0, 1);
    Character pe = plethystic_exp(c, w);
    const int partitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n)
        EXPECT_EQ(pe.coefficient(n, 0), partitions[n]);
}

TEST(Plethystic, FrozenWeightTwoValues)
{
    Window w{2, -6, 6};
    Character g = char_closed_form(ClosedForm::bps_undeformed, {2, -2, 12}, Convention::plain);
    Character pe = plethystic_exp(g, w);
    EXPECT_EQ(pe.coefficient(2, -4), 1);
    EXPECT_EQ(pe.coefficient(2, -2), 2);
    EXPECT_EQ(pe, from_dims(symmetric_power_dims(bps_undeformed_basis(2, 12), 2), Convention::plain, w));
}

TEST(Plethystic, AgreesWithMultisetEnumeration)
{
    Window w{4, -8, 6};
    Character g = char_closed_form(ClosedForm::bps_undeformed, {4, -2, 6 + 2 * 3}, Convention::plain);
    EXPECT_EQ(plethystic_exp(g, w),
              from_dims(symmetric_power_dims(bps_undeformed_basis(4, 12), 4), Convention::plain, w));
    EXPECT_EQ(pbw_character(g, false, w), plethystic_exp(g, w));
}

TEST(Plethystic, MultiplicativeOnDisjointSums)
{
    Window w{5, -6, 6};
    Character a(Convention::plain, w);
    a.add(1, -2, 1);
    a.add(2, 0, 2);
    Character b(Convention::plain, w);
    b.add(1, 2, 1);
    b.add(3, -2, 1);
    Character lhs = plethystic_exp(a + b, w);
    Character pa = plethystic_exp(a, {5, -30, 30});
    Character pb = plethystic_exp(b, {5, -30, 30});
    Character prod(Convention::plain, w);
    for (const auto& [ka, da] : pa.terms())
        for (const auto& [kb, db] : pb.terms())
            prod.add(ka.first + kb.first, ka.second + kb.second, da * db);
    EXPECT_EQ(lhs, prod);
}

TEST(Plethystic, RejectsBadInput)
{
    Window w{3, -4, 4};
    Character odd(Convention::plain, w);
    odd.add(1, 1, 1);
    EXPECT_THROW(plethystic_exp(odd, w), OddDegreeInput);
    Character zero_weight(Convention::plain, w);
    zero_weight.add(0, 2, 1);
    EXPECT_THROW(plethystic_exp(zero_weight, w), InvalidArgument);
}

TEST(TensorHT, ComposesAndRankZeroIsIdentity)
{
    Window w{3, -2, 8};
    Character und = char_closed_form(ClosedForm::bps_undeformed, w, Convention::plain);
    EXPECT_EQ(tensor_HT(und, 0), und);
    EXPECT_EQ(tensor_HT(und, 1), char_closed_form(ClosedForm::bps_deformed, w, Convention::plain));
    EXPECT_EQ(tensor_HT(tensor_HT(und, 1), 1), tensor_HT(und, 2));
    EXPECT_THROW(tensor_HT(und, -1), InvalidArgument);
}

TEST(Character, ConventionsAndSums)
{
    Window w{3, -2, 2};
    Character a(Convention::plain, w);
    a.add(3, 0, 2);
    Character d = a.converted(Convention::doubled);
    EXPECT_EQ(d.coefficient(6, 0), 2);
    EXPECT_EQ(d.converted(Convention::plain), a);
    EXPECT_THROW(a + d, ConventionMismatch);
    EXPECT_EQ((a + a).coefficient(3, 0), 4);
    EXPECT_THROW(a.add(3, 0, -3), InvalidArgument);
    a.add(9, 0, 1);
    EXPECT_EQ(a.terms().size(), 1u);
    EXPECT_EQ(a.restricted({2, -2, 2}).terms().size(), 0u);
}

TEST(KacToBps, ReadsDegreesOffCoefficients)
{
    using V = std::vector<std::pair<int, Integer>>;
    EXPECT_EQ(kac_to_bps_character({0, 1}), (V{{-2, 1}}));
    EXPECT_EQ(kac_to_bps_character({0, 0, 0, 1, 0, 1}), (V{{-10, 1}, {-6, 1}}));
    EXPECT_EQ(kac_to_bps_character({2, 0, 3}), (V{{-4, 3}, {0, 2}}));
    EXPECT_THROW(kac_to_bps_character({1, -1}), InvalidArgument);
}

TEST(KacToBps, JordanQuiverGivesUndeformedSeries)
{
    Window w{4, -2, 6};
    std::map<int, std::vector<Integer>> kac;
    for (int d = 1; d <= 4; ++d)
        kac[d] = {0, 1};
    Character g = bps_character(kac, Convention::plain, w);
    for (int d = 1; d <= 4; ++d)
        EXPECT_EQ(g.coefficient(d, -2), 1);
    EXPECT_EQ(tensor_HT(g, 1), char_closed_form(ClosedForm::bps_undeformed, w, Convention::plain));
    EXPECT_THROW(bps_character({{0, {1}}}, Convention::plain, w), InvalidArgument);
}

TEST(Pbw, IdentityCheckSeesTheHuFactor)
{
    Window w{3, -6, 6};
    Character g = char_closed_form(ClosedForm::bps_undeformed, w, Convention::plain);
    Character with_hu = pbw_character(g, true, w);
    Character without = pbw_character(g, false, w);
    EXPECT_NE(with_hu, without);
    EXPECT_TRUE(pbw_identity_check(g, true, with_hu));
    EXPECT_FALSE(pbw_identity_check(g, false, with_hu));
    EXPECT_EQ(with_hu.coefficient(0, 0), 1);
    EXPECT_THROW(pbw_identity_check(g, true, with_hu.converted(Convention::doubled)), ConventionMismatch);
}
