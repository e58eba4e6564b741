#include "oracle.hpp"

#include "wkit/errors.hpp"
#include "wkit/welement.hpp"

#include <gtest/gtest.h>

using namespace wkit;
using wkit::test::eval;

namespace {

WElement W(const char* s)
{
    return parse_welement(s);
}

WElement random_element(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> charge(1, 4);
    std::uniform_int_distribution<unsigned> order(0, 4);
    WElement x;
    for (int k = 0; k < 2; ++k)
        x += WElement::monomial(charge(rng), order(rng), test::random_rational(rng));
    return x;
}

// z^m f(D) acts on z^k by f(s k) z^{m+k}, D = s z d/dz. The commutator of two such
// operators applied to z^k has coefficient  sum f(s(k+n)) g(s k) - g(s(k+m)) f(s k).
Rational commutator_on_monomial(const WElement& x, const WElement& y, int k, const Rational& s, int charge)
{
    Rational total = 0;
    for (const auto& [m, f] : x.terms())
        for (const auto& [n, g] : y.terms()) {
            if (m + n != charge)
                continue;
            auto at = [&](const Poly& p, int j) { return eval(p, {{Var::D, s * j}}); };
            total += at(f, k + n) * at(g, k) - at(g, k + m) * at(f, k);
        }
    return total;
}

} // namespace

TEST(WElement, ParsePrintRoundTrip)
{
    for (const char* s : {"z^2*(3*D^2 + 1/2)*t1 + z^5*D", "5*z^5*D^4", "z^4*(6*D + 9*t^2)", "-z", "z*D - z^3"}) {
        WElement x = W(s);
        EXPECT_EQ(W(x.to_string().c_str()), x) << s;
    }
    EXPECT_EQ(W("5*z^5*D^4").to_string(), "5*z^5*D^4");
}

TEST(WElement, RejectsNonPositiveCharge)
{
    EXPECT_THROW(W("D^2"), ParseError);
    EXPECT_THROW(W("z + 1"), ParseError);
}

TEST(Bracket, GradedExample)
{
    EXPECT_EQ(bracket(W("z^2*D^3"), W("z^3*D^2"), BracketKind::graded), W("5*z^5*D^4"));
}

TEST(Bracket, ClassicalAntisymmetryExample)
{
    EXPECT_TRUE(bracket(W("z*D"), W("z*D"), BracketKind::classical).is_zero());
}

TEST(Bracket, ClassicalAgreesWithOperatorCommutator)
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        WElement x = random_element(rng);
        WElement y = random_element(rng);
        WElement b = bracket(x, y, BracketKind::classical);
        for (int charge = 2; charge <= 8; ++charge)
            for (int k = 0; k <= 6; ++k)
                EXPECT_EQ(eval(b.coefficient(charge), {{Var::D, k}}),
                          commutator_on_monomial(x, y, k, 1, charge));
    }
}

TEST(Bracket, DeformedAgreesWithScaledOperatorCommutator)
{
    // With D acting as t^2 z d/dz the commutator equals t^2 times the deformed bracket.
    std::mt19937_64 rng(22);
    for (int i = 0; i < 60; ++i) {
        WElement x = random_element(rng);
        WElement y = random_element(rng);
        WElement b = bracket(x, y, BracketKind::deformed);
        for (Rational t : {Rational(1, 2), Rational(2), Rational(-3)}) {
            Rational s = t * t;
            for (int charge = 2; charge <= 8; ++charge)
                for (int k = 0; k <= 5; ++k) {
                    Rational lhs = s * eval(b.coefficient(charge), {{Var::D, s * k}, {Var::t, t}});
                    EXPECT_EQ(lhs, commutator_on_monomial(x, y, k, s, charge));
                }
        }
    }
}

TEST(Bracket, GradedMatchesClosedFormOnMonomials)
{
    // [z^m D^a, z^n D^b] = (a n - b m) z^{m+n} D^{a+b-1}
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (unsigned a = 0; a <= 4; ++a)
                for (unsigned b = 0; b <= 4; ++b) {
                    WElement got = bracket(WElement::monomial(m, a), WElement::monomial(n, b), BracketKind::graded);
                    int c = static_cast<int>(a) * n - static_cast<int>(b) * m;
                    WElement want = (a + b == 0 || c == 0) ? WElement() : WElement::monomial(m + n, a + b - 1, c);
                    EXPECT_EQ(got, want);
                }
}

TEST(Bracket, DeformedSpecializations)
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        WElement x = random_element(rng);
        WElement y = random_element(rng);
        WElement d = bracket(x, y, BracketKind::deformed);
        EXPECT_EQ(specialize_t(d, 0), bracket(x, y, BracketKind::graded));
        EXPECT_EQ(specialize_t(d, 1), bracket(x, y, BracketKind::classical));
    }
}

TEST(Filtration, DegreesAndReesMembership)
{
    EXPECT_EQ(filtration_degree(W("z^3*D^4 + z")), 6);
    EXPECT_EQ(filtration_degree(W("z")), -2);
    EXPECT_FALSE(filtration_degree(WElement()).has_value());
    EXPECT_TRUE(rees_member(W("z*D^2*t^2 + z*D")));
    EXPECT_FALSE(rees_member(W("z*D^2*t")));
    EXPECT_FALSE(rees_member(W("z*t1")));
}

TEST(Heisenberg, RaiseIsCommutatorWithDSquared)
{
    EXPECT_EQ(heis_raise(W("z^3*D")), W("z^3*(6*D^2 + 9*D)"));
    EXPECT_EQ(heis_lower(W("z^2*(D^3 + D)")), W("z^2*(3*D^2 + 1)"));
    for (int m = 1; m <= 6; ++m)
        for (unsigned n = 0; n <= 6; ++n) {
            WElement x = WElement::monomial(m, n);
            EXPECT_EQ(heis_lower(heis_raise(x)) - heis_raise(heis_lower(x)), Poly(2 * m) * x);
        }
}
