#include "oracle.hpp"

#include "wkit/errors.hpp"
#include "wkit/parse.hpp"
#include "wkit/shuffle.hpp"

#include <gtest/gtest.h>

using namespace wkit;
using wkit::test::eval;
using wkit::test::Point;

namespace {

ShuffleElement S(const char* text, int degree = -1)
{
    return parse_shuffle_element(text, degree);
}

Rational kernel_value(const ShuffleKernel& k, const Rational& x, const Rational& t1, const Rational& t2)
{
    Point at{{Var::x1, x}, {Var::t1, t1}, {Var::t2, t2}};
    Rational v = 1;
    for (const auto& f : k.numerator)
        v *= eval(f, at);
    for (const auto& f : k.denominator)
        v /= eval(f, at);
    return v;
}

// f(x_S) g(x_complement) prod_{i in S, j not in S} zeta(x_j - x_i), summed over |S| = d.
Rational shuffle_sum_at(const ShuffleElement& f, const ShuffleElement& g, const ShuffleKernel& k,
                        const std::vector<Rational>& x, const Rational& t1, const Rational& t2)
{
    const int d = f.degree();
    const int n = f.degree() + g.degree();
    Rational total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != d)
            continue;
        std::vector<int> in;
        std::vector<int> out;
        for (int i = 0; i < n; ++i)
            ((mask >> i) & 1u ? in : out).push_back(i);
        Point pf{{Var::t1, t1}, {Var::t2, t2}};
        Point pg{{Var::t1, t1}, {Var::t2, t2}};
        for (int i = 0; i < d; ++i)
            pf[shuffle_var(static_cast<std::size_t>(i))] = x[in[i]];
        for (int j = 0; j < n - d; ++j)
            pg[shuffle_var(static_cast<std::size_t>(j))] = x[out[j]];
        Rational term = eval(f.poly(), pf) * eval(g.poly(), pg);
        for (int i : in)
            for (int j : out)
                term *= kernel_value(k, x[j] - x[i], t1, t2);
        total += term;
    }
    return total;
}

void expect_matches_oracle(const ShuffleElement& f, const ShuffleElement& g, const ShuffleKernel& k,
                           std::mt19937_64& rng)
{
    ShuffleElement p = shuffle_product(f, g, k);
    ASSERT_EQ(p.degree(), f.degree() + g.degree());
    for (int trial = 0; trial < 4; ++trial) {
        const int n = p.degree();
        std::vector<Rational> x;
        // distinct points keep every denominator nonzero
        for (int i = 0; i < n; ++i)
            x.push_back(Rational(7 * i + 1) + test::random_rational(rng, 3) / 11);
        Rational t1 = test::random_rational(rng) + Rational(1, 13);
        Rational t2 = test::random_rational(rng) + Rational(1, 17);
        Point at{{Var::t1, t1}, {Var::t2, t2}};
        for (int i = 0; i < n; ++i)
            at[shuffle_var(static_cast<std::size_t>(i))] = x[i];
        EXPECT_EQ(eval(p.poly(), at), shuffle_sum_at(f, g, k, x, t1, t2))
            << f.to_string() << " * " << g.to_string();
    }
}

} // namespace

TEST(ShuffleElement, ValidatesSymmetryAndVariables)
{
    EXPECT_NO_THROW(S("x1^2 + x2^2"));
    EXPECT_EQ(S("x1").degree(), 1);
    EXPECT_THROW(S("x1 + 2*x2"), ParseError);
    EXPECT_THROW(S("x3", 2), ParseError);
    EXPECT_THROW(ShuffleElement(2, Poly::var(Var::x1) + Poly(2) * Poly::var(Var::x2)), InvalidArgument);
    EXPECT_THROW(ShuffleElement(2, Poly::var(Var::x3)), InvalidArgument);
    EXPECT_THROW(ShuffleElement(1, parse_poly("D")), InvalidArgument);
    EXPECT_EQ(S("x").degree(), 1);
    EXPECT_EQ(S("1", 1).degree(), 1);
}

TEST(ShuffleElement, PrintedFormReparses)
{
    for (const char* s : {"x1^2*x2 + x1*x2^2 - t1", "x1*x2*x3 + t1*t2", "2*x1 - t2"}) {
        ShuffleElement e = S(s);
        EXPECT_EQ(parse_shuffle_element(e.to_string(), e.degree()), e) << s;
    }
}

TEST(ShuffleKernel, ParseAndPrint)
{
    ShuffleKernel k = ShuffleKernel::parse("(x+t1)(x+t2)(x+t3)/(x)");
    EXPECT_EQ(k.numerator.size(), 3u);
    EXPECT_EQ(k.denominator.size(), 1u);
    ShuffleKernel again = ShuffleKernel::parse(k.to_string());
    EXPECT_EQ(again.numerator, k.numerator);
    EXPECT_EQ(again.denominator, k.denominator);
    EXPECT_EQ(ShuffleKernel::standard().numerator, k.numerator);
    EXPECT_THROW(ShuffleKernel::parse("(x^2+t1)/(x)"), ParseError);
    EXPECT_THROW(ShuffleKernel::parse("(x)/(x)/(x)"), ParseError);
}

TEST(ShuffleProduct, FirstGeneratorSquare)
{
    // e0 * e0 = 2 (x1 - x2)^2 + 2 sigma_2
    ShuffleElement e0 = shuffle_e(0);
    ShuffleElement want = S("2*(x1 - x2)^2 - 2*(t1^2 + t1*t2 + t2^2)");
    EXPECT_EQ(shuffle_product(e0, e0, ShuffleKernel::standard()), want);
}

TEST(ShuffleProduct, AgreesWithRationalFunctionSum)
{
    std::mt19937_64 rng(41);
    const auto k = ShuffleKernel::standard();
    const std::vector<ShuffleElement> pieces{shuffle_e(0), shuffle_e(2), S("x1 + x2"), S("x1*x2 + t1"),
                                             S("x1^2 + x2^2 + x3^2")};
    for (const auto& f : pieces)
        for (const auto& g : pieces)
            if (f.degree() + g.degree() <= 4)
                expect_matches_oracle(f, g, k, rng);
}

TEST(ShuffleProduct, OtherKernelsAgreeWithRationalFunctionSum)
{
    std::mt19937_64 rng(42);
    for (const char* text : {"(x+t1)(x+t2)/(x)", "(x-t1)", "(x+t1)(x-t2)(x+t1+t2)/(x)"}) {
        ShuffleKernel k = ShuffleKernel::parse(text);
        expect_matches_oracle(shuffle_e(1), shuffle_e(0), k, rng);
        expect_matches_oracle(S("x1 + x2"), shuffle_e(2), k, rng);
    }
}

TEST(ShuffleProduct, Associative)
{
    const auto k = ShuffleKernel::standard();
    ShuffleElement a = shuffle_e(1);
    ShuffleElement b = shuffle_e(0);
    ShuffleElement c = shuffle_e(2);
    EXPECT_EQ(shuffle_product(shuffle_product(a, b, k), c, k), shuffle_product(a, shuffle_product(b, c, k), k));
}

TEST(ShuffleProduct, FullGroupSumScalesByFactorials)
{
    const auto k = ShuffleKernel::standard();
    ShuffleElement f = S("x1 + x2");
    ShuffleElement g = shuffle_e(1);
    EXPECT_EQ(shuffle_product(f, g, k, ShuffleSum::full_group), Poly(2) * shuffle_product(f, g, k));
}

TEST(ShuffleProduct, NonCancellingDenominatorThrows)
{
    ShuffleKernel k = ShuffleKernel::parse("(x+t1)/(x)(x)");
    EXPECT_THROW(shuffle_product(shuffle_e(0), shuffle_e(0), k), NonPolynomialResult);
}

TEST(ShuffleProduct, ScalarsActByMultiplication)
{
    const auto k = ShuffleKernel::standard();
    ShuffleElement f = S("x1*x2");
    EXPECT_EQ(shuffle_product(ShuffleElement::scalar(parse_poly("t1")), f, k), Poly(parse_poly("t1")) * f);
}

TEST(ShuffleHeisenberg, DerivationsAndCentralCharge)
{
    const auto k = ShuffleKernel::standard();
    std::vector<ShuffleElement> pieces{shuffle_e(0), shuffle_e(3), S("x1 + x2"), S("x1^2*x2 + x1*x2^2")};
    for (const auto& f : pieces)
        for (const auto& g : pieces) {
            if (f.degree() + g.degree() > 3)
                continue;
            EXPECT_EQ(shuffle_raise(shuffle_product(f, g, k)),
                      shuffle_product(shuffle_raise(f), g, k) + shuffle_product(f, shuffle_raise(g), k));
            EXPECT_EQ(shuffle_lower(shuffle_product(f, g, k)),
                      shuffle_product(shuffle_lower(f), g, k) + shuffle_product(f, shuffle_lower(g), k));
        }
    ShuffleElement f = S("x1*x2*x3*x4 + x1 + x2 + x3 + x4");
    EXPECT_EQ(shuffle_lower(shuffle_raise(f)) - shuffle_raise(shuffle_lower(f)), Poly(4) * f);
}
