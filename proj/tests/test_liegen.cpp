#include "wkit/errors.hpp"
#include "wkit/liegen.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wkit;

namespace {

// Dense reference: vectors indexed by (m, a), Gaussian elimination over Q.
class DenseSpan {
public:
    DenseSpan(int m_max, int a_max) : m_max_(m_max), a_max_(a_max) {}

    bool insert(const WElement& x)
    {
        std::vector<Rational> v(static_cast<std::size_t>(m_max_ * (a_max_ + 1)), Rational(0));
        for (const auto& [m, f] : x.terms())
            for (const auto& [mono, c] : f.terms())
                v[index(m, mono[Var::D])] = c;
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot] == 0)
                continue;
            Rational factor = v[pivot] / row[pivot];
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] -= factor * row[i];
        }
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                rows_.emplace_back(i, v);
                elements_.push_back(x);
                return true;
            }
        return false;
    }

    bool fits(const WElement& x) const { return !x.is_zero() && x.max_charge() <= m_max_ && x.d_degree() <= a_max_; }

    /// Closure of the window part under brackets of all pairs of stored elements.
    void saturate(BracketKind kind)
    {
        bool grew = true;
        while (grew) {
            grew = false;
            const auto current = elements_;
            for (const auto& x : current)
                for (const auto& y : current) {
                    WElement b = bracket(x, y, kind);
                    if (fits(b) && insert(b))
                        grew = true;
                }
        }
    }

    int rank() const { return static_cast<int>(rows_.size()); }

    std::map<BiDegree, int> dimensions() const
    {
        std::map<BiDegree, int> out;
        for (const auto& [pivot, row] : rows_) {
            // Monomial generators keep every vector homogeneous, so the last
            // nonzero coordinate names its bidegree.
            std::size_t last = 0;
            for (std::size_t i = 0; i < row.size(); ++i)
                if (row[i] != 0)
                    last = i;
            out[{static_cast<int>(last) / (a_max_ + 1) + 1, static_cast<int>(last) % (a_max_ + 1)}] += 1;
        }
        return out;
    }

private:
    std::size_t index(int m, int a) const { return static_cast<std::size_t>((m - 1) * (a_max_ + 1) + a); }

    int m_max_;
    int a_max_;
    std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
    std::vector<WElement> elements_;
};

std::vector<WElement> spherical(int a_max)
{
    std::vector<WElement> g;
    for (unsigned a = 0; a <= static_cast<unsigned>(a_max); ++a)
        g.push_back(WElement::monomial(1, a));
    return g;
}

} // namespace

TEST(Generate, SphericalGradedFillsWindow)
{
    auto r = generate_subalgebra(spherical(4), BracketKind::graded, 4, 4);
    for (int m = 1; m <= 4; ++m)
        for (int a = 0; a <= 4; ++a)
            EXPECT_EQ(r.subspace.dimension({m, a}), 1) << m << "," << a;
    EXPECT_EQ(r.subspace.total_dimension(), 20);
    EXPECT_TRUE(r.rank_checks.empty());
}

TEST(Generate, SphericalDeformedFillsWindowWithRankChecks)
{
    auto r = generate_subalgebra(spherical(4), BracketKind::deformed, 4, 4);
    EXPECT_EQ(r.subspace.total_dimension(), 20);
    ASSERT_EQ(r.rank_checks.size(), 4u);
    for (const auto& rc : r.rank_checks)
        EXPECT_TRUE(rc.matches) << to_string(rc.t);
}

TEST(Generate, EmptyGeneratorsGiveZero)
{
    auto r = generate_subalgebra({}, BracketKind::classical, 3, 3);
    EXPECT_EQ(r.subspace.total_dimension(), 0);
}

TEST(Generate, MatchesDenseReferenceOnRandomMonomialGenerators)
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> charge(1, 2);
    std::uniform_int_distribution<unsigned> order(0, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<WElement> gens;
        DenseSpan dense(5, 4);
        for (int k = 0; k < 3; ++k) {
            gens.push_back(WElement::monomial(charge(rng), order(rng)));
            dense.insert(gens.back());
        }
        dense.saturate(BracketKind::graded);
        auto r = generate_subalgebra(gens, BracketKind::graded, 5, 4);
        EXPECT_EQ(r.subspace.dimensions(), dense.dimensions()) << "trial " << trial;
    }
}

TEST(Generate, ClassicalLowOrderAgreesWithDenseReference)
{
    std::vector<WElement> gens{WElement::monomial(1, 0), WElement::monomial(1, 1)};
    DenseSpan dense(6, 3);
    for (const auto& g : gens)
        dense.insert(g);
    dense.saturate(BracketKind::classical);
    auto r = generate_subalgebra(gens, BracketKind::classical, 6, 3);
    EXPECT_EQ(r.subspace.total_dimension(), dense.rank());
}

TEST(Generate, IdempotentOnClosedSubspace)
{
    auto first = generate_subalgebra(spherical(3), BracketKind::graded, 3, 3);
    auto again = generate_subalgebra(first.subspace.basis(), BracketKind::graded, 3, 3);
    EXPECT_EQ(again.subspace, first.subspace);
}

TEST(Generate, MonotoneInBounds)
{
    auto small = generate_subalgebra({WElement::monomial(1, 2), WElement::monomial(2, 0)}, BracketKind::graded, 3, 3);
    auto large = generate_subalgebra({WElement::monomial(1, 2), WElement::monomial(2, 0)}, BracketKind::graded, 5, 5);
    for (const auto& [b, d] : small.subspace.dimensions())
        EXPECT_LE(d, large.subspace.dimension(b));
}

TEST(Generate, IndependentOfGeneratorOrder)
{
    std::vector<WElement> gens{WElement::monomial(1, 2), WElement::monomial(2, 0), WElement::monomial(1, 0)};
    auto a = generate_subalgebra(gens, BracketKind::classical, 4, 3);
    std::reverse(gens.begin(), gens.end());
    auto b = generate_subalgebra(gens, BracketKind::classical, 4, 3);
    EXPECT_EQ(a.subspace, b.subspace);
}

TEST(Generate, RejectsBadInput)
{
    EXPECT_THROW(generate_subalgebra({WElement::monomial(1, 0) + WElement::monomial(2, 0)}, BracketKind::graded, 3, 3),
                 InvalidArgument);
    EXPECT_THROW(generate_subalgebra({WElement::monomial(1, 5)}, BracketKind::graded, 3, 3), InvalidArgument);
    EXPECT_THROW(generate_subalgebra({WElement()}, BracketKind::graded, 3, 3), InvalidArgument);
    EXPECT_THROW(generate_subalgebra({WElement::monomial(1, 0)}, BracketKind::graded, 0, 3), InvalidArgument);
    GenerationOptions opts;
    opts.hard_cap = 2;
    EXPECT_THROW(generate_subalgebra({WElement::monomial(1, 0)}, BracketKind::graded, 3, 3, opts), InvalidArgument);
}

TEST(AdPowers, GradedClosedForm)
{
    // ad_{zD}^m (z D^n) = prod_{k=1..m} (k - n) z^{m+1} D^n in the graded bracket.
    auto r = ad_power_elements(5, 5, BracketKind::graded);
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            int c = 1;
            for (int k = 1; k <= m; ++k)
                c *= k - n;
            WElement want = c == 0 ? WElement() : WElement::monomial(m + 1, static_cast<unsigned>(n), c);
            EXPECT_EQ(r.elements.at({m, n}), want) << m << "," << n;
        }
    EXPECT_EQ(r.elements.at({2, 0}), WElement::monomial(3, 0, 2));
}

TEST(AdPowers, ClassicalVanishesExactlyWhenPowerReachesOrder)
{
    auto r = ad_power_elements(5, 5, BracketKind::classical);
    std::vector<std::pair<int, int>> expected;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n)
            expected.emplace_back(m, n);
    EXPECT_EQ(r.vanishing, expected);
    EXPECT_EQ(r.elements.at({0, 3}), WElement::monomial(1, 3));
}

TEST(CharacterOf, SmallSpan)
{
    GradedSubspace s;
    s.insert(1, Poly(1));
    s.insert(2, Poly(1));
    Window w{4, -2, 4};
    Character c = character_of(s, Convention::doubled, w);
    Character want(Convention::doubled, w);
    want.add(2, -2, 1);
    want.add(4, -2, 1);
    EXPECT_EQ(c, want);
    EXPECT_TRUE(character_of(GradedSubspace(), Convention::doubled, w).is_zero());
}

TEST(CharacterOf, FullWindowMatchesClosedForm)
{
    auto r = generate_subalgebra(spherical(4), BracketKind::graded, 4, 4);
    Window w{4, -2, 6};
    EXPECT_EQ(character_of(r.subspace, Convention::doubled, w), char_closed_form(ClosedForm::grW, w, Convention::doubled));
}
