#pragma once

#include "wkit/character.hpp"
#include "wkit/welement.hpp"

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace wkit {

/// (z-degree, D-order) of a basis vector.
struct BiDegree {
    int m = 1;
    int a = 0;

    auto operator<=>(const BiDegree&) const = default;
};

/// Echelon form of a graded subspace of span{z^m D^a}, one echelon block per
/// z-degree. Inside a block every basis vector has a distinct pivot, its
/// leading D-order, so the dimension at (m, a) is the number of basis vectors
/// of z-degree m with leading D-order a.
///
/// Over Q the blocks are fully reduced with unit pivots. When coefficients
/// involve t the block is an echelon basis over Q(t): a constant pivot is
/// normalised to 1 and a non-constant pivot is eliminated fraction-free.
class GradedSubspace {
public:
    /// Reduces `f` against the z-degree-m block and inserts the remainder if it
    /// is nonzero. Returns true when the dimension grew.
    bool insert(int m, Poly f);
    /// Reduces without inserting.
    Poly reduce(int m, Poly f) const;
    bool contains(const WElement& x) const;

    int dimension(BiDegree b) const;
    int total_dimension() const;
    /// Dimension at every bidegree that has a basis vector.
    std::map<BiDegree, int> dimensions() const;

    /// Basis vector with pivot at `b`, if any.
    std::optional<WElement> basis_vector(BiDegree b) const;
    std::vector<WElement> basis() const;

    bool operator==(const GradedSubspace& other) const { return blocks_ == other.blocks_; }

private:
    // z-degree -> (pivot D-order -> coefficient of z^m)
    std::map<int, std::map<int, Poly>> blocks_;
};

struct GenerationOptions {
    /// Largest D-order a bracket may reach before TruncationOverflow; defaults to a_max + 2.
    std::optional<int> hard_cap;
    /// t values used for the rank cross-check when coefficients involve t.
    std::vector<Rational> rank_check_points{Rational(0), Rational(1, 2), Rational(1), Rational(3)};
};

/// Rank of the specialised basis at one value of t.
struct RankCheck {
    Rational t;
    bool matches = false; ///< per-bidegree dimensions agree with the Q(t) dimensions
    std::map<BiDegree, int> dimensions;
};

struct GenerationResult {
    GradedSubspace subspace;
    std::vector<RankCheck> rank_checks; ///< empty unless some coefficient involves t
    int brackets_evaluated = 0;
};

/// Smallest bracket-closed subspace containing the (z-homogeneous) generators,
/// truncated to z-degree <= m_max and D-order <= a_max. Saturation proceeds in
/// rounds; inside a round, brackets are evaluated in increasing order of the
/// (z-degree, predicted D-order) of the result.
GenerationResult generate_subalgebra(const std::vector<WElement>& generators, BracketKind kind, int m_max, int a_max,
                                     const GenerationOptions& options = {});

/// Per-bidegree dimensions of the specialisation t = c of a subspace.
std::map<BiDegree, int> specialized_dimensions(const GradedSubspace& s, const Rational& c);

/// ad_{zD}^m (z D^n) for 0 <= m <= m_max, 0 <= n <= n_max.
struct AdPowerReport {
    std::map<std::pair<int, int>, WElement> elements; ///< keyed by (m, n)
    std::vector<std::pair<int, int>> vanishing;       ///< (m, n) with ad_{zD}^m(z D^n) == 0
    /// For each power m: echelon dimensions of span{ad^m(z D^n) : n <= n_max} at (m+1, a).
    GradedSubspace span;
};

AdPowerReport ad_power_elements(int m_max, int n_max, BracketKind kind);

/// Bigraded dimension series of a subspace: z^m D^a is recorded at weight m
/// and cohomological degree 2a - 2.
Character character_of(const GradedSubspace& s, Convention convention, const Window& window);

} // namespace wkit
