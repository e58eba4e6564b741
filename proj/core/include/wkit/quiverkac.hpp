#pragma once

#include "wkit/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wkit {

/// Vertices are 0..vertices-1; arrows are (source, target) pairs.
struct QuiverSpec {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows;

    /// Parses a comma-separated edge list with 1-based vertices: `1-1` is a
    /// loop, `1->2` an arrow. `1-2` is read as `1->2`. The vertex count is the
    /// largest index mentioned unless `vertices` is larger.
    static QuiverSpec parse(std::string_view text, int vertices = 0);
    static QuiverSpec loops(int count);

    std::string to_string() const;
    bool operator==(const QuiverSpec& other) const = default;
};

using DimVector = std::vector<int>;

DimVector parse_dim_vector(std::string_view text);

int euler_form(const QuiverSpec& q, const DimVector& d, const DimVector& e);

/// Doubled quiver (each arrow plus its reverse) and tripled quiver (doubled
/// plus a loop at every vertex).
std::pair<QuiverSpec, QuiverSpec> double_and_triple(const QuiverSpec& q);

/// Finite field GF(p^k) with elements encoded as 0..order-1 (base-p digits of
/// the polynomial representative). Arithmetic goes through precomputed tables.
class FiniteField {
public:
    explicit FiniteField(int order);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    /// Throws InvalidArgument on 0.
    int inv(int a) const;

    /// The subfield GF(p^j) of this field has elements x with x^(p^j) = x.
    std::vector<int> subfield(int sub_order) const;

private:
    int q_;
    int p_;
    int k_;
    std::vector<int> add_;
    std::vector<int> mul_;
    std::vector<int> neg_;
    std::vector<int> inv_;
};

/// Prime power decomposition, or nullopt if `q` is not a prime power.
std::optional<std::pair<int, int>> prime_power(int q);

/// Representation of a quiver over a finite field: one matrix per arrow,
/// stored row-major with d_target rows and d_source columns.
struct FieldRep {
    std::vector<std::vector<int>> maps;
};

struct KacSample {
    QuiverSpec quiver;
    DimVector dim;
    int q = 0;
    Integer count;
    std::uint64_t representations = 0;
};

inline constexpr std::uint64_t kKacEnumerationLimit = 10'000'000;

/// Number of isomorphism classes of absolutely indecomposable representations
/// of dimension `dim` over GF(q), q in {2,3,4,5}. Sums |Aut M| / |G| over all
/// absolutely indecomposable M in the representation space, G = prod GL(d_i).
/// Throws TooLarge above kKacEnumerationLimit representations.
KacSample kac_bruteforce(const QuiverSpec& quiver, const DimVector& dim, int q, unsigned threads = 1);

/// Every endomorphism of `rep` has a single eigenvalue, lying in GF(q).
bool absolutely_indecomposable(const QuiverSpec& quiver, const DimVector& dim, const FiniteField& field,
                               const FieldRep& rep);

/// No nontrivial idempotent endomorphism after extending scalars to
/// GF(q^k). `big` must have order q^k; `rep` has entries in the subfield GF(q)
/// encoded as elements of `small`.
bool indecomposable_over(const QuiverSpec& quiver, const DimVector& dim, const FiniteField& small,
                         const FiniteField& big, const FieldRep& rep);

/// Enumerates all representations in the given dimension (feasible sizes only).
std::vector<FieldRep> all_representations(const QuiverSpec& quiver, const DimVector& dim, const FiniteField& field);

enum class DynkinType { A, D, E };

struct Dynkin {
    DynkinType type;
    int rank;

    /// "A2", "D4", "E6"; throws UnsupportedType for anything outside ADE.
    static Dynkin parse(std::string_view name);
    std::string name() const;
    /// Symmetric Cartan matrix.
    std::vector<std::vector<int>> cartan() const;
    /// The Dynkin diagram as a quiver with edges oriented from lower to higher index.
    QuiverSpec quiver() const;
    /// Positive roots in the simple-root basis, sorted by height then lexicographically.
    std::vector<DimVector> positive_roots() const;
};

int root_multiplicity(const Dynkin& dynkin, const DimVector& d);

/// n^- of an ADE Lie algebra tensored with Q[D], truncated at D^m_max, with the
/// Heisenberg operators p_i and q_i.
class NMinusPolyD {
public:
    struct Basis {
        int root;
        int m;
        auto operator<=>(const Basis&) const = default;
    };
    using Element = std::map<Basis, Rational>;

    NMinusPolyD(Dynkin dynkin, int m_max);

    const Dynkin& dynkin() const { return dynkin_; }
    int m_max() const { return m_max_; }
    const std::vector<DimVector>& roots() const { return roots_; }
    std::vector<Basis> basis() const;
    std::size_t dimension() const { return roots_.size() * static_cast<std::size_t>(m_max_ + 1); }

    /// Structure constant of [F_a, F_b]: (index of a+b, sign), or nullopt if a+b is not a root.
    std::optional<std::pair<int, int>> structure_constant(int a, int b) const;

    static Element basis_element(Basis b, const Rational& c = 1);
    Element bracket(const Element& x, const Element& y) const;
    Element p(int i, const Element& x) const;
    Element q(int i, const Element& x) const;

    std::string to_string(const Element& x) const;

    struct Checks {
        bool jacobi = false;
        bool antisymmetry = false;
        bool p_derivation = false;
        bool q_derivation = false;
        bool heisenberg = false;
        bool passes() const { return jacobi && antisymmetry && p_derivation && q_derivation && heisenberg; }
    };
    /// Jacobi and antisymmetry on all basis triples; derivation properties on
    /// pairs whose bracket stays inside the truncation; [q_i, p_i] = d_i on
    /// F_beta D^m with m < m_max.
    Checks verify() const;

private:
    Dynkin dynkin_;
    int m_max_;
    std::vector<DimVector> roots_;
    std::map<DimVector, int> index_;
    std::vector<std::vector<int>> cartan_;

    int cocycle(const DimVector& a, const DimVector& b) const;
};

} // namespace wkit
