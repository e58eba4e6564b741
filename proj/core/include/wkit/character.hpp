#pragma once

#include "wkit/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wkit {

/// Exponent convention for the weight variable t. The exponent of q is always
/// the cohomological degree itself.
///  - doubled: a weight-d piece is recorded at t^{2d} (central-charge grading)
///  - plain:   a weight-d piece is recorded at t^d   (dimension grading)
enum class Convention { doubled, plain };

const char* to_string(Convention c);
Convention parse_convention(std::string_view name);

/// Truncation window: weights 0..max_weight (in dimension units, independent
/// of the convention) and q exponents in [q_min, q_max].
struct Window {
    int max_weight = 0;
    int q_min = 0;
    int q_max = 0;

    bool operator==(const Window&) const = default;
};

/// Truncated bigraded dimension series  sum dim(t_exp, q_exp) t^t_exp q^q_exp.
/// Terms outside the window are never stored, nor are zero dimensions.
class Character {
public:
    using Key = std::pair<int, int>; ///< (t exponent, q exponent) in this convention
    using Terms = std::map<Key, Integer>;

    Character(Convention convention, Window window) : convention_(convention), window_(window) {}

    Convention convention() const { return convention_; }
    const Window& window() const { return window_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// t exponent of a weight-d piece in this convention.
    int t_exponent(int weight) const { return convention_ == Convention::doubled ? 2 * weight : weight; }
    /// Inverse of t_exponent; -1 if t_exp is not a valid exponent here.
    int weight_of(int t_exp) const;
    bool in_window(int t_exp, int q_exp) const;

    Integer coefficient(int t_exp, int q_exp) const;
    /// Adds `dim` at (t_exp, q_exp); silently drops out-of-window terms.
    /// Throws InvalidArgument if a stored dimension would turn negative.
    void add(int t_exp, int q_exp, const Integer& dim);

    /// Same series in the other convention (weight d moves between t^d and t^{2d}).
    Character converted(Convention target) const;
    /// Restriction to a smaller (or equal) window.
    Character restricted(const Window& window) const;

    /// Compares terms and convention; windows must match too.
    bool operator==(const Character& other) const = default;

    /// Dimension matrix as text, one row per weight.
    std::string to_string() const;

private:
    Convention convention_;
    Window window_;
    Terms terms_;
};

/// Sum of two characters with equal convention (ConventionMismatch otherwise),
/// restricted to the first operand's window.
Character operator+(const Character& a, const Character& b);

enum class ClosedForm { grW, bps_undeformed, bps_deformed };

const char* to_string(ClosedForm which);
ClosedForm parse_closed_form(std::string_view name);

/// Window expansion of one of the closed generating series:
///  grW:            t^2 q^-2 (1 - t^2)^-1 (1 - q^2)^-1   (doubled convention)
///  bps_undeformed: q^-2 t (1 - t)^-1 (1 - q^2)^-1       (plain convention)
///  bps_deformed:   q^-2 t (1 - t)^-1 (1 - q^2)^-2       (plain convention)
/// The series is expanded in its native convention and converted to `convention`.
Character char_closed_form(ClosedForm which, const Window& window, Convention convention);

/// Plethystic exponential  prod (1 - t^i q^j)^(-dim(i,j))  of the finitely many
/// terms of `c`, restricted to `window`. The expansion is exact for the given
/// terms; pieces of the true series missing from `c` are of course not seen.
/// Throws InvalidArgument on a weight-0 term and OddDegreeInput on an odd q exponent.
Character plethystic_exp(const Character& c, const Window& window);

/// Multiplies by (1 - q^2)^(-torus_rank): tensoring with H_T for a torus of that rank.
Character tensor_HT(const Character& c, int torus_rank);

/// Reads dim g^i off a Kac polynomial via  sum_i dim(g^i) q^{i/2} = a(q^{-1}):
/// the coefficient of q^k in a(q) is the dimension in cohomological degree -2k.
/// `coefficients[k]` is the coefficient of q^k; negative entries are rejected.
std::vector<std::pair<int, Integer>> kac_to_bps_character(const std::vector<Integer>& coefficients);

/// Character of the BPS Lie algebra from per-weight Kac polynomials:
/// `kac_by_weight[d]` holds the coefficients of a_{Q,d}.
Character bps_character(const std::map<int, std::vector<Integer>>& kac_by_weight, Convention convention,
                        const Window& window);

/// Returns true iff PE[g (x) H_u] (or PE[g] when tensor_Hu is false) equals
/// `target` inside target's window. H_u multiplies every weight piece by
/// 1 + q^2 + q^4 + ... . Throws ConventionMismatch when conventions differ.
bool pbw_identity_check(const Character& g_char, bool tensor_Hu, const Character& target);

/// The PE[g (x) H_u] side of pbw_identity_check, computed with a widened
/// working window so every in-window coefficient is exact.
Character pbw_character(const Character& g_char, bool tensor_Hu, const Window& window);

} // namespace wkit
