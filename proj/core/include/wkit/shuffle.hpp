#pragma once

#include "wkit/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wkit {

/// Symmetric polynomial in x1..xd over Q[t1, t2]: an element of the degree-d
/// piece of the one-vertex shuffle algebra.
class ShuffleElement {
public:
    /// The zero element of degree 0.
    ShuffleElement() = default;
    /// Throws InvalidArgument if `poly` uses x_k with k > degree, contains D,
    /// t, u, z or q, or is not symmetric in x1..xd.
    ShuffleElement(int degree, Poly poly);

    /// Degree-0 scalar.
    static ShuffleElement scalar(const Poly& c) { return ShuffleElement(0, c); }

    int degree() const { return degree_; }
    const Poly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    ShuffleElement& operator+=(const ShuffleElement& other);
    ShuffleElement& operator-=(const ShuffleElement& other);
    friend ShuffleElement operator+(ShuffleElement a, const ShuffleElement& b) { return a += b; }
    friend ShuffleElement operator-(ShuffleElement a, const ShuffleElement& b) { return a -= b; }
    /// Scalar multiplication by a polynomial in t1, t2.
    friend ShuffleElement operator*(const Poly& c, const ShuffleElement& f);
    ShuffleElement operator-() const { return ShuffleElement(degree_, -poly_, Unchecked{}); }

    /// Degrees must match unless one side is zero.
    bool operator==(const ShuffleElement& other) const;

    std::string to_string() const;

private:
    struct Unchecked {};
    ShuffleElement(int degree, Poly poly, Unchecked) : degree_(degree), poly_(std::move(poly)) {}
    void check_compatible(const ShuffleElement& other) const;

    int degree_ = 0;
    Poly poly_;
};

bool is_symmetric(const Poly& p, int degree);

/// Kernel zeta(x) = prod(numerator) / prod(denominator), each factor a
/// polynomial of degree <= 1 in the formal variable x (stored as x1) over
/// Q[t1, t2].
struct ShuffleKernel {
    std::vector<Poly> numerator;
    std::vector<Poly> denominator;

    /// (x+t1)(x+t2)(x+t3)/x with t3 = -t1-t2.
    static ShuffleKernel standard();
    /// Parses `"(x+t1)(x+t2)(x+t3)/(x)"`: parenthesised factors, at most one top-level '/'.
    static ShuffleKernel parse(std::string_view text);

    std::string to_string() const;
};

enum class ShuffleSum {
    cosets,    ///< sum over (d, e)-shuffles
    full_group ///< sum over all of S_{d+e}: the coset sum times d! e!
};

/// f * g = sum over (d,e)-shuffles s of  s( f(x_1..x_d) g(x_{d+1}..x_{d+e})
///         prod_{i <= d < j} zeta(x_j - x_i) ).
/// Throws NonPolynomialResult if the denominators do not cancel.
ShuffleElement shuffle_product(const ShuffleElement& f, const ShuffleElement& g, const ShuffleKernel& kernel,
                               ShuffleSum sum = ShuffleSum::cosets);

/// f * g - g * f
ShuffleElement shuffle_commutator(const ShuffleElement& f, const ShuffleElement& g, const ShuffleKernel& kernel);

/// Degree-1 generator x1^i.
ShuffleElement shuffle_e(int i);

/// f -> f * (x1 + ... + xd)
ShuffleElement shuffle_raise(const ShuffleElement& f);
/// f -> sum_k df/dx_k, the u-coefficient of f(x1 + u, ..., xd + u)
ShuffleElement shuffle_lower(const ShuffleElement& f);

/// Parses a shuffle operand in the x1..x8/t1/t2 grammar. The degree defaults
/// to the largest x index used (`x` means x1).
ShuffleElement parse_shuffle_element(std::string_view text, int degree = -1);

} // namespace wkit
