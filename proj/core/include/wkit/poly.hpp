#pragma once

#include "wkit/rational.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wkit {

/// Global variable order. D, t, u, t1, t2 are the coefficient variables; z
/// carries the W-algebra charge, q is the character variable and x1..x8 are
/// the shuffle-algebra variables. t3 is never stored: the parser rewrites it
/// as -t1-t2.
enum class Var : std::uint8_t { D, t, u, t1, t2, z, q, x1, x2, x3, x4, x5, x6, x7, x8 };

inline constexpr std::size_t kNumVars = 15;
inline constexpr std::size_t kMaxShuffleVars = 8;

const char* var_name(Var v);
/// Shuffle variable x_{k+1} for k in [0, kMaxShuffleVars).
Var shuffle_var(std::size_t k);

using Exponent = std::uint16_t;

class Monomial {
public:
    Monomial() { exps_.fill(0); }

    static Monomial of(Var v, Exponent power = 1)
    {
        Monomial m;
        m.exps_[static_cast<std::size_t>(v)] = power;
        return m;
    }

    Exponent operator[](Var v) const { return exps_[static_cast<std::size_t>(v)]; }
    Exponent& operator[](Var v) { return exps_[static_cast<std::size_t>(v)]; }

    unsigned total_degree() const;
    bool is_one() const;
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    /// Requires divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const;

    bool operator==(const Monomial& other) const = default;

    const std::array<Exponent, kNumVars>& exponents() const { return exps_; }

private:
    std::array<Exponent, kNumVars> exps_;
};

/// Canonical order: larger total degree first, then lexicographically larger
/// exponent vector first (in the global variable order). This is a monomial
/// order, so the first stored term is the leading term.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with rational coefficients. No zero
/// coefficient is ever stored, so structural equality is mathematical equality.
class Poly {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}

    static Poly var(Var v, Exponent power = 1);
    static Poly term(const Monomial& m, const Rational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the monomial 1.
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    unsigned degree(Var v) const;
    unsigned total_degree() const;
    bool contains(Var v) const;
    /// Variables with a nonzero exponent somewhere, in the global order.
    std::vector<Var> variables() const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly operator-() const;

    bool operator==(const Poly& other) const { return terms_ == other.terms_; }

    Poly pow(unsigned n) const;
    Poly derivative(Var v) const;

    /// v -> value, for any polynomial value (value may contain v).
    Poly substitute(Var v, const Poly& value) const;
    /// v -> c for a rational c.
    Poly evaluate(Var v, const Rational& c) const;
    /// f(v) -> f(v + c). Throws SubstitutionCycle if c contains v.
    Poly shift(Var v, const Poly& c) const;
    /// Simultaneous renaming; each pair maps `first` to `second`.
    Poly rename(const std::vector<std::pair<Var, Var>>& mapping) const;

    /// Coefficient of v^k, as a polynomial free of v.
    Poly coefficient_of(Var v, unsigned k) const;

    /// Canonical text form, e.g. `3/2*D^2*t1 - t2`; zero prints as `0`.
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

/// Exact quotient f / g. Throws InexactDivision if g does not divide f
/// (including g == 0).
Poly exact_divide(const Poly& f, const Poly& g);

/// f(v) -> f(v + c); free-function spelling of Poly::shift.
inline Poly shift_substitute(const Poly& f, Var v, const Poly& c) { return f.shift(v, c); }

std::string monomial_to_string(const Monomial& m);

} // namespace wkit
