#pragma once

#include "wkit/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace wkit {

/// Which Lie bracket on span{z^m D^a} to use.
///  - classical: [z^m f, z^n g] = z^{m+n} (f(D+n) g(D) - f(D) g(D+m))
///  - graded:    [z^m D^a, z^n D^b] = (a n - b m) z^{m+n} D^{a+b-1}
///  - deformed:  z^{m+n} (f(D+n t^2) g(D) - f(D) g(D+m t^2)) / t^2
/// The deformed bracket specialises to graded at t = 0 and to classical at t = 1.
enum class BracketKind { classical, graded, deformed };

const char* to_string(BracketKind kind);
BracketKind parse_bracket_kind(std::string_view name);

/// Order-filtration degree: 2a - 2 for z^m D^a, or -infinity (nullopt) for zero.
using FiltrationDegree = std::optional<int>;

/// A finite sum  sum_m z^m f_m(D)  with m >= 1. The coefficients f_m are
/// polynomials in D whose coefficients may involve t, u, t1, t2. Zero f_m are
/// never stored.
class WElement {
public:
    using Terms = std::map<int, Poly>;

    WElement() = default;

    /// z^m * f. Throws InvalidArgument if m < 1 or f contains z.
    static WElement term(int m, const Poly& f);
    /// c * z^m * D^a
    static WElement monomial(int m, unsigned a, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient polynomial of z^m (zero if absent).
    Poly coefficient(int m) const;
    /// Largest power of D appearing, or -1 for zero.
    int d_degree() const;
    int max_charge() const;

    WElement& operator+=(const WElement& other);
    WElement& operator-=(const WElement& other);
    /// Scalar multiplication by a D-free, z-free polynomial (e.g. t^2, 3/2).
    WElement& operator*=(const Poly& scalar);

    friend WElement operator+(WElement a, const WElement& b) { return a += b; }
    friend WElement operator-(WElement a, const WElement& b) { return a -= b; }
    friend WElement operator*(WElement a, const Poly& s) { return a *= s; }
    friend WElement operator*(const Poly& s, WElement a) { return a *= s; }
    WElement operator-() const;

    bool operator==(const WElement& other) const { return terms_ == other.terms_; }

    /// Applies `fn` to every coefficient polynomial, dropping zero results.
    template <class Fn>
    WElement map_coefficients(Fn&& fn) const
    {
        WElement r;
        for (const auto& [m, f] : terms_) {
            Poly g = fn(f);
            if (!g.is_zero())
                r.terms_.emplace(m, std::move(g));
        }
        return r;
    }

    /// Canonical text, terms ordered by charge m: `5*z^5*D^4`, `z^4*(6*D + 9*t^2)`.
    std::string to_string() const;

private:
    void add(int m, const Poly& f);

    Terms terms_;
};

/// Converts a polynomial in z and the coefficient variables. Every monomial
/// must carry z^m with m >= 1.
WElement from_poly(const Poly& p);
Poly to_poly(const WElement& x);

/// Parses the W-element grammar, e.g. `z^2*(3*D^2 + 1/2)*t1 + z^5*D`.
WElement parse_welement(std::string_view text);

WElement bracket(const WElement& x, const WElement& y, BracketKind kind);

/// Substitutes t = c in every coefficient.
WElement specialize_t(const WElement& x, const Rational& c);

FiltrationDegree filtration_degree(const WElement& x);

/// Membership in sum_i F_i t^i Q[t]: each stored monomial z^m D^a t^k needs
/// k >= max(0, 2a - 2). Elements with variables other than D and t are not members.
bool rees_member(const WElement& x);

/// The raising operator [D^2, -]: z^m f(D) -> z^m (2 m D + m^2) f(D).
WElement heis_raise(const WElement& x);
/// The lowering operator d/dD: z^m f(D) -> z^m f'(D).
WElement heis_lower(const WElement& x);

} // namespace wkit
