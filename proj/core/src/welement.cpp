#include "wkit/welement.hpp"

#include "wkit/errors.hpp"
#include "wkit/parse.hpp"

#include <sstream>

namespace wkit {

const char* to_string(BracketKind kind)
{
    switch (kind) {
    case BracketKind::classical:
        return "classical";
    case BracketKind::graded:
        return "graded";
    case BracketKind::deformed:
        return "deformed";
    }
    return "?";
}

BracketKind parse_bracket_kind(std::string_view name)
{
    if (name == "classical")
        return BracketKind::classical;
    if (name == "graded")
        return BracketKind::graded;
    if (name == "deformed")
        return BracketKind::deformed;
    throw ParseError("unknown bracket kind '" + std::string(name) + "'");
}

WElement WElement::term(int m, const Poly& f)
{
    if (m < 1)
        throw InvalidArgument("W+ elements need z-degree >= 1, got " + std::to_string(m));
    if (f.contains(Var::z))
        throw InvalidArgument("coefficient of z^m must not contain z");
    WElement x;
    x.add(m, f);
    return x;
}

WElement WElement::monomial(int m, unsigned a, const Rational& c)
{
    return term(m, Poly::var(Var::D, static_cast<Exponent>(a)) * c);
}

Poly WElement::coefficient(int m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Poly() : it->second;
}

int WElement::d_degree() const
{
    int d = -1;
    for (const auto& [m, f] : terms_)
        d = std::max(d, static_cast<int>(f.degree(Var::D)));
    return d;
}

int WElement::max_charge() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

void WElement::add(int m, const Poly& f)
{
    if (f.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

WElement& WElement::operator+=(const WElement& other)
{
    for (const auto& [m, f] : other.terms_)
        add(m, f);
    return *this;
}

WElement& WElement::operator-=(const WElement& other)
{
    for (const auto& [m, f] : other.terms_)
        add(m, -f);
    return *this;
}

WElement& WElement::operator*=(const Poly& scalar)
{
    if (scalar.contains(Var::D) || scalar.contains(Var::z))
        throw InvalidArgument("scalar factor must be free of D and z");
    *this = map_coefficients([&](const Poly& f) { return f * scalar; });
    return *this;
}

WElement WElement::operator-() const
{
    return map_coefficients([](const Poly& f) { return -f; });
}

std::string WElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, f] : terms_) {
        std::string zpart = m == 1 ? "z" : "z^" + std::to_string(m);
        if (f.terms().size() == 1) {
            const auto& [mono, c] = *f.terms().begin();
            Rational mag = abs(c);
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            if (mag != 1)
                os << mag.get_str() << '*';
            os << zpart;
            if (!mono.is_one())
                os << '*' << monomial_to_string(mono);
        } else {
            if (!first)
                os << " + ";
            os << zpart << "*(" << f.to_string() << ')';
        }
        first = false;
    }
    return os.str();
}

WElement from_poly(const Poly& p)
{
    WElement x;
    for (const auto& [mono, c] : p.terms()) {
        int m = mono[Var::z];
        if (m < 1)
            throw ParseError("every term of a W+ element needs a factor z^m with m >= 1 (offending term: " +
                             Poly::term(mono, c).to_string() + ")");
        Monomial rest = mono;
        rest[Var::z] = 0;
        x += WElement::term(m, Poly::term(rest, c));
    }
    return x;
}

Poly to_poly(const WElement& x)
{
    Poly p;
    for (const auto& [m, f] : x.terms())
        p += Poly::var(Var::z, static_cast<Exponent>(m)) * f;
    return p;
}

WElement parse_welement(std::string_view text)
{
    return from_poly(parse_poly(text, Grammar::w_elements()));
}

namespace {

Poly bracket_coefficients(int m, const Poly& f, int n, const Poly& g, BracketKind kind)
{
    switch (kind) {
    case BracketKind::classical:
        return f.shift(Var::D, Poly(n)) * g - f * g.shift(Var::D, Poly(m));
    case BracketKind::graded:
        // Leading D-order part of the classical bracket: n f' g - m f g'.
        return Poly(n) * f.derivative(Var::D) * g - Poly(m) * f * g.derivative(Var::D);
    case BracketKind::deformed: {
        const Poly t2 = Poly::var(Var::t, 2);
        Poly numerator = f.shift(Var::D, Poly(n) * t2) * g - f * g.shift(Var::D, Poly(m) * t2);
        return exact_divide(numerator, t2);
    }
    }
    return {};
}

} // namespace

WElement bracket(const WElement& x, const WElement& y, BracketKind kind)
{
    WElement r;
    for (const auto& [m, f] : x.terms())
        for (const auto& [n, g] : y.terms()) {
            Poly c = bracket_coefficients(m, f, n, g, kind);
            if (!c.is_zero())
                r += WElement::term(m + n, c);
        }
    return r;
}

WElement specialize_t(const WElement& x, const Rational& c)
{
    return x.map_coefficients([&](const Poly& f) { return f.evaluate(Var::t, c); });
}

FiltrationDegree filtration_degree(const WElement& x)
{
    if (x.is_zero())
        return std::nullopt;
    return 2 * x.d_degree() - 2;
}

bool rees_member(const WElement& x)
{
    for (const auto& [m, f] : x.terms())
        for (const auto& [mono, c] : f.terms()) {
            for (Var v : {Var::u, Var::t1, Var::t2, Var::q})
                if (mono[v] != 0)
                    return false;
            int a = mono[Var::D];
            int k = mono[Var::t];
            if (k < std::max(0, 2 * a - 2))
                return false;
        }
    return true;
}

WElement heis_raise(const WElement& x)
{
    const Poly d = Poly::var(Var::D);
    WElement r;
    for (const auto& [m, f] : x.terms())
        r += WElement::term(m, (Poly(2 * m) * d + Poly(m * m)) * f);
    return r;
}

WElement heis_lower(const WElement& x)
{
    return x.map_coefficients([](const Poly& f) { return f.derivative(Var::D); });
}

} // namespace wkit
