#include "wkit/poly.hpp"

#include "wkit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace wkit {

namespace {

constexpr const char* kVarNames[kNumVars] = {"D", "t", "u", "t1", "t2", "z", "q", "x1",
                                             "x2", "x3", "x4", "x5", "x6", "x7", "x8"};

} // namespace

const char* var_name(Var v)
{
    return kVarNames[static_cast<std::size_t>(v)];
}

Var shuffle_var(std::size_t k)
{
    if (k >= kMaxShuffleVars)
        throw InvalidArgument("shuffle variable index out of range");
    return static_cast<Var>(static_cast<std::size_t>(Var::x1) + k);
}

unsigned Monomial::total_degree() const
{
    unsigned d = 0;
    for (auto e : exps_)
        d += e;
    return d;
}

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i)
        r.exps_[i] = static_cast<Exponent>(exps_[i] + other.exps_[i]);
    return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const
{
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i)
        r.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
    return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    unsigned da = a.total_degree();
    unsigned db = b.total_degree();
    if (da != db)
        return da > db;
    return a.exponents() > b.exponents();
}

Poly::Poly(const Rational& c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

Poly Poly::var(Var v, Exponent power)
{
    return term(Monomial::of(v, power), 1);
}

Poly Poly::term(const Monomial& m, const Rational& c)
{
    Poly p;
    if (c != 0)
        p.terms_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const
{
    return coefficient(Monomial{});
}

Rational Poly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::leading_monomial() const
{
    if (terms_.empty())
        throw InvalidArgument("leading monomial of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const
{
    if (terms_.empty())
        throw InvalidArgument("leading coefficient of the zero polynomial");
    return terms_.begin()->second;
}

unsigned Poly::degree(Var v) const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max<unsigned>(d, m[v]);
    return d;
}

unsigned Poly::total_degree() const
{
    return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

bool Poly::contains(Var v) const
{
    return degree(v) > 0;
}

std::vector<Var> Poly::variables() const
{
    std::vector<Var> out;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (contains(static_cast<Var>(i)))
            out.push_back(static_cast<Var>(i));
    return out;
}

void Poly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    Rational prod;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            r.add_term(ma * mb, prod);
        }
    return r;
}

Poly& Poly::operator*=(const Poly& other)
{
    *this = *this * other;
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

Poly Poly::pow(unsigned n) const
{
    Poly result(1);
    Poly base = *this;
    while (n > 0) {
        if (n & 1u)
            result *= base;
        n >>= 1u;
        if (n > 0)
            base = base * base;
    }
    return result;
}

Poly Poly::derivative(Var v) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        Exponent e = m[v];
        if (e == 0)
            continue;
        Monomial dm = m;
        dm[v] = static_cast<Exponent>(e - 1);
        r.add_term(dm, c * e);
    }
    return r;
}

Poly Poly::coefficient_of(Var v, unsigned k) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m[v] != k)
            continue;
        Monomial rest = m;
        rest[v] = 0;
        r.add_term(rest, c);
    }
    return r;
}

Poly Poly::substitute(Var v, const Poly& value) const
{
    // Group by the power of v, then combine with cached powers of value.
    std::map<unsigned, Poly> slices;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest[v] = 0;
        slices[m[v]].add_term(rest, c);
    }
    Poly result;
    Poly power(1);
    unsigned current = 0;
    for (auto& [k, slice] : slices) {
        while (current < k) {
            power *= value;
            ++current;
        }
        result += slice * power;
    }
    return result;
}

Poly Poly::evaluate(Var v, const Rational& c) const
{
    return substitute(v, Poly(c));
}

Poly Poly::shift(Var v, const Poly& c) const
{
    if (c.contains(v))
        throw SubstitutionCycle(std::string("shift of ") + var_name(v) + " by an expression containing it");
    return substitute(v, var(v) + c);
}

Poly Poly::rename(const std::vector<std::pair<Var, Var>>& mapping) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        Monomial out = m;
        for (const auto& [from, to] : mapping)
            out[from] = 0;
        for (const auto& [from, to] : mapping)
            out[to] = static_cast<Exponent>(out[to] + m[from]);
        r.add_term(out, c);
    }
    return r;
}

std::string monomial_to_string(const Monomial& m)
{
    std::string out;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        Exponent e = m.exponents()[i];
        if (e == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += kVarNames[i];
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0)
                os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << mag.get_str();
        } else {
            if (mag != 1)
                os << mag.get_str() << '*';
            os << monomial_to_string(m);
        }
    }
    return os.str();
}

Poly exact_divide(const Poly& f, const Poly& g)
{
    if (g.is_zero())
        throw InexactDivision("division by zero polynomial");
    // Multivariate division by a single divisor with the canonical monomial
    // order; the remainder is zero exactly when g divides f.
    const Monomial& lead = g.leading_monomial();
    const Rational& lead_c = g.leading_coefficient();
    Poly remainder = f;
    Poly quotient;
    while (!remainder.is_zero()) {
        const Monomial& rm = remainder.leading_monomial();
        if (!lead.divides(rm))
            throw InexactDivision("(" + f.to_string() + ") is not divisible by (" + g.to_string() + ")");
        Poly step = Poly::term(rm.quotient(lead), remainder.leading_coefficient() / lead_c);
        quotient += step;
        remainder -= step * g;
    }
    return quotient;
}

} // namespace wkit
