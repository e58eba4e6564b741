#include "wkit/shuffle.hpp"

#include "wkit/errors.hpp"
#include "wkit/parse.hpp"

#include <algorithm>
#include <numeric>

namespace wkit {

namespace {

int max_x_index(const Poly& p)
{
    int n = 0;
    for (std::size_t k = 0; k < kMaxShuffleVars; ++k)
        if (p.contains(shuffle_var(k)))
            n = static_cast<int>(k) + 1;
    return n;
}

Poly swap_vars(const Poly& p, std::size_t a, std::size_t b)
{
    return p.rename({{shuffle_var(a), shuffle_var(b)}, {shuffle_var(b), shuffle_var(a)}});
}

Poly cycle_vars(const Poly& p, int degree)
{
    std::vector<std::pair<Var, Var>> mapping;
    for (int k = 0; k < degree; ++k)
        mapping.emplace_back(shuffle_var(static_cast<std::size_t>(k)),
                             shuffle_var(static_cast<std::size_t>((k + 1) % degree)));
    return p.rename(mapping);
}

/// Factor scaled so its leading coefficient is 1, plus the scale removed.
std::pair<Poly, Rational> monic(const Poly& f)
{
    Rational lead = f.leading_coefficient();
    return {f * (Rational(1) / lead), lead};
}

} // namespace

bool is_symmetric(const Poly& p, int degree)
{
    if (degree < 2)
        return true;
    return swap_vars(p, 0, 1) == p && cycle_vars(p, degree) == p;
}

ShuffleElement::ShuffleElement(int degree, Poly poly) : degree_(degree), poly_(std::move(poly))
{
    if (degree < 0 || degree > static_cast<int>(kMaxShuffleVars))
        throw InvalidArgument("shuffle degree must lie in [0, 8]");
    for (Var v : {Var::D, Var::t, Var::u, Var::z, Var::q})
        if (poly_.contains(v))
            throw InvalidArgument(std::string("shuffle elements cannot contain ") + var_name(v));
    if (max_x_index(poly_) > degree)
        throw InvalidArgument("polynomial uses more x variables than the degree " + std::to_string(degree));
    if (!is_symmetric(poly_, degree))
        throw InvalidArgument("polynomial " + poly_.to_string() + " is not symmetric in x1..x" + std::to_string(degree));
}

void ShuffleElement::check_compatible(const ShuffleElement& other) const
{
    if (degree_ != other.degree_ && !is_zero() && !other.is_zero())
        throw InvalidArgument("cannot add shuffle elements of degrees " + std::to_string(degree_) + " and " +
                              std::to_string(other.degree_));
}

ShuffleElement& ShuffleElement::operator+=(const ShuffleElement& other)
{
    check_compatible(other);
    if (is_zero())
        degree_ = other.degree_;
    poly_ += other.poly_;
    return *this;
}

ShuffleElement& ShuffleElement::operator-=(const ShuffleElement& other)
{
    check_compatible(other);
    if (is_zero())
        degree_ = other.degree_;
    poly_ -= other.poly_;
    return *this;
}

ShuffleElement operator*(const Poly& c, const ShuffleElement& f)
{
    if (max_x_index(c) > 0)
        throw InvalidArgument("scalar factor must be free of x variables");
    return ShuffleElement(f.degree_, c * f.poly_, ShuffleElement::Unchecked{});
}

bool ShuffleElement::operator==(const ShuffleElement& other) const
{
    if (is_zero() && other.is_zero())
        return true;
    return degree_ == other.degree_ && poly_ == other.poly_;
}

std::string ShuffleElement::to_string() const
{
    return poly_.to_string();
}

ShuffleKernel ShuffleKernel::standard()
{
    const Poly x = Poly::var(Var::x1);
    const Poly t1 = Poly::var(Var::t1);
    const Poly t2 = Poly::var(Var::t2);
    return {{x + t1, x + t2, x - t1 - t2}, {x}};
}

namespace {

std::vector<Poly> parse_factor_list(std::string_view text, std::string_view whole)
{
    std::vector<Poly> factors;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && text[i] == ' ')
            ++i;
    };
    skip();
    if (i == text.size())
        throw ParseError("empty factor list in kernel '" + std::string(whole) + "'");
    if (text[i] != '(') {
        factors.push_back(parse_poly(text, Grammar::shuffle()));
    } else {
        while (i < text.size()) {
            if (text[i] != '(')
                throw ParseError("expected '(' in kernel '" + std::string(whole) + "'");
            int depth = 0;
            std::size_t start = i;
            for (; i < text.size(); ++i) {
                if (text[i] == '(')
                    ++depth;
                else if (text[i] == ')' && --depth == 0)
                    break;
            }
            if (depth != 0)
                throw ParseError("unbalanced parentheses in kernel '" + std::string(whole) + "'");
            factors.push_back(parse_poly(text.substr(start + 1, i - start - 1), Grammar::shuffle()));
            ++i;
            skip();
        }
    }
    for (const auto& f : factors) {
        if (max_x_index(f) > 1 || f.degree(Var::x1) > 1)
            throw ParseError("kernel factors must be linear in the single variable x: '" + std::string(whole) + "'");
        if (f.is_zero())
            throw ParseError("zero kernel factor in '" + std::string(whole) + "'");
    }
    // A bare "1" contributes nothing.
    factors.erase(std::remove_if(factors.begin(), factors.end(), [](const Poly& f) { return f == Poly(1); }),
                  factors.end());
    return factors;
}

} // namespace

ShuffleKernel ShuffleKernel::parse(std::string_view text)
{
    int depth = 0;
    std::size_t slash = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(')
            ++depth;
        else if (text[i] == ')')
            --depth;
        else if (text[i] == '/' && depth == 0) {
            if (slash != std::string_view::npos)
                throw ParseError("kernel '" + std::string(text) + "' has more than one top-level '/'");
            slash = i;
        }
    }
    ShuffleKernel k;
    k.numerator = parse_factor_list(text.substr(0, slash), text);
    if (slash != std::string_view::npos)
        k.denominator = parse_factor_list(text.substr(slash + 1), text);
    return k;
}

std::string ShuffleKernel::to_string() const
{
    auto side = [](const std::vector<Poly>& factors) {
        if (factors.empty())
            return std::string("1");
        std::string out;
        for (const auto& f : factors) {
            std::string s = f.to_string();
            std::string renamed;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] == 'x' && i + 1 < s.size() && s[i + 1] == '1') {
                    renamed += 'x';
                    ++i;
                } else {
                    renamed += s[i];
                }
            }
            out += "(" + renamed + ")";
        }
        return out;
    };
    std::string out = side(numerator);
    if (!denominator.empty())
        out += "/" + side(denominator);
    return out;
}

ShuffleElement shuffle_product(const ShuffleElement& f, const ShuffleElement& g, const ShuffleKernel& kernel,
                               ShuffleSum sum)
{
    const int d = f.degree();
    const int e = g.degree();
    const int n = d + e;
    if (n > static_cast<int>(kMaxShuffleVars))
        throw InvalidArgument("shuffle product degree exceeds 8");
    if (f.is_zero() || g.is_zero())
        return ShuffleElement(n, Poly());

    auto x = [](int k) { return Poly::var(shuffle_var(static_cast<std::size_t>(k))); };

    // zeta(x_j - x_i) pieces for every ordered pair.
    struct PairData {
        Poly numerator{1};
        std::vector<std::size_t> den_factors; // indices into `distinct`
        Rational den_scale{1};
    };
    std::vector<Poly> distinct;
    auto factor_index = [&](const Poly& p) {
        for (std::size_t k = 0; k < distinct.size(); ++k)
            if (distinct[k] == p)
                return k;
        distinct.push_back(p);
        return distinct.size() - 1;
    };
    std::vector<std::vector<PairData>> pair(n, std::vector<PairData>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            Poly diff = x(j) - x(i);
            for (const auto& factor : kernel.numerator)
                pair[i][j].numerator *= factor.substitute(Var::x1, diff);
            for (const auto& factor : kernel.denominator) {
                Poly value = factor.substitute(Var::x1, diff);
                if (value.is_constant()) {
                    pair[i][j].den_scale *= value.constant_term();
                    continue;
                }
                auto [m, scale] = monic(value);
                pair[i][j].den_scale *= scale;
                pair[i][j].den_factors.push_back(factor_index(m));
            }
        }

    // Enumerate (d, e)-shuffles as d-subsets of {0..n-1}.
    std::vector<std::vector<int>> blocks;
    {
        std::vector<int> mask(n, 0);
        std::fill(mask.begin(), mask.begin() + d, 1);
        std::sort(mask.begin(), mask.end(), std::greater<>());
        do {
            std::vector<int> a;
            for (int k = 0; k < n; ++k)
                if (mask[k])
                    a.push_back(k);
            blocks.push_back(std::move(a));
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }

    struct Term {
        Poly numerator;
        Rational scale;
        std::vector<int> multiplicity;
    };
    std::vector<Term> terms;
    std::vector<int> common;
    for (const auto& a : blocks) {
        std::vector<int> b;
        for (int k = 0; k < n; ++k)
            if (std::find(a.begin(), a.end(), k) == a.end())
                b.push_back(k);
        std::vector<std::pair<Var, Var>> fmap, gmap;
        for (int k = 0; k < d; ++k)
            fmap.emplace_back(shuffle_var(k), shuffle_var(a[k]));
        for (int k = 0; k < e; ++k)
            gmap.emplace_back(shuffle_var(k), shuffle_var(b[k]));
        Term term{f.poly().rename(fmap) * g.poly().rename(gmap), Rational(1), {}};
        term.multiplicity.assign(distinct.size(), 0);
        for (int i : a)
            for (int j : b) {
                term.numerator *= pair[i][j].numerator;
                term.scale *= pair[i][j].den_scale;
                for (auto idx : pair[i][j].den_factors)
                    ++term.multiplicity[idx];
            }
        common.resize(distinct.size(), 0);
        for (std::size_t k = 0; k < distinct.size(); ++k)
            common[k] = std::max(common[k], term.multiplicity[k]);
        terms.push_back(std::move(term));
    }

    // Bring every term over the common denominator, sum, then divide it out.
    Poly total;
    for (auto& term : terms) {
        Poly cofactor(1);
        for (std::size_t k = 0; k < distinct.size(); ++k)
            cofactor *= distinct[k].pow(static_cast<unsigned>(common[k] - term.multiplicity[k]));
        total += term.numerator * cofactor * (Rational(1) / term.scale);
    }
    for (std::size_t k = 0; k < distinct.size(); ++k)
        for (int r = 0; r < common[k]; ++r) {
            try {
                total = exact_divide(total, distinct[k]);
            } catch (const InexactDivision&) {
                throw NonPolynomialResult("shuffle product with kernel " + kernel.to_string() +
                                          " leaves the denominator factor (" + distinct[k].to_string() + ")");
            }
        }
    if (sum == ShuffleSum::full_group)
        total *= Rational(factorial(static_cast<unsigned>(d)) * factorial(static_cast<unsigned>(e)));
    return ShuffleElement(n, std::move(total));
}

ShuffleElement shuffle_commutator(const ShuffleElement& f, const ShuffleElement& g, const ShuffleKernel& kernel)
{
    return shuffle_product(f, g, kernel) - shuffle_product(g, f, kernel);
}

ShuffleElement shuffle_e(int i)
{
    if (i < 0)
        throw InvalidArgument("shuffle_e index must be non-negative");
    return ShuffleElement(1, Poly::var(Var::x1, static_cast<Exponent>(i)));
}

ShuffleElement shuffle_raise(const ShuffleElement& f)
{
    Poly power_sum;
    for (int k = 0; k < f.degree(); ++k)
        power_sum += Poly::var(shuffle_var(static_cast<std::size_t>(k)));
    return ShuffleElement(f.degree(), f.poly() * power_sum);
}

ShuffleElement shuffle_lower(const ShuffleElement& f)
{
    Poly out;
    for (int k = 0; k < f.degree(); ++k)
        out += f.poly().derivative(shuffle_var(static_cast<std::size_t>(k)));
    return ShuffleElement(f.degree(), std::move(out));
}

ShuffleElement parse_shuffle_element(std::string_view text, int degree)
{
    Poly p = parse_poly(text, Grammar::shuffle());
    int used = max_x_index(p);
    if (degree < 0)
        degree = used;
    if (used > degree)
        throw ParseError("'" + std::string(text) + "' uses x" + std::to_string(used) + " but the degree is " +
                         std::to_string(degree));
    try {
        return ShuffleElement(degree, std::move(p));
    } catch (const InvalidArgument& err) {
        throw ParseError(err.what());
    }
}

} // namespace wkit
