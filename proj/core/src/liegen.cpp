#include "wkit/liegen.hpp"

#include "wkit/errors.hpp"

#include <algorithm>
#include <tuple>

namespace wkit {

namespace {

bool has_parameters(const Poly& f)
{
    for (Var v : f.variables())
        if (v != Var::D)
            return true;
    return false;
}

/// Divides out the largest monomial in the parameters (not D) common to all
/// terms and makes the leading coefficient 1. Used only after fraction-free steps.
Poly normalize_content(const Poly& f)
{
    if (f.is_zero())
        return f;
    Monomial common = f.terms().begin()->first;
    common[Var::D] = 0;
    for (const auto& [mono, c] : f.terms())
        for (std::size_t i = 0; i < kNumVars; ++i) {
            Var v = static_cast<Var>(i);
            common[v] = std::min(common[v], mono[v]);
        }
    Poly out;
    for (const auto& [mono, c] : f.terms())
        out += Poly::term(mono.quotient(common), c);
    return out * (Rational(1) / out.leading_coefficient());
}

/// Eliminates the D^a coordinate of `f` using `basis` whose pivot is at D^a.
Poly eliminate(const Poly& f, const Poly& basis, int a)
{
    Poly c = f.coefficient_of(Var::D, static_cast<unsigned>(a));
    if (c.is_zero())
        return f;
    Poly p = basis.coefficient_of(Var::D, static_cast<unsigned>(a));
    if (p.is_constant())
        return f - basis * c * (Rational(1) / p.constant_term());
    return normalize_content(p * f - c * basis);
}

} // namespace

Poly GradedSubspace::reduce(int m, Poly f) const
{
    auto block = blocks_.find(m);
    if (block == blocks_.end())
        return f;
    for (auto it = block->second.rbegin(); it != block->second.rend() && !f.is_zero(); ++it)
        f = eliminate(f, it->second, it->first);
    return f;
}

bool GradedSubspace::insert(int m, Poly f)
{
    f = reduce(m, std::move(f));
    if (f.is_zero())
        return false;
    int a = static_cast<int>(f.degree(Var::D));
    Poly pivot = f.coefficient_of(Var::D, static_cast<unsigned>(a));
    if (pivot.is_constant())
        f *= Rational(1) / pivot.constant_term();
    else
        f = normalize_content(f);
    auto& block = blocks_[m];
    for (auto& [b, vec] : block)
        if (b > a)
            vec = eliminate(vec, f, a);
    block.emplace(a, std::move(f));
    return true;
}

bool GradedSubspace::contains(const WElement& x) const
{
    for (const auto& [m, f] : x.terms())
        if (!reduce(m, f).is_zero())
            return false;
    return true;
}

int GradedSubspace::dimension(BiDegree b) const
{
    auto block = blocks_.find(b.m);
    return block != blocks_.end() && block->second.count(b.a) ? 1 : 0;
}

int GradedSubspace::total_dimension() const
{
    int n = 0;
    for (const auto& [m, block] : blocks_)
        n += static_cast<int>(block.size());
    return n;
}

std::map<BiDegree, int> GradedSubspace::dimensions() const
{
    std::map<BiDegree, int> out;
    for (const auto& [m, block] : blocks_)
        for (const auto& [a, vec] : block)
            out[{m, a}] += 1;
    return out;
}

std::optional<WElement> GradedSubspace::basis_vector(BiDegree b) const
{
    auto block = blocks_.find(b.m);
    if (block == blocks_.end())
        return std::nullopt;
    auto it = block->second.find(b.a);
    if (it == block->second.end())
        return std::nullopt;
    return WElement::term(b.m, it->second);
}

std::vector<WElement> GradedSubspace::basis() const
{
    std::vector<WElement> out;
    for (const auto& [m, block] : blocks_)
        for (const auto& [a, vec] : block)
            out.push_back(WElement::term(m, vec));
    return out;
}

std::map<BiDegree, int> specialized_dimensions(const GradedSubspace& s, const Rational& c)
{
    GradedSubspace special;
    for (const auto& x : s.basis())
        for (const auto& [m, f] : x.terms())
            special.insert(m, f.evaluate(Var::t, c));
    return special.dimensions();
}

GenerationResult generate_subalgebra(const std::vector<WElement>& generators, BracketKind kind, int m_max, int a_max,
                                     const GenerationOptions& options)
{
    if (m_max < 1 || a_max < 0)
        throw InvalidArgument("truncation bounds must satisfy m_max >= 1 and a_max >= 0");
    const int cap = options.hard_cap.value_or(a_max + 2);
    if (cap < a_max)
        throw InvalidArgument("hard cap " + std::to_string(cap) + " lies below a_max " + std::to_string(a_max));

    GenerationResult result;
    std::vector<WElement> spanning; // elements whose span is the current subspace
    bool parametric = false;

    for (const auto& g : generators) {
        if (g.is_zero())
            throw InvalidArgument("generators must be nonzero");
        if (g.terms().size() != 1)
            throw InvalidArgument("generator " + g.to_string() + " is not homogeneous in z");
        const auto& [m, f] = *g.terms().begin();
        if (m > m_max || g.d_degree() > a_max)
            throw InvalidArgument("generator " + g.to_string() + " lies outside the truncation window");
        parametric = parametric || has_parameters(f);
        if (result.subspace.insert(m, f))
            spanning.push_back(g);
    }

    std::size_t processed = 0;
    while (processed < spanning.size()) {
        struct Pair {
            int m;
            int a;
            std::size_t i;
            std::size_t j;
        };
        std::vector<Pair> pairs;
        const std::size_t fresh_end = spanning.size();
        for (std::size_t i = processed; i < fresh_end; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                int m = spanning[i].max_charge() + spanning[j].max_charge();
                int a = spanning[i].d_degree() + spanning[j].d_degree() - 1;
                if (m <= m_max && a <= cap)
                    pairs.push_back({m, a, i, j});
            }
        std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
            return std::tie(x.m, x.a, x.i, x.j) < std::tie(y.m, y.a, y.i, y.j);
        });
        processed = fresh_end;
        for (const auto& p : pairs) {
            WElement br = bracket(spanning[p.i], spanning[p.j], kind);
            ++result.brackets_evaluated;
            if (br.is_zero())
                continue;
            if (br.d_degree() > cap)
                throw TruncationOverflow("bracket reached D-order " + std::to_string(br.d_degree()) +
                                         " above the hard cap " + std::to_string(cap));
            if (br.d_degree() > a_max)
                continue;
            const auto& [m, f] = *br.terms().begin();
            parametric = parametric || has_parameters(f);
            if (result.subspace.insert(m, f))
                spanning.push_back(br);
        }
    }

    if (parametric) {
        auto generic = result.subspace.dimensions();
        for (const auto& c : options.rank_check_points) {
            RankCheck check{c, false, specialized_dimensions(result.subspace, c)};
            check.matches = check.dimensions == generic;
            result.rank_checks.push_back(std::move(check));
        }
    }
    return result;
}

AdPowerReport ad_power_elements(int m_max, int n_max, BracketKind kind)
{
    if (m_max < 0 || n_max < 0)
        throw InvalidArgument("bounds must be non-negative");
    AdPowerReport report;
    const WElement zd = WElement::monomial(1, 1);
    for (int n = 0; n <= n_max; ++n) {
        WElement x = WElement::monomial(1, static_cast<unsigned>(n));
        for (int m = 0; m <= m_max; ++m) {
            if (m > 0)
                x = bracket(zd, x, kind);
            report.elements.emplace(std::make_pair(m, n), x);
            if (x.is_zero())
                report.vanishing.emplace_back(m, n);
            else
                report.span.insert(m + 1, x.coefficient(m + 1));
        }
    }
    std::sort(report.vanishing.begin(), report.vanishing.end());
    return report;
}

Character character_of(const GradedSubspace& s, Convention convention, const Window& window)
{
    Character out(convention, window);
    for (const auto& [b, dim] : s.dimensions())
        out.add(out.t_exponent(b.m), 2 * b.a - 2, dim);
    return out;
}

} // namespace wkit
