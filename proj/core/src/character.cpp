#include "wkit/character.hpp"

#include "wkit/errors.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace wkit {

const char* to_string(Convention c)
{
    return c == Convention::doubled ? "doubled" : "plain";
}

Convention parse_convention(std::string_view name)
{
    if (name == "doubled")
        return Convention::doubled;
    if (name == "plain")
        return Convention::plain;
    throw ParseError("unknown convention '" + std::string(name) + "'");
}

int Character::weight_of(int t_exp) const
{
    if (t_exp < 0)
        return -1;
    if (convention_ == Convention::doubled)
        return t_exp % 2 == 0 ? t_exp / 2 : -1;
    return t_exp;
}

bool Character::in_window(int t_exp, int q_exp) const
{
    int w = weight_of(t_exp);
    return w >= 0 && w <= window_.max_weight && q_exp >= window_.q_min && q_exp <= window_.q_max;
}

Integer Character::coefficient(int t_exp, int q_exp) const
{
    auto it = terms_.find({t_exp, q_exp});
    return it == terms_.end() ? Integer(0) : it->second;
}

void Character::add(int t_exp, int q_exp, const Integer& dim)
{
    if (dim == 0 || !in_window(t_exp, q_exp))
        return;
    auto [it, inserted] = terms_.try_emplace({t_exp, q_exp}, dim);
    if (!inserted)
        it->second += dim;
    if (it->second < 0)
        throw InvalidArgument("negative dimension in character");
    if (it->second == 0)
        terms_.erase(it);
}

Character Character::converted(Convention target) const
{
    Character out(target, window_);
    for (const auto& [key, dim] : terms_)
        out.add(out.t_exponent(weight_of(key.first)), key.second, dim);
    return out;
}

Character Character::restricted(const Window& window) const
{
    Character out(convention_, window);
    for (const auto& [key, dim] : terms_)
        out.add(key.first, key.second, dim);
    return out;
}

std::string Character::to_string() const
{
    std::ostringstream os;
    os << "convention=" << wkit::to_string(convention_) << " weight<=" << window_.max_weight << " q in ["
       << window_.q_min << ", " << window_.q_max << "]\n";
    int current = -1;
    for (const auto& [key, dim] : terms_) {
        if (key.first != current) {
            if (current != -1)
                os << '\n';
            current = key.first;
            os << "t^" << key.first << ':';
        }
        os << "  q^" << key.second << '=' << dim.get_str();
    }
    if (current != -1)
        os << '\n';
    return os.str();
}

Character operator+(const Character& a, const Character& b)
{
    if (a.convention() != b.convention())
        throw ConventionMismatch("cannot add characters in different conventions");
    Character out = a;
    for (const auto& [key, dim] : b.terms())
        out.add(key.first, key.second, dim);
    return out;
}

namespace {

using RawSeries = std::map<std::pair<int, int>, Integer>;

/// series * (1 - t^a q^b)^(-power), keeping t exponents <= t_cap and, when
/// q_cap is set, q exponents <= *q_cap. Requires a > 0, or a == 0 and b > 0.
RawSeries times_geometric(const RawSeries& series, int a, int b, const Integer& power, int t_cap,
                          const std::optional<int>& q_cap)
{
    if (power == 0)
        return series;
    RawSeries out;
    for (const auto& [key, dim] : series) {
        for (unsigned k = 0;; ++k) {
            long te = key.first + static_cast<long>(a) * k;
            long qe = key.second + static_cast<long>(b) * k;
            if (te > t_cap || (q_cap && qe > *q_cap))
                break;
            // coefficient of x^k in (1 - x)^(-power) is C(power + k - 1, k)
            Integer c;
            Integer top = power + k - 1;
            mpz_bin_ui(c.get_mpz_t(), top.get_mpz_t(), k);
            out[{static_cast<int>(te), static_cast<int>(qe)}] += dim * c;
            if (a == 0 && b == 0)
                break;
        }
    }
    return out;
}

struct GeometricFactor {
    int t_exp;
    int q_exp;
    int power;
};

Character expand_closed(Convention native, std::pair<int, int> prefactor, const std::vector<GeometricFactor>& factors,
                        const Window& window)
{
    Character result(native, window);
    int t_cap = result.t_exponent(window.max_weight);
    RawSeries series{{prefactor, Integer(1)}};
    // All factor exponents are non-negative, so truncating q above q_max is exact.
    for (const auto& f : factors)
        series = times_geometric(series, f.t_exp, f.q_exp, Integer(f.power), t_cap, window.q_max);
    for (const auto& [key, dim] : series)
        result.add(key.first, key.second, dim);
    return result;
}

} // namespace

const char* to_string(ClosedForm which)
{
    switch (which) {
    case ClosedForm::grW:
        return "grW";
    case ClosedForm::bps_undeformed:
        return "bps_undeformed";
    case ClosedForm::bps_deformed:
        return "bps_deformed";
    }
    return "?";
}

ClosedForm parse_closed_form(std::string_view name)
{
    if (name == "grW")
        return ClosedForm::grW;
    if (name == "bps_undeformed")
        return ClosedForm::bps_undeformed;
    if (name == "bps_deformed")
        return ClosedForm::bps_deformed;
    throw ParseError("unknown closed form '" + std::string(name) + "'");
}

Character char_closed_form(ClosedForm which, const Window& window, Convention convention)
{
    Character native(Convention::plain, window);
    switch (which) {
    case ClosedForm::grW:
        native = expand_closed(Convention::doubled, {2, -2}, {{2, 0, 1}, {0, 2, 1}}, window);
        break;
    case ClosedForm::bps_undeformed:
        native = expand_closed(Convention::plain, {1, -2}, {{1, 0, 1}, {0, 2, 1}}, window);
        break;
    case ClosedForm::bps_deformed:
        native = expand_closed(Convention::plain, {1, -2}, {{1, 0, 1}, {0, 2, 2}}, window);
        break;
    }
    return native.convention() == convention ? native : native.converted(convention);
}

Character plethystic_exp(const Character& c, const Window& window)
{
    Character result(c.convention(), window);
    int t_cap = result.t_exponent(window.max_weight);
    RawSeries series{{{0, 0}, Integer(1)}};
    for (const auto& [key, dim] : c.terms()) {
        if (key.first == 0)
            throw InvalidArgument("plethystic exponential needs all terms in positive weight");
        if (key.second % 2 != 0)
            throw OddDegreeInput("odd cohomological exponent q^" + std::to_string(key.second) +
                                 " in plethystic exponential input");
        series = times_geometric(series, key.first, key.second, dim, t_cap, std::nullopt);
    }
    for (const auto& [key, dim] : series)
        result.add(key.first, key.second, dim);
    return result;
}

Character tensor_HT(const Character& c, int torus_rank)
{
    if (torus_rank < 0)
        throw InvalidArgument("torus rank must be non-negative");
    RawSeries series(c.terms().begin(), c.terms().end());
    series = times_geometric(series, 0, 2, Integer(torus_rank), c.t_exponent(c.window().max_weight), c.window().q_max);
    Character out(c.convention(), c.window());
    for (const auto& [key, dim] : series)
        out.add(key.first, key.second, dim);
    return out;
}

std::vector<std::pair<int, Integer>> kac_to_bps_character(const std::vector<Integer>& coefficients)
{
    std::vector<std::pair<int, Integer>> out;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        if (coefficients[k] < 0)
            throw InvalidArgument("Kac polynomial coefficients must be non-negative");
        if (coefficients[k] != 0)
            out.emplace_back(-2 * static_cast<int>(k), coefficients[k]);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Character bps_character(const std::map<int, std::vector<Integer>>& kac_by_weight, Convention convention,
                        const Window& window)
{
    Character out(convention, window);
    for (const auto& [weight, coefficients] : kac_by_weight) {
        if (weight < 1)
            throw InvalidArgument("BPS weights start at 1");
        for (const auto& [degree, dim] : kac_to_bps_character(coefficients))
            out.add(out.t_exponent(weight), degree, dim);
    }
    return out;
}

Character pbw_character(const Character& g_char, bool tensor_Hu, const Window& window)
{
    int min_q = 0;
    for (const auto& [key, dim] : g_char.terms())
        min_q = std::min(min_q, key.second);
    // A weight-w product has at most w factors, each with q exponent >= min_q.
    int q_hi = window.q_max + std::max(0, window.max_weight - 1) * -min_q;
    int q_lo = std::min(window.q_min, window.max_weight * min_q);
    Window work{window.max_weight, q_lo, q_hi};
    Character affinized(g_char.convention(), work);
    RawSeries series(g_char.terms().begin(), g_char.terms().end());
    if (tensor_Hu)
        series = times_geometric(series, 0, 2, Integer(1), affinized.t_exponent(work.max_weight), work.q_max);
    for (const auto& [key, dim] : series)
        affinized.add(key.first, key.second, dim);
    return plethystic_exp(affinized, window);
}

bool pbw_identity_check(const Character& g_char, bool tensor_Hu, const Character& target)
{
    if (g_char.convention() != target.convention())
        throw ConventionMismatch("BPS character and target use different conventions");
    return pbw_character(g_char, tensor_Hu, target.window()).terms() == target.terms();
}

} // namespace wkit
