#include "wkit/yangian.hpp"

#include "wkit/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace wkit {

const char* to_string(Relation r)
{
    return r == Relation::quartic ? "quartic" : "serre";
}

const char* to_string(Model m)
{
    return m == Model::w_deformed ? "w_deformed" : "shuffle";
}

const char* to_string(SignVariant s)
{
    return s == SignVariant::plus ? "plus" : "minus";
}

Model parse_model(std::string_view name)
{
    if (name == "w" || name == "w_deformed")
        return Model::w_deformed;
    if (name == "shuffle")
        return Model::shuffle;
    throw ParseError("unknown model '" + std::string(name) + "'");
}

Poly sigma2()
{
    const Poly t1 = Poly::var(Var::t1);
    const Poly t2 = Poly::var(Var::t2);
    const Poly t3 = -t1 - t2;
    return t1 * t2 + t1 * t3 + t2 * t3;
}

Poly sigma3()
{
    const Poly t1 = Poly::var(Var::t1);
    const Poly t2 = Poly::var(Var::t2);
    return t1 * t2 * (-t1 - t2);
}

namespace {

/// sigma_2 at t1 = t^2, t2 = 0.
Poly sigma2_w()
{
    return sigma2().substitute(Var::t2, Poly()).substitute(Var::t1, Poly::var(Var::t, 2));
}

struct WModel {
    using Element = WElement;
    Element e(int i) const { return WElement::monomial(1, static_cast<unsigned>(i)); }
    Element br(const Element& a, const Element& b) const { return bracket(a, b, BracketKind::deformed); }
};

struct ShuffleModel {
    using Element = ShuffleElement;
    const ShuffleKernel& kernel;
    Element e(int i) const { return shuffle_e(i); }
    Element br(const Element& a, const Element& b) const { return shuffle_commutator(a, b, kernel); }
    Element product(const Element& a, const Element& b) const { return shuffle_product(a, b, kernel); }
};

template <class M>
typename M::Element quartic_lhs(const M& model, int i, int j, const Poly& s2)
{
    auto c = [&](int a, int b) { return model.br(model.e(a), model.e(b)); };
    auto lhs = c(i + 3, j) - Poly(3) * c(i + 2, j + 1) + Poly(3) * c(i + 1, j + 2) - c(i, j + 3);
    lhs += s2 * (c(i + 1, j) - c(i, j + 1));
    return lhs;
}

template <class M>
typename M::Element serre_lhs(const M& model, int i1, int i2, int i3)
{
    std::array<int, 3> idx{i1, i2, i3};
    std::array<int, 3> perm{0, 1, 2};
    typename M::Element total;
    do {
        int a = idx[perm[0]];
        int b = idx[perm[1]];
        int c = idx[perm[2]];
        total += model.br(model.e(a), model.br(model.e(b), model.e(c + 1)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Poly signed_s2(const Poly& s2, SignVariant sign)
{
    return sign == SignVariant::plus ? s2 : -s2;
}

} // namespace

bool RelationResidual::is_zero() const
{
    return std::visit([](const auto& r) { return r.is_zero(); }, residual);
}

std::string RelationResidual::residual_string() const
{
    return std::visit([](const auto& r) { return r.to_string(); }, residual);
}

WElement quartic_residual_w(int i, int j, const Poly& s2)
{
    return quartic_lhs(WModel{}, i, j, s2);
}

RelationResidual check_quartic(int i, int j, Model model, SignVariant sign, const ShuffleKernel& kernel)
{
    if (i < 0 || j < 0)
        throw InvalidArgument("relation indices must be non-negative");
    RelationResidual r;
    r.relation = Relation::quartic;
    r.indices = {i, j};
    r.model = model;
    r.sign_variant = sign;
    if (model == Model::w_deformed) {
        // s3 vanishes at t2 = 0, so the right-hand side is zero.
        r.residual = quartic_residual_w(i, j, signed_s2(sigma2_w(), sign));
    } else {
        ShuffleModel m{kernel};
        auto lhs = quartic_lhs(m, i, j, signed_s2(sigma2(), sign));
        auto sym = m.product(m.e(i), m.e(j)) + m.product(m.e(j), m.e(i));
        r.residual = lhs + sigma3() * sym;
    }
    return r;
}

RelationResidual check_serre(int i1, int i2, int i3, Model model, const ShuffleKernel& kernel)
{
    if (i1 < 0 || i2 < 0 || i3 < 0)
        throw InvalidArgument("relation indices must be non-negative");
    RelationResidual r;
    r.relation = Relation::serre;
    r.indices = {i1, i2, i3};
    r.model = model;
    if (model == Model::w_deformed)
        r.residual = serre_lhs(WModel{}, i1, i2, i3);
    else
        r.residual = serre_lhs(ShuffleModel{kernel}, i1, i2, i3);
    return r;
}

namespace {

void evaluate_cell(SweepCell& cell, Model model, const ShuffleKernel& kernel)
{
    if (cell.relation == Relation::quartic) {
        for (auto sign : {SignVariant::plus, SignVariant::minus})
            cell.vanishes_by_sign[static_cast<std::size_t>(sign)] =
                check_quartic(cell.indices[0], cell.indices[1], model, sign, kernel).is_zero();
    } else {
        cell.passes = check_serre(cell.indices[0], cell.indices[1], cell.indices[2], model, kernel).is_zero();
    }
}

SweepReport run_sweep(std::vector<SweepCell> cells, Model model, int bound, const ShuffleKernel& kernel,
                      unsigned threads)
{
    threads = std::max(1u, threads);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](unsigned w) {
        try {
            for (std::size_t k = next++; k < cells.size(); k = next++)
                evaluate_cell(cells[k], model, kernel);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(worker, w);
        for (auto& th : pool)
            th.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    SweepReport report;
    report.model = model;
    report.index_bound = bound;
    std::array<bool, 2> uniform{true, true};
    bool any_quartic = false;
    bool serre_ok = true;
    for (const auto& cell : cells) {
        if (cell.relation == Relation::quartic) {
            any_quartic = true;
            uniform[0] = uniform[0] && cell.vanishes_by_sign[0];
            uniform[1] = uniform[1] && cell.vanishes_by_sign[1];
        } else {
            serre_ok = serre_ok && cell.passes;
        }
    }
    bool quartic_ok = true;
    if (any_quartic) {
        if (uniform[0] != uniform[1])
            report.discovered_sign = uniform[0] ? SignVariant::plus : SignVariant::minus;
        quartic_ok = report.discovered_sign.has_value();
        for (auto& cell : cells)
            if (cell.relation == Relation::quartic)
                cell.passes = report.discovered_sign &&
                              cell.vanishes_by_sign[static_cast<std::size_t>(*report.discovered_sign)];
    }
    report.cells = std::move(cells);
    report.all_pass = quartic_ok && serre_ok;
    return report;
}

void add_quartic(std::vector<SweepCell>& cells, int bound)
{
    for (int i = 0; i <= bound; ++i)
        for (int j = 0; j <= bound; ++j)
            cells.push_back({Relation::quartic, {i, j}});
}

void add_serre(std::vector<SweepCell>& cells, int bound)
{
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
            for (int c = 0; c <= bound; ++c)
                cells.push_back({Relation::serre, {a, b, c}});
}

} // namespace

SweepReport sweep(const std::vector<Relation>& relations, int index_bound, Model model, const ShuffleKernel& kernel,
                  unsigned threads)
{
    if (index_bound < 0)
        throw InvalidArgument("index bound must be non-negative");
    std::vector<SweepCell> cells;
    if (std::find(relations.begin(), relations.end(), Relation::quartic) != relations.end())
        add_quartic(cells, index_bound);
    if (std::find(relations.begin(), relations.end(), Relation::serre) != relations.end())
        add_serre(cells, index_bound);
    return run_sweep(std::move(cells), model, index_bound, kernel, threads);
}

SweepReport sweep(int quartic_bound, int serre_bound, Model model, const ShuffleKernel& kernel, unsigned threads)
{
    if (quartic_bound < 0 || serre_bound < 0)
        throw InvalidArgument("index bounds must be non-negative");
    std::vector<SweepCell> cells;
    add_quartic(cells, quartic_bound);
    add_serre(cells, serre_bound);
    return run_sweep(std::move(cells), model, std::max(quartic_bound, serre_bound), kernel, threads);
}

} // namespace wkit
