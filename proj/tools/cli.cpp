#include "cli.hpp"

#include "acceptance.hpp"

#include "wkit/character.hpp"
#include "wkit/errors.hpp"
#include "wkit/liegen.hpp"
#include "wkit/parse.hpp"
#include "wkit/quiverkac.hpp"
#include "wkit/shuffle.hpp"
#include "wkit/welement.hpp"
#include "wkit/yangian.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace wkit::cli {

using nlohmann::ordered_json;

unsigned threads_from_environment()
{
    const char* raw = std::getenv("WKIT_THREADS");
    if (raw == nullptr || *raw == '\0')
        return 1;
    std::string text(raw);
    if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 4 || std::stoi(text) < 1)
        throw ParseError("WKIT_THREADS must be a positive integer, got '" + text + "'");
    return static_cast<unsigned>(std::stoi(text));
}

namespace {

ordered_json integer_json(const Integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

ordered_json character_json(const Character& c)
{
    ordered_json j;
    j["convention"] = to_string(c.convention());
    j["window"] = {{"max_weight", c.window().max_weight}, {"q_min", c.window().q_min}, {"q_max", c.window().q_max}};
    ordered_json t_exps = ordered_json::array();
    ordered_json q_exps = ordered_json::array();
    for (int q = c.window().q_min; q <= c.window().q_max; ++q)
        q_exps.push_back(q);
    ordered_json rows = ordered_json::array();
    for (int w = 0; w <= c.window().max_weight; ++w) {
        t_exps.push_back(c.t_exponent(w));
        ordered_json row = ordered_json::array();
        for (int q = c.window().q_min; q <= c.window().q_max; ++q)
            row.push_back(integer_json(c.coefficient(c.t_exponent(w), q)));
        rows.push_back(std::move(row));
    }
    j["t_exponents"] = std::move(t_exps);
    j["q_exponents"] = std::move(q_exps);
    j["dimensions"] = std::move(rows);
    return j;
}

ordered_json dims_json(const std::map<BiDegree, int>& dims)
{
    ordered_json arr = ordered_json::array();
    for (const auto& [b, d] : dims)
        arr.push_back({{"m", b.m}, {"a", b.a}, {"dim", d}});
    return arr;
}

std::string dims_text(const std::map<BiDegree, int>& dims, int m_max, int a_max)
{
    std::ostringstream os;
    os << "m\\a";
    for (int a = 0; a <= a_max; ++a)
        os << ' ' << a;
    os << '\n';
    for (int m = 1; m <= m_max; ++m) {
        os << m << "  ";
        for (int a = 0; a <= a_max; ++a) {
            auto it = dims.find({m, a});
            os << ' ' << (it == dims.end() ? 0 : it->second);
        }
        os << '\n';
    }
    return os.str();
}

/// `expr` or `expr@degree`.
ShuffleElement parse_shuffle_operand(const std::string& text)
{
    auto at = text.rfind('@');
    if (at == std::string::npos)
        return parse_shuffle_element(text);
    std::string deg = text.substr(at + 1);
    if (deg.empty() || deg.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed degree in shuffle operand '" + text + "'");
    return parse_shuffle_element(text.substr(0, at), std::stoi(deg));
}

std::vector<Integer> parse_kac_polynomial(const std::string& text)
{
    Poly p = parse_poly(text, Grammar::kac());
    std::vector<Integer> coeffs(p.degree(Var::q) + 1);
    for (unsigned k = 0; k < coeffs.size(); ++k) {
        Poly c = p.coefficient_of(Var::q, k);
        if (!c.is_constant() || c.constant_term().get_den() != 1 || c.constant_term() < 0)
            throw ParseError("Kac polynomial needs non-negative integer coefficients: '" + text + "'");
        coeffs[k] = c.constant_term().get_num();
    }
    return coeffs;
}

struct Emitter {
    std::ostream& out;
    bool json;
    std::string command;
    ordered_json inputs = ordered_json::object();

    void emit(const ordered_json& result, const std::string& text) const
    {
        if (json) {
            ordered_json j;
            j["schema"] = 1;
            j["command"] = command;
            j["inputs"] = inputs;
            j["result"] = result;
            out << j.dump(2) << '\n';
        } else {
            out << text;
            if (!text.empty() && text.back() != '\n')
                out << '\n';
        }
    }
};

struct BracketArgs {
    std::string kind = "classical";
    std::string x;
    std::string y;
};

int do_bracket(const BracketArgs& a, Emitter& e)
{
    BracketKind kind = parse_bracket_kind(a.kind);
    WElement x = parse_welement(a.x);
    WElement y = parse_welement(a.y);
    e.inputs = {{"kind", to_string(kind)}, {"x", x.to_string()}, {"y", y.to_string()}};
    WElement r = bracket(x, y, kind);
    e.emit({{"element", r.to_string()}}, r.to_string());
    return kExitOk;
}

struct GenerateArgs {
    std::vector<std::string> generators;
    std::string bracket = "graded";
    int m_max = 0;
    int a_max = 0;
    std::optional<int> hard_cap;
    bool basis = false;
};

int do_generate(const GenerateArgs& a, Emitter& e)
{
    BracketKind kind = parse_bracket_kind(a.bracket);
    std::vector<WElement> gens;
    ordered_json gen_json = ordered_json::array();
    for (const auto& g : a.generators) {
        gens.push_back(parse_welement(g));
        gen_json.push_back(gens.back().to_string());
    }
    e.inputs = {{"generators", gen_json}, {"bracket", to_string(kind)}, {"mmax", a.m_max}, {"amax", a.a_max}};
    if (a.hard_cap)
        e.inputs["hard_cap"] = *a.hard_cap;
    GenerationOptions opts;
    opts.hard_cap = a.hard_cap;
    auto result = generate_subalgebra(gens, kind, a.m_max, a.a_max, opts);
    auto dims = result.subspace.dimensions();

    ordered_json r;
    r["dimensions"] = dims_json(dims);
    r["total_dimension"] = result.subspace.total_dimension();
    r["brackets_evaluated"] = result.brackets_evaluated;
    ordered_json checks = ordered_json::array();
    std::ostringstream text;
    text << dims_text(dims, a.m_max, a.a_max);
    text << "total dimension " << result.subspace.total_dimension() << '\n';
    for (const auto& rc : result.rank_checks) {
        checks.push_back({{"t", wkit::to_string(rc.t)}, {"matches", rc.matches}});
        text << "rank check t=" << wkit::to_string(rc.t) << ": " << (rc.matches ? "agrees" : "differs") << '\n';
    }
    r["rank_checks"] = std::move(checks);
    if (a.basis) {
        ordered_json basis = ordered_json::array();
        for (const auto& b : result.subspace.basis()) {
            basis.push_back(b.to_string());
            text << b.to_string() << '\n';
        }
        r["basis"] = std::move(basis);
    }
    e.emit(r, text.str());
    return kExitOk;
}

struct AdBasisArgs {
    int m_max = 5;
    int n_max = 5;
    std::string kind = "classical";
};

int do_adbasis(const AdBasisArgs& a, Emitter& e)
{
    BracketKind kind = parse_bracket_kind(a.kind);
    e.inputs = {{"mmax", a.m_max}, {"nmax", a.n_max}, {"kind", to_string(kind)}};
    auto report = ad_power_elements(a.m_max, a.n_max, kind);
    ordered_json elements = ordered_json::array();
    std::ostringstream text;
    for (const auto& [mn, x] : report.elements) {
        elements.push_back({{"m", mn.first}, {"n", mn.second}, {"element", x.to_string()}});
        text << "ad^" << mn.first << "(z*D^" << mn.second << ") = " << x.to_string() << '\n';
    }
    ordered_json vanishing = ordered_json::array();
    for (const auto& [m, n] : report.vanishing)
        vanishing.push_back({m, n});
    text << "vanishing: " << report.vanishing.size() << '\n';
    auto dims = report.span.dimensions();
    text << dims_text(dims, a.m_max + 1, a.n_max);
    e.emit({{"elements", elements}, {"vanishing", vanishing}, {"rank", dims_json(dims)}}, text.str());
    return kExitOk;
}

struct ShuffleArgs {
    std::string x;
    std::string y;
    std::string kernel = "(x+t1)(x+t2)(x+t3)/(x)";
    std::string op = "product";
    std::string sum = "cosets";
};

int do_shuffle(const ShuffleArgs& a, Emitter& e)
{
    ShuffleKernel kernel = ShuffleKernel::parse(a.kernel);
    ShuffleElement x = parse_shuffle_operand(a.x);
    ShuffleElement y = parse_shuffle_operand(a.y);
    if (a.op != "product" && a.op != "commutator")
        throw ParseError("--op must be product or commutator");
    if (a.sum != "cosets" && a.sum != "full")
        throw ParseError("--sum must be cosets or full");
    e.inputs = {{"x", x.to_string()},     {"x_degree", x.degree()}, {"y", y.to_string()},
                {"y_degree", y.degree()}, {"kernel", kernel.to_string()}, {"op", a.op},
                {"sum", a.sum}};
    ShuffleElement r = a.op == "product"
                           ? shuffle_product(x, y, kernel, a.sum == "full" ? ShuffleSum::full_group : ShuffleSum::cosets)
                           : shuffle_commutator(x, y, kernel);
    e.emit({{"degree", r.degree()}, {"element", r.to_string()}}, r.to_string() + "@" + std::to_string(r.degree()));
    return kExitOk;
}

struct YangianArgs {
    std::string model;
    int bound = 0;
    std::optional<int> serre_bound;
    std::string kernel = "(x+t1)(x+t2)(x+t3)/(x)";
};

int do_yangian(const YangianArgs& a, Emitter& e, unsigned threads)
{
    Model model = parse_model(a.model);
    ShuffleKernel kernel = ShuffleKernel::parse(a.kernel);
    int serre = a.serre_bound.value_or(a.bound);
    e.inputs = {{"model", to_string(model)}, {"bound", a.bound}, {"serre_bound", serre}};
    if (model == Model::shuffle)
        e.inputs["kernel"] = kernel.to_string();
    auto report = sweep(a.bound, serre, model, kernel, threads);

    ordered_json cells = ordered_json::array();
    std::ostringstream text;
    for (const auto& c : report.cells) {
        ordered_json cell{{"relation", to_string(c.relation)}, {"indices", c.indices}, {"passes", c.passes}};
        text << to_string(c.relation) << " (";
        for (std::size_t i = 0; i < c.indices.size(); ++i)
            text << (i ? "," : "") << c.indices[i];
        text << ") " << (c.passes ? "pass" : "FAIL");
        if (c.relation == Relation::quartic) {
            cell["plus"] = c.vanishes_by_sign[0];
            cell["minus"] = c.vanishes_by_sign[1];
            text << "  plus=" << c.vanishes_by_sign[0] << " minus=" << c.vanishes_by_sign[1];
        }
        text << '\n';
        cells.push_back(std::move(cell));
    }
    const char* sign = report.discovered_sign ? to_string(*report.discovered_sign) : "none";
    text << "sign variant: " << sign << '\n' << (report.all_pass ? "all relations hold" : "relations FAIL") << '\n';
    ordered_json r{{"sign_variant", report.discovered_sign ? ordered_json(sign) : ordered_json(nullptr)},
                   {"all_pass", report.all_pass},
                   {"cells", cells}};
    e.emit(r, text.str());
    return report.all_pass ? kExitOk : kExitFailure;
}

struct KacArgs {
    std::string quiver;
    std::string dim;
    int q = 0;
    int vertices = 0;
};

int do_kac(const KacArgs& a, Emitter& e, unsigned threads)
{
    QuiverSpec quiver = QuiverSpec::parse(a.quiver, a.vertices);
    DimVector d = parse_dim_vector(a.dim);
    e.inputs = {{"quiver", quiver.to_string()}, {"vertices", quiver.vertices}, {"dim", d}, {"q", a.q}};
    auto sample = kac_bruteforce(quiver, d, a.q, threads);
    int chi = euler_form(quiver, d, d);
    ordered_json r{{"count", integer_json(sample.count)},
                   {"representations", sample.representations},
                   {"euler_form", chi}};
    std::ostringstream text;
    text << "absolutely indecomposable classes: " << sample.count.get_str() << '\n'
         << "representations enumerated: " << sample.representations << '\n'
         << "euler form chi(d,d): " << chi << '\n';
    e.emit(r, text.str());
    return kExitOk;
}

struct NMinusArgs {
    std::string type;
    int m_max = 4;
    std::optional<std::string> dim;
};

int do_nminus(const NMinusArgs& a, Emitter& e)
{
    Dynkin dynkin = Dynkin::parse(a.type);
    e.inputs = {{"type", dynkin.name()}, {"mmax", a.m_max}};
    NMinusPolyD model(dynkin, a.m_max);
    ordered_json roots = ordered_json::array();
    std::ostringstream text;
    text << "positive roots of " << dynkin.name() << ": " << model.roots().size() << '\n';
    for (const auto& r : model.roots()) {
        roots.push_back(r);
        text << " (";
        for (std::size_t i = 0; i < r.size(); ++i)
            text << (i ? "," : "") << r[i];
        text << ")";
    }
    text << '\n';
    ordered_json table = ordered_json::array();
    for (int i = 0; i < static_cast<int>(model.roots().size()); ++i)
        for (int j = 0; j < static_cast<int>(model.roots().size()); ++j)
            if (auto sc = model.structure_constant(i, j))
                table.push_back({{"x", model.roots()[i]}, {"y", model.roots()[j]}, {"sum", model.roots()[sc->first]},
                                 {"sign", sc->second}});
    ordered_json r{{"roots", roots}, {"structure_constants", table}, {"dimension", model.dimension()}};
    if (a.dim) {
        DimVector d = parse_dim_vector(*a.dim);
        e.inputs["dim"] = d;
        int mult = root_multiplicity(dynkin, d);
        r["root_multiplicity"] = mult;
        text << "root multiplicity: " << mult << '\n';
    }
    auto checks = model.verify();
    r["checks"] = {{"jacobi", checks.jacobi},
                   {"antisymmetry", checks.antisymmetry},
                   {"p_derivation", checks.p_derivation},
                   {"q_derivation", checks.q_derivation},
                   {"heisenberg", checks.heisenberg}};
    text << "jacobi " << checks.jacobi << ", antisymmetry " << checks.antisymmetry << ", p derivation "
         << checks.p_derivation << ", q derivation " << checks.q_derivation << ", [q_i,p_i] = d_i "
         << checks.heisenberg << '\n';
    e.emit(r, text.str());
    return checks.passes() ? kExitOk : kExitFailure;
}

struct CharArgs {
    std::string which;
    int wmax = 0;
    int qmin = 0;
    int qmax = 0;
    std::optional<std::string> convention;
};

int do_char(const CharArgs& a, Emitter& e)
{
    ClosedForm which = parse_closed_form(a.which);
    if (a.wmax < 1 || a.qmin > a.qmax)
        throw InvalidArgument("window needs --wmax >= 1 and --qmin <= --qmax");
    Convention conv = a.convention ? parse_convention(*a.convention)
                                   : (which == ClosedForm::grW ? Convention::doubled : Convention::plain);
    Window window{a.wmax, a.qmin, a.qmax};
    e.inputs = {{"which", to_string(which)}, {"wmax", a.wmax}, {"qmin", a.qmin}, {"qmax", a.qmax},
                {"convention", to_string(conv)}};
    Character c = char_closed_form(which, window, conv);
    e.emit(character_json(c), c.to_string());
    return kExitOk;
}

struct PbwArgs {
    std::string kac = "q";
    int wmax = 5;
    int qmin = -10;
    int qmax = 10;
    std::string convention = "plain";
    bool no_hu = false;
};

int do_pbw(const PbwArgs& a, Emitter& e)
{
    auto kac = parse_kac_polynomial(a.kac);
    Convention conv = parse_convention(a.convention);
    if (a.wmax < 1 || a.qmin > a.qmax)
        throw InvalidArgument("window needs --wmax >= 1 and --qmin <= --qmax");
    Window window{a.wmax, a.qmin, a.qmax};
    e.inputs = {{"kac", parse_poly(a.kac, Grammar::kac()).to_string()},
                {"wmax", a.wmax},
                {"qmin", a.qmin},
                {"qmax", a.qmax},
                {"convention", to_string(conv)},
                {"tensor_hu", !a.no_hu}};
    std::map<int, std::vector<Integer>> by_weight;
    for (int d = 1; d <= a.wmax; ++d)
        by_weight[d] = kac;
    int min_degree = -2 * static_cast<int>(kac.size() - 1);
    Window g_window{a.wmax, std::min(a.qmin, min_degree), a.qmax};
    Character g = bps_character(by_weight, conv, g_window);

    std::vector<accept::GradedBasisElement> basis;
    int max_degree = a.qmax - std::min(0, min_degree) * (a.wmax - 1);
    if (a.no_hu) {
        for (const auto& [key, dim] : g.terms())
            for (Integer c = 0; c < dim; ++c)
                basis.push_back({g.weight_of(key.first), key.second});
    } else {
        basis = accept::affinized_bps_basis(kac, a.wmax, max_degree);
    }
    Character target = accept::symmetric_algebra_bruteforce(basis, conv, window);
    bool ok = pbw_identity_check(g, !a.no_hu, target);
    ordered_json r{{"passed", ok}, {"character", character_json(target)}};
    e.emit(r, target.to_string() + (ok ? "PBW identity holds\n" : "PBW identity FAILS\n"));
    return ok ? kExitOk : kExitFailure;
}

struct AcceptArgs {
    std::optional<std::string> only;
    std::string kernel = "(x+t1)(x+t2)(x+t3)/(x)";
    bool no_timing = false;
};

int do_accept(const AcceptArgs& a, Emitter& e, unsigned threads)
{
    accept::Options opts;
    opts.only = a.only;
    opts.kernel = ShuffleKernel::parse(a.kernel);
    opts.threads = threads;
    e.inputs = {{"only", a.only ? ordered_json(*a.only) : ordered_json(nullptr)}, {"kernel", opts.kernel.to_string()}};
    auto results = accept::run(opts);
    bool all = true;
    ordered_json list = ordered_json::array();
    std::ostringstream text;
    int passed = 0;
    for (const auto& r : results) {
        all = all && r.passed;
        passed += r.passed ? 1 : 0;
        ordered_json j{{"id", r.id}, {"module", r.module}, {"title", r.title}, {"passed", r.passed},
                       {"detail", r.detail}};
        if (!a.no_timing)
            j["seconds"] = r.seconds;
        list.push_back(std::move(j));
        text << accept::format(r, !a.no_timing) << '\n';
    }
    text << passed << "/" << results.size() << " criteria passed\n";
    e.emit({{"criteria", list}, {"all_pass", all}}, text.str());
    return all ? kExitOk : kExitFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Computations with W+ algebras, shuffle algebras, Yangian relations, Kac polynomials and characters",
                 "wkit"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit one JSON object instead of text");
    app.fallthrough();

    BracketArgs bracket_args;
    auto* bracket_cmd = app.add_subcommand("bracket", "Bracket of two W elements");
    bracket_cmd->add_option("--kind", bracket_args.kind, "classical, graded or deformed")->capture_default_str();
    bracket_cmd->add_option("x", bracket_args.x, "First element, e.g. z^2*D^3")->required();
    bracket_cmd->add_option("y", bracket_args.y, "Second element")->required();

    GenerateArgs gen_args;
    auto* gen_cmd = app.add_subcommand("generate", "Subalgebra generated inside a truncation window");
    gen_cmd->add_option("generators", gen_args.generators, "z-homogeneous generators")->required();
    gen_cmd->add_option("--bracket", gen_args.bracket, "classical, graded or deformed")->capture_default_str();
    gen_cmd->add_option("--mmax", gen_args.m_max, "Largest z-degree")->required();
    gen_cmd->add_option("--amax", gen_args.a_max, "Largest D-order")->required();
    gen_cmd->add_option("--hard-cap", gen_args.hard_cap, "D-order that aborts generation (default amax+2)");
    gen_cmd->add_flag("--basis", gen_args.basis, "Print the echelon basis");

    AdBasisArgs ad_args;
    auto* ad_cmd = app.add_subcommand("adbasis", "Elements ad_{zD}^m(z D^n) and their ranks");
    ad_cmd->add_option("--mmax", ad_args.m_max, "Largest power m")->capture_default_str();
    ad_cmd->add_option("--nmax", ad_args.n_max, "Largest n")->capture_default_str();
    ad_cmd->add_option("--kind", ad_args.kind, "classical, graded or deformed")->capture_default_str();

    ShuffleArgs shuf_args;
    auto* shuf_cmd = app.add_subcommand("shuffle", "Shuffle product of symmetric polynomials");
    shuf_cmd->add_option("x", shuf_args.x, "First operand, optionally suffixed @degree")->required();
    shuf_cmd->add_option("y", shuf_args.y, "Second operand, optionally suffixed @degree")->required();
    shuf_cmd->add_option("--kernel", shuf_args.kernel, "Kernel factor list")->capture_default_str();
    shuf_cmd->add_option("--op", shuf_args.op, "product or commutator")->capture_default_str();
    shuf_cmd->add_option("--sum", shuf_args.sum, "cosets or full")->capture_default_str();

    YangianArgs yang_args;
    auto* yang_cmd = app.add_subcommand("yangian-check", "Quartic and Serre relations over an index range");
    yang_cmd->add_option("--model", yang_args.model, "w or shuffle")->required();
    yang_cmd->add_option("--bound", yang_args.bound, "Largest index")->required();
    yang_cmd->add_option("--serre-bound", yang_args.serre_bound, "Largest Serre index (default --bound)");
    yang_cmd->add_option("--kernel", yang_args.kernel, "Shuffle kernel")->capture_default_str();

    KacArgs kac_args;
    auto* kac_cmd = app.add_subcommand("kac", "Count absolutely indecomposable representations over F_q");
    kac_cmd->add_option("quiver", kac_args.quiver, "Edge list such as 1-1 or 1->2")->required();
    kac_cmd->add_option("--dim", kac_args.dim, "Dimension vector, e.g. 1,1")->required();
    kac_cmd->add_option("--q", kac_args.q, "Field size in {2,3,4,5}")->required();
    kac_cmd->add_option("--vertices", kac_args.vertices, "Vertex count when larger than the edge list shows");

    NMinusArgs nm_args;
    auto* nm_cmd = app.add_subcommand("nminus", "Root data and the n- (x) Q[D] model of an ADE type");
    nm_cmd->add_option("--type", nm_args.type, "A<n>, D<n> or E<n>")->required();
    nm_cmd->add_option("--mmax", nm_args.m_max, "Largest D power")->capture_default_str();
    nm_cmd->add_option("--dim", nm_args.dim, "Report the root multiplicity of this vector");

    CharArgs char_args;
    auto* char_cmd = app.add_subcommand("char", "Window expansion of a closed-form character");
    char_cmd->add_option("--which", char_args.which, "grW, bps_undeformed or bps_deformed")->required();
    char_cmd->add_option("--wmax", char_args.wmax, "Largest weight")->required();
    char_cmd->add_option("--qmin", char_args.qmin, "Smallest q exponent")->required();
    char_cmd->add_option("--qmax", char_args.qmax, "Largest q exponent")->required();
    char_cmd->add_option("--convention", char_args.convention, "doubled or plain (default: native)");

    PbwArgs pbw_args;
    auto* pbw_cmd = app.add_subcommand("pbw-check", "PE of the affinized BPS character against enumeration");
    pbw_cmd->add_option("--kac", pbw_args.kac, "Kac polynomial in q, used at every weight")->capture_default_str();
    pbw_cmd->add_option("--wmax", pbw_args.wmax, "Largest weight")->capture_default_str();
    pbw_cmd->add_option("--qmin", pbw_args.qmin, "Smallest q exponent")->capture_default_str();
    pbw_cmd->add_option("--qmax", pbw_args.qmax, "Largest q exponent")->capture_default_str();
    pbw_cmd->add_option("--convention", pbw_args.convention, "doubled or plain")->capture_default_str();
    pbw_cmd->add_flag("--no-hu", pbw_args.no_hu, "Skip the u-ladder tensor factor");

    AcceptArgs acc_args;
    auto* acc_cmd = app.add_subcommand("accept", "Run the acceptance criteria");
    acc_cmd->add_option("--only", acc_args.only, "Restrict to one module");
    acc_cmd->add_option("--kernel", acc_args.kernel, "Shuffle kernel")->capture_default_str();
    acc_cmd->add_flag("--no-timing", acc_args.no_timing, "Omit wall times");

    std::vector<const char*> argv{"wkit"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "usage error: " << ex.what() << '\n';
        return kExitUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    Emitter emitter{out, json, chosen->get_name()};
    try {
        unsigned threads = threads_from_environment();
        if (chosen == bracket_cmd)
            return do_bracket(bracket_args, emitter);
        if (chosen == gen_cmd)
            return do_generate(gen_args, emitter);
        if (chosen == ad_cmd)
            return do_adbasis(ad_args, emitter);
        if (chosen == shuf_cmd)
            return do_shuffle(shuf_args, emitter);
        if (chosen == yang_cmd)
            return do_yangian(yang_args, emitter, threads);
        if (chosen == kac_cmd)
            return do_kac(kac_args, emitter, threads);
        if (chosen == nm_cmd)
            return do_nminus(nm_args, emitter);
        if (chosen == char_cmd)
            return do_char(char_args, emitter);
        if (chosen == pbw_cmd)
            return do_pbw(pbw_args, emitter);
        return do_accept(acc_args, emitter, threads);
    } catch (const ParseError& ex) {
        err << "usage error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& ex) {
        err << "usage error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedType& ex) {
        err << "usage error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const Error& ex) {
        if (json) {
            ordered_json j;
            j["schema"] = 1;
            j["command"] = emitter.command;
            j["inputs"] = emitter.inputs;
            j["error"] = ex.what();
            out << j.dump(2) << '\n';
        }
        err << "error: " << ex.what() << '\n';
        return kExitFailure;
    }
}

} // namespace wkit::cli
