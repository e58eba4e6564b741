#include "wkit/quiverkac.hpp"

#include "wkit/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <thread>

namespace wkit {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

int parse_int(std::string_view s, std::string_view what)
{
    s = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("malformed " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

int ipow(int base, int exp)
{
    int r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

} // namespace

QuiverSpec QuiverSpec::parse(std::string_view text, int vertices)
{
    if (vertices < 0)
        throw InvalidArgument("vertex count must be non-negative");
    QuiverSpec q;
    q.vertices = vertices;
    text = trim(text);
    if (!text.empty()) {
        for (auto tok : split(text, ',')) {
            std::size_t pos = tok.find("->");
            std::size_t len = 2;
            if (pos == std::string_view::npos) {
                pos = tok.find('-');
                len = 1;
            }
            if (pos == std::string_view::npos)
                throw ParseError("edge '" + std::string(tok) + "' needs the form i-j or i->j");
            int s = parse_int(tok.substr(0, pos), "vertex");
            int t = parse_int(tok.substr(pos + len), "vertex");
            if (s < 1 || t < 1)
                throw ParseError("vertices are numbered from 1 in '" + std::string(tok) + "'");
            q.arrows.emplace_back(s - 1, t - 1);
            q.vertices = std::max({q.vertices, s, t});
        }
    }
    if (q.vertices == 0)
        throw ParseError("quiver has no vertices");
    return q;
}

QuiverSpec QuiverSpec::loops(int count)
{
    QuiverSpec q;
    q.vertices = 1;
    q.arrows.assign(static_cast<std::size_t>(count), {0, 0});
    return q;
}

std::string QuiverSpec::to_string() const
{
    std::string out;
    for (const auto& [s, t] : arrows) {
        if (!out.empty())
            out += ',';
        out += std::to_string(s + 1) + (s == t ? "-" : "->") + std::to_string(t + 1);
    }
    return out;
}

DimVector parse_dim_vector(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '(' && text.back() == ')')
        text = text.substr(1, text.size() - 2);
    DimVector d;
    for (auto tok : split(text, ',')) {
        int v = parse_int(tok, "dimension entry");
        if (v < 0)
            throw ParseError("dimension entries must be non-negative");
        d.push_back(v);
    }
    return d;
}

namespace {

void check_dim(const QuiverSpec& q, const DimVector& d)
{
    if (static_cast<int>(d.size()) != q.vertices)
        throw InvalidArgument("dimension vector has " + std::to_string(d.size()) + " entries but the quiver has " +
                              std::to_string(q.vertices) + " vertices");
    for (int x : d)
        if (x < 0)
            throw InvalidArgument("dimension entries must be non-negative");
}

} // namespace

int euler_form(const QuiverSpec& q, const DimVector& d, const DimVector& e)
{
    check_dim(q, d);
    check_dim(q, e);
    int chi = 0;
    for (int i = 0; i < q.vertices; ++i)
        chi += d[i] * e[i];
    for (const auto& [s, t] : q.arrows)
        chi -= d[s] * e[t];
    return chi;
}

std::pair<QuiverSpec, QuiverSpec> double_and_triple(const QuiverSpec& q)
{
    QuiverSpec dbl = q;
    for (const auto& [s, t] : q.arrows)
        dbl.arrows.emplace_back(t, s);
    QuiverSpec tri = dbl;
    for (int i = 0; i < q.vertices; ++i)
        tri.arrows.emplace_back(i, i);
    return {dbl, tri};
}

std::optional<std::pair<int, int>> prime_power(int q)
{
    if (q < 2)
        return std::nullopt;
    int p = 2;
    while (q % p != 0)
        ++p;
    int k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1)
        return std::nullopt;
    return std::make_pair(p, k);
}

namespace {

using Coeffs = std::vector<int>; // low degree first, entries in 0..p-1

Coeffs poly_mod(Coeffs a, const Coeffs& m, int p)
{
    const int dm = static_cast<int>(m.size()) - 1;
    const int lead_inv = [&] {
        for (int x = 1; x < p; ++x)
            if (m.back() * x % p == 1)
                return x;
        return 1;
    }();
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        int c = a[i] * lead_inv % p;
        if (c == 0)
            continue;
        for (int j = 0; j <= dm; ++j)
            a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
    }
    a.resize(static_cast<std::size_t>(std::max(dm, 0)));
    return a;
}

Coeffs decode(int x, int p, int k)
{
    Coeffs c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        c[i] = x % p;
        x /= p;
    }
    return c;
}

int encode(const Coeffs& c, int p)
{
    int x = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        x = x * p + *it;
    return x;
}

bool irreducible(const Coeffs& f, int p)
{
    const int k = static_cast<int>(f.size()) - 1;
    for (int deg = 1; deg <= k / 2; ++deg)
        for (int x = 0; x < ipow(p, deg); ++x) {
            Coeffs g = decode(x, p, deg);
            g.push_back(1);
            Coeffs r = poly_mod(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; }))
                return false;
        }
    return true;
}

Coeffs find_irreducible(int p, int k)
{
    for (int x = 0; x < ipow(p, k); ++x) {
        Coeffs f = decode(x, p, k);
        f.push_back(1);
        if (irreducible(f, p))
            return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

} // namespace

FiniteField::FiniteField(int order) : q_(order)
{
    auto pk = prime_power(order);
    if (!pk)
        throw InvalidArgument("field order " + std::to_string(order) + " is not a prime power");
    p_ = pk->first;
    k_ = pk->second;
    const std::size_t n = static_cast<std::size_t>(q_);
    add_.resize(n * n);
    mul_.resize(n * n);
    neg_.resize(n);
    inv_.assign(n, 0);
    const Coeffs modulus = find_irreducible(p_, k_);
    for (int a = 0; a < q_; ++a) {
        Coeffs ca = decode(a, p_, k_);
        Coeffs na(ca.size());
        for (std::size_t i = 0; i < ca.size(); ++i)
            na[i] = (p_ - ca[i]) % p_;
        neg_[a] = encode(na, p_);
        for (int b = 0; b < q_; ++b) {
            Coeffs cb = decode(b, p_, k_);
            Coeffs sum(ca.size());
            for (std::size_t i = 0; i < ca.size(); ++i)
                sum[i] = (ca[i] + cb[i]) % p_;
            add_[a * q_ + b] = encode(sum, p_);
            Coeffs prod(static_cast<std::size_t>(2 * k_ - 1), 0);
            for (int i = 0; i < k_; ++i)
                for (int j = 0; j < k_; ++j)
                    prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
            mul_[a * q_ + b] = encode(poly_mod(prod, modulus, p_), p_);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1)
                inv_[a] = b;
}

int FiniteField::inv(int a) const
{
    if (a == 0)
        throw InvalidArgument("inverse of zero");
    return inv_[a];
}

std::vector<int> FiniteField::subfield(int sub_order) const
{
    std::vector<int> out;
    for (int x = 0; x < q_; ++x) {
        int y = x;
        for (int i = 1; i < sub_order; ++i)
            y = mul(y, x);
        if (y == x)
            out.push_back(x);
    }
    return out;
}

namespace {

using Matrix = std::vector<int>; // square, row-major

/// Basis of the solution space of rows * v = 0 over `f`, `cols` unknowns.
std::vector<std::vector<int>> nullspace(std::vector<std::vector<int>> rows, int cols, const FiniteField& f)
{
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        int inv = f.inv(rows[r][c]);
        for (auto& x : rows[r])
            x = f.mul(x, inv);
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == r || rows[o][c] == 0)
                continue;
            int factor = rows[o][c];
            for (int j = 0; j < cols; ++j)
                rows[o][j] = f.sub(rows[o][j], f.mul(factor, rows[r][j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivot_col)
        is_pivot[c] = true;
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<int> v(static_cast<std::size_t>(cols), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = f.neg(rows[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct Layout {
    int n = 0;                 // total dimension
    std::vector<int> offset;   // start of each vertex block in the total space
    std::vector<int> unknown;  // start of each vertex block among End unknowns
    int unknowns = 0;
};

Layout layout(const DimVector& d)
{
    Layout l;
    for (int di : d) {
        l.offset.push_back(l.n);
        l.unknown.push_back(l.unknowns);
        l.n += di;
        l.unknowns += di * di;
    }
    return l;
}

/// Basis of End(rep) as block-diagonal n x n matrices.
std::vector<Matrix> endomorphisms(const QuiverSpec& quiver, const DimVector& d, const FiniteField& f,
                                  const FieldRep& rep)
{
    const Layout l = layout(d);
    std::vector<std::vector<int>> rows;
    for (std::size_t a = 0; a < quiver.arrows.size(); ++a) {
        const auto [s, t] = quiver.arrows[a];
        const auto& A = rep.maps[a];
        const int ds = d[s];
        const int dt = d[t];
        // (X_t A - A X_s)[r][c] = 0
        for (int r = 0; r < dt; ++r)
            for (int c = 0; c < ds; ++c) {
                std::vector<int> row(static_cast<std::size_t>(l.unknowns), 0);
                for (int k = 0; k < dt; ++k) {
                    int& x = row[l.unknown[t] + r * dt + k];
                    x = f.add(x, A[k * ds + c]);
                }
                for (int k = 0; k < ds; ++k) {
                    int& x = row[l.unknown[s] + k * ds + c];
                    x = f.sub(x, A[r * ds + k]);
                }
                rows.push_back(std::move(row));
            }
    }
    std::vector<Matrix> out;
    for (const auto& v : nullspace(std::move(rows), l.unknowns, f)) {
        Matrix m(static_cast<std::size_t>(l.n * l.n), 0);
        for (int i = 0; i < quiver.vertices; ++i)
            for (int r = 0; r < d[i]; ++r)
                for (int c = 0; c < d[i]; ++c)
                    m[(l.offset[i] + r) * l.n + l.offset[i] + c] = v[l.unknown[i] + r * d[i] + c];
        out.push_back(std::move(m));
    }
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b, int n, const FiniteField& f)
{
    Matrix c(a.size(), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int x = a[i * n + k];
            if (x == 0)
                continue;
            for (int j = 0; j < n; ++j)
                c[i * n + j] = f.add(c[i * n + j], f.mul(x, b[k * n + j]));
        }
    return c;
}

bool is_zero(const Matrix& m)
{
    return std::all_of(m.begin(), m.end(), [](int x) { return x == 0; });
}

/// Calls fn on every F-linear combination of `basis`.
template <class Fn>
bool for_each_combination(const std::vector<Matrix>& basis, std::size_t size, const FiniteField& f, Fn&& fn)
{
    const std::size_t e = basis.size();
    std::vector<int> coeff(e, 0);
    while (true) {
        Matrix x(size, 0);
        for (std::size_t b = 0; b < e; ++b)
            if (coeff[b] != 0)
                for (std::size_t k = 0; k < size; ++k)
                    x[k] = f.add(x[k], f.mul(coeff[b], basis[b][k]));
        if (!fn(x))
            return false;
        std::size_t pos = 0;
        while (pos < e && ++coeff[pos] == f.order())
            coeff[pos++] = 0;
        if (pos == e)
            return true;
    }
}

/// The unique eigenvalue of x if x - lambda is nilpotent for some lambda in f.
std::optional<int> single_eigenvalue(const Matrix& x, int n, const FiniteField& f)
{
    for (int lambda = 0; lambda < f.order(); ++lambda) {
        Matrix y = x;
        for (int i = 0; i < n; ++i)
            y[i * n + i] = f.sub(y[i * n + i], lambda);
        Matrix power = y;
        for (int k = 1; k < n && !is_zero(power); ++k)
            power = multiply(power, y, n, f);
        if (is_zero(power))
            return lambda;
    }
    return std::nullopt;
}

struct Analysis {
    bool absolutely_indecomposable = false;
    std::uint64_t automorphisms = 0;
};

Analysis analyze(const QuiverSpec& quiver, const DimVector& d, const FiniteField& f, const FieldRep& rep)
{
    Analysis out;
    const int n = layout(d).n;
    if (n == 0)
        return out;
    auto basis = endomorphisms(quiver, d, f, rep);
    std::uint64_t units = 0;
    bool ok = for_each_combination(basis, static_cast<std::size_t>(n * n), f, [&](const Matrix& x) {
        auto lambda = single_eigenvalue(x, n, f);
        if (!lambda)
            return false;
        if (*lambda != 0)
            ++units;
        return true;
    });
    out.absolutely_indecomposable = ok;
    out.automorphisms = ok ? units : 0;
    return out;
}

std::uint64_t representation_count(const QuiverSpec& quiver, const DimVector& d, int q, int& entries)
{
    entries = 0;
    for (const auto& [s, t] : quiver.arrows)
        entries += d[s] * d[t];
    std::uint64_t count = 1;
    for (int i = 0; i < entries; ++i) {
        count *= static_cast<std::uint64_t>(q);
        if (count > kKacEnumerationLimit)
            throw TooLarge("enumeration needs " + std::to_string(q) + "^" + std::to_string(entries) +
                           " representations, above the limit of " + std::to_string(kKacEnumerationLimit));
    }
    return count;
}

FieldRep decode_rep(const QuiverSpec& quiver, const DimVector& d, int q, std::uint64_t index)
{
    FieldRep rep;
    for (const auto& [s, t] : quiver.arrows) {
        std::vector<int> m(static_cast<std::size_t>(d[s] * d[t]));
        for (auto& x : m) {
            x = static_cast<int>(index % static_cast<std::uint64_t>(q));
            index /= static_cast<std::uint64_t>(q);
        }
        rep.maps.push_back(std::move(m));
    }
    return rep;
}

Integer general_linear_order(int dim, int q)
{
    Integer qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(dim));
    Integer order = 1;
    Integer qk = 1;
    for (int k = 0; k < dim; ++k) {
        order *= qd - qk;
        qk *= q;
    }
    return order;
}

} // namespace

bool absolutely_indecomposable(const QuiverSpec& quiver, const DimVector& dim, const FiniteField& field,
                               const FieldRep& rep)
{
    check_dim(quiver, dim);
    return analyze(quiver, dim, field, rep).absolutely_indecomposable;
}

bool indecomposable_over(const QuiverSpec& quiver, const DimVector& dim, const FiniteField& small,
                         const FiniteField& big, const FieldRep& rep)
{
    check_dim(quiver, dim);
    if (small.order() != small.characteristic())
        throw InvalidArgument("scalar extension is implemented from prime fields only");
    if (big.characteristic() != small.characteristic())
        throw InvalidArgument("fields have different characteristic");
    const int n = layout(dim).n;
    if (n == 0)
        return false;
    // Prime field elements keep their encoding inside every extension.
    auto basis = endomorphisms(quiver, dim, big, rep);
    Matrix identity(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        identity[i * n + i] = 1;
    return for_each_combination(basis, static_cast<std::size_t>(n * n), big, [&](const Matrix& x) {
        if (is_zero(x) || x == identity)
            return true;
        return multiply(x, x, n, big) != x;
    });
}

std::vector<FieldRep> all_representations(const QuiverSpec& quiver, const DimVector& dim, const FiniteField& field)
{
    check_dim(quiver, dim);
    int entries = 0;
    const std::uint64_t count = representation_count(quiver, dim, field.order(), entries);
    std::vector<FieldRep> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i)
        out.push_back(decode_rep(quiver, dim, field.order(), i));
    return out;
}

KacSample kac_bruteforce(const QuiverSpec& quiver, const DimVector& dim, int q, unsigned threads)
{
    if (q < 2 || q > 5)
        throw InvalidArgument("q must be one of 2, 3, 4, 5");
    check_dim(quiver, dim);
    const FiniteField field(q);
    int entries = 0;
    const std::uint64_t count = representation_count(quiver, dim, q, entries);

    threads = std::max(1u, threads);
    std::vector<Integer> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](unsigned w) {
        try {
            std::uint64_t local = 0;
            for (std::uint64_t i = w; i < count; i += threads) {
                auto a = analyze(quiver, dim, field, decode_rep(quiver, dim, q, i));
                local += a.automorphisms;
            }
            partial[w] = Integer(std::to_string(local));
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    Integer total = 0;
    for (const auto& p : partial)
        total += p;
    Integer group = 1;
    for (int di : dim)
        group *= general_linear_order(di, q);
    if (total % group != 0)
        throw InexactDivision("automorphism total " + total.get_str() + " is not divisible by |G| = " +
                              group.get_str());

    KacSample sample;
    sample.quiver = quiver;
    sample.dim = dim;
    sample.q = q;
    sample.count = total / group;
    sample.representations = count;
    return sample;
}

Dynkin Dynkin::parse(std::string_view name)
{
    name = trim(name);
    if (name.size() < 2)
        throw UnsupportedType("unsupported Dynkin type '" + std::string(name) + "'");
    DynkinType type;
    switch (name.front()) {
    case 'A':
    case 'a':
        type = DynkinType::A;
        break;
    case 'D':
    case 'd':
        type = DynkinType::D;
        break;
    case 'E':
    case 'e':
        type = DynkinType::E;
        break;
    default:
        throw UnsupportedType("unsupported Dynkin type '" + std::string(name) + "': only A, D and E");
    }
    int rank = 0;
    auto digits = name.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw UnsupportedType("unsupported Dynkin type '" + std::string(name) + "'");
    bool ok = (type == DynkinType::A && rank >= 1) || (type == DynkinType::D && rank >= 4) ||
              (type == DynkinType::E && rank >= 6 && rank <= 8);
    if (!ok)
        throw UnsupportedType("no Dynkin diagram " + std::string(name));
    return {type, rank};
}

std::string Dynkin::name() const
{
    const char letter = type == DynkinType::A ? 'A' : type == DynkinType::D ? 'D' : 'E';
    return letter + std::to_string(rank);
}

QuiverSpec Dynkin::quiver() const
{
    QuiverSpec q;
    q.vertices = rank;
    const int chain = type == DynkinType::A ? rank : rank - 1;
    for (int i = 0; i + 1 < chain; ++i)
        q.arrows.emplace_back(i, i + 1);
    if (type == DynkinType::D)
        q.arrows.emplace_back(rank - 3, rank - 1);
    if (type == DynkinType::E)
        q.arrows.emplace_back(2, rank - 1);
    return q;
}

std::vector<std::vector<int>> Dynkin::cartan() const
{
    std::vector<std::vector<int>> c(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i)
        c[i][i] = 2;
    for (const auto& [s, t] : quiver().arrows) {
        c[s][t] = -1;
        c[t][s] = -1;
    }
    return c;
}

namespace {

int tits_form(const std::vector<std::vector<int>>& cartan, const DimVector& d)
{
    int twice = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            twice += d[i] * cartan[i][j] * d[j];
    return twice / 2;
}

} // namespace

std::vector<DimVector> Dynkin::positive_roots() const
{
    const auto c = cartan();
    std::vector<DimVector> roots;
    std::vector<DimVector> frontier;
    for (int i = 0; i < rank; ++i) {
        DimVector e(static_cast<std::size_t>(rank), 0);
        e[i] = 1;
        frontier.push_back(e);
    }
    std::map<DimVector, bool> seen;
    while (!frontier.empty()) {
        std::vector<DimVector> next;
        for (auto& r : frontier) {
            if (seen[r])
                continue;
            seen[r] = true;
            roots.push_back(r);
            for (int i = 0; i < rank; ++i) {
                DimVector s = r;
                ++s[i];
                if (!seen.count(s) && tits_form(c, s) == 1)
                    next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    std::sort(roots.begin(), roots.end(), [](const DimVector& a, const DimVector& b) {
        int ha = 0;
        int hb = 0;
        for (int x : a)
            ha += x;
        for (int x : b)
            hb += x;
        return ha != hb ? ha < hb : a < b;
    });
    return roots;
}

int root_multiplicity(const Dynkin& dynkin, const DimVector& d)
{
    if (static_cast<int>(d.size()) != dynkin.rank)
        throw InvalidArgument("dimension vector length does not match the rank of " + dynkin.name());
    bool nonzero = false;
    for (int x : d) {
        if (x < 0)
            return 0;
        nonzero = nonzero || x > 0;
    }
    return nonzero && tits_form(dynkin.cartan(), d) == 1 ? 1 : 0;
}

NMinusPolyD::NMinusPolyD(Dynkin dynkin, int m_max)
    : dynkin_(dynkin), m_max_(m_max), roots_(dynkin.positive_roots()), cartan_(dynkin.cartan())
{
    if (m_max < 0)
        throw InvalidArgument("m_max must be non-negative");
    for (std::size_t i = 0; i < roots_.size(); ++i)
        index_.emplace(roots_[i], static_cast<int>(i));
}

std::vector<NMinusPolyD::Basis> NMinusPolyD::basis() const
{
    std::vector<Basis> out;
    for (int r = 0; r < static_cast<int>(roots_.size()); ++r)
        for (int m = 0; m <= m_max_; ++m)
            out.push_back({r, m});
    return out;
}

int NMinusPolyD::cocycle(const DimVector& a, const DimVector& b) const
{
    // Bimultiplicative: eps(a_i, a_i) = -1, eps(a_i, a_j) = -1 for adjacent i < j, else 1.
    int exponent = 0;
    for (int i = 0; i < dynkin_.rank; ++i) {
        exponent += a[i] * b[i];
        for (int j = i + 1; j < dynkin_.rank; ++j)
            if (cartan_[i][j] == -1)
                exponent += a[i] * b[j];
    }
    return exponent % 2 == 0 ? 1 : -1;
}

std::optional<std::pair<int, int>> NMinusPolyD::structure_constant(int a, int b) const
{
    DimVector sum = roots_[a];
    for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] += roots_[b][i];
    auto it = index_.find(sum);
    if (it == index_.end())
        return std::nullopt;
    return std::make_pair(it->second, cocycle(roots_[a], roots_[b]));
}

NMinusPolyD::Element NMinusPolyD::basis_element(Basis b, const Rational& c)
{
    Element e;
    if (c != 0)
        e.emplace(b, c);
    return e;
}

namespace {

void accumulate(NMinusPolyD::Element& x, NMinusPolyD::Basis b, const Rational& c)
{
    auto [it, inserted] = x.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            x.erase(it);
    }
}

NMinusPolyD::Element combine(const NMinusPolyD::Element& x, const NMinusPolyD::Element& y, int sign)
{
    NMinusPolyD::Element out = x;
    for (const auto& [b, c] : y)
        accumulate(out, b, sign * c);
    return out;
}

} // namespace

NMinusPolyD::Element NMinusPolyD::bracket(const Element& x, const Element& y) const
{
    Element out;
    for (const auto& [bx, cx] : x)
        for (const auto& [by, cy] : y) {
            if (bx.m + by.m > m_max_)
                continue;
            auto sc = structure_constant(bx.root, by.root);
            if (sc)
                accumulate(out, {sc->first, bx.m + by.m}, sc->second * cx * cy);
        }
    return out;
}

NMinusPolyD::Element NMinusPolyD::p(int i, const Element& x) const
{
    Element out;
    for (const auto& [b, c] : x) {
        int di = roots_[b.root][i];
        if (b.m + 1 <= m_max_ && di != 0)
            accumulate(out, {b.root, b.m + 1}, di * c);
    }
    return out;
}

NMinusPolyD::Element NMinusPolyD::q(int, const Element& x) const
{
    Element out;
    for (const auto& [b, c] : x)
        if (b.m > 0)
            accumulate(out, {b.root, b.m - 1}, b.m * c);
    return out;
}

std::string NMinusPolyD::to_string(const Element& x) const
{
    if (x.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : x) {
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1)
            os << wkit::to_string(mag) << '*';
        os << "F(";
        for (std::size_t i = 0; i < roots_[b.root].size(); ++i)
            os << (i ? "," : "") << roots_[b.root][i];
        os << ')';
        if (b.m == 1)
            os << "*D";
        else if (b.m > 1)
            os << "*D^" << b.m;
    }
    return os.str();
}

NMinusPolyD::Checks NMinusPolyD::verify() const
{
    Checks checks;
    const auto B = basis();
    std::vector<Element> e;
    for (const auto& b : B)
        e.push_back(basis_element(b));

    checks.antisymmetry = true;
    for (const auto& x : e)
        for (const auto& y : e)
            if (!combine(bracket(x, y), bracket(y, x), 1).empty())
                checks.antisymmetry = false;

    checks.jacobi = true;
    for (const auto& x : e)
        for (const auto& y : e)
            for (const auto& z : e) {
                Element s = combine(bracket(x, bracket(y, z)), bracket(y, bracket(z, x)), 1);
                s = combine(s, bracket(z, bracket(x, y)), 1);
                if (!s.empty())
                    checks.jacobi = false;
            }

    checks.p_derivation = true;
    checks.q_derivation = true;
    for (int i = 0; i < dynkin_.rank; ++i)
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = 0; b < e.size(); ++b) {
                const auto& x = e[a];
                const auto& y = e[b];
                Element pl = p(i, bracket(x, y));
                Element pr = combine(bracket(p(i, x), y), bracket(x, p(i, y)), 1);
                if (!combine(pl, pr, -1).empty())
                    checks.p_derivation = false;
                if (B[a].m + B[b].m <= m_max_) {
                    Element ql = q(i, bracket(x, y));
                    Element qr = combine(bracket(q(i, x), y), bracket(x, q(i, y)), 1);
                    if (!combine(ql, qr, -1).empty())
                        checks.q_derivation = false;
                }
            }

    checks.heisenberg = true;
    for (int i = 0; i < dynkin_.rank; ++i)
        for (std::size_t a = 0; a < e.size(); ++a) {
            if (B[a].m >= m_max_)
                continue;
            Element comm = combine(q(i, p(i, e[a])), p(i, q(i, e[a])), -1);
            Element expected = basis_element(B[a], roots_[B[a].root][i]);
            if (!combine(comm, expected, -1).empty())
                checks.heisenberg = false;
        }
    return checks;
}

} // namespace wkit
