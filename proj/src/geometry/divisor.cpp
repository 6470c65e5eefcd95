#include "logsym/divisor.hpp"

#include "logsym/algebra.hpp"
#include "logsym/errors.hpp"

#include <numeric>

namespace logsym {

Divisor Divisor::coordinate(const ContextPtr& ctx)
{
    Poly h(ctx, Scalar(1));
    for (std::size_t i : ctx->divisor_coords()) {
        h *= Poly::variable(ctx, i);
    }
    Divisor d(std::move(h), DivisorKind::coordinate_ncd);
    d.squarefree_ = true;
    return d;
}

Divisor Divisor::general(Poly h)
{
    if (h.is_zero()) {
        throw DomainError("the zero polynomial does not define a divisor");
    }
    return Divisor(std::move(h), DivisorKind::general);
}

bool Divisor::verify_squarefree()
{
    squarefree_ = check_squarefree(h_).reduced;
    return squarefree_;
}

void Divisor::attach_saito_basis(SaitoBasis b)
{
    auto r = saito_check(b.fields, *this);
    if (!r.free || !(r.basis->certificate == b.certificate)) {
        throw DomainError("Saito basis certificate does not re-verify");
    }
    basis_ = std::move(b);
}

SquarefreeResult check_squarefree(const Poly& h)
{
    if (h.is_zero()) {
        throw DomainError("squarefree test of the zero polynomial");
    }
    Poly g = h;
    for (std::size_t i = 0; i < h.nvars(); ++i) {
        Poly d = h.partial(i);
        if (!d.is_zero()) {
            g = gcd(g, d);
        }
        if (g.as_scalar()) {
            break;
        }
    }
    // With no variable present, h is a unit and trivially reduced.
    bool reduced = g.as_scalar().has_value() || h.as_scalar().has_value();
    return {reduced, g};
}

LogarithmicResult is_logarithmic(const LogVectorField& delta, const Divisor& d)
{
    require_same_context(delta.context(), d.context());
    Poly dh = delta.apply(d.equation());
    auto div = divide(dh, d.equation());
    bool ok = div.remainder.is_zero();
    return {ok, ok ? div.quotient : Poly(d.context()), div.remainder, ok};
}

std::vector<std::vector<Poly>> coefficient_matrix(const std::vector<LogVectorField>& fields)
{
    std::vector<std::vector<Poly>> m;
    for (const auto& f : fields) {
        m.push_back(f.coeffs());
    }
    return m;
}

SaitoResult saito_check(const std::vector<LogVectorField>& fields, const Divisor& d)
{
    const auto& ctx = d.context();
    if (fields.size() != ctx->size()) {
        throw DomainError("Saito's criterion needs " + std::to_string(ctx->size()) + " fields, got " +
                          std::to_string(fields.size()));
    }
    Poly det = determinant(coefficient_matrix(fields));
    SaitoResult out{false, det, std::nullopt, std::nullopt};
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (!is_logarithmic(fields[k], d).logarithmic) {
            out.non_logarithmic = k;
            return out;
        }
    }
    if (det.is_zero()) {
        return out;
    }
    auto q = divides(d.equation(), det);
    if (!q) {
        return out;
    }
    // The quotient must be a nonzero constant, not merely a unit of the arena.
    auto c = q->as_scalar();
    if (c && !c->is_zero()) {
        out.free = true;
        out.basis = SaitoBasis{fields, *c};
    }
    return out;
}

namespace {

using QMatrix = std::vector<std::vector<mpq_class>>;

// Basis of {x : M x = 0} by reduced row echelon form.
QMatrix nullspace(QMatrix m, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[row]);
        mpq_class inv = 1 / m[row][col];
        for (auto& v : m[row]) {
            v *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != row && m[r][col] != 0) {
                mpq_class f = m[r][col];
                for (std::size_t c = 0; c < ncols; ++c) {
                    m[r][c] -= f * m[row][c];
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    QMatrix basis;
    std::size_t pi = 0;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (pi < pivots.size() && pivots[pi] == free) {
            ++pi;
            continue;
        }
        std::vector<mpq_class> v(ncols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// a . t >= b
struct Inequality {
    std::vector<mpq_class> a;
    mpq_class b;
};

// Finds t with every inequality satisfied, by Fourier-Motzkin elimination
// and back substitution.
std::optional<std::vector<mpq_class>> fourier_motzkin(std::vector<Inequality> sys, std::size_t nvars)
{
    std::vector<std::vector<Inequality>> stages{sys};
    for (std::size_t k = 0; k < nvars; ++k) {
        const auto& cur = stages.back();
        std::vector<Inequality> next;
        std::vector<const Inequality*> pos;
        std::vector<const Inequality*> neg;
        for (const auto& q : cur) {
            if (q.a[k] > 0) {
                pos.push_back(&q);
            } else if (q.a[k] < 0) {
                neg.push_back(&q);
            } else {
                next.push_back(q);
            }
        }
        for (const auto* p : pos) {
            for (const auto* n : neg) {
                mpq_class fp = -n->a[k];
                mpq_class fn = p->a[k];
                Inequality c{std::vector<mpq_class>(nvars), fp * p->b + fn * n->b};
                for (std::size_t j = 0; j < nvars; ++j) {
                    c.a[j] = fp * p->a[j] + fn * n->a[j];
                }
                next.push_back(std::move(c));
            }
        }
        stages.push_back(std::move(next));
    }
    for (const auto& q : stages.back()) {
        if (q.b > 0) {
            return std::nullopt;
        }
    }
    std::vector<mpq_class> t(nvars, 0);
    for (std::size_t k = nvars; k-- > 0;) {
        std::optional<mpq_class> lo;
        std::optional<mpq_class> hi;
        for (const auto& q : stages[k]) {
            if (q.a[k] == 0) {
                continue;
            }
            mpq_class rest = q.b;
            for (std::size_t j = k + 1; j < nvars; ++j) {
                rest -= q.a[j] * t[j];
            }
            mpq_class bound = rest / q.a[k];
            if (q.a[k] > 0) {
                if (!lo || bound > *lo) {
                    lo = bound;
                }
            } else if (!hi || bound < *hi) {
                hi = bound;
            }
        }
        t[k] = lo ? *lo : (hi ? *hi : mpq_class(0));
    }
    return t;
}

Weights to_integer_weights(const std::vector<mpq_class>& w, const Exponents& alpha)
{
    mpz_class l = 1;
    for (const auto& v : w) {
        mpz_class den = v.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> iw;
    mpz_class g = 0;
    for (const auto& v : w) {
        mpq_class s = v * l;
        iw.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iw.back().get_mpz_t());
    }
    Weights out;
    out.degree = 0;
    for (std::size_t i = 0; i < iw.size(); ++i) {
        out.w.push_back(iw[i] / g);
        out.degree += out.w.back() * alpha[i];
    }
    return out;
}

} // namespace

std::optional<Weights> weighted_homogeneous(const Poly& h)
{
    if (h.is_zero()) {
        throw DomainError("weighted homogeneity of the zero polynomial");
    }
    std::size_t n = h.nvars();
    std::vector<Exponents> exps;
    for (const auto& [e, c] : h.terms()) {
        exps.push_back(e);
    }
    const Exponents& first = exps.front();
    auto homogeneous_for = [&](const std::vector<mpq_class>& w) {
        for (const auto& e : exps) {
            mpq_class s = 0;
            for (std::size_t i = 0; i < n; ++i) {
                s += w[i] * (e[i] - first[i]);
            }
            if (s != 0) {
                return false;
            }
        }
        return true;
    };
    std::vector<mpq_class> ones(n, 1);
    if (homogeneous_for(ones)) {
        return to_integer_weights(ones, first);
    }
    QMatrix diff;
    for (std::size_t k = 1; k < exps.size(); ++k) {
        std::vector<mpq_class> row(n);
        for (std::size_t i = 0; i < n; ++i) {
            row[i] = exps[k][i] - first[i];
        }
        diff.push_back(std::move(row));
    }
    QMatrix basis = nullspace(diff, n);
    if (basis.empty()) {
        return std::nullopt;
    }
    // w = sum_j t_j basis_j, require w_i >= 1.
    std::size_t r = basis.size();
    std::vector<Inequality> sys;
    for (std::size_t i = 0; i < n; ++i) {
        Inequality q{std::vector<mpq_class>(r), 1};
        for (std::size_t j = 0; j < r; ++j) {
            q.a[j] = basis[j][i];
        }
        sys.push_back(std::move(q));
    }
    auto t = fourier_motzkin(std::move(sys), r);
    if (!t) {
        return std::nullopt;
    }
    std::vector<mpq_class> w(n, 0);
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            w[i] += (*t)[j] * basis[j][i];
        }
    }
    for (const auto& v : w) {
        if (v <= 0) {
            throw DomainError("internal: weight solve produced a nonpositive weight");
        }
    }
    if (!homogeneous_for(w)) {
        throw DomainError("internal: weight solve failed its own check");
    }
    return to_integer_weights(w, first);
}

std::optional<std::vector<std::size_t>> is_coordinate_ncd(const Poly& h)
{
    if (!h.is_single_term()) {
        return std::nullopt;
    }
    std::vector<std::size_t> s;
    const auto& e = h.leading_exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 1) {
            s.push_back(i);
        } else if (e[i] != 0) {
            return std::nullopt;
        }
    }
    return s;
}

} // namespace logsym
