#include "logsym/algebra.hpp"

#include "flat.hpp"
#include "logsym/errors.hpp"

namespace logsym {

DivisionResult divide(const Poly& f, const Poly& h)
{
    require_same_context(f.context(), h.context());
    if (h.is_zero()) {
        throw ArithmeticError("division by the zero polynomial");
    }
    const auto& ctx = f.context();
    Exponents sf;
    Exponents sh;
    detail::Flat ff = detail::to_flat(f, sf);
    detail::Flat fh = detail::to_flat(h, sh);
    auto d = detail::divide(ff, fh);
    Exponents qshift(sf.size());
    for (std::size_t i = 0; i < sf.size(); ++i) {
        qshift[i] = sf[i] - sh[i];
    }
    return {detail::from_flat(d.quotient, ctx, qshift), detail::from_flat(d.remainder, ctx, sf)};
}

std::optional<Poly> divides(const Poly& h, const Poly& f)
{
    auto d = divide(f, h);
    if (!d.remainder.is_zero()) {
        return std::nullopt;
    }
    return std::move(d.quotient);
}

Poly exact_quotient(const Poly& f, const Poly& h)
{
    auto q = divides(h, f);
    if (!q) {
        throw ArithmeticError("'" + h.to_string() + "' does not divide '" + f.to_string() + "'");
    }
    return std::move(*q);
}

Poly normalize_unit(const Poly& p)
{
    if (p.is_zero()) {
        return p;
    }
    const auto& [k, g] = *p.leading_coefficient().terms().begin();
    const auto& ctx = *p.context();
    // Monomials in unit variables are units too; push the lowest power to 0.
    Exponents shift(ctx.size(), 0);
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (ctx.is_unit_var(i)) {
            shift[i] = -p.min_degree_in(i);
        }
    }
    return p.shifted(shift) * Scalar::power_of_t(-k, g.inverse());
}

Poly gcd(const Poly& p, const Poly& q)
{
    require_same_context(p.context(), q.context());
    if (p.is_zero() && q.is_zero()) {
        throw ArithmeticError("gcd(0, 0) is undefined");
    }
    Exponents sp;
    Exponents sq;
    detail::Flat fp = detail::to_flat(p, sp);
    detail::Flat fq = detail::to_flat(q, sq);
    detail::Flat g = detail::gcd(fp, fq);
    return normalize_unit(detail::from_flat(g, p.context(), Exponents(sp.size(), 0)));
}

RationalFunction::RationalFunction(const Poly& num) : num_(num), den_(num.context(), Scalar(1)) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    require_same_context(num_.context(), den_.context());
    if (den_.is_zero()) {
        throw ArithmeticError("rational function with zero denominator");
    }
}

RationalFunction RationalFunction::reduced() const
{
    if (num_.is_zero()) {
        return RationalFunction(Poly(context()));
    }
    Poly g = gcd(num_, den_);
    Poly n = exact_quotient(num_, g);
    Poly d = exact_quotient(den_, g);
    Poly dn = normalize_unit(d);
    // d = unit * dn; move the unit into the numerator
    Poly unit = exact_quotient(d, dn);
    return {exact_quotient(n, unit), dn};
}

std::optional<Poly> RationalFunction::as_poly() const
{
    return divides(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.den_ == b.den_) {
        return {a.num_ + b.num_, a.den_};
    }
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.is_zero()) {
        throw ArithmeticError("division by zero rational function");
    }
    return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const RationalFunction& a, const RationalFunction& b)
{
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::to_string() const
{
    if (den_.as_scalar() && den_.as_scalar()->is_one()) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

Poly lcm(const Poly& a, const Poly& b)
{
    return exact_quotient(a * b, gcd(a, b));
}

// Bareiss elimination in place on an n x m matrix (m >= n).  Returns the
// sign of the row permutation, or 0 when a pivot column is zero.
int bareiss(std::vector<std::vector<Poly>>& m)
{
    std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    const auto& ctx = m[0][0].context();
    int sign = 1;
    Poly prev(ctx, Scalar(1));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero()) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < m[i].size(); ++j) {
                m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = Poly(ctx);
        }
        prev = m[k][k];
    }
    return sign;
}

} // namespace

Poly determinant(std::vector<std::vector<Poly>> m)
{
    std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) {
            throw DomainError("determinant of a non-square matrix");
        }
    }
    if (n == 0) {
        throw DomainError("determinant of an empty matrix");
    }
    int sign = bareiss(m);
    if (sign == 0) {
        return Poly(m[0][0].context());
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

RfVector solve_linear(const RfMatrix& a, const RfVector& b)
{
    std::size_t n = a.size();
    if (n == 0 || b.size() != n) {
        throw DomainError("solve_linear: dimension mismatch");
    }
    for (const auto& row : a) {
        if (row.size() != n) {
            throw DomainError("solve_linear: matrix is not square");
        }
    }
    const auto& ctx = b[0].context();

    // Clear denominators row by row to get a polynomial augmented matrix.
    std::vector<std::vector<Poly>> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        Poly l = b[i].den();
        for (const auto& e : a[i]) {
            require_same_context(ctx, e.context());
            l = lcm(l, e.den());
        }
        for (const auto& e : a[i]) {
            m[i].push_back(e.num() * exact_quotient(l, e.den()));
        }
        m[i].push_back(b[i].num() * exact_quotient(l, b[i].den()));
    }

    if (bareiss(m) == 0) {
        throw DomainError("singular matrix");
    }

    RfVector x(n, RationalFunction(Poly(ctx)));
    for (std::size_t i = n; i-- > 0;) {
        RationalFunction acc(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) {
            acc = acc - RationalFunction(m[i][j]) * x[j];
        }
        x[i] = (acc / RationalFunction(m[i][i])).reduced();
    }

    for (std::size_t i = 0; i < n; ++i) {
        RationalFunction lhs{Poly(ctx)};
        for (std::size_t j = 0; j < n; ++j) {
            lhs = lhs + a[i][j] * x[j];
        }
        if (!(lhs == b[i])) {
            throw DomainError("solve_linear: back-substitution check failed");
        }
    }
    return x;
}

} // namespace logsym
