#include "flat.hpp"

#include "logsym/errors.hpp"

#include <algorithm>

namespace logsym::detail {

Flat Flat::constant(std::size_t n, const Gaussian& g)
{
    Flat f(n);
    f.add_term(Exponents(n, 0), g);
    return f;
}

bool Flat::is_constant() const
{
    if (terms.empty()) {
        return true;
    }
    if (terms.size() > 1) {
        return false;
    }
    const auto& e = terms.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int Flat::degree_in(std::size_t v) const
{
    int d = 0;
    for (const auto& [e, g] : terms) {
        d = std::max(d, e[v]);
    }
    return d;
}

Flat Flat::coeff_in(std::size_t v, int k) const
{
    Flat r(nvars);
    for (const auto& [e, g] : terms) {
        if (e[v] == k) {
            Exponents d = e;
            d[v] = 0;
            r.terms.emplace(std::move(d), g);
        }
    }
    return r;
}

Flat Flat::times_var_power(std::size_t v, int k) const
{
    Flat r(nvars);
    for (const auto& [e, g] : terms) {
        Exponents d = e;
        d[v] += k;
        r.terms.emplace(std::move(d), g);
    }
    return r;
}

void Flat::add_term(const Exponents& e, const Gaussian& g)
{
    if (g.is_zero()) {
        return;
    }
    auto [it, inserted] = terms.try_emplace(e, g);
    if (!inserted) {
        it->second += g;
        if (it->second.is_zero()) {
            terms.erase(it);
        }
    }
}

Flat Flat::operator-() const
{
    Flat r(nvars);
    for (const auto& [e, g] : terms) {
        r.terms.emplace_hint(r.terms.end(), e, -g);
    }
    return r;
}

Flat& Flat::operator+=(const Flat& o)
{
    for (const auto& [e, g] : o.terms) {
        add_term(e, g);
    }
    return *this;
}

Flat& Flat::operator-=(const Flat& o)
{
    for (const auto& [e, g] : o.terms) {
        add_term(e, -g);
    }
    return *this;
}

Flat operator*(const Flat& a, const Flat& b)
{
    Flat r(a.nvars);
    Exponents e(a.nvars);
    for (const auto& [ea, ga] : a.terms) {
        for (const auto& [eb, gb] : b.terms) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ga * gb);
        }
    }
    return r;
}

Flat Flat::scaled(const Gaussian& g) const
{
    Flat r(nvars);
    if (g.is_zero()) {
        return r;
    }
    for (const auto& [e, c] : terms) {
        r.terms.emplace_hint(r.terms.end(), e, c * g);
    }
    return r;
}

FlatDivision divide(const Flat& f, const Flat& h)
{
    if (h.is_zero()) {
        throw ArithmeticError("division by the zero polynomial");
    }
    const auto& [lead_e, lead_c] = *h.terms.begin();
    Gaussian lead_inv = lead_c.inverse();

    FlatDivision out{Flat(f.nvars), Flat(f.nvars)};
    Flat r = f;
    Exponents q_e(f.nvars);
    while (!r.is_zero()) {
        auto it = r.terms.begin();
        const Exponents& e = it->first;
        bool divisible = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            q_e[i] = e[i] - lead_e[i];
            if (q_e[i] < 0) {
                divisible = false;
            }
        }
        if (!divisible) {
            out.remainder.add_term(e, it->second);
            r.terms.erase(it);
            continue;
        }
        Gaussian q_c = it->second * lead_inv;
        out.quotient.add_term(q_e, q_c);
        for (const auto& [he, hc] : h.terms) {
            Exponents s(he.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                s[i] = he[i] + q_e[i];
            }
            r.add_term(s, -(hc * q_c));
        }
    }
    return out;
}

Flat exact_div(const Flat& f, const Flat& h)
{
    auto d = divide(f, h);
    if (!d.remainder.is_zero()) {
        throw ArithmeticError("inexact polynomial division");
    }
    return d.quotient;
}

namespace {

Flat one(std::size_t n)
{
    return Flat::constant(n, Gaussian(1));
}

Flat make_monic(const Flat& a)
{
    if (a.is_zero()) {
        return a;
    }
    return a.scaled(a.terms.begin()->second.inverse());
}

Flat gcd_rec(const Flat& a, const Flat& b);

// Content of a with respect to v: gcd of its coefficients in v.
Flat content_in(const Flat& a, std::size_t v)
{
    int d = a.degree_in(v);
    Flat c(a.nvars);
    for (int k = d; k >= 0; --k) {
        Flat ck = a.coeff_in(v, k);
        if (ck.is_zero()) {
            continue;
        }
        c = c.is_zero() ? make_monic(ck) : gcd_rec(c, ck);
        if (c.is_constant()) {
            return one(a.nvars);
        }
    }
    return c;
}

Flat lc_in(const Flat& a, std::size_t v)
{
    return a.coeff_in(v, a.degree_in(v));
}

// lc(b)^(deg a - deg b + 1) * a mod b, as polynomials in v.
Flat pseudo_remainder(const Flat& a, const Flat& b, std::size_t v)
{
    int db = b.degree_in(v);
    int e = a.degree_in(v) - db + 1;
    Flat lb = lc_in(b, v);
    Flat r = a;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int dr = r.degree_in(v);
        Flat lr = lc_in(r, v);
        r = lb * r - (lr * b).times_var_power(v, dr - db);
        --e;
    }
    for (; e > 0; --e) {
        r = lb * r;
    }
    return r;
}

Flat power(const Flat& a, int e)
{
    Flat r = one(a.nvars);
    for (int i = 0; i < e; ++i) {
        r = r * a;
    }
    return r;
}

// Last nonzero element of the subresultant PRS of two primitive polynomials
// of positive degree in v.
Flat subresultant_last(Flat a, Flat b, std::size_t v)
{
    if (a.degree_in(v) < b.degree_in(v)) {
        std::swap(a, b);
    }
    Flat g = one(a.nvars);
    Flat h = one(a.nvars);
    while (true) {
        int delta = a.degree_in(v) - b.degree_in(v);
        Flat r = pseudo_remainder(a, b, v);
        if (r.is_zero()) {
            return b;
        }
        if (r.degree_in(v) == 0) {
            return r;
        }
        a = std::move(b);
        b = exact_div(r, g * power(h, delta));
        g = lc_in(a, v);
        if (delta > 0) {
            h = exact_div(power(g, delta), power(h, delta - 1));
        }
    }
}

Flat gcd_rec(const Flat& a, const Flat& b)
{
    if (a.is_zero()) {
        return make_monic(b);
    }
    if (b.is_zero()) {
        return make_monic(a);
    }
    if (a.is_constant() || b.is_constant()) {
        return one(a.nvars);
    }
    // A variable occurring in only one argument: the gcd divides every
    // coefficient with respect to it.
    for (std::size_t v = 0; v < a.nvars; ++v) {
        int da = a.degree_in(v);
        int db = b.degree_in(v);
        if ((da == 0) == (db == 0)) {
            continue;
        }
        const Flat& with = da > 0 ? a : b;
        Flat c = make_monic(da > 0 ? b : a);
        for (int k = with.degree_in(v); k >= 0 && !c.is_constant(); --k) {
            Flat ck = with.coeff_in(v, k);
            if (!ck.is_zero()) {
                c = gcd_rec(c, ck);
            }
        }
        return c;
    }
    // Every variable occurs in both; recurse on the one of least degree.
    std::size_t v = a.nvars;
    int best = 0;
    for (std::size_t i = 0; i < a.nvars; ++i) {
        int d = std::max(a.degree_in(i), b.degree_in(i));
        if (d > 0 && (v == a.nvars || d < best)) {
            v = i;
            best = d;
        }
    }
    Flat ca = content_in(a, v);
    Flat cb = content_in(b, v);
    Flat c = gcd_rec(ca, cb);
    Flat pa = exact_div(a, ca);
    Flat pb = exact_div(b, cb);
    Flat last = subresultant_last(pa, pb, v);
    if (last.degree_in(v) == 0) {
        return c;
    }
    Flat pp = exact_div(last, content_in(last, v));
    return make_monic(c * pp);
}

} // namespace

Flat gcd(const Flat& a, const Flat& b)
{
    return gcd_rec(a, b);
}

Flat to_flat(const Poly& p, Exponents& shift)
{
    const auto& ctx = *p.context();
    std::size_t n = ctx.size();
    shift.assign(n + 1, 0);
    if (!p.is_zero()) {
        for (std::size_t i = 0; i < n; ++i) {
            int lo = p.min_degree_in(i);
            if (ctx.is_unit_var(i)) {
                shift[i] = -lo;
            } else if (lo < 0) {
                throw ArenaError("negative power of " + ctx.name(i) + " outside the torus arena");
            }
        }
        int tlo = 0;
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            int k = c.terms().begin()->first;
            tlo = first ? k : std::min(tlo, k);
            first = false;
        }
        shift[n] = -tlo;
    }
    Flat f(n + 1);
    Exponents fe(n + 1);
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < n; ++i) {
            fe[i] = e[i] + shift[i];
        }
        for (const auto& [k, g] : c.terms()) {
            fe[n] = k + shift[n];
            f.add_term(fe, g);
        }
    }
    return f;
}

Poly from_flat(const Flat& f, const ContextPtr& ctx, const Exponents& shift)
{
    std::size_t n = ctx->size();
    Poly p(ctx);
    Exponents e(n);
    for (const auto& [fe, g] : f.terms) {
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = fe[i] - shift[i];
        }
        p.add_term(e, Scalar::power_of_t(fe[n] - shift[n], g));
    }
    return p;
}

} // namespace logsym::detail
