#include "logsym/poisson.hpp"

#include "logsym/errors.hpp"

namespace logsym {

namespace {

void require_nondegenerate(const SymplecticData& s)
{
    if (!s.nondegenerate) {
        throw DomainError("the 2-form is degenerate: det = " + s.det.to_string());
    }
}

// delta with i_delta omega equal to the 1-form whose values on the frame are c.
LogVectorField solve_for_field(const SymplecticData& s, const std::vector<Poly>& c)
{
    const auto& ctx = s.omega.context();
    std::size_t n = c.size();
    LogVectorField delta(ctx);
    for (std::size_t l = 0; l < n; ++l) {
        Poly v(ctx);
        for (std::size_t k = 0; k < n; ++k) {
            if (!s.gram_inverse[l][k].is_zero() && !c[k].is_zero()) {
                v -= s.gram_inverse[l][k] * c[k];
            }
        }
        if (!v.is_zero()) {
            delta += v * s.frame[l];
        }
    }
    return delta;
}

Poly strip_to_polynomial(const Poly& p, const ContextPtr& pctx)
{
    Exponents shift(p.nvars(), 0);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        int lo = p.min_degree_in(i);
        if (lo < 0) {
            shift[i] = -lo;
        }
    }
    Poly out(pctx);
    Poly moved = p.shifted(shift);
    for (const auto& [e, c] : moved.terms()) {
        out.add_term(e, c);
    }
    return out;
}

} // namespace

HamiltonianResult hamiltonian(const SymplecticData& s, const Poly& f)
{
    require_nondegenerate(s);
    require_same_context(s.omega.context(), f.context());
    std::vector<Poly> c;
    for (const auto& xi : s.frame) {
        c.push_back(xi.apply(f));
    }
    LogVectorField delta = solve_for_field(s, c);
    if (!delta.in_arena()) {
        throw ArenaError("Hamiltonian field of " + f.to_string() + " leaves the arena: " + delta.to_string());
    }
    LogForm cert = interior(delta, s.omega) - d_log(f);
    if (!cert.is_zero()) {
        throw DomainError("internal: Hamiltonian certificate is nonzero: " + cert.to_string());
    }
    if (!is_logarithmic(delta, s.divisor).logarithmic) {
        throw ArenaError("Hamiltonian field " + delta.to_string() + " is not logarithmic");
    }
    return {f, std::move(delta), std::move(cert)};
}

LogVectorField tilde_hamiltonian(const SymplecticData& s, const Poly& u)
{
    require_nondegenerate(s);
    if (u.is_zero()) {
        throw DomainError("tilde Hamiltonian of zero");
    }
    std::vector<Poly> c;
    for (const auto& xi : s.frame) {
        auto q = divides(u, xi.apply(u));
        if (!q) {
            throw ArenaError("d(" + u.to_string() + ")/(" + u.to_string() + ") is not in the arena");
        }
        c.push_back(std::move(*q));
    }
    LogVectorField tilde = solve_for_field(s, c);
    LogVectorField full = hamiltonian(s, u).delta;
    if (!(full == u * tilde)) {
        throw DomainError("internal: delta_u differs from u times the tilde field");
    }
    return tilde;
}

Poly bracket(const SymplecticData& s, const Poly& f, const Poly& g)
{
    auto df = hamiltonian(s, f).delta;
    auto dg = hamiltonian(s, g).delta;
    Poly b = -evaluate(s.omega, {df, dg});
    if (!(b == df.apply(g))) {
        throw DomainError("internal: {f,g} differs from delta_f(g)");
    }
    return b;
}

bool in_divisor_ideal(const Divisor& d, const Poly& u)
{
    require_same_context(d.context(), u.context());
    if (u.is_zero()) {
        return false;
    }
    const auto& ctx = *u.context();
    std::vector<std::string> div;
    for (std::size_t i : ctx.divisor_coords()) {
        div.push_back(ctx.name(i));
    }
    auto pctx = make_context(ctx.names(), div, Arena::polynomial);
    Poly g = gcd(strip_to_polynomial(u, pctx), strip_to_polynomial(d.equation(), pctx));
    return !g.as_scalar().has_value();
}

RationalFunction sing_bracket(const SymplecticData& s, const Poly& a, const Poly& b,
                              std::optional<bool> a_in, std::optional<bool> b_in)
{
    bool ai = in_divisor_ideal(s.divisor, a);
    bool bi = in_divisor_ideal(s.divisor, b);
    if (a_in && *a_in != ai) {
        throw DomainError(a.to_string() + (ai ? " lies" : " does not lie") + " in the ideal of the divisor");
    }
    if (b_in && *b_in != bi) {
        throw DomainError(b.to_string() + (bi ? " lies" : " does not lie") + " in the ideal of the divisor");
    }
    Poly ab = bracket(s, a, b);
    const auto& ctx = a.context();
    Poly den(ctx, Scalar(1));
    if (ai) {
        den *= a;
    }
    if (bi) {
        // a outside, b inside: -{b,a}/b
        den *= b;
    }
    return RationalFunction(ab, den).reduced();
}

bool IdentityReport::all_zero() const
{
    for (const auto& i : items) {
        if (i.applicable && !i.zero) {
            return false;
        }
    }
    return true;
}

bool IdentityReport::asserted_zero() const
{
    for (const auto& i : items) {
        if (i.name != "ii" && i.applicable && !i.zero) {
            return false;
        }
    }
    return true;
}

namespace {

IdentityDefect poly_defect(std::string name, const Poly& d)
{
    return {std::move(name), true, d.is_zero(), d.to_string()};
}

IdentityDefect field_defect(std::string name, const LogVectorField& d)
{
    return {std::move(name), true, d.is_zero(), d.is_zero() ? "0" : d.to_string()};
}

} // namespace

IdentityReport verify_identities(const SymplecticData& s, const Poly& u, const Poly& v, const Poly& a,
                                 const Poly& b)
{
    IdentityReport r;
    const auto& d = s.divisor;
    for (const Poly* p : {&u, &v}) {
        if (!in_divisor_ideal(d, *p)) {
            throw DomainError(p->to_string() + " does not lie in the ideal of the divisor");
        }
    }
    Poly uv_br = bracket(s, u, v);
    RationalFunction sing = sing_bracket(s, u, v);

    // (i) i_{delta_{u,v} - uv delta_{sing}} omega = {u,v}(du/u + dv/v) = sing * d(uv)
    if (auto sp = sing.as_poly()) {
        LogVectorField lhs_field = hamiltonian(s, uv_br).delta - (u * v) * hamiltonian(s, *sp).delta;
        LogForm defect = interior(lhs_field, s.omega) - *sp * d_log(u * v);
        r.items.push_back({"i", true, defect.is_zero(), defect.to_string()});
    } else {
        r.items.push_back({"i", false, false, "{u,v}_sing = " + sing.to_string() + " is not in the arena"});
    }

    // (ii) {uv,a}_sing = {u+v,a}_sing for a outside the ideal
    if (in_divisor_ideal(d, a)) {
        r.items.push_back({"ii", false, false, "a lies in the ideal"});
    } else {
        RationalFunction diff = (sing_bracket(s, u * v, a) - sing_bracket(s, u + v, a)).reduced();
        r.items.push_back({"ii", true, diff.is_zero(), diff.to_string()});
    }

    // (iii) {a,b} = delta_a(b)
    auto da = hamiltonian(s, a).delta;
    auto db = hamiltonian(s, b).delta;
    Poly ab = -evaluate(s.omega, {da, db});
    r.items.push_back(poly_defect("iii", ab - da.apply(b)));

    // (iv) [delta_a, delta_b] = delta_{a,b}
    r.items.push_back(field_defect("iv", lie_bracket(da, db) - hamiltonian(s, ab).delta));

    // (v) delta_{u,v} = uv [~u, ~v] + {u,v}(~v + ~u)
    auto tu = tilde_hamiltonian(s, u);
    auto tv = tilde_hamiltonian(s, v);
    LogVectorField rhs = (u * v) * lie_bracket(tu, tv) + uv_br * (tv + tu);
    r.items.push_back(field_defect("v", hamiltonian(s, uv_br).delta - rhs));

    r.items.push_back(poly_defect("jacobi", jacobi_defect(s, a, b, u)));
    return r;
}

Poly jacobi_defect(const SymplecticData& s, const Poly& f, const Poly& g, const Poly& h)
{
    return bracket(s, f, bracket(s, g, h)) + bracket(s, g, bracket(s, h, f)) + bracket(s, h, bracket(s, f, g));
}

} // namespace logsym
