#include "logsym/prequant.hpp"

#include "logsym/errors.hpp"

namespace logsym {

Connection1::Connection1(LogForm sigma) : sigma_(std::move(sigma)), curvature_(sigma_.context(), 0)
{
    if (sigma_.degree() != 1) {
        throw DomainError("a connection form has degree 1, got " + std::to_string(sigma_.degree()));
    }
    curvature_ = d_log(sigma_);
}

LogForm curvature(const LogForm& sigma)
{
    return Connection1(sigma).curvature();
}

Connection1 gauge(const Connection1& conn, const LogForm& tau)
{
    if (tau.degree() != 1) {
        throw DomainError("a gauge form has degree 1");
    }
    LogForm dt = d_log(tau);
    if (!dt.is_zero()) {
        throw DomainError("gauge form must be closed: d(tau) = " + dt.to_string());
    }
    Connection1 out(conn.sigma() + tau);
    if (!(out.curvature() == conn.curvature())) {
        throw DomainError("internal: curvature changed under a closed gauge move");
    }
    return out;
}

FlatResult is_flat(const Connection1& conn)
{
    FlatResult r{conn.curvature().is_zero(), conn.curvature(), {}, {}, std::nullopt};
    if (!r.flat) {
        return r;
    }
    auto res = res_const(conn.sigma());
    if (!res.constants) {
        throw DomainError("internal: a flat connection has a nonconstant residue");
    }
    r.coords = res.coords;
    r.residues = *res.constants;
    auto cp = class_and_primitive(conn.sigma());
    LogForm log_part(conn.context(), 1);
    for (std::size_t k = 0; k < r.coords.size(); ++k) {
        log_part.add(IndexSet{1} << r.coords[k], Poly(conn.context(), r.residues[k]));
    }
    if (!(cp.class_part == log_part)) {
        throw DomainError("internal: residues disagree with the constant logarithmic part");
    }
    r.potential = cp.primitive.as_function();
    return r;
}

std::vector<Period> periods(const LogForm& omega)
{
    if (omega.degree() != 2) {
        throw DomainError("periods are defined for 2-forms");
    }
    if (!d_log(omega).is_zero()) {
        throw DomainError("periods of a form that is not closed");
    }
    const auto& ctx = omega.context();
    const auto& s = ctx->divisor_coords();
    Exponents zero(ctx->size(), 0);
    Scalar t2 = Scalar::power_of_t(2);
    std::vector<Period> out;
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            Poly c = omega.coefficient((IndexSet{1} << s[a]) | (IndexSet{1} << s[b]));
            auto it = c.terms().find(zero);
            Scalar v = it == c.terms().end() ? Scalar() : it->second;
            out.push_back({s[a], s[b], t2 * v});
        }
    }
    return out;
}

std::optional<mpz_class> integral_multiple_of_t(const Scalar& value)
{
    if (value.is_zero()) {
        return mpz_class(0);
    }
    if (value.single_power() != 1) {
        return std::nullopt;
    }
    Gaussian g = value.coefficient(1);
    if (!g.is_real() || g.re().get_den() != 1) {
        return std::nullopt;
    }
    return mpz_class(g.re().get_num());
}

IntegralityResult integrality_check(const LogForm& omega)
{
    IntegralityResult r{true, periods(omega), std::nullopt};
    for (const auto& p : r.periods) {
        if (!integral_multiple_of_t(p.value)) {
            r.integral = false;
            r.witness = p;
            break;
        }
    }
    return r;
}

ClassAndPrimitive class_and_primitive(const LogForm& omega)
{
    if (omega.degree() == 0) {
        throw DomainError("class of a function");
    }
    LogForm dw = d_log(omega);
    if (!dw.is_zero()) {
        throw DomainError("form is not closed: d = " + dw.to_string());
    }
    const auto& ctx = omega.context();
    std::size_t n = ctx->size();
    ClassAndPrimitive out{LogForm(ctx, omega.degree()), LogForm(ctx, omega.degree() - 1)};
    for (const auto& [J, c] : omega.coeffs()) {
        for (const auto& [alpha, coef] : c.terms()) {
            // Weight of z^alpha e^J under the Euler field in each coordinate.
            std::size_t i0 = n;
            int beta = 0;
            for (std::size_t i = 0; i < n; ++i) {
                int b = alpha[i];
                if (!ctx->is_divisor_coord(i) && (J >> i) & 1U) {
                    b += 1;
                }
                if (b != 0) {
                    i0 = i;
                    beta = b;
                    break;
                }
            }
            Poly piece = Poly::monomial(ctx, alpha, coef);
            if (i0 == n) {
                out.class_part.add(J, piece);
                continue;
            }
            // z_{i0} d/dz_{i0} acts on this piece by beta
            std::vector<Poly> coeffs(n, Poly(ctx));
            coeffs[i0] = Poly::variable(ctx, i0);
            LogForm term = interior(LogVectorField(coeffs), LogForm::basis(piece, J));
            out.primitive += Poly(ctx, Scalar(Rational(1, beta))) * term;
        }
    }
    if (!(d_log(out.primitive) + out.class_part == omega)) {
        throw DomainError("internal: homotopy primitive fails its check");
    }
    return out;
}

NormalizedConnection normalize_residues(const Connection1& conn)
{
    auto res = res_const(conn.sigma());
    if (!res.constants) {
        throw DomainError("residues are not constant; normalization needs constant residues");
    }
    const auto& ctx = conn.context();
    LogForm shift_form(ctx, 1);
    NormalizedConnection out{conn, res.coords, {}, {}};
    for (std::size_t k = 0; k < res.coords.size(); ++k) {
        const Scalar& r = (*res.constants)[k];
        auto g = r.as_gaussian();
        if (!g) {
            throw DomainError("residue " + r.to_string() + " involves T; not normalizable in this model");
        }
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), g->re().get_num_mpz_t(), g->re().get_den_mpz_t());
        mpz_class shift = -fl;
        if (!shift.fits_slong_p()) {
            throw DomainError("residue shift out of range");
        }
        long s = shift.get_si();
        out.shifts.push_back(s);
        out.residues.push_back(r + Scalar(s));
        if (s != 0) {
            shift_form.add(IndexSet{1} << res.coords[k], Poly(ctx, Scalar(s)));
        }
    }
    out.conn = gauge(conn, shift_form);
    return out;
}

namespace {

std::string period_text(const VarContext& ctx, const Period& p)
{
    return p.value.to_string() + " over T_{" + ctx.name(p.i) + "," + ctx.name(p.j) + "}";
}

std::string lct_note(const Divisor& d)
{
    const Poly& h = d.equation();
    if (h.as_scalar()) {
        return "empty divisor: the chart is the complement";
    }
    if (is_coordinate_ncd(h)) {
        return "coordinate normal crossing divisor: log de Rham cohomology computes the complement";
    }
    if (weighted_homogeneous(h)) {
        std::string s = "weighted homogeneous on this chart";
        s += d.saito_basis() ? " and free" : ", freeness not certified";
        return s + "; local quasi-homogeneity at other points not checked";
    }
    return "not weighted homogeneous on this chart; comparison with complement cohomology not verified";
}

} // namespace

PrequantReport prequantize(const Divisor& d, const LogForm& omega)
{
    PrequantReport r;
    const auto& ctx = omega.context();
    r.lct_caveat = lct_note(d);
    if (omega.degree() != 2) {
        r.verdict = "not a 2-form";
        return r;
    }
    auto chk = check_symplectic(d, omega, d.saito_basis() ? std::optional(d.saito_basis()->fields) : std::nullopt);
    r.closed = chk.closed;
    r.even_dimension = chk.even_dimension;
    r.nondegenerate = chk.nondegenerate;
    r.det = chk.data->det;
    if (!r.closed) {
        r.verdict = "not closed: d(omega) = " + chk.d_omega.to_string();
        return r;
    }
    if (!r.nondegenerate) {
        r.verdict = r.even_dimension ? "degenerate: det = " + r.det->to_string()
                                     : "odd dimension " + std::to_string(ctx->size());
        return r;
    }
    auto integ = integrality_check(omega);
    r.periods = integ.periods;
    r.integral = integ.integral;
    r.witness = integ.witness;
    if (!r.integral) {
        r.verdict = "non-integral: period " + period_text(*ctx, *r.witness);
        return r;
    }
    r.prequantizable = true;
    LogForm t_omega = Poly(ctx, Scalar::power_of_t(1)) * omega;
    auto cp = class_and_primitive(t_omega);
    r.class_part = cp.class_part;
    r.primitive = cp.primitive;
    if (!cp.class_part.is_zero()) {
        r.verdict = "prequantizable: T*omega has a nonzero integral class; global verdict prequantizable, "
                    "chart gluing out of scope";
        return r;
    }
    Connection1 conn(cp.primitive);
    if (!(conn.curvature() == t_omega)) {
        throw DomainError("internal: constructed connection has the wrong curvature");
    }
    auto res = res_const(conn.sigma());
    if (res.constants) {
        bool t_free = true;
        for (const auto& c : *res.constants) {
            t_free = t_free && c.as_gaussian().has_value();
        }
        if (t_free) {
            auto nc = normalize_residues(conn);
            r.residues = nc.residues;
            r.shifts = nc.shifts;
            conn = nc.conn;
        } else {
            r.residues = *res.constants;
            r.notes.push_back("residues involve T; normalization skipped");
        }
    } else {
        r.notes.push_back("residues are not constant along the divisor; normalization skipped");
    }
    r.connection = conn;
    r.verdict = "prequantizable: connection constructed with curvature T*omega";
    return r;
}

} // namespace logsym
