#include "logsym/diffop.hpp"

#include "logsym/errors.hpp"

namespace logsym {

LogDiffOp1::LogDiffOp1(LogVectorField delta) : delta_(std::move(delta)), mult_(delta_.context()) {}

LogDiffOp1::LogDiffOp1(LogVectorField delta, Poly mult) : delta_(std::move(delta)), mult_(std::move(mult))
{
    require_same_context(delta_.context(), mult_.context());
}

LogDiffOp1 LogDiffOp1::multiplier(const Poly& m)
{
    return {LogVectorField(m.context()), m};
}

Poly LogDiffOp1::apply(const Poly& f) const
{
    return delta_.apply(f) + mult_ * f;
}

LogDiffOp1 operator+(const LogDiffOp1& a, const LogDiffOp1& b)
{
    return {a.delta_ + b.delta_, a.mult_ + b.mult_};
}

LogDiffOp1 operator*(const Poly& f, const LogDiffOp1& a)
{
    return {f * a.delta_, f * a.mult_};
}

std::string LogDiffOp1::to_string() const
{
    return "(" + delta_.to_string() + ", " + mult_.to_string() + ")";
}

LogVectorField symbol(const LogDiffOp1& phi)
{
    return phi.delta();
}

LogDiffOp1 commutator(const LogDiffOp1& a, const LogDiffOp1& b)
{
    return {lie_bracket(a.delta(), b.delta()), a.delta().apply(b.mult()) - b.delta().apply(a.mult())};
}

LogDiffOp1 from_connection(const Connection1& conn, const LogVectorField& delta)
{
    return {delta, interior(delta, conn.sigma()).as_function()};
}

Decomposition decompose(const LogDiffOp1& phi, const Connection1& conn)
{
    LogDiffOp1 rest = phi - from_connection(conn, phi.delta());
    if (!rest.delta().is_zero()) {
        throw DomainError("internal: decomposition left a derivation part");
    }
    return {phi.delta(), rest.mult()};
}

LogDiffOp1 prequantum_op(const Poly& f, const SymplecticData& s, const Connection1& conn,
                         const std::optional<Scalar>& alpha)
{
    Scalar a = alpha.value_or(Scalar::power_of_t(1));
    LogDiffOp1 nabla = from_connection(conn, hamiltonian(s, f).delta);
    return {nabla.delta(), nabla.mult() + a * f};
}

DiracResult dirac_check(const Poly& f, const Poly& g, const SymplecticData& s, const Connection1& conn,
                        const std::optional<Scalar>& alpha)
{
    Scalar a = alpha.value_or(Scalar::power_of_t(1));
    LogDiffOp1 qf = prequantum_op(f, s, conn, a);
    LogDiffOp1 qg = prequantum_op(g, s, conn, a);
    LogDiffOp1 qfg = prequantum_op(bracket(s, f, g), s, conn, a);
    LogDiffOp1 defect = commutator(qf, qg) - qfg;
    const auto& df = qf.delta();
    const auto& dg = qg.delta();
    Poly predicted = evaluate(conn.curvature(), {df, dg}) - a * evaluate(s.omega, {df, dg});
    if (!defect.delta().is_zero() || !(defect.mult() == predicted)) {
        throw DomainError("internal: Dirac defect " + defect.to_string() + " differs from the curvature prediction " +
                          predicted.to_string());
    }
    return {defect.is_zero(), defect, predicted};
}

AtiyahResult atiyah_check(const LogDiffOp1& phi, const LogVectorField& l)
{
    require_same_context(phi.context(), l.context());
    for (std::size_t k = 0; k < l.coeffs().size(); ++k) {
        if (!(phi.delta().coeff(k) == l.coeff(k))) {
            return {false, Poly::variable(l.context(), k)};
        }
    }
    return {true, std::nullopt};
}

SplittingReport splitting_check(const Connection1& conn, const std::vector<LogDiffOp1>& family)
{
    SplittingReport r{true, true, family.size()};
    for (const auto& phi : family) {
        LogDiffOp1 chi = from_connection(conn, symbol(phi));
        LogDiffOp1 inc = LogDiffOp1::multiplier(decompose(phi, conn).m);
        if (!(inc + chi == phi)) {
            r.section_identity = false;
        }
        if (!decompose(chi, conn).m.is_zero()) {
            r.lambda_chi_zero = false;
        }
    }
    return r;
}

std::vector<LogDiffOp1> generator_family(const ContextPtr& ctx)
{
    std::vector<LogDiffOp1> out;
    out.push_back(LogDiffOp1::multiplier(Poly(ctx, Scalar(1))));
    for (std::size_t k = 0; k < ctx->size(); ++k) {
        auto xi = LogVectorField::frame_element(ctx, k);
        Poly z = Poly::variable(ctx, k);
        out.emplace_back(xi);
        out.push_back(LogDiffOp1::multiplier(z));
        out.emplace_back(xi, z);
    }
    return out;
}

Poly cochain_apply(const CochainSpec& m, const SymplecticData& s, const Poly& f)
{
    if (m.theta.degree() != 1) {
        throw DomainError("cochain form must have degree 1");
    }
    return interior(hamiltonian(s, f).delta, m.theta).as_function() + m.c * f;
}

Poly cochain_eval(const LogForm& eta, const std::vector<Poly>& fs, const SymplecticData& s)
{
    std::vector<LogVectorField> args;
    for (const auto& f : fs) {
        args.push_back(hamiltonian(s, f).delta);
    }
    return evaluate(eta, args);
}

Poly cochain_condition_defect(const CochainSpec& m, const Poly& f, const Poly& g, const Scalar& alpha,
                              const SymplecticData& s, const Connection1& conn)
{
    if (alpha.is_zero()) {
        throw DomainError("alpha must be nonzero");
    }
    auto df = hamiltonian(s, f).delta;
    auto dg = hamiltonian(s, g).delta;
    Poly k = evaluate(conn.curvature(), {df, dg});
    return dg.apply(cochain_apply(m, s, f)) - df.apply(cochain_apply(m, s, g)) +
           cochain_apply(m, s, bracket(s, f, g)) - alpha.inverse() * k;
}

} // namespace logsym
