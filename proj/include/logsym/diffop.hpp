#pragma once

// First-order logarithmic operators on a trivialised line module.  A
// section f*s is identified with f, and an operator with the pair (delta, m)
// acting by f -> delta(f) + m f.

#include "logsym/poisson.hpp"
#include "logsym/prequant.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logsym {

class LogDiffOp1 {
public:
    explicit LogDiffOp1(LogVectorField delta);
    LogDiffOp1(LogVectorField delta, Poly mult);
    /// The multiplication operator f -> m f.
    static LogDiffOp1 multiplier(const Poly& m);

    const LogVectorField& delta() const { return delta_; }
    const Poly& mult() const { return mult_; }
    const ContextPtr& context() const { return delta_.context(); }

    Poly apply(const Poly& f) const;
    bool is_zero() const { return delta_.is_zero() && mult_.is_zero(); }

    LogDiffOp1 operator-() const { return {-delta_, -mult_}; }
    friend LogDiffOp1 operator+(const LogDiffOp1& a, const LogDiffOp1& b);
    friend LogDiffOp1 operator-(const LogDiffOp1& a, const LogDiffOp1& b) { return a + (-b); }
    friend LogDiffOp1 operator*(const Poly& f, const LogDiffOp1& a);
    friend bool operator==(const LogDiffOp1& a, const LogDiffOp1& b)
    {
        return a.delta_ == b.delta_ && a.mult_ == b.mult_;
    }

    /// "(x*@x, 0)"
    std::string to_string() const;

private:
    LogVectorField delta_;
    Poly mult_;
};

LogVectorField symbol(const LogDiffOp1& phi);
LogDiffOp1 commutator(const LogDiffOp1& a, const LogDiffOp1& b);

/// nabla_delta = (delta, sigma(delta)).
LogDiffOp1 from_connection(const Connection1& conn, const LogVectorField& delta);

struct Decomposition {
    LogVectorField delta;
    /// phi - nabla_{symbol phi}, a multiplier
    Poly m;
};

Decomposition decompose(const LogDiffOp1& phi, const Connection1& conn);

/// Q(f) = nabla_{delta_f} + alpha f, alpha defaulting to T.
LogDiffOp1 prequantum_op(const Poly& f, const SymplecticData& s, const Connection1& conn,
                         const std::optional<Scalar>& alpha = std::nullopt);

struct DiracResult {
    bool holds;
    /// [Q(f), Q(g)] - Q({f, g})
    LogDiffOp1 defect;
    /// Predicted defect multiplier dsigma(delta_f, delta_g) - alpha omega(delta_f, delta_g).
    Poly predicted;
};

DiracResult dirac_check(const Poly& f, const Poly& g, const SymplecticData& s, const Connection1& conn,
                        const std::optional<Scalar>& alpha = std::nullopt);

struct AtiyahResult {
    bool admissible;
    /// Coordinate z_k with symbol(phi)(z_k) != l(z_k) when not admissible.
    std::optional<Poly> witness;
};

/// (phi, l) is an Atiyah pair iff the symbol of phi is l.
AtiyahResult atiyah_check(const LogDiffOp1& phi, const LogVectorField& l);

struct SplittingReport {
    /// i(lambda phi) + chi(pi phi) = phi on every tested phi
    bool section_identity;
    /// lambda(chi delta) = 0 on every tested delta
    bool lambda_chi_zero;
    std::size_t operators_tested;
};

/// Checks the splitting identities of chi(delta) = nabla_delta and
/// lambda(phi) = m(phi) on the given operators and their symbols.
SplittingReport splitting_check(const Connection1& conn, const std::vector<LogDiffOp1>& family);

/// Operators (xi_k, 0), (0, z_k) and (xi_k, z_k) for the coordinate frame,
/// plus (0, 1).
std::vector<LogDiffOp1> generator_family(const ContextPtr& ctx);

/// m(f) = theta(delta_f) + c f
struct CochainSpec {
    LogForm theta;
    Scalar c;
};

Poly cochain_apply(const CochainSpec& m, const SymplecticData& s, const Poly& f);

/// K_eta(f_1..f_r) = eta(delta_{f_1}, ..., delta_{f_r})
Poly cochain_eval(const LogForm& eta, const std::vector<Poly>& fs, const SymplecticData& s);

/// delta_g m(f) - delta_f m(g) + m({f,g}) - K_{K_nabla}(f, g) / alpha
Poly cochain_condition_defect(const CochainSpec& m, const Poly& f, const Poly& g, const Scalar& alpha, const SymplecticData& s,
                const Connection1& conn);

} // namespace logsym
