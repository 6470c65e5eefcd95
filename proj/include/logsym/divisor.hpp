#pragma once

#include "logsym/logcalc.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace logsym {

/// n logarithmic fields whose coefficient determinant is c * h.
struct SaitoBasis {
    std::vector<LogVectorField> fields;
    Scalar certificate;
};

enum class DivisorKind { coordinate_ncd, general };

/// A divisor {h = 0} on the chart.
class Divisor {
public:
    /// The coordinate normal crossing divisor prod_{i in S} z_i of the context.
    static Divisor coordinate(const ContextPtr& ctx);
    /// A divisor given by an arbitrary nonzero equation.
    static Divisor general(Poly h);

    const Poly& equation() const { return h_; }
    const ContextPtr& context() const { return h_.context(); }
    DivisorKind kind() const { return kind_; }

    /// Set once check_squarefree has passed.
    bool verified_squarefree() const { return squarefree_; }
    bool verified_ncd() const { return kind_ == DivisorKind::coordinate_ncd; }
    const std::optional<SaitoBasis>& saito_basis() const { return basis_; }

    /// Runs check_squarefree and records the outcome.
    bool verify_squarefree();
    /// Records a basis returned by saito_check after re-verifying it.
    void attach_saito_basis(SaitoBasis b);

private:
    explicit Divisor(Poly h, DivisorKind kind) : h_(std::move(h)), kind_(kind) {}

    Poly h_;
    DivisorKind kind_;
    bool squarefree_ = false;
    std::optional<SaitoBasis> basis_;
};

struct SquarefreeResult {
    bool reduced;
    /// gcd(h, d_1 h, ..., d_n h); a repeated factor divides it.
    Poly witness;
};

/// Characteristic zero test: h is reduced iff gcd(h, all partials) is constant.
SquarefreeResult check_squarefree(const Poly& h);

struct LogarithmicResult {
    bool logarithmic;
    /// delta(h) = quotient * h when logarithmic.
    Poly quotient;
    /// Division remainder of delta(h) by h otherwise.
    Poly remainder;
    /// delta(u) in u*A for every u in (h); equivalent for principal ideals.
    bool principal;
};

LogarithmicResult is_logarithmic(const LogVectorField& delta, const Divisor& d);

/// Coefficient matrix of n fields, row k holding the plain coefficients of field k.
std::vector<std::vector<Poly>> coefficient_matrix(const std::vector<LogVectorField>& fields);

struct SaitoResult {
    bool free;
    Poly det;
    /// det = certificate * h when free.
    std::optional<SaitoBasis> basis;
    /// First field that is not logarithmic; the basis is then not certified.
    std::optional<std::size_t> non_logarithmic;
};

/// Saito's criterion.  Throws DomainError when the count is not n.
SaitoResult saito_check(const std::vector<LogVectorField>& fields, const Divisor& d);

struct Weights {
    std::vector<mpz_class> w;
    mpz_class degree;
};

/// Positive integer weights making h weighted homogeneous, if any exist.
std::optional<Weights> weighted_homogeneous(const Poly& h);

/// S when h is a nonzero scalar times prod_{i in S} z_i, each to the first power.
std::optional<std::vector<std::size_t>> is_coordinate_ncd(const Poly& h);

} // namespace logsym
