#pragma once

#include "logsym/symplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logsym {

/// Rank-1 connection nabla s = sigma (x) s on the trivialised line, with
/// its curvature d(sigma) cached.
class Connection1 {
public:
    explicit Connection1(LogForm sigma);

    const LogForm& sigma() const { return sigma_; }
    const LogForm& curvature() const { return curvature_; }
    const ContextPtr& context() const { return sigma_.context(); }

private:
    LogForm sigma_;
    LogForm curvature_;
};

LogForm curvature(const LogForm& sigma);

/// nabla + tau for a closed 1-form tau; throws DomainError otherwise.
Connection1 gauge(const Connection1& conn, const LogForm& tau);

struct FlatResult {
    bool flat;
    LogForm curvature;
    /// Constant residues a_i along the divisor coordinates (when flat).
    std::vector<std::size_t> coords;
    std::vector<Scalar> residues;
    /// sigma - sum a_i e^i = d(potential) (when flat).
    std::optional<Poly> potential;
};

/// Flatness together with the decomposition of a flat sigma into constant
/// logarithmic terms plus an exact part.
FlatResult is_flat(const Connection1& conn);

/// One torus 2-cycle {|z_i| = |z_j| = 1}.
struct Period {
    std::size_t i;
    std::size_t j;
    Scalar value;
};

/// Periods of a closed 2-form over the coordinate tori of the divisor
/// coordinates: T^2 times the constant coefficient of e^i ^ e^j.
std::vector<Period> periods(const LogForm& omega);

/// n when value = n T for an integer n (zero counts).
std::optional<mpz_class> integral_multiple_of_t(const Scalar& value);

struct IntegralityResult {
    bool integral;
    std::vector<Period> periods;
    std::optional<Period> witness;
};

IntegralityResult integrality_check(const LogForm& omega);

struct ClassAndPrimitive {
    /// Constant coefficients on pure divisor cells.
    LogForm class_part;
    /// d(primitive) + class_part = input
    LogForm primitive;
};

/// Splits a closed form into its constant logarithmic class and an exact
/// part, with an explicit primitive from the graded homotopy.  Throws
/// DomainError when the form is not closed.
ClassAndPrimitive class_and_primitive(const LogForm& omega);

struct NormalizedConnection {
    Connection1 conn;
    std::vector<std::size_t> coords;
    std::vector<Scalar> residues;
    std::vector<long> shifts;
};

/// Shifts each constant residue by an integer so that its real part lies in
/// [0, 1).  Throws DomainError for nonconstant residues or residues
/// involving T.
NormalizedConnection normalize_residues(const Connection1& conn);

struct PrequantReport {
    bool closed = false;
    bool even_dimension = false;
    bool nondegenerate = false;
    std::optional<Poly> det;
    std::vector<Period> periods;
    bool integral = false;
    std::optional<Period> witness;
    /// Decomposition of T*omega.
    std::optional<LogForm> class_part;
    std::optional<LogForm> primitive;
    std::optional<Connection1> connection;
    std::vector<Scalar> residues;
    std::vector<long> shifts;
    bool prequantizable = false;
    std::string verdict;
    std::vector<std::string> notes;
    std::string lct_caveat;
};

PrequantReport prequantize(const Divisor& d, const LogForm& omega);

} // namespace logsym
