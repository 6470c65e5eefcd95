#pragma once

#include "logsym/poly.hpp"

#include <optional>
#include <vector>

namespace logsym {

struct DivisionResult {
    Poly quotient;
    Poly remainder;
};

/// f = quotient * h + remainder, by multivariate division with the single
/// divisor h.  Units of the arena (powers of T, divisor coordinates of a
/// torus chart) are factored out first, so the remainder is zero exactly
/// when h divides f in the arena ring.
DivisionResult divide(const Poly& f, const Poly& h);

/// Exact quotient f / h when h divides f in the arena ring.
std::optional<Poly> divides(const Poly& h, const Poly& f);

/// Exact quotient; throws ArithmeticError when h does not divide f.
Poly exact_quotient(const Poly& f, const Poly& h);

/// A greatest common divisor, normalised so that the lowest T-power of the
/// leading coefficient is T^0 with value 1.  Computed with the subresultant
/// PRS recursively on the variables.
Poly gcd(const Poly& p, const Poly& q);

/// Rescales p by a unit so that its leading coefficient is normalised as in gcd().
/// In the torus arena the unit may include a monomial in the divisor coordinates.
Poly normalize_unit(const Poly& p);

/// Fraction num/den of arena-ring elements.  Kept unreduced by arithmetic;
/// reduced() divides out the gcd.
class RationalFunction {
public:
    explicit RationalFunction(const Poly& num);
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const ContextPtr& context() const { return num_.context(); }

    bool is_zero() const { return num_.is_zero(); }
    RationalFunction reduced() const;
    /// The arena-ring element equal to this fraction, if there is one.
    std::optional<Poly> as_poly() const;

    RationalFunction operator-() const { return {-num_, den_}; }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    /// Cross-multiplication test.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    std::string to_string() const;

private:
    Poly num_;
    Poly den_;
};

using RfMatrix = std::vector<std::vector<RationalFunction>>;
using RfVector = std::vector<RationalFunction>;

/// Solves A x = b exactly by fraction-free (Bareiss) elimination.  The
/// result is reduced and checked by substitution before it is returned.
/// Throws DomainError when A is singular.
RfVector solve_linear(const RfMatrix& a, const RfVector& b);

/// Determinant of a square polynomial matrix by Bareiss elimination.
Poly determinant(std::vector<std::vector<Poly>> m);

} // namespace logsym
