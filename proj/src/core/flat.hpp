#pragma once

// Polynomials over Q(i) in the chart variables plus T, with T treated as an
// ordinary variable.  Used for exact division and gcd, where the Scalar ring
// Q(i)[T, 1/T] is not a field.

#include "logsym/poly.hpp"

#include <map>

namespace logsym::detail {

struct Flat {
    using TermMap = std::map<Exponents, Gaussian, GrlexDescending>;

    std::size_t nvars = 0;
    TermMap terms;

    Flat() = default;
    explicit Flat(std::size_t n) : nvars(n) {}
    static Flat constant(std::size_t n, const Gaussian& g);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    int degree_in(std::size_t v) const;
    /// Coefficient of v^k as a polynomial (exponent of v cleared).
    Flat coeff_in(std::size_t v, int k) const;
    Flat times_var_power(std::size_t v, int k) const;

    void add_term(const Exponents& e, const Gaussian& g);
    Flat operator-() const;
    Flat& operator+=(const Flat& o);
    Flat& operator-=(const Flat& o);
    friend Flat operator+(Flat a, const Flat& b) { return a += b; }
    friend Flat operator-(Flat a, const Flat& b) { return a -= b; }
    friend Flat operator*(const Flat& a, const Flat& b);
    Flat scaled(const Gaussian& g) const;
    friend bool operator==(const Flat& a, const Flat& b) { return a.terms == b.terms; }
};

struct FlatDivision {
    Flat quotient;
    Flat remainder;
};

/// Multivariate division by a single polynomial under graded-lex order.
FlatDivision divide(const Flat& f, const Flat& h);
/// Exact quotient; throws ArithmeticError when h does not divide f.
Flat exact_div(const Flat& f, const Flat& h);

Flat gcd(const Flat& a, const Flat& b);

/// Converts p to a Flat in nvars+1 variables (T last).  The unit variables
/// (T, and the divisor coordinates of a torus chart) are shifted so their
/// minimal exponent is zero; the applied shift is returned in `shift`.
Flat to_flat(const Poly& p, Exponents& shift);
/// Inverse of to_flat for the given shift (exponents are reduced by `shift`).
Poly from_flat(const Flat& f, const ContextPtr& ctx, const Exponents& shift);

} // namespace logsym::detail
