#pragma once

#include "logsym/context.hpp"
#include "logsym/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logsym {

using Exponents = std::vector<int>;

/// Graded-lex order, largest first, so that terms().begin() is the leading term.
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate (Laurent) polynomial with Scalar coefficients.
///
/// Exponents may be negative; whether that is legal is a property of the
/// arena (see in_arena()).  Intermediate values of a computation are allowed
/// to leave the arena, results handed to the user are checked.
class Poly {
public:
    using TermMap = std::map<Exponents, Scalar, GrlexDescending>;

    explicit Poly(ContextPtr ctx);
    Poly(ContextPtr ctx, const Scalar& c);

    static Poly variable(ContextPtr ctx, std::size_t i);
    static Poly monomial(ContextPtr ctx, Exponents e, const Scalar& c = 1);

    const ContextPtr& context() const { return ctx_; }
    std::size_t nvars() const { return ctx_->size(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// The value when the polynomial is constant.
    std::optional<Scalar> as_scalar() const;
    bool is_single_term() const { return terms_.size() == 1; }
    const Exponents& leading_exponents() const;
    const Scalar& leading_coefficient() const;

    /// Maximal total degree over the terms (0 for the zero polynomial).
    int total_degree() const;
    int degree_in(std::size_t i) const;
    int min_degree_in(std::size_t i) const;
    bool is_polynomial() const;
    /// Negative exponents only on the unit variables of the context.
    bool in_arena() const;
    /// Throws ArenaError naming `what` unless in_arena().
    void require_arena(const std::string& what) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Scalar& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);

    /// Multiplies by the monomial z^delta.
    Poly shifted(const Exponents& delta) const;
    Poly pow(int e) const;
    /// Inverse when the polynomial is a unit of the arena ring: one term,
    /// invertible scalar, monomial in unit variables.
    std::optional<Poly> unit_inverse() const;

    Poly partial(std::size_t i) const;
    /// z_i * d/dz_i
    Poly euler(std::size_t i) const;
    /// Sum of the terms whose exponent in z_i equals k, with that exponent cleared.
    Poly coefficient_in(std::size_t i, int k) const;

    /// Canonical text, parseable by the session grammar.
    std::string to_string() const;
    /// True when to_string() can be used as a product factor without parentheses.
    bool is_product_safe() const;

    void add_term(const Exponents& e, const Scalar& c);

private:
    ContextPtr ctx_;
    TermMap terms_;
};

/// Text of the monomial z^e ("" for the unit monomial).
std::string monomial_to_string(const VarContext& ctx, const Exponents& e);

} // namespace logsym
