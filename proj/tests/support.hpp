#pragma once

// Test-side helpers: random generators and an evaluation oracle that is
// independent of the division and gcd code.

#include "logsym/logcalc.hpp"
#include "logsym/poly.hpp"

#include <random>
#include <vector>

namespace testing_support {

using logsym::ContextPtr;
using logsym::Exponents;
using logsym::Gaussian;
using logsym::Poly;
using logsym::Rational;
using logsym::Scalar;

inline Poly term(const ContextPtr& ctx, Exponents e, const Scalar& c = 1)
{
    return Poly::monomial(ctx, std::move(e), c);
}

inline Poly var(const ContextPtr& ctx, std::size_t i)
{
    return Poly::variable(ctx, i);
}

inline Poly cst(const ContextPtr& ctx, const Scalar& c)
{
    return Poly(ctx, c);
}

inline Rational rand_rational(std::mt19937_64& rng, int lo = -5, int hi = 5)
{
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 4);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Scalar rand_scalar(std::mt19937_64& rng, bool with_t = true)
{
    std::uniform_int_distribution<int> coin(0, 3);
    Scalar s(Gaussian(rand_rational(rng), coin(rng) == 0 ? rand_rational(rng) : Rational(0)));
    if (with_t && coin(rng) == 0) {
        std::uniform_int_distribution<int> k(-2, 2);
        s += Scalar::power_of_t(k(rng), Gaussian(rand_rational(rng)));
    }
    return s;
}

/// Random polynomial with nonnegative exponents and total degree <= max_deg.
inline Poly rand_poly(std::mt19937_64& rng, const ContextPtr& ctx, int max_deg, int max_terms,
                      bool with_t = true)
{
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<std::size_t> which(0, ctx->size() - 1);
    Poly p(ctx);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e(ctx->size(), 0);
        int d = deg(rng);
        for (int k = 0; k < d; ++k) {
            ++e[which(rng)];
        }
        p += term(ctx, e, rand_scalar(rng, with_t));
    }
    return p;
}

/// Value of a Scalar after substituting T := t.  This is a ring homomorphism
/// from Q(i)[T, 1/T] to Q(i), so identities survive it.
inline Gaussian eval_scalar(const Scalar& s, const Rational& t)
{
    Gaussian acc;
    for (const auto& [k, g] : s.terms()) {
        Rational p = 1;
        for (int j = 0; j < std::abs(k); ++j) {
            p *= t;
        }
        if (k < 0) {
            p = 1 / p;
        }
        acc += g * Gaussian(p);
    }
    return acc;
}

inline Gaussian eval(const Poly& p, const std::vector<Rational>& pt, const Rational& t)
{
    Gaussian acc;
    for (const auto& [e, c] : p.terms()) {
        Rational m = 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int j = 0; j < std::abs(e[i]); ++j) {
                if (e[i] > 0) {
                    m *= pt[i];
                } else {
                    m /= pt[i];
                }
            }
        }
        acc += eval_scalar(c, t) * Gaussian(m);
    }
    return acc;
}

inline std::vector<Rational> rand_point(std::mt19937_64& rng, std::size_t n)
{
    std::vector<Rational> pt;
    for (std::size_t i = 0; i < n; ++i) {
        Rational q = rand_rational(rng, -9, 9);
        if (q == 0) {
            q = 7;
        }
        pt.push_back(q);
    }
    return pt;
}

/// Chart with 1..max_n variables, a random set of divisor coordinates and a
/// random arena.
inline ContextPtr rand_context(std::mt19937_64& rng, std::size_t max_n = 4)
{
    static const std::vector<std::string> names{"x", "y", "z", "w", "u", "v"};
    std::uniform_int_distribution<std::size_t> nd(1, max_n);
    std::uniform_int_distribution<int> coin(0, 1);
    std::size_t n = nd(rng);
    std::vector<std::string> vars(names.begin(), names.begin() + static_cast<long>(n));
    std::vector<std::string> div;
    for (const auto& v : vars) {
        if (coin(rng)) {
            div.push_back(v);
        }
    }
    return logsym::make_context(vars, div, coin(rng) ? logsym::Arena::torus : logsym::Arena::polynomial);
}

/// Random field with polynomial coefficients in the logarithmic frame, so it
/// is tangent to every divisor coordinate.
inline logsym::LogVectorField rand_log_field(std::mt19937_64& rng, const ContextPtr& ctx, int max_deg = 3,
                                             int max_terms = 3)
{
    std::vector<Poly> c;
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        c.push_back(rand_poly(rng, ctx, max_deg, max_terms));
    }
    return logsym::LogVectorField::from_log_frame(c);
}

inline logsym::LogForm rand_form(std::mt19937_64& rng, const ContextPtr& ctx, int degree, int max_deg = 4,
                                 int max_terms = 3)
{
    logsym::LogForm w(ctx, degree);
    std::size_t n = ctx->size();
    for (logsym::IndexSet I = 0; I < (logsym::IndexSet{1} << n); ++I) {
        if (__builtin_popcount(I) == degree) {
            w.add(I, rand_poly(rng, ctx, max_deg, max_terms));
        }
    }
    return w;
}

/// Random degree with 0 <= degree <= n.
inline int rand_degree(std::mt19937_64& rng, const ContextPtr& ctx)
{
    std::uniform_int_distribution<int> d(0, static_cast<int>(ctx->size()));
    return d(rng);
}

} // namespace testing_support
