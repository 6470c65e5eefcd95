#include "doctest.h"

#include "logsym/algebra.hpp"
#include "logsym/divisor.hpp"
#include "logsym/errors.hpp"
#include "support.hpp"

using namespace logsym;
using namespace testing_support;

namespace {

struct Saito {
    ContextPtr ctx = make_context({"x", "y", "z"});
    Poly x = var(ctx, 0);
    Poly y = var(ctx, 1);
    Poly z = var(ctx, 2);
    Poly one = cst(ctx, 1);
    Poly h = x * y * (x + y) * ((z - 2 * one) * x + y);

    LogVectorField px = LogVectorField::partial(ctx, 0);
    LogVectorField py = LogVectorField::partial(ctx, 1);
    LogVectorField pz = LogVectorField::partial(ctx, 2);

    LogVectorField d1 = x * px + y * py;
    LogVectorField d2 = ((z - 2 * one) * x + y) * pz;
    LogVectorField d3 = x * x * px - y * y * py - (z - 2 * one) * (x + y) * pz;
};

struct Plane {
    ContextPtr ctx = make_context({"x", "y"});
    Poly x = var(ctx, 0);
    Poly y = var(ctx, 1);
    LogVectorField px = LogVectorField::partial(ctx, 0);
    LogVectorField py = LogVectorField::partial(ctx, 1);
};

// Weighted degree of every monomial of h equals d.
bool weights_fit(const Poly& h, const Weights& w)
{
    for (const auto& [e, c] : h.terms()) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            s += w.w[i] * e[i];
        }
        if (s != w.degree) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("squarefree examples")
{
    Plane p;
    CHECK(check_squarefree(p.x * p.y).reduced);
    auto r = check_squarefree(p.x * p.x * p.y);
    CHECK_FALSE(r.reduced);
    CHECK(divides(r.witness, p.x).has_value());
    CHECK_FALSE(r.witness.as_scalar().has_value());
    Saito s;
    CHECK(check_squarefree(s.h).reduced);
}

TEST_CASE("logarithmic field examples")
{
    Saito s;
    Divisor d = Divisor::general(s.h);
    auto r1 = is_logarithmic(s.d1, d);
    CHECK(r1.logarithmic);
    // d1 is the Euler field in x, y; h has degree 4 in (x, y).
    CHECK(r1.quotient == cst(s.ctx, 4));
    CHECK(is_logarithmic(s.d2, d).logarithmic);
    CHECK(is_logarithmic(s.d3, d).logarithmic);

    Plane p;
    Divisor dxy = Divisor::general(p.x * p.y);
    CHECK_FALSE(is_logarithmic(p.px, dxy).logarithmic);
    auto r = is_logarithmic(-(p.x * p.y) * p.py, dxy);
    CHECK(r.logarithmic);
    CHECK(r.quotient == -p.x);
}

TEST_CASE("logarithmic quotient reproduces the derivative")
{
    std::mt19937_64 rng(21);
    Saito s;
    Divisor d = Divisor::general(s.h);
    for (int k = 0; k < 40; ++k) {
        Poly a = rand_poly(rng, s.ctx, 2, 3, false);
        Poly b = rand_poly(rng, s.ctx, 2, 3, false);
        Poly c = rand_poly(rng, s.ctx, 2, 3, false);
        auto v = a * s.d1 + b * s.d2 + c * s.d3;
        auto r = is_logarithmic(v, d);
        REQUIRE(r.logarithmic);
        CHECK(r.quotient * s.h == v.apply(s.h));
    }
}

TEST_CASE("Saito criterion")
{
    Saito s;
    Divisor d = Divisor::general(s.h);
    auto r = saito_check({s.d1, s.d2, s.d3}, d);
    CHECK(r.free);
    CHECK(r.det == s.h);
    REQUIRE(r.basis.has_value());
    CHECK(r.basis->certificate == Scalar(1));

    Plane p;
    Divisor dxy = Divisor::general(p.x * p.y);
    auto ok = saito_check({p.x * p.px, p.y * p.py}, dxy);
    CHECK(ok.free);
    CHECK(ok.det == p.x * p.y);
    auto bad = saito_check({p.x * p.px, p.x * p.py}, dxy);
    CHECK_FALSE(bad.free);
    CHECK(bad.det == p.x * p.x);
    CHECK(bad.non_logarithmic == std::optional<std::size_t>(1));

    CHECK_THROWS_AS(saito_check({p.x * p.px}, dxy), DomainError);
    auto nonlog = saito_check({p.px, p.y * p.py}, dxy);
    CHECK_FALSE(nonlog.free);
    CHECK(nonlog.non_logarithmic == std::optional<std::size_t>(0));
}

TEST_CASE("weighted homogeneity")
{
    Plane p;
    auto w = weighted_homogeneous(p.x * p.x * p.y + p.y * p.y * p.y);
    REQUIRE(w.has_value());
    CHECK(w->w == std::vector<mpz_class>{1, 1});
    CHECK(w->degree == 3);

    auto cusp = weighted_homogeneous(p.x * p.x * p.x + p.y * p.y);
    REQUIRE(cusp.has_value());
    CHECK(cusp->w == std::vector<mpz_class>{2, 3});
    CHECK(cusp->degree == 6);

    Saito s;
    CHECK_FALSE(weighted_homogeneous(s.h).has_value());
}

TEST_CASE("weights fit every monomial on random weighted polynomials")
{
    std::mt19937_64 rng(22);
    auto ctx = make_context({"x", "y", "z"});
    std::uniform_int_distribution<int> wd(1, 4);
    for (int k = 0; k < 40; ++k) {
        std::vector<int> w{wd(rng), wd(rng), wd(rng)};
        int target = 12;
        // Collect monomials of weighted degree 12, then pick a few.
        std::vector<Exponents> mons;
        for (int a = 0; a <= 12; ++a) {
            for (int b = 0; b <= 12; ++b) {
                for (int c = 0; c <= 12; ++c) {
                    if (a * w[0] + b * w[1] + c * w[2] == target) {
                        mons.push_back({a, b, c});
                    }
                }
            }
        }
        std::shuffle(mons.begin(), mons.end(), rng);
        Poly h(ctx);
        for (std::size_t i = 0; i < std::min<std::size_t>(3, mons.size()); ++i) {
            h += term(ctx, mons[i], Scalar(static_cast<long>(i + 1)));
        }
        auto got = weighted_homogeneous(h);
        REQUIRE(got.has_value());
        CHECK(weights_fit(h, *got));
        for (const auto& wi : got->w) {
            CHECK(wi > 0);
        }
    }
}

TEST_CASE("coordinate normal crossing recognition")
{
    Plane p;
    auto r = is_coordinate_ncd(p.x * p.y);
    REQUIRE(r.has_value());
    CHECK(*r == std::vector<std::size_t>{0, 1});
    CHECK_FALSE(is_coordinate_ncd(p.x * p.x * p.y).has_value());
    CHECK_FALSE(is_coordinate_ncd(p.x * (p.x + p.y)).has_value());
}

TEST_CASE("coefficient matrix rows are the plain coefficients")
{
    Saito s;
    auto m = coefficient_matrix({s.d1, s.d2});
    REQUIRE(m.size() == 2);
    CHECK(m[0][0] == s.x);
    CHECK(m[0][2].is_zero());
    CHECK(m[1][2] == (s.z - 2 * s.one) * s.x + s.y);
}
