#include "doctest.h"

#include "logsym/errors.hpp"
#include "logsym/prequant.hpp"
#include "support.hpp"

using namespace logsym;
using namespace testing_support;

namespace {

struct Chart {
    ContextPtr ctx = make_context({"x", "y", "z"}, {"x", "y"}, Arena::torus);
    Poly x = var(ctx, 0);
    Poly y = var(ctx, 1);
    Poly z = var(ctx, 2);
    Poly t = cst(ctx, Scalar::power_of_t(1));
    LogForm ex = LogForm::coframe(ctx, 0);
    LogForm ey = LogForm::coframe(ctx, 1);
    LogForm dz = LogForm::coframe(ctx, 2);

    Poly c(const Scalar& s) const { return cst(ctx, s); }
};

Scalar q(long n, long d = 1)
{
    return Scalar(Rational(n, d));
}

/// Constant combination of basis forms e^I with I inside the divisor set.
LogForm rand_class(std::mt19937_64& rng, const ContextPtr& ctx, int degree)
{
    LogForm w(ctx, degree);
    IndexSet s = index_set(ctx->divisor_coords());
    for (IndexSet I = 0; I < (IndexSet{1} << ctx->size()); ++I) {
        if ((I & ~s) == 0 && __builtin_popcount(I) == degree) {
            w.add(I, cst(ctx, rand_scalar(rng)));
        }
    }
    return w;
}

/// Laurent polynomial with terms of both signs in the divisor coordinates.
LogForm rand_laurent_form(std::mt19937_64& rng, const ContextPtr& ctx, int degree)
{
    LogForm w = rand_form(rng, ctx, degree, 3, 3);
    Exponents shift(ctx->size(), 0);
    for (std::size_t i : ctx->divisor_coords()) {
        shift[i] = -1;
    }
    LogForm out(ctx, degree);
    for (const auto& [I, c] : w.coeffs()) {
        out.add(I, c.shifted(shift));
    }
    return out;
}

} // namespace

TEST_CASE("curvature examples")
{
    Chart h;
    CHECK(curvature(h.c(q(2)) * h.ex + h.c(q(-1, 3)) * h.ey).is_zero());
    CHECK(curvature(h.z * h.ex) == wedge(h.dz, h.ex));
    auto c = make_context({"x", "y"}, {"y"}, Arena::torus);
    Poly t = cst(c, Scalar::power_of_t(1));
    LogForm ey = LogForm::coframe(c, 1);
    CHECK(curvature(t * var(c, 0) * ey) == t * wedge(d_log(var(c, 0)), ey));
    CHECK_THROWS_AS(Connection1(wedge(h.ex, h.ey)), DomainError);
}

TEST_CASE("gauge moves")
{
    Chart h;
    Connection1 conn(h.z * h.ex + h.x * h.y * h.dz);
    CHECK(gauge(conn, h.c(3) * h.ex).curvature() == conn.curvature());
    CHECK(gauge(conn, d_log(h.x * h.y)).curvature() == conn.curvature());
    CHECK(d_log(h.x * h.y) == h.x * h.y * (h.ex + h.ey));
    CHECK_THROWS_AS(gauge(conn, h.z * h.ex), DomainError);
}

TEST_CASE("gauge invariance on random closed forms")
{
    std::mt19937_64 rng(51);
    Chart h;
    for (int k = 0; k < 50; ++k) {
        Connection1 conn(rand_laurent_form(rng, h.ctx, 1));
        LogForm tau = rand_class(rng, h.ctx, 1) + d_log(rand_poly(rng, h.ctx, 3, 3));
        CHECK(gauge(conn, tau).curvature() == conn.curvature());
    }
}

TEST_CASE("flatness")
{
    Chart h;
    auto f1 = is_flat(Connection1(h.c(q(5, 2)) * h.ex));
    CHECK(f1.flat);
    REQUIRE(f1.residues.size() == 2);
    CHECK(f1.residues[0] == q(5, 2));
    CHECK(f1.residues[1].is_zero());

    CHECK_FALSE(is_flat(Connection1(h.t * h.x * h.ey)).flat);

    Poly g = h.x * h.z + h.y * h.y;
    auto f3 = is_flat(Connection1(h.ex + d_log(g)));
    CHECK(f3.flat);
    REQUIRE(f3.potential.has_value());
    CHECK(d_log(*f3.potential) == d_log(g));
    CHECK(f3.residues[0] == q(1));
}

TEST_CASE("periods and integrality")
{
    Chart h;
    LogForm w = wedge(h.ex, h.ey);
    auto ps = periods(w);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].value == Scalar::power_of_t(2));
    CHECK_FALSE(integrality_check(w).integral);
    REQUIRE(integrality_check(w).witness.has_value());

    Poly three_over_t = cst(h.ctx, Scalar::power_of_t(-1, 3));
    auto r3 = integrality_check(three_over_t * w);
    CHECK(r3.integral);
    CHECK(r3.periods[0].value == Scalar::power_of_t(1, 3));
    CHECK(*integral_multiple_of_t(r3.periods[0].value) == 3);

    LogForm exact = d_log(h.x * h.ey);
    for (const auto& p : periods(exact)) {
        CHECK(p.value.is_zero());
    }
    CHECK(integrality_check(exact).integral);
}

TEST_CASE("integrality of rational multiples")
{
    Chart h;
    LogForm w = wedge(h.ex, h.ey);
    for (long m = -3; m <= 3; ++m) {
        CHECK(integrality_check(cst(h.ctx, Scalar::power_of_t(-1, m)) * w).integral);
    }
    CHECK_FALSE(integrality_check(cst(h.ctx, Scalar::power_of_t(-1, Rational(1, 2))) * w).integral);
    CHECK_FALSE(integrality_check(cst(h.ctx, Scalar::power_of_t(-1, Gaussian(0, 1))) * w).integral);
}

TEST_CASE("class and primitive examples")
{
    Chart h;
    LogForm w = wedge(h.ex, h.ey);
    auto a = class_and_primitive(w);
    CHECK(a.class_part == w);
    CHECK(a.primitive.is_zero());

    auto c = make_context({"x", "y"}, {"y"}, Arena::torus);
    LogForm sigma = var(c, 0) * LogForm::coframe(c, 1);
    auto b = class_and_primitive(d_log(sigma));
    CHECK(b.class_part.is_zero());
    CHECK(b.primitive == sigma);

    auto m = class_and_primitive(w + h.x * w);
    CHECK(m.class_part == w);
    CHECK(m.primitive == h.x * h.ey);

    CHECK_THROWS_AS(class_and_primitive(h.z * h.ex), DomainError);
}

TEST_CASE("homotopy primitive on random closed forms")
{
    std::mt19937_64 rng(52);
    Chart h;
    for (int k = 0; k < 40; ++k) {
        LogForm cls = rand_class(rng, h.ctx, 2);
        LogForm w = cls + d_log(rand_laurent_form(rng, h.ctx, 1));
        auto r = class_and_primitive(w);
        CHECK(d_log(r.primitive) + r.class_part == w);
        CHECK(r.class_part == cls);
        auto pw = periods(w);
        auto pc = periods(cls);
        REQUIRE(pw.size() == pc.size());
        for (std::size_t i = 0; i < pw.size(); ++i) {
            CHECK(pw[i].value == pc[i].value);
        }
    }
}

TEST_CASE("residue normalization")
{
    auto ctx = make_context({"x", "y", "z"}, {"x", "y", "z"}, Arena::torus);
    LogForm sigma = cst(ctx, q(5, 2)) * LogForm::coframe(ctx, 0) + cst(ctx, -1) * LogForm::coframe(ctx, 1) +
                    cst(ctx, q(1, 3)) * LogForm::coframe(ctx, 2);
    Connection1 conn(sigma);
    auto n = normalize_residues(conn);
    CHECK(n.residues == std::vector<Scalar>{q(1, 2), q(0), q(1, 3)});
    CHECK(n.shifts == std::vector<long>{-2, 1, 0});
    CHECK(n.conn.curvature() == conn.curvature());

    Chart h;
    auto two = normalize_residues(Connection1(h.c(q(1, 3)) * h.ex + h.c(2) * h.ey));
    CHECK(two.shifts == std::vector<long>{0, -2});

    CHECK_THROWS_AS(normalize_residues(Connection1(h.t * h.ex)), DomainError);
    CHECK_THROWS_AS(normalize_residues(Connection1(h.z * h.ex)), DomainError);
}

TEST_CASE("prequantization pipeline")
{
    auto c = make_context({"x", "y"}, {"y"}, Arena::torus);
    LogForm omega = wedge(d_log(var(c, 0)), LogForm::coframe(c, 1));
    auto r = prequantize(Divisor::coordinate(c), omega);
    CHECK(r.prequantizable);
    REQUIRE(r.connection.has_value());
    CHECK(r.connection->curvature() == cst(c, Scalar::power_of_t(1)) * omega);
    CHECK(r.connection->sigma() == cst(c, Scalar::power_of_t(1)) * var(c, 0) * LogForm::coframe(c, 1));

    Chart h;
    LogForm w = wedge(h.ex, h.ey);
    auto t2 = make_context({"x", "y"}, {"x", "y"}, Arena::torus);
    LogForm wt = wedge(LogForm::coframe(t2, 0), LogForm::coframe(t2, 1));
    auto bad = prequantize(Divisor::coordinate(t2), wt);
    CHECK_FALSE(bad.prequantizable);
    CHECK(bad.verdict == "non-integral: period T^2 over T_{x,y}");

    auto cls = prequantize(Divisor::coordinate(t2), cst(t2, Scalar::power_of_t(-1)) * wt);
    CHECK(cls.prequantizable);
    CHECK_FALSE(cls.connection.has_value());
    CHECK(cls.class_part == std::optional<LogForm>(wt));

    auto odd = prequantize(Divisor::coordinate(h.ctx), w);
    CHECK_FALSE(odd.prequantizable);
}
