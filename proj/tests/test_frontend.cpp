#include "doctest.h"

#include "logsym/errors.hpp"
#include "logsym/frontend.hpp"
#include "support.hpp"

using namespace logsym;
using namespace testing_support;

namespace {

const char* saito_session = R"(# three fields
vars x y z
divisor poly x*y*(x + y)*((z - 2)*x + y)
vfield d1 : x*@x + y*@y
vfield d2 : ((z - 2)*x + y)*@z
vfield d3 : x^2*@x - y^2*@y - (z - 2)*(x + y)*@z
)";

Poly rand_laurent(std::mt19937_64& rng, const ContextPtr& ctx)
{
    Poly p = rand_poly(rng, ctx, 3, 3);
    if (ctx->arena() != Arena::torus) {
        return p;
    }
    Exponents shift(ctx->size(), 0);
    std::uniform_int_distribution<int> s(-2, 0);
    for (std::size_t i : ctx->divisor_coords()) {
        shift[i] = s(rng);
    }
    return p.shifted(shift);
}

Value rand_value(std::mt19937_64& rng, const ContextPtr& ctx)
{
    std::uniform_int_distribution<int> kind(0, 2);
    switch (kind(rng)) {
    case 0:
        return rand_laurent(rng, ctx);
    case 1: {
        std::vector<Poly> c;
        for (std::size_t i = 0; i < ctx->size(); ++i) {
            c.push_back(rand_laurent(rng, ctx));
        }
        return LogVectorField(c);
    }
    default: {
        std::uniform_int_distribution<int> deg(1, static_cast<int>(ctx->size()));
        int d = deg(rng);
        LogForm w(ctx, d);
        for (IndexSet I = 0; I < (IndexSet{1} << ctx->size()); ++I) {
            if (__builtin_popcount(I) == d) {
                w.add(I, rand_laurent(rng, ctx));
            }
        }
        return w;
    }
    }
}

// Any outcome but a non-parse exception or a crash is acceptable.
void parse_noise(const std::string& text, const ContextPtr& ctx)
{
    try {
        parse_session(text);
    } catch (const ParseError& e) {
        CHECK(e.line() >= 1);
        CHECK(e.column() >= 1);
    }
    try {
        parse_expression(text, ctx);
    } catch (const ParseError& e) {
        CHECK(e.column() >= 1);
    }
}

int error_column(const std::string& text, const ContextPtr& ctx)
{
    try {
        parse_expression(text, ctx);
    } catch (const ParseError& e) {
        return e.column();
    }
    return 0;
}

} // namespace

TEST_CASE("session examples")
{
    Session s = parse_session(saito_session);
    REQUIRE(s.divisor.has_value());
    CHECK(s.ctx->arena() == Arena::polynomial);
    CHECK(s.ctx->divisor_coords().empty());
    const auto* d1 = s.find("d1");
    REQUIRE(d1 != nullptr);
    CHECK(d1->kind == ObjectKind::vfield);
    Poly x = var(s.ctx, 0);
    Poly y = var(s.ctx, 1);
    CHECK(std::get<LogVectorField>(d1->value) ==
          x * LogVectorField::partial(s.ctx, 0) + y * LogVectorField::partial(s.ctx, 1));

    Session t = parse_session("vars x y\ndivisor coords x y\nform w : (1/T)*dlog(x)^dlog(y)\n");
    CHECK(t.ctx->arena() == Arena::torus);
    const auto& w = std::get<LogForm>(t.find("w")->value);
    CHECK(w.degree() == 2);
    CHECK(w == cst(t.ctx, Scalar::power_of_t(-1)) * wedge(LogForm::coframe(t.ctx, 0), LogForm::coframe(t.ctx, 1)));

    Session e = parse_session("vars x y\ndivisor coords y\nconn s : T*x*dlog(y)\n");
    CHECK(e.find("s")->kind == ObjectKind::conn);
    CHECK(std::get<LogForm>(e.find("s")->value) ==
          cst(e.ctx, Scalar::power_of_t(1)) * var(e.ctx, 0) * LogForm::coframe(e.ctx, 1));

    Session plain = parse_session("vars a b\nfunc f : a*b\n");
    CHECK(plain.divisor->equation() == cst(plain.ctx, 1));
    CHECK(plain.ctx->arena() == Arena::polynomial);
}

TEST_CASE("canonical printing")
{
    auto ctx = make_context({"x", "y"});
    CHECK(print_canonical(parse_expression("y*@y + x*@x", ctx)) == "x*@x + y*@y");
    CHECK(print_canonical(Scalar::power_of_t(2)) == "T^2");
    CHECK(print_canonical(parse_expression("(x + y)^2", ctx)) == "x^2 + 2*x*y + y^2");
}

TEST_CASE("precedence and associativity")
{
    auto ctx = make_context({"x", "y", "z"}, {"x", "y"}, Arena::torus);
    Poly x = var(ctx, 0);
    Poly y = var(ctx, 1);
    Poly z = var(ctx, 2);
    CHECK(parse_function("x+y*z", ctx) == x + y * z);
    CHECK(parse_function("x-y-z", ctx) == x - y - z);
    CHECK(parse_function("2^3^2", ctx) == cst(ctx, 64));
    CHECK(parse_function("-x^2", ctx) == -(x * x));
    CHECK(parse_function("x^-1*x", ctx) == cst(ctx, 1));
    CHECK(parse_function("3/2*x", ctx) == Poly(ctx, Scalar(Rational(3, 2))) * x);
    LogForm ex = LogForm::coframe(ctx, 0);
    LogForm ey = LogForm::coframe(ctx, 1);
    LogForm dz = d_log(z);
    CHECK(parse_form("dlog(x)^dlog(y)^d(z)", ctx) == wedge(wedge(ex, ey), dz));
    CHECK(parse_form("x*dlog(x)^dlog(y)", ctx) == x * wedge(ex, ey));
    CHECK(parse_function("@x(x^2*y)", ctx) == 2 * x * y);
    CHECK(parse_function("(x*@x + @y)(x*y)", ctx) == x * y + x);
    CHECK(parse_form("d(x*y)/(x*y)", ctx) == ex + ey);
}

TEST_CASE("kind and arena errors carry positions")
{
    auto ctx = make_context({"x", "y", "z"}, {"x"}, Arena::torus);
    CHECK(error_column("x + dlog(x)", ctx) == 3);
    CHECK(error_column("dlog(x) * dlog(x)", ctx) == 9);
    CHECK(error_column("d(@x)", ctx) == 3);
    CHECK(error_column("dlog(y)", ctx) == 6);
    CHECK(error_column("x/y", ctx) == 2);
    CHECK(error_column("x/(1 + T)", ctx) == 2);
    CHECK(error_column("x^y", ctx) == 2);
    CHECK(error_column("x^(1/2)", ctx) == 2);
    CHECK(error_column("x^1001", ctx) == 2);
    CHECK(error_column("x + + ", ctx) == 5);
    CHECK(error_column("q", ctx) == 1);
    CHECK(error_column("x $ y", ctx) == 3);
    CHECK(error_column("(x", ctx) == 3);
    CHECK(error_column(std::string(300, '(') + "x" + std::string(300, ')'), ctx) > 0);
    CHECK(error_column("x/x", ctx) == 0);

    auto poly = make_context({"x", "y"}, {"x"});
    CHECK(error_column("1/x", poly) == 2);
    CHECK(error_column("1/2*x", poly) == 0);

    try {
        parse_expression("x + dlog(x)", ctx);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "line 1, column 3: cannot add a function and a 1-form (at '+')");
    }
    try {
        parse_expression("x *", ctx);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.found() == "end of input");
        CHECK(std::string(e.what()).find("expected") != std::string::npos);
    }
}

TEST_CASE("session errors")
{
    auto line_of = [](const std::string& text) {
        try {
            parse_session(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("func f : 1\n") == 1);
    CHECK(line_of("vars x y\nvars z\n") == 2);
    CHECK(line_of("vars x x\n") == 1);
    CHECK(line_of("vars x T\n") == 1);
    CHECK(line_of("vars x y\ndivisor coords x\narena torus\n") == 3);
    CHECK(line_of("vars x y\ndivisor coords q\n") == 2);
    CHECK(line_of("vars x y\ndivisor poly 0\n") == 2);
    CHECK(line_of("vars x y\nfunc f : x\nfunc f : y\n") == 3);
    CHECK(line_of("vars x y\nfunc x : y\n") == 2);
    CHECK(line_of("vars x y\nfunc f : @x\n") == 2);
    CHECK(line_of("vars x y\ndivisor coords y\nconn s : dlog(y)^d(x)\n") == 3);
    CHECK(line_of("vars x y\nfunc f : g\nfunc g : x\n") == 2);
    CHECK(line_of("vars x y\n\n# comment\nfunc g : x # trailing\nform w : d(g)\n") == 0);
    CHECK(line_of("") == 1);
}

TEST_CASE("objects round-trip through the printer")
{
    std::mt19937_64 rng(61);
    int checked = 0;
    for (int k = 0; k < 1000; ++k) {
        auto ctx = rand_context(rng);
        Value v = rand_value(rng, ctx);
        std::string text = print_canonical(v);
        Value back = parse_expression(text, ctx);
        CHECK_MESSAGE(back == v, text);
        CHECK(print_canonical(back) == text);
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("sessions round-trip through the printer")
{
    Session s = parse_session(saito_session);
    std::string once = print_session(s);
    Session again = parse_session(once);
    CHECK(print_session(again) == once);
    REQUIRE(again.objects.size() == s.objects.size());
    for (std::size_t i = 0; i < s.objects.size(); ++i) {
        CHECK(again.objects[i].value == s.objects[i].value);
    }
    CHECK(again.divisor->equation() == s.divisor->equation());
}

TEST_CASE("parser survives byte noise")
{
    std::mt19937_64 rng(62);
    auto ctx = make_context({"x", "y"}, {"x"}, Arena::torus);
    const std::string alphabet = "xyzTId@()+-*/^:#\n 0123456789dlogvarsfuncformconndivisorcoordspolyarena";
    std::uniform_int_distribution<int> len(0, 60);
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int k = 0; k < 3000; ++k) {
        std::string text;
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            text += coin(rng) ? alphabet[pick(rng)] : static_cast<char>(byte(rng));
        }
        parse_noise(text, ctx);
        parse_noise("vars x y\ndivisor coords x\nform w : " + text, ctx);
    }
}
