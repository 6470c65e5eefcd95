#include "logsym/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace logsym {

namespace {

std::string join_expected(const std::vector<std::string>& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i > 0) {
            out += i + 1 == e.size() ? " or " : ", ";
        }
        out += e[i];
    }
    return out;
}

std::string error_message(int line, int column, const std::vector<std::string>& expected, const std::string& found,
                          const std::string& detail)
{
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": ";
    if (!detail.empty()) {
        os << detail;
        if (!found.empty()) {
            os << " (at " << found << ")";
        }
    } else {
        os << "expected " << join_expected(expected) << ", found " << found;
    }
    return os.str();
}

enum class Tok { number, ident, at, plus, minus, star, slash, caret, lparen, rparen, colon, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::string describe(const Token& t)
{
    if (t.kind == Tok::end) {
        return "end of input";
    }
    return "'" + t.text + "'";
}

bool is_ident_start(unsigned char c)
{
    return std::isalpha(c) || c == '_';
}

bool is_ident_char(unsigned char c)
{
    return std::isalnum(c) || c == '_';
}

std::vector<Token> tokenize(std::string_view s, int line, int col0 = 1)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        auto c = static_cast<unsigned char>(s[i]);
        int col = col0 + static_cast<int>(i);
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                ++j;
            }
            out.push_back({Tok::number, std::string(s.substr(i, j - i)), line, col});
            i = j;
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < s.size() && is_ident_char(static_cast<unsigned char>(s[j]))) {
                ++j;
            }
            out.push_back({Tok::ident, std::string(s.substr(i, j - i)), line, col});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
        case '@': k = Tok::at; break;
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        case '*': k = Tok::star; break;
        case '/': k = Tok::slash; break;
        case '^': k = Tok::caret; break;
        case '(': k = Tok::lparen; break;
        case ')': k = Tok::rparen; break;
        case ':': k = Tok::colon; break;
        default: {
            std::string found;
            if (c >= 0x20 && c < 0x7f) {
                found = std::string("'") + static_cast<char>(c) + "'";
            } else {
                std::ostringstream os;
                os << "byte 0x" << std::hex << static_cast<int>(c);
                found = os.str();
            }
            throw ParseError(line, col, {"an expression token"}, found);
        }
        }
        out.push_back({k, std::string(1, static_cast<char>(c)), line, col});
        ++i;
    }
    out.push_back({Tok::end, "", line, col0 + static_cast<int>(s.size())});
    return out;
}

const std::set<std::string>& reserved_words()
{
    static const std::set<std::string> words{"I", "T", "d", "dlog"};
    return words;
}

std::string value_kind(const Value& v)
{
    if (std::holds_alternative<Poly>(v)) {
        return "function";
    }
    if (std::holds_alternative<LogVectorField>(v)) {
        return "vector field";
    }
    return std::to_string(std::get<LogForm>(v).degree()) + "-form";
}

constexpr int max_depth = 200;
constexpr long max_exponent = 1000;

class ExprParser {
public:
    ExprParser(const std::vector<Token>& toks, std::size_t pos, ContextPtr ctx,
               const std::map<std::string, Value>& names)
        : toks_(toks), pos_(pos), ctx_(std::move(ctx)), names_(names)
    {
    }

    Value parse_all()
    {
        Value v = expr();
        if (peek().kind != Tok::end) {
            fail({"an operator", "end of input"});
        }
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::vector<std::string>& expected) const
    {
        const Token& t = peek();
        throw ParseError(t.line, t.column, expected, describe(t));
    }

    [[noreturn]] static void kind_fail(const Token& at, const std::string& detail)
    {
        throw ParseError(at.line, at.column, {}, describe(at), detail);
    }

    void expect(Tok k, const std::string& what)
    {
        if (peek().kind != k) {
            fail({what});
        }
        ++pos_;
    }

    struct DepthGuard {
        explicit DepthGuard(ExprParser& p) : p_(p)
        {
            if (++p_.depth_ > max_depth) {
                p_.fail({"a less deeply nested expression"});
            }
        }
        ~DepthGuard() { --p_.depth_; }
        ExprParser& p_;
    };

    // Runs a library operation, turning its errors into positioned parse errors.
    template <class F>
    Value guarded(const Token& at, F&& f)
    {
        try {
            return f();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            kind_fail(at, e.what());
        }
    }

    Value expr()
    {
        DepthGuard g(*this);
        Value v = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            Token op = next();
            Value r = term();
            v = add(v, r, op, op.kind == Tok::minus);
        }
        return v;
    }

    Value term()
    {
        Value v = unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            Token op = next();
            Value r = unary();
            v = op.kind == Tok::star ? mul(v, r, op) : div(v, r, op);
        }
        return v;
    }

    Value unary()
    {
        DepthGuard g(*this);
        if (peek().kind == Tok::minus) {
            next();
            Value v = unary();
            return negate(v);
        }
        return power();
    }

    Value power()
    {
        Value v = postfix();
        while (peek().kind == Tok::caret) {
            Token op = next();
            bool neg = false;
            if (peek().kind == Tok::minus) {
                next();
                neg = true;
            }
            Value r = postfix();
            if (neg) {
                r = negate(r);
            }
            v = caret(v, r, op);
        }
        return v;
    }

    Value postfix()
    {
        Token start = peek();
        Value v = atom();
        if (peek().kind == Tok::lparen && std::holds_alternative<LogVectorField>(v)) {
            Token open = next();
            Value arg = expr();
            expect(Tok::rparen, "')'");
            if (!std::holds_alternative<Poly>(arg)) {
                kind_fail(open, "a vector field applies to a function, not a " + value_kind(arg));
            }
            const auto& field = std::get<LogVectorField>(v);
            const auto& f = std::get<Poly>(arg);
            return guarded(start, [&]() -> Value { return field.apply(f); });
        }
        return v;
    }

    Value atom()
    {
        DepthGuard g(*this);
        const Token& t = peek();
        switch (t.kind) {
        case Tok::number: {
            next();
            mpz_class z;
            if (z.set_str(t.text, 10) != 0) {
                fail({"a number"});
            }
            return Poly(ctx_, Scalar(Rational(z)));
        }
        case Tok::lparen: {
            next();
            Value v = expr();
            expect(Tok::rparen, "')'");
            return v;
        }
        case Tok::at: {
            next();
            const Token& name = peek();
            if (name.kind != Tok::ident) {
                fail({"a variable name after '@'"});
            }
            auto idx = ctx_->index_of(name.text);
            if (!idx) {
                kind_fail(name, "unknown variable " + name.text);
            }
            next();
            return LogVectorField::partial(ctx_, *idx);
        }
        case Tok::ident:
            return ident_atom();
        default:
            fail({"a number", "a name", "'('", "'@'", "'-'"});
        }
    }

    Value ident_atom()
    {
        Token t = next();
        if (t.text == "I") {
            return Poly(ctx_, Scalar::imaginary_unit());
        }
        if (t.text == "T") {
            return Poly(ctx_, Scalar::power_of_t(1));
        }
        if (t.text == "d" && peek().kind == Tok::lparen) {
            next();
            Token inner = peek();
            Value v = expr();
            expect(Tok::rparen, "')'");
            if (std::holds_alternative<LogVectorField>(v)) {
                kind_fail(inner, "cannot differentiate a vector field");
            }
            return guarded(t, [&]() -> Value {
                if (std::holds_alternative<Poly>(v)) {
                    return d_log(std::get<Poly>(v));
                }
                return d_log(std::get<LogForm>(v));
            });
        }
        if (t.text == "dlog" && peek().kind == Tok::lparen) {
            next();
            const Token& name = peek();
            if (name.kind != Tok::ident) {
                fail({"a variable name"});
            }
            auto idx = ctx_->index_of(name.text);
            if (!idx) {
                kind_fail(name, "unknown variable " + name.text);
            }
            if (!ctx_->is_divisor_coord(*idx)) {
                kind_fail(name, "dlog(" + name.text + ") needs a divisor coordinate");
            }
            next();
            expect(Tok::rparen, "')'");
            return LogForm::coframe(ctx_, *idx);
        }
        if (reserved_words().count(t.text)) {
            throw ParseError(t.line, t.column, {"'('"}, describe(peek()));
        }
        if (auto idx = ctx_->index_of(t.text)) {
            return Poly::variable(ctx_, *idx);
        }
        auto it = names_.find(t.text);
        if (it == names_.end()) {
            kind_fail(t, "unknown name " + t.text);
        }
        return it->second;
    }

    Value negate(const Value& v)
    {
        return std::visit([](const auto& x) -> Value { return -x; }, v);
    }

    Value add(const Value& a, const Value& b, const Token& op, bool subtract)
    {
        if (a.index() != b.index()) {
            kind_fail(op, "cannot add a " + value_kind(a) + " and a " + value_kind(b));
        }
        return guarded(op, [&]() -> Value {
            return std::visit(
                [&](const auto& x) -> Value {
                    using X = std::decay_t<decltype(x)>;
                    const auto& y = std::get<X>(b);
                    return subtract ? x - y : x + y;
                },
                a);
        });
    }

    Value mul(const Value& a, const Value& b, const Token& op)
    {
        const Poly* fa = std::get_if<Poly>(&a);
        const Poly* fb = std::get_if<Poly>(&b);
        if (!fa && !fb) {
            std::string hint = std::holds_alternative<LogForm>(a) && std::holds_alternative<LogForm>(b)
                                   ? "; use '^' for the wedge product"
                                   : "";
            kind_fail(op, "cannot multiply a " + value_kind(a) + " by a " + value_kind(b) + hint);
        }
        return guarded(op, [&]() -> Value {
            if (fa && fb) {
                return *fa * *fb;
            }
            const Poly& f = fa ? *fa : *fb;
            const Value& other = fa ? b : a;
            if (const auto* v = std::get_if<LogVectorField>(&other)) {
                return f * *v;
            }
            return f * std::get<LogForm>(other);
        });
    }

    Value div(const Value& a, const Value& b, const Token& op)
    {
        const Poly* fb = std::get_if<Poly>(&b);
        if (!fb) {
            kind_fail(op, "cannot divide by a " + value_kind(b));
        }
        if (fb->is_zero()) {
            kind_fail(op, "division by zero");
        }
        auto inv = fb->unit_inverse();
        if (!inv) {
            kind_fail(op, "division by " + fb->to_string() + ", which is not a unit of the arena");
        }
        return mul(a, Value(*inv), op);
    }

    Value caret(const Value& a, const Value& b, const Token& op)
    {
        if (std::holds_alternative<LogForm>(a) && std::holds_alternative<LogForm>(b)) {
            return guarded(op, [&]() -> Value { return wedge(std::get<LogForm>(a), std::get<LogForm>(b)); });
        }
        const Poly* base = std::get_if<Poly>(&a);
        const Poly* ex = std::get_if<Poly>(&b);
        if (!base || !ex) {
            kind_fail(op, "'^' needs two forms (wedge) or a function and an integer (power), got a " +
                              value_kind(a) + " and a " + value_kind(b));
        }
        auto s = ex->as_scalar();
        std::optional<Rational> q = s ? s->as_rational() : std::nullopt;
        if (!q || q->get_den() != 1) {
            kind_fail(op, "exponent must be an integer");
        }
        mpz_class e = q->get_num();
        if (abs(e) > max_exponent) {
            kind_fail(op, "exponent out of range");
        }
        int k = static_cast<int>(e.get_si());
        return guarded(op, [&]() -> Value { return base->pow(k); });
    }

    const std::vector<Token>& toks_;
    std::size_t pos_;
    ContextPtr ctx_;
    const std::map<std::string, Value>& names_;
    int depth_ = 0;
};

template <class T>
T expect_kind(Value v, const char* what, int line)
{
    if (auto* p = std::get_if<T>(&v)) {
        return std::move(*p);
    }
    throw ParseError(line, 1, {what}, "a " + value_kind(v));
}

std::string strip_comment(std::string_view line)
{
    auto hash = line.find('#');
    return std::string(line.substr(0, hash));
}

} // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected, std::string found,
                       const std::string& detail)
    : Error(error_message(line, column, expected, found, detail)), line_(line), column_(column),
      expected_(std::move(expected)), found_(std::move(found))
{
}

const char* kind_name(ObjectKind k)
{
    switch (k) {
    case ObjectKind::func: return "func";
    case ObjectKind::vfield: return "vfield";
    case ObjectKind::form: return "form";
    case ObjectKind::conn: return "conn";
    }
    return "?";
}

const NamedObject* Session::find(const std::string& name) const
{
    for (const auto& o : objects) {
        if (o.name == name) {
            return &o;
        }
    }
    return nullptr;
}

std::map<std::string, Value> Session::names() const
{
    std::map<std::string, Value> out;
    for (const auto& o : objects) {
        out.emplace(o.name, o.value);
    }
    return out;
}

Value parse_expression(std::string_view text, const ContextPtr& ctx, const std::map<std::string, Value>& names,
                       int line)
{
    auto toks = tokenize(text, line);
    ExprParser p(toks, 0, ctx, names);
    return p.parse_all();
}

Poly parse_function(std::string_view text, const ContextPtr& ctx, const std::map<std::string, Value>& names)
{
    return expect_kind<Poly>(parse_expression(text, ctx, names), "a function", 1);
}

LogVectorField parse_field(std::string_view text, const ContextPtr& ctx, const std::map<std::string, Value>& names)
{
    return expect_kind<LogVectorField>(parse_expression(text, ctx, names), "a vector field", 1);
}

LogForm parse_form(std::string_view text, const ContextPtr& ctx, const std::map<std::string, Value>& names)
{
    return expect_kind<LogForm>(parse_expression(text, ctx, names), "a form", 1);
}

Session parse_session(std::string_view text)
{
    Session s;
    std::optional<std::vector<std::string>> vars;
    std::optional<Arena> arena;
    std::optional<Token> divisor_line;
    std::map<std::string, Value> names;

    auto finalize = [&](std::vector<std::string> div, Arena default_arena) {
        s.ctx = make_context(*vars, div, arena.value_or(default_arena));
    };
    auto need_context = [&](const Token& at) {
        if (!vars) {
            throw ParseError(at.line, at.column, {"'vars'"}, describe(at), "variables must be declared first");
        }
        if (!s.ctx) {
            finalize({}, Arena::polynomial);
            s.divisor = Divisor::coordinate(s.ctx);
        }
    };

    int lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++lineno;
        std::string line = strip_comment(text.substr(start, end - start));
        start = end + 1;

        auto toks = tokenize(line, lineno);
        if (toks.front().kind == Tok::end) {
            continue;
        }
        const Token& head = toks.front();
        if (head.kind != Tok::ident) {
            throw ParseError(head.line, head.column, {"a directive"}, describe(head));
        }
        const std::string& dir = head.text;
        if (dir == "vars") {
            if (vars) {
                throw ParseError(head.line, head.column, {"a single 'vars' line"}, describe(head),
                                 "variables declared twice");
            }
            std::vector<std::string> names_v;
            std::size_t i = 1;
            for (; toks[i].kind == Tok::ident; ++i) {
                if (reserved_words().count(toks[i].text)) {
                    throw ParseError(toks[i].line, toks[i].column, {"a variable name"}, describe(toks[i]),
                                     "reserved word used as a variable");
                }
                if (std::find(names_v.begin(), names_v.end(), toks[i].text) != names_v.end()) {
                    throw ParseError(toks[i].line, toks[i].column, {"a new variable name"}, describe(toks[i]),
                                     "variable declared twice");
                }
                names_v.push_back(toks[i].text);
            }
            if (toks[i].kind != Tok::end) {
                throw ParseError(toks[i].line, toks[i].column, {"a variable name", "end of line"}, describe(toks[i]));
            }
            if (names_v.empty()) {
                throw ParseError(toks[i].line, toks[i].column, {"a variable name"}, describe(toks[i]));
            }
            try {
                make_context(names_v);
            } catch (const Error& e) {
                throw ParseError(head.line, head.column, {}, describe(head), e.what());
            }
            vars = std::move(names_v);
        } else if (dir == "arena") {
            if (!vars) {
                throw ParseError(head.line, head.column, {"'vars'"}, describe(head), "variables must be declared first");
            }
            if (s.ctx) {
                throw ParseError(head.line, head.column, {"'arena' before 'divisor' and definitions"}, describe(head),
                                 "arena declared too late");
            }
            if (arena) {
                throw ParseError(head.line, head.column, {"a single 'arena' line"}, describe(head), "arena declared twice");
            }
            const Token& a = toks[1];
            if (a.kind != Tok::ident || (a.text != "torus" && a.text != "polynomial")) {
                throw ParseError(a.line, a.column, {"'torus'", "'polynomial'"}, describe(a));
            }
            if (toks[2].kind != Tok::end) {
                throw ParseError(toks[2].line, toks[2].column, {"end of line"}, describe(toks[2]));
            }
            arena = a.text == "torus" ? Arena::torus : Arena::polynomial;
        } else if (dir == "divisor") {
            if (!vars) {
                throw ParseError(head.line, head.column, {"'vars'"}, describe(head), "variables must be declared first");
            }
            if (divisor_line) {
                throw ParseError(head.line, head.column, {"a single 'divisor' line"}, describe(head),
                                 "divisor declared twice");
            }
            if (s.ctx) {
                throw ParseError(head.line, head.column, {"'divisor' before definitions"}, describe(head),
                                 "divisor declared after definitions");
            }
            divisor_line = head;
            const Token& how = toks[1];
            if (how.kind == Tok::ident && how.text == "coords") {
                std::vector<std::string> div;
                std::size_t i = 2;
                for (; toks[i].kind == Tok::ident; ++i) {
                    if (std::find(vars->begin(), vars->end(), toks[i].text) == vars->end()) {
                        throw ParseError(toks[i].line, toks[i].column, {"a declared variable"}, describe(toks[i]),
                                         "unknown variable " + toks[i].text);
                    }
                    if (std::find(div.begin(), div.end(), toks[i].text) != div.end()) {
                        throw ParseError(toks[i].line, toks[i].column, {"a new coordinate"}, describe(toks[i]),
                                         "coordinate listed twice");
                    }
                    div.push_back(toks[i].text);
                }
                if (toks[i].kind != Tok::end) {
                    throw ParseError(toks[i].line, toks[i].column, {"a variable name", "end of line"},
                                     describe(toks[i]));
                }
                finalize(div, Arena::torus);
                s.divisor = Divisor::coordinate(s.ctx);
            } else if (how.kind == Tok::ident && how.text == "poly") {
                finalize({}, Arena::polynomial);
                ExprParser p(toks, 2, s.ctx, names);
                Value v = p.parse_all();
                const auto* h = std::get_if<Poly>(&v);
                if (!h) {
                    throw ParseError(toks[2].line, toks[2].column, {"a function"}, "a " + value_kind(v));
                }
                if (h->is_zero()) {
                    throw ParseError(toks[2].line, toks[2].column, {"a nonzero equation"}, "0");
                }
                try {
                    s.divisor = Divisor::general(*h);
                } catch (const Error& e) {
                    throw ParseError(toks[2].line, toks[2].column, {}, describe(toks[2]), e.what());
                }
            } else {
                throw ParseError(how.line, how.column, {"'coords'", "'poly'"}, describe(how));
            }
        } else if (dir == "func" || dir == "vfield" || dir == "form" || dir == "conn") {
            need_context(head);
            const Token& name = toks[1];
            if (name.kind != Tok::ident) {
                throw ParseError(name.line, name.column, {"a name"}, describe(name));
            }
            if (reserved_words().count(name.text) || s.ctx->index_of(name.text) || names.count(name.text)) {
                throw ParseError(name.line, name.column, {"a fresh name"}, describe(name),
                                 "name " + name.text + " is already taken");
            }
            if (toks[2].kind != Tok::colon) {
                throw ParseError(toks[2].line, toks[2].column, {"':'"}, describe(toks[2]));
            }
            ExprParser p(toks, 3, s.ctx, names);
            Value v = p.parse_all();
            ObjectKind kind = dir == "func"     ? ObjectKind::func
                              : dir == "vfield" ? ObjectKind::vfield
                              : dir == "form"   ? ObjectKind::form
                                                : ObjectKind::conn;
            bool ok = false;
            switch (kind) {
            case ObjectKind::func: ok = std::holds_alternative<Poly>(v); break;
            case ObjectKind::vfield: ok = std::holds_alternative<LogVectorField>(v); break;
            case ObjectKind::form: ok = std::holds_alternative<LogForm>(v); break;
            case ObjectKind::conn:
                ok = std::holds_alternative<LogForm>(v) && std::get<LogForm>(v).degree() == 1;
                break;
            }
            if (!ok) {
                std::string want = kind == ObjectKind::func     ? "a function"
                                   : kind == ObjectKind::vfield ? "a vector field"
                                   : kind == ObjectKind::form   ? "a form"
                                                                : "a 1-form";
                throw ParseError(toks[3].line, toks[3].column, {want}, "a " + value_kind(v));
            }
            names.emplace(name.text, v);
            s.objects.push_back({name.text, kind, std::move(v), lineno});
        } else {
            throw ParseError(head.line, head.column,
                             {"'vars'", "'arena'", "'divisor'", "'func'", "'vfield'", "'form'", "'conn'"},
                             describe(head));
        }
    }
    if (!vars) {
        throw ParseError(lineno, 1, {"'vars'"}, "end of input");
    }
    if (!s.ctx) {
        finalize({}, Arena::polynomial);
        s.divisor = Divisor::coordinate(s.ctx);
    }
    return s;
}

std::string print_canonical(const Value& v)
{
    return std::visit([](const auto& x) { return x.to_string(); }, v);
}

std::string print_canonical(const Scalar& s)
{
    return s.to_string();
}

std::string print_session(const Session& s)
{
    const auto& ctx = *s.ctx;
    std::string out = "vars";
    for (const auto& n : ctx.names()) {
        out += " " + n;
    }
    out += "\n";
    out += std::string("arena ") + (ctx.arena() == Arena::torus ? "torus" : "polynomial") + "\n";
    if (s.divisor->kind() == DivisorKind::general) {
        out += "divisor poly " + s.divisor->equation().to_string() + "\n";
    } else {
        out += "divisor coords";
        for (std::size_t i : ctx.divisor_coords()) {
            out += " " + ctx.name(i);
        }
        out += "\n";
    }
    for (const auto& o : s.objects) {
        out += std::string(kind_name(o.kind)) + " " + o.name + " : " + print_canonical(o.value) + "\n";
    }
    return out;
}

} // namespace logsym
