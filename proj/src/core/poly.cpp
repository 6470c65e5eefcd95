#include "logsym/poly.hpp"

#include "logsym/errors.hpp"

#include <algorithm>
#include <numeric>

namespace logsym {

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const
{
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) {
        return da > db;
    }
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(ContextPtr ctx) : ctx_(std::move(ctx))
{
    if (!ctx_) {
        throw ContextError("polynomial without a context");
    }
}

Poly::Poly(ContextPtr ctx, const Scalar& c) : Poly(std::move(ctx))
{
    if (!c.is_zero()) {
        terms_.emplace(Exponents(ctx_->size(), 0), c);
    }
}

Poly Poly::variable(ContextPtr ctx, std::size_t i)
{
    Exponents e(ctx->size(), 0);
    e.at(i) = 1;
    return monomial(std::move(ctx), std::move(e));
}

Poly Poly::monomial(ContextPtr ctx, Exponents e, const Scalar& c)
{
    Poly p(std::move(ctx));
    if (e.size() != p.nvars()) {
        throw ContextError("exponent vector length does not match the context");
    }
    if (!c.is_zero()) {
        p.terms_.emplace(std::move(e), c);
    }
    return p;
}

std::optional<Scalar> Poly::as_scalar() const
{
    if (terms_.empty()) {
        return Scalar();
    }
    if (terms_.size() == 1) {
        const auto& [e, c] = *terms_.begin();
        if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) {
            return c;
        }
    }
    return std::nullopt;
}

const Exponents& Poly::leading_exponents() const
{
    if (terms_.empty()) {
        throw ArithmeticError("leading term of the zero polynomial");
    }
    return terms_.begin()->first;
}

const Scalar& Poly::leading_coefficient() const
{
    if (terms_.empty()) {
        throw ArithmeticError("leading term of the zero polynomial");
    }
    return terms_.begin()->second;
}

int Poly::total_degree() const
{
    if (terms_.empty()) {
        return 0;
    }
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int Poly::degree_in(std::size_t i) const
{
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        d = first ? e[i] : std::max(d, e[i]);
        first = false;
    }
    return d;
}

int Poly::min_degree_in(std::size_t i) const
{
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        d = first ? e[i] : std::min(d, e[i]);
        first = false;
    }
    return d;
}

bool Poly::is_polynomial() const
{
    for (const auto& [e, c] : terms_) {
        if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
            return false;
        }
    }
    return true;
}

bool Poly::in_arena() const
{
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 && !ctx_->is_unit_var(i)) {
                return false;
            }
        }
    }
    return true;
}

void Poly::require_arena(const std::string& what) const
{
    if (!in_arena()) {
        throw ArenaError(what + " is not in the coefficient ring: " + to_string());
    }
}

void Poly::add_term(const Exponents& e, const Scalar& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Poly Poly::operator-() const
{
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), e, -c);
    }
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    require_same_context(ctx_, o.ctx_);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    require_same_context(ctx_, o.ctx_);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    require_same_context(a.ctx_, b.ctx_);
    Poly r(a.ctx_);
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

bool operator==(const Poly& a, const Poly& b)
{
    require_same_context(a.ctx_, b.ctx_);
    return a.terms_ == b.terms_;
}

Poly Poly::shifted(const Exponents& delta) const
{
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) {
        Exponents s = e;
        for (std::size_t i = 0; i < s.size(); ++i) {
            s[i] += delta.at(i);
        }
        r.terms_.emplace(std::move(s), c);
    }
    return r;
}

std::optional<Poly> Poly::unit_inverse() const
{
    if (terms_.size() != 1) {
        return std::nullopt;
    }
    const auto& [e, c] = *terms_.begin();
    if (!c.single_power()) {
        return std::nullopt;
    }
    Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0 && !ctx_->is_unit_var(i)) {
            return std::nullopt;
        }
        inv[i] = -e[i];
    }
    return monomial(ctx_, std::move(inv), c.inverse());
}

Poly Poly::pow(int e) const
{
    Poly base = *this;
    if (e < 0) {
        auto inv = unit_inverse();
        if (!inv) {
            if (is_single_term() && leading_coefficient().single_power()) {
                throw ArenaError("negative power of " + to_string() + " outside the torus arena");
            }
            throw ArithmeticError("negative power of a non-unit: " + to_string());
        }
        base = *inv;
        e = -e;
    }
    Poly result(ctx_, Scalar(1));
    while (e) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e) {
            base *= base;
        }
    }
    return result;
}

Poly Poly::partial(std::size_t i) const
{
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) {
            continue;
        }
        Exponents d = e;
        d[i] -= 1;
        r.add_term(d, c * Scalar(static_cast<long>(e[i])));
    }
    return r;
}

Poly Poly::euler(std::size_t i) const
{
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) {
        if (e[i] != 0) {
            r.terms_.emplace(e, c * Scalar(static_cast<long>(e[i])));
        }
    }
    return r;
}

Poly Poly::coefficient_in(std::size_t i, int k) const
{
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == k) {
            Exponents d = e;
            d[i] = 0;
            r.terms_.emplace(std::move(d), c);
        }
    }
    return r;
}

std::string monomial_to_string(const VarContext& ctx, const Exponents& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += ctx.name(i);
        if (e[i] != 1) {
            out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

namespace {

std::string term_to_string(const VarContext& ctx, const Exponents& e, const Scalar& c)
{
    std::string mono = monomial_to_string(ctx, e);
    if (mono.empty()) {
        return c.to_string();
    }
    if (c.is_one()) {
        return mono;
    }
    if (c == Scalar(-1)) {
        return "-" + mono;
    }
    if (c.is_product_safe()) {
        return c.to_string() + "*" + mono;
    }
    return "(" + c.to_string() + ")*" + mono;
}

} // namespace

std::string Poly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string t = term_to_string(*ctx_, e, c);
        if (first) {
            out = t;
            first = false;
        } else if (t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

bool Poly::is_product_safe() const
{
    if (terms_.size() > 1) {
        return false;
    }
    if (terms_.empty()) {
        return true;
    }
    const auto& [e, c] = *terms_.begin();
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) {
        return c.is_product_safe();
    }
    return true;
}

} // namespace logsym
