#include "logsym/scalar.hpp"

#include "logsym/errors.hpp"

#include <sstream>

namespace logsym {

std::string rational_to_string(const Rational& q)
{
    return q.get_str();
}

Gaussian::Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

Gaussian Gaussian::inverse() const
{
    if (is_zero()) {
        throw ArithmeticError("division by zero");
    }
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

Gaussian& Gaussian::operator+=(const Gaussian& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o)
{
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string Gaussian::to_string() const
{
    if (is_real()) {
        return rational_to_string(re_);
    }
    std::string imag;
    Rational mag = abs(im_);
    imag = (mag == 1) ? "I" : rational_to_string(mag) + "*I";
    if (sgn(re_) == 0) {
        return sgn(im_) < 0 ? "-" + imag : imag;
    }
    return rational_to_string(re_) + (sgn(im_) < 0 ? " - " : " + ") + imag;
}

Scalar::Scalar(long v)
{
    if (v != 0) {
        terms_.emplace(0, Gaussian(v));
    }
}

Scalar::Scalar(Gaussian g)
{
    if (!g.is_zero()) {
        terms_.emplace(0, std::move(g));
    }
}

Scalar Scalar::power_of_t(int k, Gaussian coeff)
{
    Scalar s;
    if (!coeff.is_zero()) {
        s.terms_.emplace(k, std::move(coeff));
    }
    return s;
}

bool Scalar::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == Gaussian(1);
}

std::optional<int> Scalar::single_power() const
{
    if (terms_.size() != 1) {
        return std::nullopt;
    }
    return terms_.begin()->first;
}

std::optional<Gaussian> Scalar::as_gaussian() const
{
    if (terms_.empty()) {
        return Gaussian(0);
    }
    if (terms_.size() == 1 && terms_.begin()->first == 0) {
        return terms_.begin()->second;
    }
    return std::nullopt;
}

std::optional<Rational> Scalar::as_rational() const
{
    auto g = as_gaussian();
    if (!g || !g->is_real()) {
        return std::nullopt;
    }
    return g->re();
}

Gaussian Scalar::coefficient(int k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Gaussian(0) : it->second;
}

Scalar Scalar::inverse() const
{
    if (terms_.empty()) {
        throw ArithmeticError("division by zero");
    }
    if (terms_.size() != 1) {
        throw ArithmeticError("division by a scalar with several powers of T is not supported: " +
                              to_string());
    }
    const auto& [k, g] = *terms_.begin();
    return power_of_t(-k, g.inverse());
}

void Scalar::add_term(int k, const Gaussian& g)
{
    if (g.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, g);
    if (!inserted) {
        it->second += g;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Scalar Scalar::operator-() const
{
    Scalar r;
    for (const auto& [k, g] : terms_) {
        r.terms_.emplace(k, -g);
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    for (const auto& [k, g] : o.terms_) {
        add_term(k, g);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    for (const auto& [k, g] : o.terms_) {
        add_term(k, -g);
    }
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    Scalar r;
    for (const auto& [ka, ga] : a.terms_) {
        for (const auto& [kb, gb] : b.terms_) {
            r.add_term(ka + kb, ga * gb);
        }
    }
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    *this = *this * o;
    return *this;
}

Scalar Scalar::pow(int e) const
{
    Scalar base = e < 0 ? inverse() : *this;
    unsigned n = e < 0 ? static_cast<unsigned>(-static_cast<long>(e)) : static_cast<unsigned>(e);
    Scalar result(1);
    while (n) {
        if (n & 1U) {
            result *= base;
        }
        n >>= 1U;
        if (n) {
            base *= base;
        }
    }
    return result;
}

namespace {

std::string t_power(int k)
{
    if (k == 1) {
        return "T";
    }
    return "T^" + std::to_string(k);
}

std::string term_to_string(int k, const Gaussian& g)
{
    if (k == 0) {
        return g.to_string();
    }
    if (g == Gaussian(1)) {
        return t_power(k);
    }
    if (g == Gaussian(-1)) {
        return "-" + t_power(k);
    }
    if (g.is_product_safe()) {
        return g.to_string() + "*" + t_power(k);
    }
    return "(" + g.to_string() + ")*" + t_power(k);
}

} // namespace

std::string Scalar::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [k, g] : terms_) {
        std::string t = term_to_string(k, g);
        if (first) {
            out = t;
            first = false;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

bool Scalar::is_product_safe() const
{
    return terms_.size() <= 1 && (terms_.empty() || terms_.begin()->second.is_product_safe());
}

} // namespace logsym
