#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace logsym {

using Rational = mpq_class;

std::string rational_to_string(const Rational& q);

/// Element a + b*i of Q(i).
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long v) : re_(v) {}
    Gaussian(Rational re, Rational im = 0);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Gaussian conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Gaussian inverse() const;

    Gaussian operator-() const { return {-re_, -im_}; }
    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * b.inverse(); }
    friend bool operator==(const Gaussian& a, const Gaussian& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// "3/2", "-I", "1/2 + 3*I".  Safe as a standalone summand.
    std::string to_string() const;
    /// True when to_string() can be used as a factor of a product without parentheses.
    bool is_product_safe() const { return sgn(re_) == 0 || sgn(im_) == 0; }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Exact element of Q(i)[T, 1/T] where T stands for the transcendental 2*pi*i.
///
/// Stored as a finitely supported table from the power k of T to a nonzero
/// Gaussian rational.  The empty table is zero; tables are canonical, so
/// equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v);
    Scalar(Gaussian g);
    Scalar(const Rational& q) : Scalar(Gaussian(q)) {}

    /// coeff * T^k
    static Scalar power_of_t(int k, Gaussian coeff = 1);
    static Scalar imaginary_unit() { return Scalar(Gaussian(0, 1)); }

    const std::map<int, Gaussian>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Set when the scalar is c*T^k for a single k (these are exactly the units).
    std::optional<int> single_power() const;
    /// Value at T^0 when no other power is present.
    std::optional<Gaussian> as_gaussian() const;
    /// Rational value when the scalar is a plain rational number.
    std::optional<Rational> as_rational() const;
    Gaussian coefficient(int k) const;

    /// Throws ArithmeticError unless the scalar is a nonzero single power.
    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

    Scalar pow(int e) const;

    std::string to_string() const;
    bool is_product_safe() const;

private:
    void add_term(int k, const Gaussian& g);

    std::map<int, Gaussian> terms_;
};

} // namespace logsym
