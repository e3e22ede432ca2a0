#pragma once

#include <string>
#include <utility>

#include "nilalg/error.hpp"
#include "nilalg/poly.hpp"
#include "nilalg/rational.hpp"

namespace nilalg {

/// Element of Q(i)(a): a rational function in the parameter `a`.
///
/// Canonical form: gcd(num, den) = 1, den monic, zero is 0/1. Two scalars are
/// equal iff their representations are identical.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long value) : num_(value), den_(1) {}                      // NOLINT(google-explicit-constructor)
    Scalar(GaussianRational value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Scalar(Poly num) : num_(std::move(num)), den_(1) {}                // NOLINT(google-explicit-constructor)
    Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("zero divisor");
        canonicalize();
    }

    static Scalar parameter() { return Scalar(Poly::parameter()); }
    static Scalar i() { return Scalar(GaussianRational::i()); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool mentions_parameter() const noexcept { return !is_constant(); }

    /// Value of a parameter-free scalar.
    GaussianRational constant_value() const {
        if (!is_constant()) throw DomainError("scalar depends on the parameter: " + to_string());
        return num_.coefficient(0);
    }

    /// Substitutes a := t.
    GaussianRational eval(const GaussianRational& t) const {
        const GaussianRational d = den_.eval(t);
        if (d.is_zero()) throw DomainError("pole at specialization point a = " + t.to_string());
        return num_.eval(t) / d;
    }

    Scalar inverse() const {
        if (is_zero()) throw DomainError("zero divisor");
        return Scalar(den_, num_);
    }

    Scalar& operator+=(const Scalar& o) {
        if (o.is_zero()) return *this;
        if (den_.is_one() && o.den_.is_one()) {
            num_ += o.num_;
            return *this;
        }
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ = den_ * o.den_;
        }
        canonicalize();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        if (o.is_zero()) return *this;
        if (den_.is_one() && o.den_.is_one()) {
            num_ -= o.num_;
            return *this;
        }
        if (den_ == o.den_) {
            num_ -= o.num_;
        } else {
            num_ = num_ * o.den_ - o.num_ * den_;
            den_ = den_ * o.den_;
        }
        canonicalize();
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        if (is_zero()) return *this;
        if (o.is_zero()) return *this = Scalar();
        if (o.is_constant()) {
            num_ *= o.num_.coefficient(0);
            return *this;
        }
        if (is_constant()) {
            GaussianRational c = num_.coefficient(0);
            *this = o;
            num_ *= c;
            return *this;
        }
        num_ *= o.num_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw DomainError("zero divisor");
        return *this *= o.inverse();
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(Scalar a) {
        a.num_ = -a.num_;
        return a;
    }
    friend bool operator==(const Scalar&, const Scalar&) = default;

    /// Integer power; negative exponents invert.
    Scalar pow(long exponent) const {
        if (exponent < 0) return inverse().pow(-exponent);
        Scalar result(1);
        Scalar base = *this;
        while (exponent > 0) {
            if (exponent & 1) result *= base;
            exponent >>= 1;
            if (exponent > 0) base *= base;
        }
        return result;
    }

    /// Parseable text, e.g. `a^2+a`, `(1-i)`, `(a)/(a+1)`.
    std::string to_string() const {
        std::string n = num_.to_string();
        if (den_.is_one()) return n;
        if (num_.term_count() > 1 || !num_.coefficient(num_.degree()).is_real()) n = "(" + n + ")";
        return n + "/(" + den_.to_string() + ")";
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        if (den_.is_constant()) {
            if (!den_.is_one()) {
                num_ *= den_.lead().inverse();
                den_ = Poly(1);
            }
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        if (!den_.is_monic()) {
            const GaussianRational inv = den_.lead().inverse();
            num_ *= inv;
            den_ *= inv;
        }
    }

    Poly num_;
    Poly den_;
};

}  // namespace nilalg
