#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

#include "nilalg/error.hpp"

namespace nilalg {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& numerator, const mpz_class& denominator) {
        if (denominator == 0) throw DomainError("zero divisor");
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return value_ == 1; }
    int sign() const noexcept { return sgn(value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("zero divisor");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    std::string to_string() const { return value_.get_str(); }

private:
    mpq_class value_{0};
};

/// Exact square root of a non-negative rational, if it is the square of a rational.
inline bool rational_sqrt(const Rational& x, Rational& root) {
    if (x.sign() < 0) return false;
    const mpz_class num = x.numerator();
    const mpz_class den = x.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    root = Rational(sqrt(num), sqrt(den));
    return true;
}

/// Element of the Gaussian rationals Q(i): re + im*i.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw DomainError("zero divisor");
        const Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) {
        if (o.im_.is_zero()) {
            re_ *= o.re_;
            im_ *= o.re_;
            return *this;
        }
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.im_.is_zero()) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    /// Text accepted back by the scalar parser: `3`, `-1/2`, `2*i`, `-i`, `(1-i)`.
    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        std::string imag;
        if (im_ == Rational(1)) imag = "i";
        else if (im_ == Rational(-1)) imag = "-i";
        else imag = im_.to_string() + "*i";
        if (re_.is_zero()) return imag;
        std::string out = "(" + re_.to_string();
        if (im_.sign() > 0) out += "+";
        return out + imag + ")";
    }

private:
    Rational re_;
    Rational im_;
};

/// Square root in Q(i), when one exists. Returns false otherwise.
inline bool gaussian_sqrt(const GaussianRational& z, GaussianRational& root) {
    if (z.is_zero()) {
        root = GaussianRational();
        return true;
    }
    // (x + yi)^2 = p + qi  =>  x^2 = (p + |z|)/2, y^2 = (|z| - p)/2
    Rational modulus;
    if (!rational_sqrt(z.norm(), modulus)) return false;
    Rational x;
    Rational y;
    if (!rational_sqrt((z.re() + modulus) / Rational(2), x)) return false;
    if (!rational_sqrt((modulus - z.re()) / Rational(2), y)) return false;
    if (z.im().sign() < 0) y = -y;
    root = GaussianRational(x, y);
    return true;
}

}  // namespace nilalg
