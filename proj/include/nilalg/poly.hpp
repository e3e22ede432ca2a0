#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilalg/error.hpp"
#include "nilalg/rational.hpp"

namespace nilalg {

/// Univariate polynomial in the parameter `a` with Gaussian-rational coefficients.
///
/// coefficient(d) multiplies a^d. The leading coefficient is nonzero; the zero
/// polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(long value) : Poly(GaussianRational(value)) {}  // NOLINT(google-explicit-constructor)
    Poly(GaussianRational constant) {                    // NOLINT(google-explicit-constructor)
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly parameter() { return Poly(std::vector<GaussianRational>{0, 1}); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }

    std::span<const GaussianRational> coefficients() const noexcept { return coeffs_; }
    GaussianRational coefficient(int d) const {
        return (d >= 0 && d <= degree()) ? coeffs_[static_cast<std::size_t>(d)] : GaussianRational();
    }
    const GaussianRational& lead() const {
        if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const GaussianRational& s) {
        if (s.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Poly operator*(Poly a, const GaussianRational& s) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.coeffs_.size() == 1) return a * b.coeffs_[0];
        if (a.coeffs_.size() == 1) return b * a.coeffs_[0];
        std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DomainError("zero divisor");
        Poly rem = a;
        if (a.degree() < b.degree()) return {Poly(), std::move(rem)};
        std::vector<GaussianRational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
        const GaussianRational inv_lead = b.lead().inverse();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
            const GaussianRational factor = rem.lead() * inv_lead;
            quot[shift] = factor;
            for (std::size_t k = 0; k < b.coeffs_.size(); ++k) rem.coeffs_[k + shift] -= factor * b.coeffs_[k];
            rem.trim();
        }
        return {Poly(std::move(quot)), std::move(rem)};
    }

    Poly monic() const {
        if (is_zero() || is_monic()) return *this;
        return *this * lead().inverse();
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    friend Poly gcd(Poly a, Poly b) {
        a = a.monic();
        b = b.monic();
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second.monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    GaussianRational eval(const GaussianRational& t) const {
        GaussianRational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= t;
            acc += *it;
        }
        return acc;
    }

    /// Formal derivative with respect to the parameter.
    Poly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<GaussianRational> out(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
        return Poly(std::move(out));
    }

    /// Number of nonzero terms.
    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& c : coeffs_) n += c.is_zero() ? 0 : 1;
        return n;
    }

    /// Renders as e.g. `a^2+(1-i)*a-1/2`; parseable by the scalar grammar.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int d = degree(); d >= 0; --d) {
            const GaussianRational& c = coeffs_[static_cast<std::size_t>(d)];
            if (c.is_zero()) continue;
            std::string mono = d == 0 ? "" : (d == 1 ? "a" : "a^" + std::to_string(d));
            bool negative = false;
            std::string mag;
            if (c.is_real()) {
                negative = c.re().sign() < 0;
                const Rational m = c.re().abs();
                if (!(m.is_one() && d > 0)) mag = m.to_string();
            } else if (c.re().is_zero()) {
                negative = c.im().sign() < 0;
                const Rational m = c.im().abs();
                mag = m.is_one() ? "i" : m.to_string() + "*i";
            } else {
                mag = c.to_string();
            }
            std::string term = mag;
            if (!mono.empty()) term = mag.empty() ? mono : mag + "*" + mono;
            if (out.empty()) {
                out = negative ? "-" + term : term;
            } else {
                out += (negative ? "-" : "+") + term;
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<GaussianRational> coeffs_;
};

/// Distinct roots of p in Q(i).
///
/// With D the lcm of the coefficient denominators of monic(p), every root in
/// Q(i) is a Gaussian integer divided by D. Candidates come from rounding
/// numerical roots of the square-free part and are kept only if they vanish
/// exactly, so a returned root is always a root.
inline std::vector<GaussianRational> gaussian_roots(const Poly& p) {
    using C = std::complex<long double>;
    std::vector<GaussianRational> roots;
    if (p.degree() < 1) return roots;
    const Poly m = p.monic();
    const Poly sqfree = divmod(m, gcd(m, m.derivative())).first.monic();
    const int deg = sqfree.degree();
    if (deg == 1) return {-sqfree.coefficient(0)};

    mpz_class scale = 1;
    for (const auto& c : m.coefficients()) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.re().denominator().get_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.im().denominator().get_mpz_t());
    }
    std::vector<C> coeff;
    for (const auto& c : sqfree.coefficients()) coeff.emplace_back(c.re().raw().get_d(), c.im().raw().get_d());
    auto eval = [&](C z) {
        C acc = 0;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * z + *it;
        return acc;
    };

    // Durand-Kerner iteration on the monic square-free part.
    std::vector<C> z(static_cast<std::size_t>(deg));
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = std::pow(C(0.4L, 0.9L), static_cast<long double>(k));
    for (int iter = 0; iter < 1000; ++iter) {
        long double change = 0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            C denom = 1;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) denom *= z[k] - z[j];
            if (std::abs(denom) == 0) denom = C(1e-30L, 0);
            const C step = eval(z[k]) / denom;
            z[k] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-24L) break;
    }

    const long double d = scale.get_d();
    for (const auto& approx : z) {
        const long double re = std::round(approx.real() * d);
        const long double im = std::round(approx.imag() * d);
        if (!std::isfinite(re) || !std::isfinite(im) || std::fabs(re) > 9e18L || std::fabs(im) > 9e18L) continue;
        const GaussianRational cand{Rational(mpz_class(static_cast<long>(re)), scale),
                                    Rational(mpz_class(static_cast<long>(im)), scale)};
        if (sqfree.eval(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
    }
    return roots;
}

}  // namespace nilalg
