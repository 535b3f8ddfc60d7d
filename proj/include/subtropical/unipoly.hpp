#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "subtropical/numeric.hpp"

namespace subtropical {

/// Dense univariate polynomial, coefficients lowest degree first. The stored
/// coefficient vector never has a trailing zero, so the zero polynomial is the
/// empty vector.
template <typename Coeff> class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly constant(Coeff c) { return UniPoly(std::vector<Coeff>{std::move(c)}); }
    static UniPoly monomial(Coeff c, std::size_t degree) {
        std::vector<Coeff> v(degree + 1);
        v[degree] = std::move(c);
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Coeff> &coeffs() const { return coeffs_; }
    const Coeff &operator[](std::size_t i) const { return coeffs_[i]; }
    Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
    const Coeff &leading() const { return coeffs_.back(); }

    template <typename X> X eval(const X &x) const {
        X acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + X(*it);
        return acc;
    }

    UniPoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Coeff> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
        return UniPoly(std::move(d));
    }

    UniPoly operator-() const {
        std::vector<Coeff> v(coeffs_);
        for (auto &c : v) c = -c;
        return UniPoly(std::move(v));
    }

    friend UniPoly operator+(const UniPoly &a, const UniPoly &b) {
        std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(v));
    }
    friend UniPoly operator-(const UniPoly &a, const UniPoly &b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(v));
    }
    friend UniPoly operator*(const Coeff &s, const UniPoly &a) {
        if (s == 0) return {};
        std::vector<Coeff> v(a.coeffs_);
        for (auto &c : v) c *= s;
        return UniPoly(std::move(v));
    }

    friend bool operator==(const UniPoly &a, const UniPoly &b) { return a.coeffs_ == b.coeffs_; }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using UniPolyZ = UniPoly<Integer>;
using UniPolyQ = UniPoly<Rational>;

// Sign of p at a rational point, computed with integer arithmetic only.
int sign_at(const UniPolyZ &p, const Rational &x);

UniPolyQ to_rational(const UniPolyZ &p);

// gcd of the coefficients (0 for the zero polynomial), always nonnegative.
Integer content(const UniPolyZ &p);

// p / content(p), normalized to a positive leading coefficient.
UniPolyZ primitive_part(const UniPolyZ &p);

// Quotient and remainder over the rationals; divisor must be nonzero.
std::pair<UniPolyQ, UniPolyQ> divide(const UniPolyQ &dividend, const UniPolyQ &divisor);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
UniPolyZ gcd(const UniPolyZ &a, const UniPolyZ &b);

// Exact division a / b over the integers; throws std::domain_error if b does
// not divide a.
UniPolyZ exact_quotient(const UniPolyZ &a, const UniPolyZ &b);

struct ClearedPoly {
    UniPolyZ poly;
    Integer denominator;
};

// D = lcm of the coefficient denominators; returns D * g.
ClearedPoly clear_denominators(const UniPolyQ &g);

// p(x + 1).
UniPolyZ taylor_shift_one(const UniPolyZ &p);

// Number of sign changes in the coefficient sequence, zeros skipped.
std::size_t sign_variations(const UniPolyZ &p);

// "c0 + c1*y + ..." style rendering, highest degree first, for diagnostics.
std::string to_string(const UniPolyZ &p, const std::string &var = "y");

} // namespace subtropical
