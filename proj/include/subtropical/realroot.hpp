#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subtropical/numeric.hpp"
#include "subtropical/unipoly.hpp"

namespace subtropical {

/// A real root of an integer polynomial, given either exactly (a rational) or
/// by a defining polynomial with an open isolating interval (lower, upper):
/// defining(lower) * defining(upper) < 0 and the interval holds exactly one
/// root of defining.
class RealAlgebraicNumber {
  public:
    static RealAlgebraicNumber exact(Rational value);
    /// Throws std::invalid_argument unless lower < upper and the defining
    /// polynomial changes sign strictly across the interval.
    static RealAlgebraicNumber isolated(UniPolyZ defining, Rational lower, Rational upper);

    bool is_exact() const { return exact_; }
    /// For exact numbers the linear polynomial den*w - num.
    const UniPolyZ &defining() const { return defining_; }
    /// Both bounds equal the value for exact numbers.
    const Rational &lower() const { return lower_; }
    const Rational &upper() const { return upper_; }
    const Rational &value() const { return lower_; } // exact numbers only
    Rational width() const { return upper_ - lower_; }

  private:
    bool exact_ = true;
    UniPolyZ defining_;
    Rational lower_, upper_;
};

/// f / gcd(f, f'), primitive with positive leading coefficient.
UniPolyZ squarefree_part(const UniPolyZ &f);

/// Roots of f in ]0,1[ in increasing order, isolated by Descartes-rule
/// bisection on the squarefree part. Roots hit exactly by a bisection point
/// are returned in exact form.
std::vector<RealAlgebraicNumber> isolate_in_unit_interval(const UniPolyZ &f);

class EndpointIsRoot : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Number of distinct real roots of f in (a, b) by Sturm's theorem. Throws
/// EndpointIsRoot when f(a) = 0 or f(b) = 0.
std::size_t sturm_count(const UniPolyZ &f, const Rational &a, const Rational &b);

/// Bisects until the interval is no wider than width.
RealAlgebraicNumber refine(const RealAlgebraicNumber &x, const Rational &width);

/// a + b x.
RealAlgebraicNumber affine_image(const RealAlgebraicNumber &x, const Rational &a, const Rational &b);

/// Decimal string within 10^-digits of x.
std::string approximate(const RealAlgebraicNumber &x, unsigned digits);

struct ZeroCoordinate {
    RealAlgebraicNumber value;
    /// Present only when it lies inside value's interval (or equals an exact
    /// value's rounding).
    std::optional<std::string> decimal;
};

/// Renders x to `digits` places and keeps the finest interval on x's
/// bisection path that still contains the rendered decimal.
ZeroCoordinate make_zero_coordinate(const RealAlgebraicNumber &x, unsigned digits);

} // namespace subtropical
