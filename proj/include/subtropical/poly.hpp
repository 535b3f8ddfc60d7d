#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "subtropical/numeric.hpp"
#include "subtropical/unipoly.hpp"

namespace subtropical {

using Exponent = std::uint32_t;
using ExponentVector = std::vector<Exponent>;

struct Term {
    ExponentVector exponents;
    Integer coeff;

    friend bool operator==(const Term &, const Term &) = default;
};

/// Candidate order on exponent vectors: descending total degree, ties broken
/// by descending lexicographic order. Returns true if a comes strictly first.
bool canonical_before(const ExponentVector &a, const ExponentVector &b);

std::uint64_t total_degree(const ExponentVector &p);

/// Sparse multivariate polynomial with integer coefficients. Terms are kept in
/// canonical order with unique exponent vectors and no zero coefficients.
class MultiPoly {
  public:
    MultiPoly() = default;
    /// Like terms are combined and zero results dropped. Every exponent vector
    /// must have length variables.size(); throws std::invalid_argument
    /// otherwise.
    MultiPoly(std::vector<std::string> variables, std::vector<Term> terms);

    static MultiPoly zero(std::vector<std::string> variables) { return MultiPoly(std::move(variables), {}); }

    std::size_t dimension() const { return variables_.size(); }
    const std::vector<std::string> &variables() const { return variables_; }
    const std::vector<Term> &terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient at p, zero if p is not in the support.
    Integer coeff(const ExponentVector &p) const;
    /// Sum of all coefficients, i.e. the value at the all-ones point.
    Integer coefficient_sum() const;
    std::uint64_t total_degree() const;
    /// Largest exponent of each variable.
    std::vector<Exponent> degrees() const;
    /// Largest exponent of any single variable.
    Exponent max_degree() const;

    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly &, const MultiPoly &) = default;

  private:
    std::vector<std::string> variables_;
    std::vector<Term> terms_;
};

/// Renders f in the infix input grammar, e.g. "-2*x1^5+x1^2*x2". The zero
/// polynomial renders as "0".
std::string to_string(const MultiPoly &f);

/// 0-based minimal odd coordinate; nullopt when every coordinate is even.
using Moc = std::optional<std::size_t>;
Moc moc(const ExponentVector &p);

struct WeakNegative {
    ExponentVector point;
    std::size_t moc;

    friend bool operator==(const WeakNegative &, const WeakNegative &) = default;
};

/// Sign partition of the support. The zero vector never appears in the three
/// lists; its coefficient is const_coeff. All lists follow canonical order.
struct SupportPartition {
    std::vector<ExponentVector> pos;
    std::vector<WeakNegative> weak_neg;
    std::vector<ExponentVector> strong_neg;
    Integer const_coeff;
};

SupportPartition support_partition(const MultiPoly &f);

/// sign * 2^exp with sign in {-1, +1}.
struct DyadicPower {
    int sign = 1;
    std::int64_t exp = 0;

    Rational value() const;
    friend bool operator==(const DyadicPower &, const DyadicPower &) = default;
};

using Coordinate = std::variant<Rational, DyadicPower>;

Rational value_of(const Coordinate &c);

class EvalPoint {
  public:
    EvalPoint() = default;
    explicit EvalPoint(std::vector<Coordinate> coords) : coords_(std::move(coords)) {}
    static EvalPoint ones(std::size_t d);
    static EvalPoint from_rationals(std::span<const Rational> values);

    std::size_t dimension() const { return coords_.size(); }
    const std::vector<Coordinate> &coords() const { return coords_; }
    const Coordinate &operator[](std::size_t i) const { return coords_[i]; }
    std::vector<Rational> to_rationals() const;

    friend bool operator==(const EvalPoint &, const EvalPoint &) = default;

  private:
    std::vector<Coordinate> coords_;
};

/// Exact value of f at the point. Dyadic coordinates are handled by adding
/// exponents, never by forming their powers.
Rational evaluate(const MultiPoly &f, const EvalPoint &point);

/// g(y) = f(p + y (q - p)).
UniPolyQ line_substitute(const MultiPoly &f, std::span<const Rational> p, std::span<const Rational> q);

/// Polynomial in y and 1/y with integer coefficients.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    /// Zero coefficients are dropped.
    explicit LaurentPoly(std::map<std::int64_t, Integer> terms);

    const std::map<std::int64_t, Integer> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational eval(const Rational &y) const;
    /// Sign of the value at y = 2^k.
    int sign_at_power_of_two(std::int64_t k) const;

    friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

  private:
    std::map<std::int64_t, Integer> terms_;
};

/// f(y^n1, ..., y^nd) with coordinate mu negated when present. Throws
/// std::overflow_error if an exponent n.p does not fit in 64 bits.
LaurentPoly laurent_substitute(const MultiPoly &f, std::span<const std::int64_t> n, Moc mu);

/// g(a) = f(s o a) for s in {-1,+1}^d.
MultiPoly orthant_transform(const MultiPoly &f, std::span<const int> signs);

struct RangeBound {
    enum class Kind { lower, upper };
    Kind kind;
    Rational value;
};

/// lower(alpha): x_i -> x_i + alpha.  upper(beta): x_i -> -x_i - beta.
/// With v = value = a/b in lowest terms the result is b^deg_i(f) times the
/// substituted polynomial, which keeps integer coefficients and the same zeros.
MultiPoly range_transform(const MultiPoly &f, std::size_t index, const RangeBound &bound);

/// f(x1 - x1', ..., xd - xd') over 2d variables; the primed copies follow the
/// originals and are named "<name>_m".
MultiPoly difference_transform(const MultiPoly &f);

} // namespace subtropical
