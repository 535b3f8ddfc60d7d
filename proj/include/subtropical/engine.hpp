#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "subtropical/lp.hpp"
#include "subtropical/numeric.hpp"
#include "subtropical/poly.hpp"
#include "subtropical/realroot.hpp"
#include "subtropical/unipoly.hpp"

namespace subtropical {

enum class SearchMode { positive, general };

struct EngineOptions {
    /// Largest admissible |n_i| for an integerized direction.
    Integer max_exponent = pow2(20);
    /// Invoked after every separation LP, for diagnostics and tests.
    std::function<void(const ConstraintSystem &, const LpSolveResult &)> on_lp;
};

struct SearchStats {
    std::size_t candidates_tried = 0;
    std::size_t lp_solves = 0;
    std::size_t doubling_steps = 0;
    std::size_t simplex_pivots = 0;
};

/// A point where the (normalized) polynomial is strictly positive, found on
/// the moment curve t -> (t^n1, ..., t^nd) with coordinate mu negated.
struct Witness {
    ExponentVector candidate;
    std::vector<std::int64_t> n;
    Rational c;
    Moc mu;
    /// log2 of the accepted t; absent when the doubling loop was skipped.
    std::optional<std::int64_t> log2_t;
    /// Coordinates sign * 2^(log2_t * n_i); absent together with log2_t.
    std::optional<EvalPoint> point;
    /// Set when the search ran on -f because f(1) > 0.
    bool negated = false;

    friend bool operator==(const Witness &, const Witness &) = default;
};

struct SearchResult {
    std::optional<Witness> witness;
    SearchStats stats;
};

/// Candidates from pos in canonical order; infeasible candidates are dropped
/// from later systems. Candidates whose direction exceeds the exponent bound
/// are skipped but stay in later systems as ordinary rows.
SearchResult find_positive(const MultiPoly &f, const EngineOptions &options = {});

/// As find_positive, then continues with the weakly negative points, flipping
/// the sign of their minimal odd coordinate. Strongly negative points are
/// always constraints.
SearchResult find_positive_general(const MultiPoly &f, const EngineOptions &options = {});

/// Same searches without the doubling loop (only LP feasibility matters).
SearchResult find_direction(const MultiPoly &f, SearchMode mode, const EngineOptions &options = {});

struct ScaledPoint {
    EvalPoint point;
    std::int64_t log2_t = 1;
    std::size_t doubling_steps = 0;
};

/// Doubles t from 2 until f(t^n) > 0, evaluating a Laurent polynomial
/// precomputed once for the direction.
ScaledPoint dominant_scale(const MultiPoly &f, std::span<const std::int64_t> n, Moc mu);

/// Upper bound 2 * max(2, ceil(b * (s - 1))) on the t accepted by
/// dominant_scale, where b is the largest coefficient ratio against the
/// candidate and s the support size.
Integer doubling_bound(const MultiPoly &f, const ExponentVector &candidate);

/// True iff there is no positive non-constant monomial and the constant term
/// is not positive, so f < 0 on the open positive orthant.
bool detect_definite(const SupportPartition &partition);

class PreconditionViolated : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct ZeroCertificate {
    std::vector<ZeroCoordinate> coords;
    EvalPoint p;
    std::vector<Rational> q;
    UniPolyZ gbar;
    RealAlgebraicNumber r = RealAlgebraicNumber::exact(0);
    /// D with D * f(p + y (q - p)) = gbar.
    Integer content;
};

/// Zero of f on the segment from p to q; requires f(p) f(q) < 0.
ZeroCertificate construct_zero(const MultiPoly &f, const EvalPoint &p, std::span<const Rational> q,
                               unsigned approx_digits = 6);

struct ZeroFound {
    ZeroCertificate certificate;
};
struct AllOnes {};
struct Definite {
    /// Sign of the original input on the open positive orthant.
    int sign;
};
struct PositiveValue {
    Witness witness;
};
struct Failed {};

struct Outcome {
    std::variant<ZeroFound, AllOnes, Definite, PositiveValue, Failed> result;
    std::optional<Witness> witness;
    SearchStats stats;
    std::chrono::milliseconds elapsed{0};
};

struct FindZeroOptions {
    SearchMode mode = SearchMode::positive;
    bool existence_only = false;
    unsigned approx_digits = 6;
    EngineOptions engine;
};

Outcome find_zero(const MultiPoly &f, const FindZeroOptions &options = {});

} // namespace subtropical
