#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "subtropical/numeric.hpp"
#include "subtropical/poly.hpp"

namespace subtropical {

/// Separation system  rows * (n, c) <= -1  over num_vars = d + 1 unknowns.
/// Rows are integral (they come from exponent vectors) and stored row-major.
/// Row 0 is the sign-flipped candidate row (-p1, 1).
class ConstraintSystem {
  public:
    ConstraintSystem(std::size_t num_vars, ExponentVector candidate)
        : num_vars_(num_vars), candidate_(std::move(candidate)) {}

    std::size_t num_vars() const { return num_vars_; }
    std::size_t num_rows() const { return num_vars_ == 0 ? 0 : entries_.size() / num_vars_; }
    const ExponentVector &candidate() const { return candidate_; }
    std::span<const std::int64_t> row(std::size_t i) const {
        return {entries_.data() + i * num_vars_, num_vars_};
    }
    /// Largest absolute entry over all rows.
    std::int64_t max_abs_entry() const { return max_abs_; }

    void add_row(std::span<const std::int64_t> r);

  private:
    std::size_t num_vars_;
    ExponentVector candidate_;
    std::vector<std::int64_t> entries_;
    std::int64_t max_abs_ = 0;
};

/// rows = [(-candidate, 1)] ++ [(p, -1) for p in others] ++ [(0, -1) if the
/// partition has a constant term].
ConstraintSystem build_system(const SupportPartition &partition, const ExponentVector &candidate,
                              std::span<const ExponentVector> others);

struct LpOutcome {
    /// Exact feasible point (n, c); empty when the system is infeasible.
    std::optional<std::vector<Rational>> solution;

    bool feasible() const { return solution.has_value(); }
};

struct SimplexStats {
    std::size_t pivots = 0;
    std::size_t degenerate_pivots = 0;
};

/// Exact feasibility of the system. Works on the Farkas alternative
///   y >= 0,  sum_j y_j row_j = 0,  sum_j y_j = 1
/// whose d + 2 equality rows keep the simplex basis small no matter how many
/// support points there are. A positive phase-one optimum certifies that the
/// alternative is empty, and the simplex multipliers of that optimum are a
/// point of the original system. Every returned point is re-checked against
/// all rows.
LpOutcome simplex_feasible(const ConstraintSystem &sys, SimplexStats *stats = nullptr);

struct IntegerSolution {
    std::vector<std::int64_t> n;
    Rational c;

    friend bool operator==(const IntegerSolution &, const IntegerSolution &) = default;
};

class ExponentBoundExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Lifts a rational solution to an integral direction: with m the lcm of the
/// denominators of n, returns (m n, m c + m - 1). Throws ExponentBoundExceeded
/// if some |m n_i| exceeds bound.
IntegerSolution integerize(std::span<const Rational> v, const ConstraintSystem &sys, const Integer &bound);

struct LpSolveResult {
    enum class Status { solved, infeasible, bound_exceeded };
    Status status = Status::infeasible;
    std::optional<IntegerSolution> solution;
};

/// Searches for a small integral direction near v: n = round(s v / |v|_inf)
/// for growing s up to max_scale, completed with the least admissible c.
std::optional<IntegerSolution> round_direction(std::span<const Rational> v, const ConstraintSystem &sys,
                                               std::int64_t max_scale);

/// simplex_feasible followed by integerize. A rounded direction with smaller
/// maximum norm is preferred when one exists.
LpSolveResult lpsolve(const ConstraintSystem &sys, const Integer &bound, SimplexStats *stats = nullptr);

bool satisfies(const ConstraintSystem &sys, std::span<const Rational> v);
bool satisfies(const ConstraintSystem &sys, const IntegerSolution &s);

} // namespace subtropical
