#include "subtropical/lp.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace subtropical {

void ConstraintSystem::add_row(std::span<const std::int64_t> r) {
    if (r.size() != num_vars_) throw std::invalid_argument("row length does not match the number of unknowns");
    for (auto x : r) max_abs_ = std::max(max_abs_, x < 0 ? -x : x);
    entries_.insert(entries_.end(), r.begin(), r.end());
}

ConstraintSystem build_system(const SupportPartition &partition, const ExponentVector &candidate,
                              std::span<const ExponentVector> others) {
    const std::size_t d = candidate.size();
    ConstraintSystem sys(d + 1, candidate);
    std::vector<std::int64_t> row(d + 1);
    for (std::size_t i = 0; i < d; ++i) row[i] = -static_cast<std::int64_t>(candidate[i]);
    row[d] = 1;
    sys.add_row(row);
    for (const auto &p : others) {
        if (p.size() != d) throw std::invalid_argument("support point dimension mismatch");
        for (std::size_t i = 0; i < d; ++i) row[i] = static_cast<std::int64_t>(p[i]);
        row[d] = -1;
        sys.add_row(row);
    }
    if (partition.const_coeff != 0) {
        std::fill(row.begin(), row.end(), 0);
        row[d] = -1;
        sys.add_row(row);
    }
    return sys;
}

bool satisfies(const ConstraintSystem &sys, std::span<const Rational> v) {
    if (v.size() != sys.num_vars()) return false;
    std::vector<Rational> w(v.begin(), v.end());
    Integer den(1);
    for (const auto &x : w) den = lcm(den, x.get_den());
    std::vector<Integer> scaled;
    scaled.reserve(w.size());
    for (const auto &x : w) scaled.push_back(Rational(x * den).get_num());
    Integer acc;
    for (std::size_t r = 0; r < sys.num_rows(); ++r) {
        auto row = sys.row(r);
        acc = 0;
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] != 0) acc += scaled[i] * static_cast<long>(row[i]);
        if (acc > -den) return false;
    }
    return true;
}

bool satisfies(const ConstraintSystem &sys, const IntegerSolution &s) {
    std::vector<Rational> v;
    v.reserve(s.n.size() + 1);
    for (auto x : s.n) v.emplace_back(static_cast<long>(x));
    v.push_back(s.c);
    return satisfies(sys, v);
}

IntegerSolution integerize(std::span<const Rational> v, const ConstraintSystem &sys, const Integer &bound) {
    if (v.size() != sys.num_vars() || v.empty()) throw std::invalid_argument("solution length mismatch");
    const std::size_t d = v.size() - 1;
    Integer m(1);
    for (std::size_t i = 0; i < d; ++i) m = lcm(m, v[i].get_den());
    IntegerSolution out;
    out.n.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        Integer ni = Rational(v[i] * m).get_num();
        if (abs(ni) > bound || !ni.fits_slong_p())
            throw ExponentBoundExceeded("|n_" + std::to_string(i + 1) + "| = " + Integer(abs(ni)).get_str() +
                                        " exceeds the exponent bound " + bound.get_str());
        out.n.push_back(ni.get_si());
    }
    out.c = v[d] * m + m - 1;
    if (!satisfies(sys, out)) throw std::logic_error("integerized solution violates its system");
    return out;
}

namespace {

Integer from_i128(__int128 x) {
    const bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    Integer hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~std::uint64_t{0}));
    Integer r = hi * pow2(64) + lo;
    return neg ? Integer(-r) : r;
}

std::int64_t max_norm(std::span<const std::int64_t> n) {
    std::int64_t m = 0;
    for (auto x : n) m = std::max(m, x < 0 ? -x : x);
    return m;
}

// Completes an integer direction n to a solution (n, c), taking c as small as
// the rows allow.
std::optional<IntegerSolution> complete(const ConstraintSystem &sys, std::vector<std::int64_t> n) {
    const std::size_t d = n.size();
    std::optional<Rational> lower, upper;
    for (std::size_t r = 0; r < sys.num_rows(); ++r) {
        auto row = sys.row(r);
        __int128 dot = 0;
        for (std::size_t i = 0; i < d; ++i) dot += static_cast<__int128>(row[i]) * n[i];
        const std::int64_t rc = row[d];
        if (rc == 0) {
            if (dot > -1) return std::nullopt;
            continue;
        }
        // rc * c <= -1 - dot
        Rational b(from_i128(-1 - dot), Integer(static_cast<long>(rc < 0 ? -rc : rc)));
        b.canonicalize();
        if (rc > 0) {
            if (!upper || b < *upper) upper = b;
        } else {
            b = -b;
            if (!lower || b > *lower) lower = b;
        }
    }
    if (lower && upper && *lower > *upper) return std::nullopt;
    IntegerSolution out{std::move(n), lower ? *lower : upper ? *upper : Rational(0)};
    return out;
}

} // namespace

std::optional<IntegerSolution> round_direction(std::span<const Rational> v, const ConstraintSystem &sys,
                                               std::int64_t max_scale) {
    if (v.size() != sys.num_vars() || v.empty()) throw std::invalid_argument("solution length mismatch");
    const std::size_t d = v.size() - 1;
    Rational top(0);
    for (std::size_t i = 0; i < d; ++i) top = std::max(top, Rational(abs(v[i])));
    if (sgn(top) == 0) return complete(sys, std::vector<std::int64_t>(d));
    // Keep every dot product well inside 128 bits.
    const std::int64_t entry = std::max<std::int64_t>(sys.max_abs_entry(), 1);
    const std::int64_t limit = std::min<std::int64_t>(max_scale, (std::int64_t{1} << 60) / entry / 16);
    std::vector<std::int64_t> n(d);
    for (std::int64_t s = 1; s <= limit; s = s < 16 ? s + 1 : 2 * s) {
        for (std::size_t i = 0; i < d; ++i) {
            Rational x = v[i] / top * s + Rational(1, 2);
            Integer f;
            mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
            n[i] = f.get_si();
        }
        if (auto sol = complete(sys, n)) return sol;
    }
    return std::nullopt;
}

LpSolveResult lpsolve(const ConstraintSystem &sys, const Integer &bound, SimplexStats *stats) {
    LpOutcome outcome = simplex_feasible(sys, stats);
    if (!outcome.feasible()) return {};
    std::optional<IntegerSolution> lifted;
    try {
        lifted = integerize(*outcome.solution, sys, bound);
    } catch (const ExponentBoundExceeded &) {
    }
    std::int64_t cap = bound.fits_slong_p() ? bound.get_si() : INT64_MAX;
    if (lifted) cap = std::min(cap, max_norm(lifted->n) - 1);
    if (auto small = round_direction(*outcome.solution, sys, cap)) {
        if (!satisfies(sys, *small)) throw std::logic_error("rounded direction violates its system");
        return {LpSolveResult::Status::solved, std::move(small)};
    }
    if (lifted) return {LpSolveResult::Status::solved, std::move(lifted)};
    return {LpSolveResult::Status::bound_exceeded, std::nullopt};
}

} // namespace subtropical
