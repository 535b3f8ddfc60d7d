#include <stdexcept>

#include "subtropical/engine.hpp"

namespace subtropical {

namespace {

struct Candidate {
    ExponentVector point;
    Moc mu;
};

SearchResult search(const MultiPoly &f, SearchMode mode, const EngineOptions &options, bool scale) {
    SearchResult result;
    const SupportPartition part = support_partition(f);

    std::vector<Candidate> candidates;
    for (const auto &p : part.pos) candidates.push_back({p, std::nullopt});
    // Rows that are never candidates. Weakly negative rows precede strongly
    // negative ones in both modes so that the systems for positive candidates
    // coincide row for row.
    std::vector<ExponentVector> fixed;
    if (mode == SearchMode::general) {
        for (const auto &w : part.weak_neg) candidates.push_back({w.point, w.moc});
    } else {
        for (const auto &w : part.weak_neg) fixed.push_back(w.point);
    }
    for (const auto &p : part.strong_neg) fixed.push_back(p);

    std::vector<ExponentVector> kept; // skipped for the exponent bound, still constraints
    std::vector<ExponentVector> others;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        const Candidate &cand = candidates[idx];
        others.clear();
        others.insert(others.end(), kept.begin(), kept.end());
        for (std::size_t j = idx + 1; j < candidates.size(); ++j) others.push_back(candidates[j].point);
        others.insert(others.end(), fixed.begin(), fixed.end());

        ConstraintSystem sys = build_system(part, cand.point, others);
        SimplexStats simplex;
        LpSolveResult res = lpsolve(sys, options.max_exponent, &simplex);
        ++result.stats.candidates_tried;
        ++result.stats.lp_solves;
        result.stats.simplex_pivots += simplex.pivots;
        if (options.on_lp) options.on_lp(sys, res);

        if (res.status == LpSolveResult::Status::bound_exceeded) {
            kept.push_back(cand.point);
            continue;
        }
        if (res.status == LpSolveResult::Status::infeasible) continue;

        Witness w;
        w.candidate = cand.point;
        w.n = res.solution->n;
        w.c = res.solution->c;
        w.mu = cand.mu;
        if (scale) {
            ScaledPoint sp = dominant_scale(f, w.n, w.mu);
            if (sgn(evaluate(f, sp.point)) <= 0) throw std::logic_error("witness point has non-positive value");
            w.log2_t = sp.log2_t;
            w.point = std::move(sp.point);
            result.stats.doubling_steps = sp.doubling_steps;
        }
        result.witness = std::move(w);
        break;
    }
    return result;
}

} // namespace

SearchResult find_positive(const MultiPoly &f, const EngineOptions &options) {
    return search(f, SearchMode::positive, options, true);
}

SearchResult find_positive_general(const MultiPoly &f, const EngineOptions &options) {
    return search(f, SearchMode::general, options, true);
}

SearchResult find_direction(const MultiPoly &f, SearchMode mode, const EngineOptions &options) {
    return search(f, mode, options, false);
}

ScaledPoint dominant_scale(const MultiPoly &f, std::span<const std::int64_t> n, Moc mu) {
    const LaurentPoly f1 = laurent_substitute(f, n, mu);
    if (f1.is_zero()) throw std::invalid_argument("direction collapses the polynomial to zero");
    // Far beyond any bound reachable from a feasible separation system.
    constexpr std::int64_t kMaxLog2 = std::int64_t{1} << 24;
    ScaledPoint sp;
    sp.log2_t = 1;
    while (f1.sign_at_power_of_two(sp.log2_t) <= 0) {
        if (sp.log2_t >= kMaxLog2) throw std::invalid_argument("direction does not dominate the polynomial");
        ++sp.log2_t;
        ++sp.doubling_steps;
    }
    std::vector<Coordinate> coords;
    coords.reserve(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        int s = mu && *mu == i ? -1 : 1;
        coords.emplace_back(DyadicPower{s, sp.log2_t * n[i]});
    }
    sp.point = EvalPoint(std::move(coords));
    return sp;
}

Integer doubling_bound(const MultiPoly &f, const ExponentVector &candidate) {
    const Integer lead = abs(f.coeff(candidate));
    if (lead == 0) throw std::invalid_argument("candidate is not in the support");
    Integer largest(0);
    for (const auto &t : f.terms())
        if (t.exponents != candidate) largest = std::max(largest, Integer(abs(t.coeff)));
    // ceil(largest * (s - 1) / lead)
    Integer numer = largest * static_cast<unsigned long>(f.num_terms() - 1);
    Integer ceil_ratio;
    mpz_cdiv_q(ceil_ratio.get_mpz_t(), numer.get_mpz_t(), lead.get_mpz_t());
    return 2 * std::max(Integer(2), ceil_ratio);
}

bool detect_definite(const SupportPartition &partition) {
    return partition.pos.empty() && partition.const_coeff <= 0;
}

} // namespace subtropical
