#include "generators.hpp"

#include <map>
#include <set>

namespace testing_support {

using namespace subtropical;

std::int64_t uniform(Rng &rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::vector<std::string> variable_names(std::size_t d) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

namespace {

std::int64_t nonzero(Rng &rng, std::int64_t max_abs) {
    std::int64_t c = uniform(rng, 1, max_abs);
    return uniform(rng, 0, 1) ? c : -c;
}

ExponentVector random_exponent(Rng &rng, std::size_t d, unsigned max_degree) {
    ExponentVector p(d);
    unsigned budget = static_cast<unsigned>(uniform(rng, 0, max_degree));
    for (std::size_t i = 0; i < d && budget > 0; ++i) {
        auto e = static_cast<unsigned>(uniform(rng, 0, budget));
        p[i] = e;
        budget -= e;
    }
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace

MultiPoly random_multipoly(Rng &rng, std::size_t d, std::size_t max_terms, unsigned max_degree,
                           std::int64_t max_coeff) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_terms)));
    std::map<ExponentVector, std::int64_t> seen;
    for (std::size_t i = 0; i < n; ++i) seen[random_exponent(rng, d, max_degree)] = nonzero(rng, max_coeff);
    std::vector<Term> terms;
    for (auto &[p, c] : seen) terms.push_back({p, Integer(static_cast<long>(c))});
    return MultiPoly(variable_names(d), std::move(terms));
}

UniPolyZ random_unipoly(Rng &rng, unsigned max_degree, std::int64_t max_coeff) {
    const auto deg = uniform(rng, 1, max_degree);
    std::vector<Integer> c;
    for (std::int64_t i = 0; i <= deg; ++i) {
        // Sparse-ish: a third of the lower coefficients are zero.
        std::int64_t v = uniform(rng, 0, 2) == 0 ? 0 : uniform(rng, -max_coeff, max_coeff);
        c.emplace_back(static_cast<long>(v));
    }
    c.back() = static_cast<long>(nonzero(rng, max_coeff));
    return UniPolyZ(std::move(c));
}

Rational random_rational(Rng &rng, std::int64_t scale) {
    Rational q(Integer(static_cast<long>(uniform(rng, -scale, scale))), Integer(static_cast<long>(uniform(rng, 1, scale))));
    q.canonicalize();
    return q;
}

Rational random_positive(Rng &rng) {
    switch (uniform(rng, 0, 3)) {
    case 0: return pow2q(uniform(rng, -40, 40));
    case 1: return Rational(Integer(static_cast<long>(uniform(rng, 1, 1000))), Integer(static_cast<long>(uniform(rng, 1, 1000))));
    default: {
        Rational q(Integer(static_cast<long>(uniform(rng, 1, 100))), Integer(static_cast<long>(uniform(rng, 1, 100))));
        q.canonicalize();
        return q;
    }
    }
}

ConstraintSystem random_separation_system(Rng &rng, std::size_t d, std::size_t num_points, unsigned max_exp) {
    std::size_t available = 1;
    for (std::size_t i = 0; i < d && available < num_points; ++i) available *= max_exp + 1;
    num_points = std::min(num_points, available);
    std::set<ExponentVector> pts;
    std::vector<ExponentVector> order;
    while (order.size() < num_points) {
        ExponentVector p(d);
        for (auto &e : p) e = static_cast<Exponent>(uniform(rng, 0, max_exp));
        if (pts.insert(p).second) order.push_back(p);
    }
    ConstraintSystem sys(d + 1, order.front());
    std::vector<std::int64_t> row(d + 1);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::int64_t s = k == 0 ? -1 : 1;
        for (std::size_t i = 0; i < d; ++i) row[i] = s * static_cast<std::int64_t>(order[k][i]);
        row[d] = -s;
        sys.add_row(row);
    }
    return sys;
}

ConstraintSystem random_general_system(Rng &rng, std::size_t num_vars, std::size_t num_rows, std::int64_t max_entry) {
    ConstraintSystem sys(num_vars, ExponentVector(num_vars > 0 ? num_vars - 1 : 0));
    std::vector<std::int64_t> row(num_vars);
    for (std::size_t k = 0; k < num_rows; ++k) {
        for (auto &e : row) e = uniform(rng, -max_entry, max_entry);
        sys.add_row(row);
    }
    return sys;
}

} // namespace testing_support
