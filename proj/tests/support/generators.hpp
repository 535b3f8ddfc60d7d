#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "subtropical/lp.hpp"
#include "subtropical/poly.hpp"
#include "subtropical/unipoly.hpp"

namespace testing_support {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng &rng, std::int64_t lo, std::int64_t hi);

std::vector<std::string> variable_names(std::size_t d);

/// Up to max_terms terms with total degree <= max_degree and nonzero
/// coefficients in [-max_coeff, max_coeff].
subtropical::MultiPoly random_multipoly(Rng &rng, std::size_t d, std::size_t max_terms, unsigned max_degree,
                                        std::int64_t max_coeff);

subtropical::UniPolyZ random_unipoly(Rng &rng, unsigned max_degree, std::int64_t max_coeff);

/// Rational with numerator and denominator bounded by scale, nonzero
/// denominator.
subtropical::Rational random_rational(Rng &rng, std::int64_t scale);

/// Strictly positive rational, occasionally very large or very small.
subtropical::Rational random_positive(Rng &rng);

/// Separation system from num_points distinct random exponent vectors in
/// [0, max_exp]^d; the first point is the candidate.
subtropical::ConstraintSystem random_separation_system(Rng &rng, std::size_t d, std::size_t num_points,
                                                       unsigned max_exp);

/// Arbitrary integer rows in [-max_entry, max_entry].
subtropical::ConstraintSystem random_general_system(Rng &rng, std::size_t num_vars, std::size_t num_rows,
                                                    std::int64_t max_entry);

} // namespace testing_support
