#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "subtropical/lp.hpp"
#include "subtropical/poly.hpp"
#include "subtropical/unipoly.hpp"

namespace testing_support {

/// Feasibility of rows * x <= -1 by Fourier-Motzkin elimination.
bool fourier_motzkin_feasible(const subtropical::ConstraintSystem &sys);

/// True iff points[index] is not in the convex hull of the other points.
/// Points must be distinct.
bool is_hull_vertex(std::span<const std::pair<std::int64_t, std::int64_t>> points, std::size_t index);

struct Interval {
    subtropical::Rational lo, hi;
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
};

/// Enclosure of f over the box by naive interval arithmetic.
Interval evaluate_box(const subtropical::MultiPoly &f, std::span<const Interval> box);

/// f(p + y (q - p)) expanded term by term with dense polynomial products.
subtropical::UniPolyQ expand_on_line(const subtropical::MultiPoly &f, std::span<const subtropical::Rational> p,
                                     std::span<const subtropical::Rational> q);

/// Direct evaluation by rational powers.
subtropical::Rational evaluate_naive(const subtropical::MultiPoly &f, std::span<const subtropical::Rational> x);

} // namespace testing_support
