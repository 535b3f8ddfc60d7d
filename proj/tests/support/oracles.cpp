#include "oracles.hpp"

#include <map>

namespace testing_support {

using namespace subtropical;

namespace {

// a . x <= b, normalized by the gcd of all entries; rows with equal a keep the
// tightest b.
using RowMap = std::map<std::vector<Integer>, Integer>;

void insert_row(RowMap &rows, std::vector<Integer> a, Integer b) {
    Integer g = abs(b);
    for (const auto &x : a) g = gcd(g, x);
    if (g > 1) {
        for (auto &x : a) x /= g;
        b /= g;
    }
    auto [it, inserted] = rows.try_emplace(std::move(a), b);
    if (!inserted && b < it->second) it->second = b;
}

} // namespace

bool fourier_motzkin_feasible(const ConstraintSystem &sys) {
    const std::size_t nv = sys.num_vars();
    RowMap rows;
    for (std::size_t r = 0; r < sys.num_rows(); ++r) {
        std::vector<Integer> a;
        for (auto v : sys.row(r)) a.emplace_back(static_cast<long>(v));
        insert_row(rows, std::move(a), Integer(-1));
    }
    for (std::size_t j = 0; j < nv; ++j) {
        std::vector<std::pair<std::vector<Integer>, Integer>> pos, neg;
        RowMap next;
        for (auto &[a, b] : rows) {
            int s = sgn(a[j]);
            if (s > 0) pos.emplace_back(a, b);
            else if (s < 0) neg.emplace_back(a, b);
            else next.emplace(a, b);
        }
        for (const auto &[ap, bp] : pos) {
            for (const auto &[an, bn] : neg) {
                const Integer kp = -an[j], kn = ap[j];
                std::vector<Integer> a(nv);
                for (std::size_t i = 0; i < nv; ++i) a[i] = kp * ap[i] + kn * an[i];
                insert_row(next, std::move(a), kp * bp + kn * bn);
            }
        }
        rows = std::move(next);
    }
    for (const auto &[a, b] : rows)
        if (sgn(b) < 0) return false;
    return true;
}

namespace {

using Pt = std::pair<std::int64_t, std::int64_t>;

std::int64_t cross(const Pt &o, const Pt &a, const Pt &b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

bool on_segment(const Pt &p, const Pt &a, const Pt &b) {
    return cross(a, b, p) == 0 && std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
}

bool in_triangle(const Pt &p, const Pt &a, const Pt &b, const Pt &c) {
    auto s1 = cross(a, b, p), s2 = cross(b, c, p), s3 = cross(c, a, p);
    bool has_neg = s1 < 0 || s2 < 0 || s3 < 0, has_pos = s1 > 0 || s2 > 0 || s3 > 0;
    return !(has_neg && has_pos);
}

} // namespace

bool is_hull_vertex(std::span<const Pt> points, std::size_t index) {
    const Pt &p = points[index];
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i == index) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == index) continue;
            if (on_segment(p, points[i], points[j])) return false;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (k == index) continue;
                if (cross(points[i], points[j], points[k]) != 0 && in_triangle(p, points[i], points[j], points[k]))
                    return false;
            }
        }
    }
    return true;
}

namespace {

Interval mul(const Interval &x, const Interval &y) {
    Rational c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
    Interval r{c[0], c[0]};
    for (const auto &v : c) {
        if (v < r.lo) r.lo = v;
        if (v > r.hi) r.hi = v;
    }
    return r;
}

Interval power(const Interval &x, unsigned e) {
    if (e == 0) return {1, 1};
    Rational a = qpow(x.lo, e), b = qpow(x.hi, e);
    if (e % 2 == 1) return {a, b};
    if (sgn(x.lo) <= 0 && sgn(x.hi) >= 0) return {0, a > b ? a : b};
    return a < b ? Interval{a, b} : Interval{b, a};
}

} // namespace

Interval evaluate_box(const MultiPoly &f, std::span<const Interval> box) {
    Interval total{0, 0};
    for (const auto &t : f.terms()) {
        Interval m{Rational(t.coeff), Rational(t.coeff)};
        for (std::size_t i = 0; i < box.size(); ++i)
            if (t.exponents[i] > 0) m = mul(m, power(box[i], t.exponents[i]));
        total.lo += m.lo;
        total.hi += m.hi;
    }
    return total;
}

UniPolyQ expand_on_line(const MultiPoly &f, std::span<const Rational> p, std::span<const Rational> q) {
    UniPolyQ total;
    for (const auto &t : f.terms()) {
        UniPolyQ m = UniPolyQ::constant(Rational(t.coeff));
        for (std::size_t i = 0; i < p.size(); ++i) {
            const UniPolyQ lin(std::vector<Rational>{p[i], q[i] - p[i]});
            for (Exponent k = 0; k < t.exponents[i]; ++k) m = m * lin;
        }
        total = total + m;
    }
    return total;
}

Rational evaluate_naive(const MultiPoly &f, std::span<const Rational> x) {
    Rational total = 0;
    for (const auto &t : f.terms()) {
        Rational m(t.coeff);
        for (std::size_t i = 0; i < x.size(); ++i) m *= qpow(x[i], t.exponents[i]);
        total += m;
    }
    return total;
}

} // namespace testing_support
