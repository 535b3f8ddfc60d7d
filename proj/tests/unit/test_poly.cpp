#include <doctest.h>

#include "common.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace subtropical;
using namespace testing_support;

TEST_CASE("multipoly combines like terms and drops zeros") {
    MultiPoly f({"x", "y"}, {{{1, 0}, Integer(2)}, {{0, 1}, Integer(3)}, {{1, 0}, Integer(-2)}});
    CHECK(f.num_terms() == 1);
    CHECK(f.coeff({0, 1}) == 3);
    CHECK(f.coeff({1, 0}) == 0);
    CHECK_THROWS_AS(MultiPoly({"x"}, {{{1, 2}, Integer(1)}}), std::invalid_argument);
}

TEST_CASE("terms follow the canonical candidate order") {
    auto f = poly(kExample);
    std::vector<ExponentVector> order;
    for (const auto &t : f.terms()) order.push_back(t.exponents);
    CHECK(order == std::vector<ExponentVector>{{5, 0}, {2, 1}, {0, 3}, {2, 0}, {0, 2}});
    CHECK(canonical_before({0, 3}, {2, 0}));
    CHECK_FALSE(canonical_before({2, 0}, {2, 0}));
}

TEST_CASE("support partition of the five-term example") {
    auto part = support_partition(poly(kExample));
    CHECK(part.pos == std::vector<ExponentVector>{{2, 1}, {0, 2}});
    CHECK(part.weak_neg == std::vector<WeakNegative>{{{5, 0}, 0}, {{0, 3}, 1}});
    CHECK(part.strong_neg == std::vector<ExponentVector>{{2, 0}});
    CHECK(part.const_coeff == 0);

    auto c = support_partition(poly("3"));
    CHECK(c.pos.empty());
    CHECK(c.weak_neg.empty());
    CHECK(c.strong_neg.empty());
    CHECK(c.const_coeff == 3);
}

TEST_CASE("minimal odd coordinate") {
    CHECK(moc({5, 0}) == 0u);
    CHECK(moc({0, 3}) == 1u);
    CHECK_FALSE(moc({2, 0}).has_value());
    CHECK_FALSE(moc({}).has_value());
}

TEST_CASE("evaluation") {
    auto f = poly(kExample);
    CHECK(evaluate(f, EvalPoint::ones(2)) == -3);
    CHECK(evaluate(f, EvalPoint::from_rationals(qs({"1/8", "1/4"}))) == q("1087/16384"));
    CHECK(evaluate(f, EvalPoint({DyadicPower{1, -3}, DyadicPower{1, -2}})) == q("1087/16384"));
    CHECK(evaluate(MultiPoly::zero({"x"}), EvalPoint::from_rationals(qs({"7/3"}))) == 0);
    CHECK(evaluate(poly("-x^3"), EvalPoint({DyadicPower{-1, 1}})) == 8);
}

TEST_CASE("line substitution") {
    auto g = line_substitute(poly("x"), qs({"0"}), qs({"1"}));
    CHECK(g == UniPolyQ(qs({"0", "1"})));
    auto f = poly(kExample);
    auto c = line_substitute(f, qs({"2/3", "5"}), qs({"2/3", "5"}));
    CHECK(c.degree() == 0);
    CHECK(c[0] == evaluate(f, EvalPoint::from_rationals(qs({"2/3", "5"}))));

    auto cleared = clear_denominators(line_substitute(f, qs({"1/8", "1/4"}), qs({"1", "1"})));
    CHECK(cleared.poly == zpoly({1087, 285, -20778, -934, -12005, -16807}));
}

TEST_CASE("clear denominators") {
    auto r = clear_denominators(UniPolyQ(qs({"1/3", "1/2"})));
    CHECK(r.poly == zpoly({2, 3}));
    CHECK(r.denominator == 6);
    auto s = clear_denominators(UniPolyQ(qs({"4", "-7"})));
    CHECK(s.poly == zpoly({4, -7}));
    CHECK(s.denominator == 1);
}

TEST_CASE("laurent substitution") {
    std::vector<std::int64_t> n{-3, -2};
    CHECK(laurent_substitute(poly("x1*x2"), n, std::nullopt) == LaurentPoly({{-5, Integer(1)}}));
    auto f1 = laurent_substitute(poly(kExample), n, std::nullopt);
    CHECK(f1 == LaurentPoly({{-15, Integer(-2)}, {-8, Integer(1)}, {-6, Integer(-4)}, {-4, Integer(2)}}));
    CHECK(f1.eval(2) == q("1087/16384"));
    CHECK(f1.sign_at_power_of_two(1) == 1);
    std::vector<std::int64_t> one{1};
    CHECK(laurent_substitute(poly("x"), one, 0) == LaurentPoly({{1, Integer(-1)}}));
    std::vector<std::int64_t> huge{INT64_MAX / 2, 3};
    CHECK_THROWS_AS(laurent_substitute(poly("x1^3*x2"), huge, std::nullopt), std::overflow_error);
}

TEST_CASE("transform examples") {
    std::vector<int> neg{-1};
    CHECK(orthant_transform(poly("x"), neg) == poly("-x"));
    CHECK(orthant_transform(poly("x^2"), neg) == poly("x^2"));
    CHECK(range_transform(poly("x"), 0, {RangeBound::Kind::lower, 3}) == poly("x+3"));
    CHECK(range_transform(poly("x"), 0, {RangeBound::Kind::upper, 0}) == poly("-x"));
    CHECK(range_transform(poly("x^2-1"), 0, {RangeBound::Kind::lower, q("1/2")}) == poly("4*x^2+4*x-3"));
    auto d1 = difference_transform(poly("x"));
    CHECK(d1.variables() == std::vector<std::string>{"x", "x_m"});
    CHECK(d1 == MultiPoly({"x", "x_m"}, {{{1, 0}, Integer(1)}, {{0, 1}, Integer(-1)}}));
    auto d2 = difference_transform(poly("x^2"));
    CHECK(d2 == MultiPoly({"x", "x_m"}, {{{2, 0}, Integer(1)}, {{1, 1}, Integer(-2)}, {{0, 2}, Integer(1)}}));
}

TEST_CASE("partition properties on random polynomials") {
    Rng rng(11);
    for (int iter = 0; iter < 1000; ++iter) {
        auto f = random_multipoly(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), 30, 8, 50);
        auto part = support_partition(f);
        std::size_t covered = part.pos.size() + part.weak_neg.size() + part.strong_neg.size() + (part.const_coeff != 0);
        REQUIRE(covered == f.num_terms());
        for (const auto &p : part.pos) REQUIRE(f.coeff(p) > 0);
        for (const auto &[p, m] : part.weak_neg) {
            REQUIRE(f.coeff(p) < 0);
            REQUIRE(p[m] % 2 == 1);
            for (std::size_t j = 0; j < m; ++j) REQUIRE(p[j] % 2 == 0);
        }
        for (const auto &p : part.strong_neg) {
            REQUIRE(f.coeff(p) < 0);
            for (auto e : p) REQUIRE(e % 2 == 0);
        }
        for (std::size_t i = 1; i < part.pos.size(); ++i) REQUIRE(canonical_before(part.pos[i - 1], part.pos[i]));
        REQUIRE(evaluate(f, EvalPoint::ones(f.dimension())) == f.coefficient_sum());
    }
}

TEST_CASE("evaluation identities on random inputs") {
    Rng rng(12);
    for (int iter = 0; iter < 1000; ++iter) {
        const auto d = static_cast<std::size_t>(uniform(rng, 1, 4));
        auto f = random_multipoly(rng, d, 12, 5, 50);
        std::vector<Rational> x, y;
        for (std::size_t i = 0; i < d; ++i) {
            x.push_back(random_rational(rng, 20));
            y.push_back(random_rational(rng, 20));
        }
        const Rational fx = evaluate_naive(f, x);
        REQUIRE(evaluate(f, EvalPoint::from_rationals(x)) == fx);

        // dyadic and rational representations agree
        std::vector<Coordinate> dy;
        std::vector<Rational> dq;
        for (std::size_t i = 0; i < d; ++i) {
            DyadicPower p{uniform(rng, 0, 1) ? 1 : -1, uniform(rng, -30, 30)};
            dy.emplace_back(p);
            dq.push_back(p.value());
        }
        REQUIRE(evaluate(f, EvalPoint(dy)) == evaluate_naive(f, dq));

        // line substitution
        auto g = line_substitute(f, x, y);
        REQUIRE(g == expand_on_line(f, x, y));
        REQUIRE(g.eval(Rational(0)) == fx);
        REQUIRE(g.eval(Rational(1)) == evaluate_naive(f, y));
        REQUIRE(g.degree() <= static_cast<int>(f.total_degree()));

        // laurent substitution against dyadic evaluation
        std::vector<std::int64_t> n;
        for (std::size_t i = 0; i < d; ++i) n.push_back(uniform(rng, -6, 6));
        Moc mu = uniform(rng, 0, 1) ? Moc{} : Moc{static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(d) - 1))};
        auto f1 = laurent_substitute(f, n, mu);
        for (std::int64_t k : {1, 2, 3}) {
            std::vector<Coordinate> pt;
            for (std::size_t i = 0; i < d; ++i) pt.emplace_back(DyadicPower{mu == i ? -1 : 1, k * n[i]});
            REQUIRE(f1.eval(pow2q(k)) == evaluate(f, EvalPoint(pt)));
            REQUIRE(f1.sign_at_power_of_two(k) == sgn(f1.eval(pow2q(k))));
        }

        // orthant
        std::vector<int> s;
        std::vector<Rational> sx;
        for (std::size_t i = 0; i < d; ++i) {
            s.push_back(uniform(rng, 0, 1) ? 1 : -1);
            sx.push_back(s.back() * x[i]);
        }
        REQUIRE(evaluate_naive(orthant_transform(f, s), x) == evaluate_naive(f, sx));

        // range bounds, up to the positive scale b^deg
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(d) - 1));
        const Rational v = random_rational(rng, 9);
        const Rational scale = qpow(Rational(v.get_den()), f.degrees()[i]);
        auto lx = x;
        lx[i] = x[i] + v;
        REQUIRE(evaluate_naive(range_transform(f, i, {RangeBound::Kind::lower, v}), x) == scale * evaluate_naive(f, lx));
        auto ux = x;
        ux[i] = -x[i] - v;
        REQUIRE(evaluate_naive(range_transform(f, i, {RangeBound::Kind::upper, v}), x) == scale * evaluate_naive(f, ux));

        // difference
        if (d <= 3) {
            auto h = difference_transform(f);
            std::vector<Rational> uv = x, diff;
            uv.insert(uv.end(), y.begin(), y.end());
            for (std::size_t j = 0; j < d; ++j) diff.push_back(x[j] - y[j]);
            REQUIRE(evaluate_naive(h, uv) == evaluate_naive(f, diff));
        }
    }
}
