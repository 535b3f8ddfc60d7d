#include "subtropical/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace subtropical {

std::uint64_t total_degree(const ExponentVector &p) {
    return std::accumulate(p.begin(), p.end(), std::uint64_t{0});
}

bool canonical_before(const ExponentVector &a, const ExponentVector &b) {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::vector<std::string> variables, std::vector<Term> terms)
    : variables_(std::move(variables)) {
    for (const auto &t : terms)
        if (t.exponents.size() != variables_.size())
            throw std::invalid_argument("exponent vector length does not match the number of variables");
    std::sort(terms.begin(), terms.end(),
              [](const Term &a, const Term &b) { return canonical_before(a.exponents, b.exponents); });
    terms_.reserve(terms.size());
    for (auto &t : terms) {
        if (!terms_.empty() && terms_.back().exponents == t.exponents) {
            terms_.back().coeff += t.coeff;
        } else {
            if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
            terms_.push_back(std::move(t));
        }
    }
    if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
}

Integer MultiPoly::coeff(const ExponentVector &p) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const Term &t, const ExponentVector &v) { return canonical_before(t.exponents, v); });
    if (it != terms_.end() && it->exponents == p) return it->coeff;
    return 0;
}

Integer MultiPoly::coefficient_sum() const {
    Integer s(0);
    for (const auto &t : terms_) s += t.coeff;
    return s;
}

std::uint64_t MultiPoly::total_degree() const {
    // Canonical order puts the largest total degree first.
    return terms_.empty() ? 0 : subtropical::total_degree(terms_.front().exponents);
}

std::vector<Exponent> MultiPoly::degrees() const {
    std::vector<Exponent> deg(variables_.size(), 0);
    for (const auto &t : terms_)
        for (std::size_t i = 0; i < deg.size(); ++i) deg[i] = std::max(deg[i], t.exponents[i]);
    return deg;
}

Exponent MultiPoly::max_degree() const {
    auto deg = degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto &t : r.terms_) t.coeff = -t.coeff;
    return r;
}

std::string to_string(const MultiPoly &f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto &t : f.terms()) {
        bool negative = sgn(t.coeff) < 0;
        if (negative) out += '-';
        else if (!out.empty()) out += '+';
        Integer mag = abs(t.coeff);
        bool constant = std::all_of(t.exponents.begin(), t.exponents.end(), [](Exponent e) { return e == 0; });
        bool first = true;
        if (mag != 1 || constant) {
            out += mag.get_str();
            first = false;
        }
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            if (t.exponents[i] == 0) continue;
            if (!first) out += '*';
            first = false;
            out += f.variables()[i];
            if (t.exponents[i] > 1) out += '^' + std::to_string(t.exponents[i]);
        }
    }
    return out;
}

Moc moc(const ExponentVector &p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] % 2 == 1) return i;
    return std::nullopt;
}

SupportPartition support_partition(const MultiPoly &f) {
    SupportPartition part;
    part.const_coeff = 0;
    for (const auto &t : f.terms()) {
        bool origin = std::all_of(t.exponents.begin(), t.exponents.end(), [](Exponent e) { return e == 0; });
        if (origin) {
            part.const_coeff = t.coeff;
        } else if (sgn(t.coeff) > 0) {
            part.pos.push_back(t.exponents);
        } else if (auto m = moc(t.exponents)) {
            part.weak_neg.push_back({t.exponents, *m});
        } else {
            part.strong_neg.push_back(t.exponents);
        }
    }
    return part;
}

// ---------------------------------------------------------------------------
// Points and evaluation

Rational DyadicPower::value() const {
    Rational v = pow2q(exp);
    return sign < 0 ? Rational(-v) : v;
}

Rational value_of(const Coordinate &c) {
    if (const auto *q = std::get_if<Rational>(&c)) return *q;
    return std::get<DyadicPower>(c).value();
}

EvalPoint EvalPoint::ones(std::size_t d) { return EvalPoint(std::vector<Coordinate>(d, Coordinate(Rational(1)))); }

EvalPoint EvalPoint::from_rationals(std::span<const Rational> values) {
    return EvalPoint(std::vector<Coordinate>(values.begin(), values.end()));
}

std::vector<Rational> EvalPoint::to_rationals() const {
    std::vector<Rational> out;
    out.reserve(coords_.size());
    for (const auto &c : coords_) out.push_back(value_of(c));
    return out;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

// sum c_i 2^(e_i), exactly.
Rational sum_of_powers_of_two(std::vector<std::pair<std::int64_t, Integer>> terms) {
    if (terms.empty()) return 0;
    std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) { return a.first > b.first; });
    Integer acc = terms.front().second;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        auto shift = static_cast<mp_bitcnt_t>(terms[i - 1].first - terms[i].first);
        mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), shift);
        acc += terms[i].second;
    }
    return Rational(acc) * pow2q(terms.back().first);
}

} // namespace

Rational evaluate(const MultiPoly &f, const EvalPoint &point) {
    if (point.dimension() != f.dimension()) throw std::invalid_argument("point dimension mismatch");
    const std::size_t d = f.dimension();

    std::vector<const Rational *> rational(d, nullptr);
    std::vector<const DyadicPower *> dyadic(d, nullptr);
    bool all_ones = true;
    for (std::size_t i = 0; i < d; ++i) {
        if (const auto *q = std::get_if<Rational>(&point[i])) {
            rational[i] = q;
            all_ones = all_ones && *q == 1;
        } else {
            dyadic[i] = &std::get<DyadicPower>(point[i]);
            all_ones = false;
        }
    }
    if (all_ones) return Rational(f.coefficient_sum());

    // Each term is (rational part) * 2^e; the rational part is an integer when
    // no rational coordinate is present, which is the common case.
    std::vector<std::unordered_map<Exponent, Rational>> cache(d);
    auto rational_power = [&](std::size_t i, Exponent e) -> const Rational & {
        auto [it, inserted] = cache[i].try_emplace(e);
        if (inserted) it->second = qpow(*rational[i], e);
        return it->second;
    };

    bool integral = std::all_of(rational.begin(), rational.end(),
                                [](const Rational *q) { return q == nullptr || q->get_den() == 1; });
    std::vector<std::pair<std::int64_t, Integer>> integral_terms;
    Rational rational_sum(0);
    std::vector<std::pair<std::int64_t, Rational>> rational_terms;

    for (const auto &t : f.terms()) {
        std::int64_t e = 0;
        int s = 1;
        Rational factor(1);
        bool zero = false;
        for (std::size_t i = 0; i < d; ++i) {
            Exponent p = t.exponents[i];
            if (p == 0) continue;
            if (dyadic[i]) {
                e = checked_add(e, checked_mul(dyadic[i]->exp, p));
                if (dyadic[i]->sign < 0 && (p % 2 == 1)) s = -s;
            } else if (*rational[i] == 0) {
                zero = true;
                break;
            } else if (*rational[i] != 1) {
                factor *= rational_power(i, p);
            }
        }
        if (zero) continue;
        if (integral) {
            Integer v = t.coeff * factor.get_num();
            if (s < 0) v = -v;
            integral_terms.emplace_back(e, std::move(v));
        } else {
            Rational v = Rational(t.coeff) * factor;
            if (s < 0) v = -v;
            rational_terms.emplace_back(e, std::move(v));
        }
    }
    if (integral) return sum_of_powers_of_two(std::move(integral_terms));

    // Bring everything to a common denominator, then reuse the integer path.
    Integer den(1);
    for (const auto &[e, v] : rational_terms) den = lcm(den, v.get_den());
    for (auto &[e, v] : rational_terms) {
        Rational scaled = v * den;
        integral_terms.emplace_back(e, scaled.get_num());
    }
    return sum_of_powers_of_two(std::move(integral_terms)) / den;
}

// ---------------------------------------------------------------------------
// Line substitution

namespace {

struct LineContext {
    const std::vector<Term> *terms;
    std::vector<std::size_t> order; // term indices sorted lexicographically
    // powers[i][j] = (a_i + b_i y)^j * den_i^(E_i - j)
    std::vector<std::vector<UniPolyZ>> powers;
};

UniPolyZ horner(const LineContext &ctx, std::size_t lo, std::size_t hi, std::size_t var) {
    const auto &terms = *ctx.terms;
    if (var == ctx.powers.size()) {
        Integer s(0);
        for (std::size_t i = lo; i < hi; ++i) s += terms[ctx.order[i]].coeff;
        return UniPolyZ::constant(s);
    }
    UniPolyZ acc;
    std::size_t i = lo;
    while (i < hi) {
        Exponent e = terms[ctx.order[i]].exponents[var];
        std::size_t j = i;
        while (j < hi && terms[ctx.order[j]].exponents[var] == e) ++j;
        UniPolyZ inner = horner(ctx, i, j, var + 1);
        acc = acc + ctx.powers[var][e] * inner;
        i = j;
    }
    return acc;
}

} // namespace

UniPolyQ line_substitute(const MultiPoly &f, std::span<const Rational> p, std::span<const Rational> q) {
    const std::size_t d = f.dimension();
    if (p.size() != d || q.size() != d) throw std::invalid_argument("line endpoint dimension mismatch");
    if (f.is_zero()) return {};

    LineContext ctx;
    ctx.terms = &f.terms();
    ctx.order.resize(f.num_terms());
    std::iota(ctx.order.begin(), ctx.order.end(), std::size_t{0});
    std::sort(ctx.order.begin(), ctx.order.end(), [&](std::size_t a, std::size_t b) {
        return f.terms()[a].exponents < f.terms()[b].exponents;
    });

    auto deg = f.degrees();
    Integer scale(1);
    ctx.powers.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        Integer den = lcm(p[i].get_den(), q[i].get_den());
        Rational a = p[i] * den, b = (q[i] - p[i]) * den;
        UniPolyZ linear(std::vector<Integer>{a.get_num(), b.get_num()});
        auto &pw = ctx.powers[i];
        pw.resize(deg[i] + 1);
        std::vector<Integer> den_pow(deg[i] + 1);
        den_pow[0] = 1;
        for (Exponent j = 1; j <= deg[i]; ++j) den_pow[j] = den_pow[j - 1] * den;
        UniPolyZ lp = UniPolyZ::constant(1);
        for (Exponent j = 0; j <= deg[i]; ++j) {
            pw[j] = den_pow[deg[i] - j] * lp;
            lp = lp * linear;
        }
        scale *= den_pow[deg[i]];
    }

    UniPolyZ scaled = horner(ctx, 0, ctx.order.size(), 0);
    std::vector<Rational> coeffs;
    coeffs.reserve(scaled.coeffs().size());
    for (const auto &c : scaled.coeffs()) {
        Rational r(c, scale);
        r.canonicalize();
        coeffs.push_back(std::move(r));
    }
    return UniPolyQ(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Laurent substitution

LaurentPoly::LaurentPoly(std::map<std::int64_t, Integer> terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto &kv) { return kv.second == 0; });
}

Rational LaurentPoly::eval(const Rational &y) const {
    if (terms_.empty()) return 0;
    if (y == 0) {
        if (terms_.begin()->first < 0) throw std::domain_error("Laurent polynomial evaluated at zero");
        auto it = terms_.find(0);
        return it == terms_.end() ? Rational(0) : Rational(it->second);
    }
    Rational acc(0);
    for (const auto &[e, c] : terms_) {
        Rational yp = qpow(y, static_cast<unsigned long>(e < 0 ? -e : e));
        acc += e < 0 ? Rational(c / yp) : Rational(c * yp);
    }
    return acc;
}

int LaurentPoly::sign_at_power_of_two(std::int64_t k) const {
    if (terms_.empty()) return 0;
    auto it = terms_.rbegin();
    Integer acc = it->second;
    std::int64_t prev = it->first;
    for (++it; it != terms_.rend(); ++it) {
        std::int64_t shift = checked_mul(k, checked_add(prev, -it->first));
        mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
        acc += it->second;
        prev = it->first;
    }
    return sgn(acc);
}

LaurentPoly laurent_substitute(const MultiPoly &f, std::span<const std::int64_t> n, Moc mu) {
    if (n.size() != f.dimension()) throw std::invalid_argument("direction dimension mismatch");
    std::map<std::int64_t, Integer> terms;
    for (const auto &t : f.terms()) {
        std::int64_t e = 0;
        for (std::size_t i = 0; i < n.size(); ++i)
            e = checked_add(e, checked_mul(n[i], static_cast<std::int64_t>(t.exponents[i])));
        bool flip = mu && t.exponents[*mu] % 2 == 1;
        auto &slot = terms[e];
        if (flip) slot -= t.coeff;
        else slot += t.coeff;
    }
    return LaurentPoly(std::move(terms));
}

// ---------------------------------------------------------------------------
// Transformations

MultiPoly orthant_transform(const MultiPoly &f, std::span<const int> signs) {
    if (signs.size() != f.dimension()) throw std::invalid_argument("sign vector dimension mismatch");
    std::vector<Term> terms = f.terms();
    for (auto &t : terms) {
        bool flip = false;
        for (std::size_t i = 0; i < signs.size(); ++i)
            if (signs[i] < 0 && t.exponents[i] % 2 == 1) flip = !flip;
        if (flip) t.coeff = -t.coeff;
    }
    return MultiPoly(f.variables(), std::move(terms));
}

namespace {

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

MultiPoly range_transform(const MultiPoly &f, std::size_t index, const RangeBound &bound) {
    if (index >= f.dimension()) throw std::invalid_argument("variable index out of range");
    const Integer &a = bound.value.get_num();
    const Integer &b = bound.value.get_den();
    const Exponent top = f.degrees()[index];
    std::vector<Term> out;
    for (const auto &t : f.terms()) {
        Exponent e = t.exponents[index];
        // (x + a/b)^e * b^top = sum_k C(e,k) x^k a^(e-k) b^(top-e+k)
        for (Exponent k = 0; k <= e; ++k) {
            Term nt{t.exponents, t.coeff * binomial(e, k) * ipow(a, e - k) * ipow(b, top - e + k)};
            if (bound.kind == RangeBound::Kind::upper && e % 2 == 1) nt.coeff = -nt.coeff;
            nt.exponents[index] = k;
            if (nt.coeff != 0) out.push_back(std::move(nt));
        }
    }
    return MultiPoly(f.variables(), std::move(out));
}

MultiPoly difference_transform(const MultiPoly &f) {
    const std::size_t d = f.dimension();
    std::vector<std::string> vars = f.variables();
    for (std::size_t i = 0; i < d; ++i) vars.push_back(f.variables()[i] + "_m");

    std::vector<Term> out;
    for (const auto &t : f.terms()) {
        // Expand prod_i (x_i - x_i')^(e_i) one variable at a time.
        std::vector<Term> partial{Term{ExponentVector(2 * d, 0), t.coeff}};
        for (std::size_t i = 0; i < d; ++i) {
            Exponent e = t.exponents[i];
            if (e == 0) continue;
            std::vector<Term> next;
            next.reserve(partial.size() * (e + 1));
            for (const auto &pt : partial) {
                for (Exponent k = 0; k <= e; ++k) {
                    Term nt = pt;
                    nt.exponents[i] = e - k;
                    nt.exponents[d + i] = k;
                    nt.coeff *= binomial(e, k);
                    if (k % 2 == 1) nt.coeff = -nt.coeff;
                    next.push_back(std::move(nt));
                }
            }
            partial = std::move(next);
        }
        for (auto &pt : partial) out.push_back(std::move(pt));
    }
    return MultiPoly(std::move(vars), std::move(out));
}

} // namespace subtropical
