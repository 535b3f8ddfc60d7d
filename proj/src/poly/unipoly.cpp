#include "subtropical/unipoly.hpp"

#include <stdexcept>

namespace subtropical {

int sign_at(const UniPolyZ &p, const Rational &x) {
    // den^n * p(num/den) = sum c_i num^i den^(n-i)
    if (p.is_zero()) return 0;
    const Integer &num = x.get_num();
    const Integer &den = x.get_den();
    Integer acc = p.leading();
    Integer den_pow(1);
    for (long i = p.degree() - 1; i >= 0; --i) {
        den_pow *= den;
        acc = acc * num + p[static_cast<std::size_t>(i)] * den_pow;
    }
    return sgn(acc);
}

UniPolyQ to_rational(const UniPolyZ &p) {
    std::vector<Rational> v;
    v.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) v.emplace_back(c);
    return UniPolyQ(std::move(v));
}

Integer content(const UniPolyZ &p) {
    Integer g(0);
    for (const auto &c : p.coeffs()) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

UniPolyZ primitive_part(const UniPolyZ &p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    if (sgn(p.leading()) < 0) g = -g;
    std::vector<Integer> v(p.coeffs());
    for (auto &c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return UniPolyZ(std::move(v));
}

std::pair<UniPolyQ, UniPolyQ> divide(const UniPolyQ &dividend, const UniPolyQ &divisor) {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<Rational> rem(dividend.coeffs());
    long n = dividend.degree(), m = divisor.degree();
    if (n < m) return {UniPolyQ(), dividend};
    std::vector<Rational> quot(static_cast<std::size_t>(n - m + 1));
    const Rational &lead = divisor.leading();
    for (long k = n - m; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + m)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (long j = 0; j <= m; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * divisor[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(m));
    return {UniPolyQ(std::move(quot)), UniPolyQ(std::move(rem))};
}

namespace {

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, over the integers.
UniPolyZ pseudo_remainder(const UniPolyZ &a, const UniPolyZ &b) {
    std::vector<Integer> r(a.coeffs());
    long m = b.degree();
    const Integer &lead = b.leading();
    for (long k = static_cast<long>(r.size()) - 1; k >= m; --k) {
        Integer top = r[static_cast<std::size_t>(k)];
        for (auto &c : r) c *= lead;
        if (top != 0)
            for (long j = 0; j <= m; ++j)
                r[static_cast<std::size_t>(k - m + j)] -= top * b[static_cast<std::size_t>(j)];
        r.pop_back();
    }
    return UniPolyZ(std::move(r));
}

} // namespace

UniPolyZ gcd(const UniPolyZ &a, const UniPolyZ &b) {
    UniPolyZ x = primitive_part(a), y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        UniPolyZ r = primitive_part(pseudo_remainder(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

UniPolyZ exact_quotient(const UniPolyZ &a, const UniPolyZ &b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<Integer> rem(a.coeffs());
    long n = a.degree(), m = b.degree();
    if (n < m) {
        if (a.is_zero()) return {};
        throw std::domain_error("inexact polynomial division");
    }
    std::vector<Integer> quot(static_cast<std::size_t>(n - m + 1));
    const Integer &lead = b.leading();
    for (long k = n - m; k >= 0; --k) {
        Integer &top = rem[static_cast<std::size_t>(k + m)];
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("inexact polynomial division");
        Integer q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (long j = 0; j <= m; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * b[static_cast<std::size_t>(j)];
        quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    for (long j = 0; j < m; ++j)
        if (rem[static_cast<std::size_t>(j)] != 0) throw std::domain_error("inexact polynomial division");
    return UniPolyZ(std::move(quot));
}

UniPolyZ taylor_shift_one(const UniPolyZ &p) {
    std::vector<Integer> c(p.coeffs());
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) c[j - 1] += c[j];
    return UniPolyZ(std::move(c));
}

std::size_t sign_variations(const UniPolyZ &p) {
    std::size_t count = 0;
    int last = 0;
    for (const auto &c : p.coeffs()) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

std::string to_string(const UniPolyZ &p, const std::string &var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        const Integer &c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i > 0) {
            if (mag != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

ClearedPoly clear_denominators(const UniPolyQ &g) {
    Integer den(1);
    for (const auto &c : g.coeffs()) den = lcm(den, c.get_den());
    std::vector<Integer> v;
    v.reserve(g.coeffs().size());
    for (const auto &c : g.coeffs()) {
        Integer k;
        mpz_divexact(k.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        v.push_back(c.get_num() * k);
    }
    return {UniPolyZ(std::move(v)), den};
}

} // namespace subtropical
