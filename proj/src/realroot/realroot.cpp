#include "subtropical/realroot.hpp"

#include <algorithm>

namespace subtropical {

RealAlgebraicNumber RealAlgebraicNumber::exact(Rational value) {
    RealAlgebraicNumber x;
    x.exact_ = true;
    x.defining_ = UniPolyZ(std::vector<Integer>{-value.get_num(), value.get_den()});
    x.lower_ = value;
    x.upper_ = std::move(value);
    return x;
}

RealAlgebraicNumber RealAlgebraicNumber::isolated(UniPolyZ defining, Rational lower, Rational upper) {
    if (!(lower < upper)) throw std::invalid_argument("isolating interval must have lower < upper");
    if (sign_at(defining, lower) * sign_at(defining, upper) >= 0)
        throw std::invalid_argument("defining polynomial does not change sign across the interval");
    RealAlgebraicNumber x;
    x.exact_ = false;
    x.defining_ = std::move(defining);
    x.lower_ = std::move(lower);
    x.upper_ = std::move(upper);
    return x;
}

UniPolyZ squarefree_part(const UniPolyZ &f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
    UniPolyZ g = gcd(f, f.derivative());
    if (g.degree() <= 0) return primitive_part(f);
    return primitive_part(exact_quotient(primitive_part(f), g));
}

namespace {

UniPolyZ reversed(const UniPolyZ &p) {
    std::vector<Integer> v(p.coeffs().rbegin(), p.coeffs().rend());
    return UniPolyZ(std::move(v));
}

// 2^n p(x/2)
UniPolyZ halve(const UniPolyZ &p) {
    std::vector<Integer> v(p.coeffs());
    const auto n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        mpz_mul_2exp(v[i].get_mpz_t(), v[i].get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1 - i));
    return UniPolyZ(std::move(v));
}

Integer sum_coeffs(const UniPolyZ &p) {
    Integer s(0);
    for (const auto &c : p.coeffs()) s += c;
    return s;
}

struct Isolator {
    const UniPolyZ &sqf;
    std::vector<RealAlgebraicNumber> out;

    // local(x) is proportional to sqf((c + x) / 2^k) on x in ]0,1[.
    void node(const UniPolyZ &local, const Integer &c, unsigned long k) {
        std::size_t count = sign_variations(taylor_shift_one(reversed(local)));
        if (count == 0) return;
        bool ends_clear = local.coeff(0) != 0 && sum_coeffs(local) != 0;
        if (count == 1 && ends_clear) {
            Rational lo(c, pow2(k)), hi(Integer(c + 1), pow2(k));
            lo.canonicalize();
            hi.canonicalize();
            Rational mid = (lo + hi) / 2;
            if (sign_at(sqf, mid) == 0) {
                out.push_back(RealAlgebraicNumber::exact(std::move(mid)));
                return;
            }
            out.push_back(RealAlgebraicNumber::isolated(sqf, std::move(lo), std::move(hi)));
            return;
        }
        UniPolyZ left = primitive_part(halve(local));
        UniPolyZ right = taylor_shift_one(left);
        node(left, Integer(2 * c), k + 1);
        if (right.coeff(0) == 0) {
            Rational mid(Integer(2 * c + 1), pow2(k + 1));
            mid.canonicalize();
            out.push_back(RealAlgebraicNumber::exact(std::move(mid)));
        }
        node(right, Integer(2 * c + 1), k + 1);
    }
};

} // namespace

std::vector<RealAlgebraicNumber> isolate_in_unit_interval(const UniPolyZ &f) {
    if (f.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
    UniPolyZ sqf = squarefree_part(f);
    Isolator iso{sqf, {}};
    iso.node(sqf, Integer(0), 0);
    return std::move(iso.out);
}

namespace {

std::size_t variations_at(const std::vector<UniPolyQ> &seq, const Rational &x) {
    std::size_t count = 0;
    int last = 0;
    for (const auto &p : seq) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

} // namespace

std::size_t sturm_count(const UniPolyZ &f, const Rational &a, const Rational &b) {
    if (sign_at(f, a) == 0) throw EndpointIsRoot("polynomial vanishes at the left endpoint");
    if (sign_at(f, b) == 0) throw EndpointIsRoot("polynomial vanishes at the right endpoint");
    std::vector<UniPolyQ> seq{to_rational(f), to_rational(f.derivative())};
    while (!seq.back().is_zero()) {
        auto rem = divide(seq[seq.size() - 2], seq.back()).second;
        seq.push_back(-rem);
    }
    seq.pop_back();
    std::size_t va = variations_at(seq, a), vb = variations_at(seq, b);
    return va >= vb ? va - vb : vb - va;
}

namespace {

// One bisection step; returns false when the midpoint is the root.
bool bisect(const UniPolyZ &def, Rational &lo, Rational &hi, int lo_sign, Rational &root) {
    Rational mid = (lo + hi) / 2;
    int s = sign_at(def, mid);
    if (s == 0) {
        root = std::move(mid);
        return false;
    }
    if (s == lo_sign) lo = std::move(mid);
    else hi = std::move(mid);
    return true;
}

} // namespace

RealAlgebraicNumber refine(const RealAlgebraicNumber &x, const Rational &width) {
    if (x.is_exact()) return x;
    Rational lo = x.lower(), hi = x.upper(), root;
    const int lo_sign = sign_at(x.defining(), lo);
    while (hi - lo > width) {
        if (!bisect(x.defining(), lo, hi, lo_sign, root)) return RealAlgebraicNumber::exact(root);
    }
    return RealAlgebraicNumber::isolated(x.defining(), std::move(lo), std::move(hi));
}

RealAlgebraicNumber affine_image(const RealAlgebraicNumber &x, const Rational &a, const Rational &b) {
    if (sgn(b) == 0) return RealAlgebraicNumber::exact(a);
    if (x.is_exact()) return RealAlgebraicNumber::exact(a + b * x.value());

    // h(w) = def((w - a) / b), by Horner in the linear substitute.
    const Rational inv = 1 / b;
    const UniPolyQ linear(std::vector<Rational>{-a * inv, inv});
    UniPolyQ h;
    const auto &c = x.defining().coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) h = h * linear + UniPolyQ::constant(Rational(*it));
    UniPolyZ def = primitive_part(clear_denominators(h).poly);

    Rational lo = a + b * x.lower(), hi = a + b * x.upper();
    if (sgn(b) < 0) std::swap(lo, hi);
    return RealAlgebraicNumber::isolated(std::move(def), std::move(lo), std::move(hi));
}

namespace {

Rational decimal_resolution(unsigned digits) { return Rational(Integer(1), ipow(Integer(10), digits)); }

} // namespace

std::string approximate(const RealAlgebraicNumber &x, unsigned digits) {
    if (x.is_exact()) return to_decimal(x.value(), digits);
    RealAlgebraicNumber r = refine(x, decimal_resolution(digits + 2));
    if (r.is_exact()) return to_decimal(r.value(), digits);
    return to_decimal((r.lower() + r.upper()) / 2, digits);
}

ZeroCoordinate make_zero_coordinate(const RealAlgebraicNumber &x, unsigned digits) {
    std::string text = approximate(x, digits);
    if (x.is_exact()) return {x, text};
    const Rational target = parse_rational(text);
    auto inside = [&](const Rational &lo, const Rational &hi) { return lo < target && target < hi; };

    Rational lo = x.lower(), hi = x.upper(), root;
    const int lo_sign = sign_at(x.defining(), lo);
    std::optional<std::pair<Rational, Rational>> best;
    if (inside(lo, hi)) best.emplace(lo, hi);
    const Rational finest = decimal_resolution(digits + 2);
    while (hi - lo > finest) {
        if (!bisect(x.defining(), lo, hi, lo_sign, root)) return {RealAlgebraicNumber::exact(root), text};
        if (inside(lo, hi)) best.emplace(lo, hi);
    }
    if (!best) return {RealAlgebraicNumber::isolated(x.defining(), lo, hi), std::nullopt};
    return {RealAlgebraicNumber::isolated(x.defining(), best->first, best->second), text};
}

} // namespace subtropical
