#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <gmpxx.h>

namespace subtropical {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer lcm(const Integer &a, const Integer &b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer &a, const Integer &b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// 2^e for e >= 0.
inline Integer pow2(std::uint64_t e) {
    Integer r;
    mpz_setbit(r.get_mpz_t(), e);
    return r;
}

// 2^e for any integer e, exactly.
inline Rational pow2q(std::int64_t e) {
    Rational r(1);
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return r;
}

inline Integer ipow(const Integer &base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational qpow(const Rational &base, unsigned long e) {
    Integer num = ipow(base.get_num(), e);
    Integer den = ipow(base.get_den(), e);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Integer &x) { return sgn(x); }
inline int sign(const Rational &x) { return sgn(x); }

// "p" or "p/q" in lowest terms.
inline std::string to_string(const Integer &x) { return x.get_str(); }
inline std::string to_string(const Rational &x) { return x.get_str(); }

// Parses "p" or "p/q" (optionally signed); throws std::invalid_argument.
Rational parse_rational(const std::string &text);

// Least common multiple of all denominators.
Integer common_denominator(std::span<const Rational> values);

// Decimal rendering of a rational rounded half away from zero to `digits`
// fractional digits.
std::string to_decimal(const Rational &x, unsigned digits);

} // namespace subtropical
