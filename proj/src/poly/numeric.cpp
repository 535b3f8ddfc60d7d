#include "subtropical/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace subtropical {

namespace {

bool all_digits(const std::string &s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string &text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    Rational r;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("not a rational: " + text);
        Integer d(den, 10);
        if (d == 0) throw std::invalid_argument("zero denominator: " + text);
        r = Rational(Integer(num, 10), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || !all_digits(frac)) throw std::invalid_argument("not a rational: " + text);
        r = Rational(Integer(whole + frac, 10), ipow(Integer(10), frac.size()));
    } else {
        if (!all_digits(s)) throw std::invalid_argument("not a rational: " + text);
        r = Rational(Integer(s, 10));
    }
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

Integer common_denominator(std::span<const Rational> values) {
    Integer m(1);
    for (const auto &v : values) m = lcm(m, v.get_den());
    return m;
}

std::string to_decimal(const Rational &x, unsigned digits) {
    Integer scale = ipow(Integer(10), digits);
    Integer num = abs(x.get_num()) * scale * 2 + x.get_den();
    Integer den = x.get_den() * 2;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::string s = q.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (sgn(x) < 0 && q != 0) s.insert(0, "-");
    return s;
}

} // namespace subtropical
