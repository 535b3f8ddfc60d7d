#pragma once

#include <string>
#include <vector>

#include "subtropical/cli/parser.hpp"
#include "subtropical/poly.hpp"

namespace testing_support {

inline const char *const kExample = "-2*x1^5+x1^2*x2-3*x1^2-x2^3+2*x2^2";

inline subtropical::MultiPoly poly(const std::string &text) { return subtropical::cli::parse_polynomial(text); }

inline subtropical::Rational q(const std::string &text) { return subtropical::parse_rational(text); }

inline std::vector<subtropical::Rational> qs(std::initializer_list<const char *> items) {
    std::vector<subtropical::Rational> v;
    for (auto s : items) v.push_back(subtropical::parse_rational(s));
    return v;
}

inline subtropical::UniPolyZ zpoly(std::initializer_list<long> low_to_high) {
    std::vector<subtropical::Integer> c;
    for (long v : low_to_high) c.emplace_back(v);
    return subtropical::UniPolyZ(std::move(c));
}

} // namespace testing_support
