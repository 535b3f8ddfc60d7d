#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "subtropical/poly.hpp"

namespace subtropical::cli {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &what, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_, column_;
};

class SyntaxError : public ParseError {
  public:
    using ParseError::ParseError;
};

/// Two operators in a row, e.g. "2*+x" or "x+-y".
class DuplicateOperator : public SyntaxError {
  public:
    using SyntaxError::SyntaxError;
};

class EmptyInput : public ParseError {
  public:
    using ParseError::ParseError;
};

/// Reads an expanded polynomial
///   poly   := [sign] term (sign term)*
///   term   := factor ('*' factor)*
///   factor := natural | var [('^' | '**') natural]
/// in one streaming pass. Variables are ordered lexicographically by name and
/// only variables with a nonzero exponent in some surviving term are kept.
MultiPoly parse_polynomial(std::istream &in);
MultiPoly parse_polynomial(std::string_view text);

} // namespace subtropical::cli
