#pragma once

#include <string>
#include <string_view>

#include "nilrad/error.hpp"
#include "nilrad/law.hpp"

namespace nilrad {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Reads the line-oriented algebra format:
///
///   # comment
///   dim 7 param L
///   [1,2] = 4
///   [1,4] = 2*7 + 1/2*5
///   [3,4] = (L - 1)*7
///
/// The last factor of each term is the target index; the factors before it multiply into
/// a coefficient that must stay affine in the parameter.
LieLaw parse_law(std::string_view text);

/// Canonical text; parse_law(serialize(law)) == law.
std::string serialize(const LieLaw& law);

}  // namespace nilrad
