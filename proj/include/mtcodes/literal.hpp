#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "mtcodes/polyring.hpp"

namespace mtc {

/// Thrown for malformed literals; `column` is 1-based within the literal.
class LiteralError : public Error {
 public:
  LiteralError(std::size_t column, const std::string& what)
      : Error(ErrorCode::ParseError, what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/**
 * Element literal: a decimal integer (prime subfield, reduced mod p), `w`,
 * `w^k`, or a coefficient tuple `(c0,c1,...)` ascending in w. A leading `-`
 * negates. `ω` is accepted as a synonym for `w`.
 */
Code parse_element(const Field& f, std::string_view text);

/// Polynomial literal: terms `c`, `x`, `x^e`, `c*x^e` joined by `+` / `-`.
/// Example: `w^3 + w^7*x + w^6*x^2`.
Poly parse_poly(const Field& f, std::string_view text);

}  // namespace mtc
