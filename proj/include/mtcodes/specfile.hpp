#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "mtcodes/mt.hpp"

namespace mtc {

/// Parse or semantic failure in a spec file; line and column are 1-based
/// (0 when the problem is not tied to one position).
class SpecError : public Error {
 public:
  SpecError(ErrorCode code, std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/**
 * Sectioned plain-text spec:
 *
 *     # comment
 *     [field]
 *     p = 2
 *     degree = 2
 *     modulus = [1, 1, 1]
 *
 *     [blocks]
 *     lengths = [5, 5]
 *     shifts = ["w", "w"]
 *
 *     [[generator]]
 *     blocks = ["1 + x + w^2*x^2", "1 + x + w*x^2 + x^3"]
 *
 * `modulus` may be omitted when degree = 1. Arrays may span lines.
 */
MTSpec parse_spec(std::string_view text);
MTSpec load_spec(const std::filesystem::path& path);

/// Inverse of parse_spec, up to comments and layout.
std::string write_spec(const MTSpec& spec, std::string_view comment = {});

}  // namespace mtc
