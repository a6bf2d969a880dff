#pragma once

#include <cstddef>
#include <vector>

#include "mtcodes/polyring.hpp"

namespace mtc {

/// Matrix with entries in F_q[x].
class PolyMatrix {
 public:
  static constexpr std::size_t kMaxDeterminantSize = 8;

  PolyMatrix(Field field, std::size_t rows, std::size_t cols);
  static PolyMatrix from_rows(const Field& f, const std::vector<std::vector<Poly>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Poly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Poly p);

  PolyMatrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> entries_;
};

/// Cofactor expansion; square matrices of size at most kMaxDeterminantSize.
Poly det(const PolyMatrix& m);

/// All k x k minors, rows and columns chosen as lexicographically ordered
/// subsets (row subset outer, column subset inner).
std::vector<Poly> minors(const PolyMatrix& m, std::size_t k);

/// Monic gcd of all k x k minors; throws AllMinorsZero if every one vanishes.
Poly determinantal_divisor(const PolyMatrix& m, std::size_t k);

/// Lexicographic k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace mtc
