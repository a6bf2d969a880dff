#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mtcodes/galois.hpp"

namespace mtc {

/// A word (row vector) of raw codes; the field travels alongside it.
using Word = std::vector<Code>;

/// Dense row-major matrix over F_q.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Code> entries);

  static Matrix identity(const Field& f, std::size_t k);
  /// Rows must all have `cols` entries; `cols` is needed for the empty case.
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Word>& rows);
  static Matrix from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Code at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Code& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const Code> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Code> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  Word row_word(std::size_t r) const { return Word(row(r).begin(), row(r).end()); }
  std::vector<Word> row_words() const;
  std::span<const Code> entries() const { return entries_; }

  void append_row(std::span<const Code> r);
  bool is_zero() const;

  /// Columns [first, first + count) as a new matrix.
  Matrix columns(std::size_t first, std::size_t count) const;

  bool operator==(const Matrix& b) const {
    return field_ == b.field_ && rows_ == b.rows_ && cols_ == b.cols_ && entries_ == b.entries_;
  }

  /// Bracketed, one row per line: "[1, w^2, 0]".
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> entries_;
};

struct Echelon {
  Matrix reduced;  // RREF with zero rows dropped
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Nonzero rows of the RREF: a canonical basis of the row space.
Matrix row_basis(const Matrix& m);

Matrix transpose(const Matrix& m);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

Code det(const Matrix& m);
bool is_nonsingular(const Matrix& m);

/// Basis rows of { v : m * v^T = 0 }.
Matrix nullspace(const Matrix& m);

bool row_space_equal(const Matrix& a, const Matrix& b);
bool row_space_contains(const Matrix& a, std::span<const Code> v);
/// a's row space contains every row of b.
bool row_space_contains(const Matrix& a, const Matrix& b);
/// Basis of rowspace(a) intersected with rowspace(b).
Matrix row_space_intersection(const Matrix& a, const Matrix& b);

Code dot(const Field& f, std::span<const Code> a, std::span<const Code> b);
std::size_t weight(std::span<const Code> v);

/// Incrementally maintained echelon basis; `insert` reports whether the
/// vector enlarged the span.
class RowBasis {
 public:
  RowBasis(Field field, std::size_t cols);

  bool insert(std::span<const Code> v);
  bool contains(std::span<const Code> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  Matrix matrix() const;

 private:
  Word reduce(std::span<const Code> v) const;

  Field field_;
  std::size_t cols_;
  std::vector<Word> rows_;  // each row monic at its pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace mtc
