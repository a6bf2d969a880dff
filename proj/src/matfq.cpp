#include "mtcodes/matfq.hpp"

#include <algorithm>

namespace mtc {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Code> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw Error(ErrorCode::ShapeMismatch, "entry count does not match rows x cols");
}

Matrix Matrix::identity(const Field& f, std::size_t k) {
  Matrix m(f, k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Word>& rows) {
  Matrix m(f, 0, cols);
  for (const Word& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, 0, cols);
  for (const auto& r : rows) {
    Word w;
    for (long long v : r) w.push_back(f.from_int(v));
    m.append_row(w);
  }
  return m;
}

std::vector<Word> Matrix::row_words() const {
  std::vector<Word> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_word(r));
  return out;
}

void Matrix::append_row(std::span<const Code> r) {
  if (r.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "row length does not match column count");
  entries_.insert(entries_.end(), r.begin(), r.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Code c) { return c == 0; });
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw Error(ErrorCode::ShapeMismatch, "column range out of bounds");
  Matrix out(field_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out.at(r, c) = at(r, first + c);
  return out;
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += field_.format(at(r, c));
    }
    out += "]\n";
  }
  return out;
}

Echelon rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t piv = lead_row;
    while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead_row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(lead_row, c));
    const Code inv = f.inv(a.at(lead_row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a.at(lead_row, c) = f.mul(a.at(lead_row, c), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row) continue;
      const Code factor = a.at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(lead_row, c)));
    }
    pivots.push_back(col);
    ++lead_row;
  }
  const std::size_t rk = pivots.size();
  Matrix reduced(f, rk, a.cols());
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) reduced.at(r, c) = a.at(r, c);
  return {std::move(reduced), rk, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }
Matrix row_basis(const Matrix& m) { return rref(m).reduced; }

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows())
    throw Error(ErrorCode::ShapeMismatch, "inner dimensions " + std::to_string(a.cols()) + " and " +
                                              std::to_string(b.rows()) + " differ");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Code x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
    }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "vstack of different widths");
  Matrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

Code det(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const Field& f = m.field();
  Matrix a = m;
  const std::size_t n = a.rows();
  Code result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(col, c));
      result = f.neg(result);
    }
    const Code p = a.at(col, col);
    result = f.mul(result, p);
    const Code inv = f.inv(p);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Code factor = f.mul(a.at(r, col), inv);
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c) a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(col, c)));
    }
  }
  return result;
}

bool is_nonsingular(const Matrix& m) { return det(m) != 0; }

Matrix nullspace(const Matrix& m) {
  const Field& f = m.field();
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  Matrix out(f, 0, m.cols());
  Word v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), Code{0});
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = f.neg(e.reduced.at(r, free));
    out.append_row(v);
  }
  return out;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "row spaces of different widths");
  return rref(a).reduced == rref(b).reduced;
}

bool row_space_contains(const Matrix& a, std::span<const Code> v) {
  if (v.size() != a.cols()) throw Error(ErrorCode::ShapeMismatch, "vector length does not match column count");
  RowBasis basis(a.field(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) basis.insert(a.row(r));
  return basis.contains(v);
}

bool row_space_contains(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "row spaces of different widths");
  RowBasis basis(a.field(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) basis.insert(a.row(r));
  for (std::size_t r = 0; r < b.rows(); ++r)
    if (!basis.contains(b.row(r))) return false;
  return true;
}

Matrix row_space_intersection(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "row spaces of different widths");
  const Field& f = a.field();
  const Matrix ba = row_basis(a);
  const Matrix bb = row_basis(b);
  // x*A = y*B  <=>  (x, y) * [A; -B] = 0
  Matrix neg_b = bb;
  for (std::size_t r = 0; r < neg_b.rows(); ++r)
    for (std::size_t c = 0; c < neg_b.cols(); ++c) neg_b.at(r, c) = f.neg(neg_b.at(r, c));
  const Matrix kernel = nullspace(transpose(vstack(ba, neg_b)));
  Matrix span(f, 0, a.cols());
  if (ba.rows() > 0 && kernel.rows() > 0) span = kernel.columns(0, ba.rows()) * ba;
  return row_basis(span);
}

Code dot(const Field& f, std::span<const Code> a, std::span<const Code> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeMismatch, "dot product of different lengths");
  Code acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

std::size_t weight(std::span<const Code> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Code c) { return c != 0; }));
}

RowBasis::RowBasis(Field field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

Word RowBasis::reduce(std::span<const Code> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "vector length does not match column count");
  Word w(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Code factor = w[pivots_[i]];
    if (factor == 0) continue;
    const Word& r = rows_[i];
    for (std::size_t c = pivots_[i]; c < cols_; ++c) w[c] = field_.sub(w[c], field_.mul(factor, r[c]));
  }
  return w;
}

bool RowBasis::insert(std::span<const Code> v) {
  Word w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](Code c) { return c != 0; });
  if (it == w.end()) return false;
  const std::size_t piv = static_cast<std::size_t>(it - w.begin());
  const Code inv = field_.inv(w[piv]);
  for (std::size_t c = piv; c < cols_; ++c) w[c] = field_.mul(w[c], inv);
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

bool RowBasis::contains(std::span<const Code> v) const {
  const Word w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](Code c) { return c == 0; });
}

Matrix RowBasis::matrix() const { return Matrix::from_rows(field_, cols_, rows_); }

}  // namespace mtc
