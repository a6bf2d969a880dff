#include "mtcodes/polymat.hpp"

namespace mtc {

PolyMatrix::PolyMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Poly(field)) {}

PolyMatrix PolyMatrix::from_rows(const Field& f, const std::vector<std::vector<Poly>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::ShapeMismatch, "ragged polynomial matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Poly p) {
  require_same_field(field_, p.field());
  entries_[r * cols_ + c] = std::move(p);
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) const {
  PolyMatrix out(field_, row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c) out.set(r, c, at(row_idx[r], col_idx[c]));
  return out;
}

std::string PolyMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += at(r, c).to_string();
    }
    out += "]\n";
  }
  return out;
}

namespace {

// Laplace expansion along the first of the selected rows.
Poly cofactor_det(const PolyMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
  const Field& f = m.field();
  if (cols.empty()) return Poly::one(f);
  Poly acc(f);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const Poly& entry = m.at(row, cols[i]);
    if (entry.is_zero()) continue;
    const std::size_t c = cols[i];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
    Poly term = entry * cofactor_det(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(i), c);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

Poly det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square polynomial matrix");
  if (m.rows() > PolyMatrix::kMaxDeterminantSize)
    throw Error(ErrorCode::TooLarge, "cofactor expansion limited to size " +
                                         std::to_string(PolyMatrix::kMaxDeterminantSize));
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor_det(m, 0, cols);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Poly> minors(const PolyMatrix& m, std::size_t k) {
  if (k == 0 || k > m.rows() || k > m.cols())
    throw Error(ErrorCode::BadSize, "minor size " + std::to_string(k) + " for a " + std::to_string(m.rows()) +
                                        "x" + std::to_string(m.cols()) + " matrix");
  std::vector<Poly> out;
  const auto row_sets = subsets(m.rows(), k);
  const auto col_sets = subsets(m.cols(), k);
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) out.push_back(det(m.submatrix(rs, cs)));
  return out;
}

Poly determinantal_divisor(const PolyMatrix& m, std::size_t k) {
  if (k == 0 || k > m.rows() || k > m.cols())
    throw Error(ErrorCode::BadSize, "minor size " + std::to_string(k) + " out of range");
  std::optional<Poly> acc;
  for (const auto& rs : subsets(m.rows(), k)) {
    for (const auto& cs : subsets(m.cols(), k)) {
      const Poly minor = det(m.submatrix(rs, cs));
      if (minor.is_zero()) continue;
      acc = acc ? gcd(*acc, minor) : minor.monic();
      if (acc->deg() == 0) return *acc;
    }
  }
  if (!acc) throw Error(ErrorCode::AllMinorsZero, "every " + std::to_string(k) + "x" + std::to_string(k) + " minor is zero");
  return *acc;
}

}  // namespace mtc
