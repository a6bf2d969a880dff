#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "mtcodes/matfq.hpp"

namespace mtc {

/**
 * @brief Linear code of length n over F_q, held by a generator matrix.
 *
 * The generator may carry dependent rows; every predicate works on its row
 * space. `basis()` is the canonical RREF basis.
 */
class LinearCode {
 public:
  LinearCode(Matrix generator);
  static LinearCode zero(const Field& f, std::size_t n) { return LinearCode(Matrix(f, 0, n)); }
  static LinearCode full(const Field& f, std::size_t n) { return LinearCode(Matrix::identity(f, n)); }

  const Field& field() const { return gen_.field(); }
  std::size_t length() const { return gen_.cols(); }
  std::size_t dimension() const { return basis_.rows(); }
  const Matrix& generator() const { return gen_; }
  const Matrix& basis() const { return basis_; }
  bool contains(std::span<const Code> v) const { return row_space_contains(basis_, v); }
  bool contains(const LinearCode& other) const { return row_space_contains(basis_, other.basis_); }
  bool same_space(const LinearCode& other) const { return basis_ == other.basis_; }

 private:
  Matrix gen_;
  Matrix basis_;
};

LinearCode dual(const LinearCode& c);
/// C intersected with its dual.
LinearCode hull(const LinearCode& c);

/// LCD by the hull route: hull dimension is zero.
bool is_lcd_by_hull(const LinearCode& c);
/// LCD by the Gram route: G G^T nonsingular for a full-rank G.
bool is_lcd_by_gram(const LinearCode& c);
/// Both routes; throws InternalDisagreement if they differ.
bool is_lcd(const LinearCode& c);

bool is_self_orthogonal(const LinearCode& c);
bool is_dual_containing(const LinearCode& c);

/// G G^T of the stored generator.
Matrix gram(const LinearCode& c);

inline constexpr std::uint64_t kDefaultDistanceCap = 100'000'000;

/// q^k, saturated at UINT64_MAX.
std::uint64_t message_count(const LinearCode& c);

/**
 * Exact minimum distance by message-space enumeration. Only messages whose
 * first nonzero coordinate is 1 are visited, split across `threads` workers
 * (0 = hardware concurrency). Throws CapExceeded when q^k exceeds `cap`.
 * Returns nullopt for the zero code.
 */
std::optional<std::size_t> min_distance(const LinearCode& c, std::uint64_t cap = kDefaultDistanceCap,
                                        unsigned threads = 0);

/**
 * Exact minimum distance from a parity-check matrix: the smallest number of
 * linearly dependent columns of a generator of the dual. Searches column
 * subsets of size 1..max_weight; returns nullopt if none of those sizes
 * yields a dependent set (the distance is then larger) or for the zero code.
 */
std::optional<std::size_t> min_distance_via_dual(const LinearCode& c, std::size_t max_weight);

/// A minimum-weight codeword found by the dual-column search, if any.
std::optional<Word> low_weight_codeword(const LinearCode& c, std::size_t max_weight);

struct CodeFacts {
  std::size_t length = 0;
  std::size_t dimension = 0;
  std::size_t dual_dimension = 0;
  std::size_t hull_dimension = 0;
  bool is_lcd = false;
  bool is_self_orthogonal = false;
  bool is_dual_containing = false;
  std::optional<std::size_t> min_distance;
};

CodeFacts facts(const LinearCode& c);

}  // namespace mtc
