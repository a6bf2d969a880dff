#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mtcodes/code.hpp"
#include "mtcodes/polymat.hpp"
#include "mtcodes/polyring.hpp"

namespace mtc {

/**
 * @brief A Lambda-multi-twisted code given by module generators.
 *
 * Block i has length m_i and shift constant lambda_i; generator row k holds
 * one polynomial per block, reduced mod x^{m_i} - lambda_i on construction.
 * Block and generator indices are 0-based throughout the API.
 */
class MTSpec {
 public:
  static MTSpec make(Field field, std::vector<std::size_t> lengths, std::vector<Code> shifts,
                     std::vector<std::vector<Poly>> generators);

  const Field& field() const { return field_; }
  std::size_t ell() const { return lengths_.size(); }
  std::size_t rho() const { return gens_.size(); }
  std::size_t n() const { return n_; }
  std::size_t length(std::size_t i) const { return lengths_.at(i); }
  const std::vector<std::size_t>& lengths() const { return lengths_; }
  Code shift(std::size_t i) const { return shifts_.at(i); }
  const std::vector<Code>& shifts() const { return shifts_; }
  const std::vector<std::vector<Poly>>& generators() const { return gens_; }
  const Poly& generator(std::size_t k, std::size_t i) const { return gens_.at(k).at(i); }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  std::size_t min_length() const;
  /// x^{m_i} - lambda_i
  Poly modulus(std::size_t i) const;

  /// Generator row k written out as a length-n word.
  Word generator_word(std::size_t k) const;
  /// Splits a length-n word into block polynomials.
  std::vector<Poly> to_blocks(std::span<const Code> word) const;
  Word from_blocks(const std::vector<Poly>& blocks) const;

  /// Copy with lambda_i replaced; generators are re-reduced.
  MTSpec with_shift(std::size_t i, Code lambda) const;

 private:
  MTSpec(Field f) : field_(std::move(f)) {}

  Field field_;
  std::vector<std::size_t> lengths_;
  std::vector<std::size_t> offsets_;
  std::vector<Code> shifts_;
  std::vector<std::vector<Poly>> gens_;
  std::size_t n_ = 0;
};

/// The blockwise twisted rotation T_Lambda.
Word mt_shift(const Field& f, const std::vector<std::size_t>& lengths, const std::vector<Code>& shifts,
              std::span<const Code> v);
Word mt_shift(const MTSpec& spec, std::span<const Code> v);

/// True when T_Lambda maps every basis row of c back into c.
bool is_shift_invariant(const LinearCode& c, const std::vector<std::size_t>& lengths,
                        const std::vector<Code>& shifts);

/// Smallest T_Lambda-invariant subspace containing the generator words.
LinearCode expand(const MTSpec& spec);

/// g_i = gcd(x^{m_i} - lambda_i, pi_i(g_1), ..., pi_i(g_rho)), monic.
Poly block_generator(const MTSpec& spec, std::size_t i);
std::vector<Poly> block_generators(const MTSpec& spec);

/// The lambda_i-constacyclic code of length m_i generated by g(x).
LinearCode constacyclic_code(const Field& f, std::size_t m, Code lambda, const Poly& g);

/// pi_i(C) from g_i; cross-checked against the column projection of expand().
LinearCode projection_code(const MTSpec& spec, std::size_t i);

/// Restriction of every codeword to block i.
LinearCode block_projection(const LinearCode& c, const MTSpec& spec, std::size_t i);

/// C^perp, certified invariant under T with shifts lambda_i^{-1}.
LinearCode mt_dual(const MTSpec& spec);

/// The dual as an MTSpec: shifts inverted, one generator per dual basis row.
MTSpec dual_spec(const MTSpec& spec);

struct DimensionFormula {
  std::size_t dimension;
  Poly divisor;              // monic d_ell of the stacked matrix
  std::vector<Poly> minors;  // all ell x ell minors, lexicographic order
  PolyMatrix stacked;        // [generators; diag(x^{m_i} - lambda_i)]
};

PolyMatrix stacked_matrix(const MTSpec& spec);

/// n - deg d_ell; throws FormulaRankDisagreement if it differs from the rank of expand().
DimensionFormula dimension_formula(const MTSpec& spec);

struct CoprimePair {
  std::size_t i;
  std::size_t j;
  Poly common;
};

struct Coprimality {
  bool holds;
  std::vector<Poly> generators;  // g_i
  std::vector<Poly> quotients;   // (x^{m_i} - lambda_i) / g_i
  std::optional<CoprimePair> witness;
};

Coprimality coprimality_condition(const MTSpec& spec);

struct DirectSum {
  std::vector<LinearCode> components;  // pi_i(C), length m_i each
  std::vector<std::size_t> dimensions;
  std::size_t total_dimension;
};

/// Certificate that C is the direct sum of its projections. Throws
/// ConditionNotMet if the quotients are not pairwise coprime, and
/// CertificateFailure if any part of the decomposition does not hold.
DirectSum direct_sum_check(const MTSpec& spec);

struct LcdVerdict {
  enum class Kind { LCD, NotLCD, Inconclusive };
  Kind kind;
  std::vector<Poly> quotients;
  std::optional<CoprimePair> coprimality_witness;  // set for Inconclusive
  std::optional<std::size_t> failing_block;        // set for NotLCD
};

std::string to_string(LcdVerdict::Kind k);

/**
 * LCD verdict from the block generators. When the quotients are pairwise
 * coprime, C is LCD exactly when every block with lambda_i^2 = 1 has g_i
 * self-reciprocal and coprime to its quotient. Otherwise Inconclusive.
 */
LcdVerdict lcd_verdict(const MTSpec& spec);

/// Older sufficient condition: the x^{m_i} - lambda_i pairwise coprime and
/// lambda_i != lambda_i^{-1} for every block.
bool legacy_lcd_condition(const MTSpec& spec);

struct Claim {
  std::string name;
  std::string statement;
  bool hypothesis;  // the claimed premises hold for this code
  bool conclusion;  // the claimed consequence holds
  bool summarized;  // premises are known only in summary form
  bool refuted() const { return hypothesis && !conclusion; }
};

struct HypothesisReport {
  bool shifts_non_involutive;   // lambda_i != lambda_i^{-1} for all i
  std::size_t min_length;
  std::size_t dimension;
  std::size_t dual_dimension;
  std::vector<bool> projection_full;       // pi_i(C) = <1>
  std::vector<bool> dual_projection_full;  // pi_i(C^perp) = <1>
  bool is_lcd;
  bool is_self_orthogonal;
  bool is_dual_containing;
  std::vector<Claim> claims;

  const Claim& claim(const std::string& name) const;
};

/**
 * Evaluates the dimension- and projection-based LCD claims on this code,
 * each paired with the exact facts:
 *  - small-dimension: non-involutive shifts and dim C or dim C^perp below
 *    min m_i claim LCD;
 *  - dimension-equals-min: non-involutive shifts and dim C = min m_i claim
 *    LCD or self-orthogonal;
 *  - dual-dimension-equals-min: non-involutive shifts and dim C^perp =
 *    min m_i claim LCD or dual-containing;
 *  - nontrivial-projections: non-involutive shifts and for each i,
 *    pi_i(C) != <1> or pi_i(C^perp) != <1>, claim LCD.
 */
HypothesisReport refuted_hypotheses(const MTSpec& spec);

}  // namespace mtc
