#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mtcodes/mt.hpp"

namespace mtc {

struct AuditBounds {
  std::vector<unsigned> orders{2, 3, 4, 5};  // field sizes to draw from
  std::size_t max_ell = 3;
  std::size_t max_length = 8;
  std::size_t max_rho = 3;
};

struct AuditOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  AuditBounds bounds;
  unsigned threads = 0;
};

struct AuditSummary {
  std::size_t trials = 0;
  std::size_t formula_agreements = 0;  // formula dimension == rank
  std::size_t coprime_cases = 0;       // quotients pairwise coprime
  std::size_t verdict_agreements = 0;  // among coprime cases: verdict LCD <=> zero hull
  std::size_t verdict_lcd = 0;         // LCD detected from coprime quotients
  std::size_t legacy_lcd = 0;          // LCD detected by the pairwise-coprime-binomial test
  std::size_t exact_lcd = 0;
  std::size_t direct_sums = 0;         // direct-sum certificates issued
  std::size_t dual_coprime_cases = 0;  // quotients of the dual spec pairwise coprime
  std::size_t coprime_mismatches = 0;  // coprimality differs between C and C^perp
};

/// Field of the given order (2, 3, 4, 5, 7, 8, 9, ...) with a fixed modulus.
Field audit_field(unsigned order);

/// Draws one spec; generator entries are sometimes multiples of divisors of x^m - lambda.
MTSpec random_spec(std::mt19937_64& rng, const AuditBounds& bounds);

/// Checks every property on one spec, adding to the counters. Throws
/// PropertyViolation naming the property, with the spec serialized.
void audit_spec(const MTSpec& spec, AuditSummary& summary);

/**
 * Runs `trials` independent specs; trial t draws from a generator seeded by
 * (seed, t), so results do not depend on the thread count. Throws UsageError
 * for trials = 0 and PropertyViolation for the lowest failing trial.
 */
AuditSummary run_audit(const AuditOptions& options);

std::string render_audit(const AuditSummary& summary, const AuditOptions& options);

}  // namespace mtc
