#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mtcodes/mt.hpp"

namespace mtc {

struct AnalyzeOptions {
  bool min_distance = false;
  std::uint64_t cap = kDefaultDistanceCap;
  bool dual = false;  // analyze the dual spec instead
  unsigned threads = 0;
};

struct BlockReport {
  Poly generator;
  Poly quotient;
  bool lambda_squared_one;
};

/// Everything `mtcode analyze` prints, computed once.
struct Report {
  MTSpec spec;  // the spec actually analyzed (the dual spec under --dual)
  bool dual_input = false;

  std::size_t dimension_rank = 0;
  std::size_t dimension_formula = 0;
  Poly divisor;
  std::vector<BlockReport> blocks;

  Coprimality coprimality;
  /// The same condition evaluated on the dual, reported on its own.
  Coprimality dual_coprimality;
  LcdVerdict verdict;
  /// The verdict agrees with the exact hull computation (or is Inconclusive).
  bool verdict_consistent = true;

  std::size_t dual_dimension = 0;
  std::size_t hull_dimension = 0;
  Matrix hull_basis;
  bool exact_lcd = false;
  bool self_orthogonal = false;
  bool dual_containing = false;

  bool legacy = false;
  HypothesisReport hypotheses;

  bool distance_requested = false;
  std::optional<std::size_t> min_distance{};
  std::string distance_method{};  // "enumeration", "dual-columns", or empty
  std::string distance_note{};
};

Report analyze(const MTSpec& spec, const AnalyzeOptions& options = {});

std::string render_text(const Report& r);
/// One `key=value` per line, stable key order.
std::string render_machine(const Report& r);
/// Reads render_machine output back into a key -> value map.
std::map<std::string, std::string> parse_machine(std::string_view text);

}  // namespace mtc
