#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtcodes/mt.hpp"

namespace mtc {

/// A built-in worked example: spec text plus the quantities it must reproduce.
struct Fixture {
  std::string name;
  std::string citation;
  std::string spec_text;
};

const std::vector<Fixture>& fixtures();
const Fixture* find_fixture(std::string_view name);
MTSpec fixture_spec(const Fixture& fx);

/// Negative control: lambda of the second block (the only block when ell = 1)
/// multiplied by the primitive element.
MTSpec tamper_spec(const MTSpec& spec);

struct Check {
  std::string claim;
  bool passed;
  std::string detail;
};

struct FixtureOutcome {
  std::string name;
  std::string citation;
  bool tampered = false;
  std::vector<Check> checks;
  double seconds = 0;
  bool passed() const;
};

struct SuiteOptions {
  /// Fixture to run with a tampered shift; empty runs everything untouched.
  std::optional<std::string> tamper;
  /// Enumerate every codeword even for the 5^11-message example; otherwise
  /// large codes use the dual-column search.
  bool full_distance = false;
  unsigned threads = 0;
};

struct SuiteOutcome {
  std::vector<FixtureOutcome> fixtures;
  bool passed() const;
  std::size_t failed_checks() const;
};

FixtureOutcome run_fixture(const Fixture& fx, const SuiteOptions& options = {}, bool tamper = false);
/// Throws UsageError when options.tamper names no fixture.
SuiteOutcome run_suite(const SuiteOptions& options = {});

std::string render_suite(const SuiteOutcome& outcome);
std::string render_fixture_list();

}  // namespace mtc
