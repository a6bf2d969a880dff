#include "doctest.h"
#include "mtcodes/audit.hpp"
#include "mtcodes/fixtures.hpp"
#include "mtcodes/specfile.hpp"

using namespace mtc;

namespace {

// The printed GG^T for the GF(9) fixture is the Gram matrix of some basis of
// the code but not of the printed generator matrix; that single check fails.
constexpr std::string_view kKnownMismatch = "GG^T matches the printed 4x4 matrix";

}  // namespace

TEST_CASE("nine fixtures with distinct names") {
  CHECK(fixtures().size() == 9);
  for (const Fixture& a : fixtures()) {
    CHECK(find_fixture(a.name) == &a);
    CHECK_FALSE(a.citation.empty());
  }
  CHECK(find_fixture("nope") == nullptr);
  CHECK(render_fixture_list().find("gf4-5x5-noncoprime-lcd") != std::string::npos);
}

TEST_CASE("every fixture check passes apart from the printed GF(9) Gram matrix") {
  const SuiteOutcome out = run_suite();
  REQUIRE(out.fixtures.size() == 9);
  std::size_t failures = 0;
  for (const FixtureOutcome& f : out.fixtures) {
    CHECK_FALSE(f.tampered);
    CHECK(f.checks.size() >= 4);
    for (const Check& c : f.checks) {
      if (c.passed) continue;
      ++failures;
      CHECK(f.name == "gf9-3block-dim4");
      CHECK(c.claim == kKnownMismatch);
    }
  }
  CHECK(failures == 1);
}

TEST_CASE("full-distance mode agrees") {
  SuiteOptions o;
  o.full_distance = true;
  const FixtureOutcome f = run_fixture(*find_fixture("gf5-2gen-3x9"), o);
  CHECK(f.passed());
}

TEST_CASE("tampering one shift produces named failures") {
  for (const Fixture& fx : fixtures()) {
    CAPTURE(fx.name);
    const FixtureOutcome f = run_fixture(fx, {}, true);
    CHECK(f.tampered);
    CHECK_FALSE(f.passed());
  }
  SuiteOptions o;
  o.tamper = "gf4-5x5-lcd";
  const SuiteOutcome out = run_suite(o);
  CHECK_FALSE(out.passed());
  const std::string text = render_suite(out);
  CHECK(text.find("FAIL gf4-5x5-lcd (tampered)") != std::string::npos);
  CHECK(text.find("AssertionFailure: gf4-5x5-lcd:") != std::string::npos);
  o.tamper = "missing";
  CHECK_THROWS_AS(run_suite(o), Error);
}

TEST_CASE("tamper multiplies lambda_2 by the primitive element") {
  const MTSpec s = fixture_spec(*find_fixture("gf3-5x7-lcd"));
  const MTSpec t = tamper_spec(s);
  CHECK(t.shift(0) == s.shift(0));
  CHECK(t.shift(1) == s.field().mul(s.shift(1), s.field().primitive()));
}

TEST_CASE("audit is reproducible and thread-independent") {
  AuditOptions o;
  o.trials = 200;
  o.seed = 7;
  o.threads = 1;
  const std::string one = render_audit(run_audit(o), o);
  o.threads = 4;
  const std::string four = render_audit(run_audit(o), o);
  CHECK(one == four);
  o.seed = 8;
  CHECK(render_audit(run_audit(o), o) != one);
}

TEST_CASE("audit counts and usage errors") {
  AuditOptions o;
  o.trials = 300;
  const AuditSummary s = run_audit(o);
  CHECK(s.trials == 300);
  CHECK(s.formula_agreements == 300);
  CHECK(s.verdict_agreements == s.coprime_cases);
  CHECK(s.verdict_lcd >= s.legacy_lcd);
  CHECK(s.exact_lcd >= s.verdict_lcd);
  o.trials = 0;
  try {
    run_audit(o);
    FAIL("expected UsageError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UsageError);
  }
}

TEST_CASE("a violation carries a reproducer spec") {
  // A hand-built violation: audit_spec accepts any spec, so feed it one and
  // check the summary; then check the reproducer text form used on failure.
  const MTSpec s = fixture_spec(*find_fixture("gf5-5x5-dim2"));
  AuditSummary sum;
  audit_spec(s, sum);
  CHECK(sum.trials == 1);
  CHECK(sum.coprime_cases == 0);
  const MTSpec back = parse_spec(write_spec(s));
  CHECK(back.generators() == s.generators());
}
