#include <filesystem>

#include "doctest.h"
#include "mtcodes/fixtures.hpp"
#include "mtcodes/literal.hpp"
#include "mtcodes/specfile.hpp"
#include "oracles.hpp"

using namespace mtc;

namespace {

SpecError spec_error(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e;
  }
  FAIL("no SpecError for:\n" << text);
  return SpecError(ErrorCode::ParseError, 0, 0, "unreachable");
}

std::size_t literal_error_column(const Field& f, std::string_view text, bool poly) {
  try {
    poly ? (void)parse_poly(f, text) : (void)parse_element(f, text);
  } catch (const LiteralError& e) {
    return e.column();
  }
  FAIL("no LiteralError for " << text);
  return 0;
}

constexpr std::string_view kGood = R"(# comment
[field]
p = 2
degree = 2
modulus = [1, 1, 1]   # x^2 + x + 1

[blocks]
lengths = [5, 5]
shifts = ["w", "w"]

[[generator]]
blocks = [
  "1 + x + w^2*x^2",   # first block
  "1 + x + w*x^2 + x^3",
]
)";

}  // namespace

TEST_CASE("element literals") {
  const Field f9 = Field::make(3, 2, {2, 2, 1});
  CHECK(parse_element(f9, "w") == f9.omega());
  CHECK(parse_element(f9, "w^7") == f9.omega_pow(7));
  CHECK(parse_element(f9, "\xCF\x89^7") == f9.omega_pow(7));
  CHECK(parse_element(f9, "(1,1)") == f9.add(f9.omega(), 1));
  CHECK(parse_element(f9, "(2)") == 2);
  CHECK(parse_element(f9, "7") == 1);
  CHECK(parse_element(f9, "-w") == f9.neg(f9.omega()));
  CHECK(parse_element(f9, " w^0 ") == 1);
  CHECK(literal_error_column(f9, "", false) == 1);
  CHECK(literal_error_column(f9, "w^", false) == 3);
  CHECK(literal_error_column(f9, "(1,2,0)", false) > 0);
  CHECK(literal_error_column(f9, "x", false) == 1);
  CHECK(literal_error_column(f9, "w w", false) == 3);
}

TEST_CASE("polynomial literals") {
  const Field f5 = Field::prime(5);
  CHECK(parse_poly(f5, "3 + 4x^3 + 2x^6") == Poly(f5, {3, 0, 0, 4, 0, 0, 2}));
  CHECK(parse_poly(f5, "x - 1") == Poly(f5, {4, 1}));
  CHECK(parse_poly(f5, "-x^2") == Poly(f5, {0, 0, 4}));
  CHECK(parse_poly(f5, "2*x^2 + 3x^2") == Poly(f5));
  CHECK(parse_poly(f5, "0") == Poly(f5));
  const Field f4 = Field::make(2, 2, {1, 1, 1});
  CHECK(parse_poly(f4, "w^2*x + w*x^2") == Poly(f4, {0, f4.omega_pow(2), f4.omega()}));
  CHECK(literal_error_column(f5, "x +", true) == 4);
  CHECK(literal_error_column(f5, "x x", true) == 3);
  CHECK(literal_error_column(f5, "x^99999", true) > 0);
  CHECK(literal_error_column(f5, "+", true) == 2);
  // Round trip through the printer.
  std::mt19937_64 rng(43);
  for (const Field& f : oracle::small_fields())
    for (int t = 0; t < 50; ++t) {
      const Poly p = oracle::random_poly(rng, f, rng() % 8);
      CHECK(parse_poly(f, p.to_string()) == p);
    }
}

TEST_CASE("spec files parse and round-trip") {
  const MTSpec s = parse_spec(kGood);
  CHECK(s.field().order() == 4);
  CHECK(s.lengths() == std::vector<std::size_t>{5, 5});
  CHECK(s.rho() == 1);
  const MTSpec again = parse_spec(write_spec(s, "round trip"));
  CHECK(again.field() == s.field());
  CHECK(again.shifts() == s.shifts());
  CHECK(again.generators() == s.generators());
  CHECK(write_spec(again) == write_spec(s));
}

TEST_CASE("every fixture round-trips through write_spec") {
  for (const Fixture& fx : fixtures()) {
    const MTSpec s = fixture_spec(fx);
    const MTSpec t = parse_spec(write_spec(s));
    CHECK(t.generators() == s.generators());
    CHECK(t.shifts() == s.shifts());
  }
}

TEST_CASE("sample spec files match the embedded fixtures") {
  const std::filesystem::path dir = MTC_DATA_DIR;
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir / "specs")) {
    const std::string name = entry.path().stem().string();
    const Fixture* fx = find_fixture(name);
    REQUIRE_MESSAGE(fx != nullptr, name);
    const MTSpec a = load_spec(entry.path());
    const MTSpec b = fixture_spec(*fx);
    CHECK(a.field() == b.field());
    CHECK(a.lengths() == b.lengths());
    CHECK(a.shifts() == b.shifts());
    CHECK(a.generators() == b.generators());
    ++seen;
  }
  CHECK(seen == 8);
}

TEST_CASE("parse errors carry line and column") {
  SpecError e = spec_error("[field]\np = 5\n[blocks]\nlengths = [3\n");
  CHECK(e.code() == ErrorCode::ParseError);
  CHECK(e.line() >= 4);

  e = spec_error("[field]\np = 5\nbogus = 1\n[blocks]\nlengths=[1]\nshifts=[\"1\"]\n[[generator]]\nblocks=[\"1\"]\n");
  CHECK(e.code() == ErrorCode::SemanticError);
  CHECK(e.line() == 3);
  CHECK(e.column() == 1);

  e = spec_error("[field]\np = 5\n[blocks]\nlengths = [3]\nshifts = [\"0\"]\n[[generator]]\nblocks = [\"1\"]\n");
  CHECK(e.code() == ErrorCode::SemanticError);
  CHECK(e.line() == 5);
  CHECK(std::string(e.what()).find("shifts[1]") != std::string::npos);

  e = spec_error("[field]\np = 5\n[blocks]\nlengths = [3]\nshifts = [\"2\"]\n[[generator]]\nblocks = [\"1 + x +\"]\n");
  CHECK(e.code() == ErrorCode::ParseError);
  CHECK(e.line() == 7);
  CHECK(e.column() > 11);

  e = spec_error("[field]\np = 5\n[blocks]\nlengths = [3, 4]\nshifts = [\"2\"]\n[[generator]]\nblocks = [\"1\"]\n");
  CHECK(e.code() == ErrorCode::SemanticError);
  CHECK(e.line() == 5);

  e = spec_error("[field]\np = 3\ndegree = 6\nmodulus = [2, 1, 0, 0, 0, 0, 1]\n[blocks]\nlengths = [3]\n"
                 "shifts = [\"1\"]\n[[generator]]\nblocks = [\"1\"]\n");
  CHECK(e.code() == ErrorCode::SemanticError);

  e = spec_error("[field]\np = 4\n[blocks]\nlengths = [3]\nshifts = [\"1\"]\n[[generator]]\nblocks = [\"1\"]\n");
  CHECK(e.code() == ErrorCode::SemanticError);
  CHECK(e.line() == 2);

  e = spec_error("[field]\np = 2\ndegree = 2\nmodulus = [1, 0, 1]\n[blocks]\nlengths = [3]\nshifts = [\"1\"]\n"
                 "[[generator]]\nblocks = [\"1\"]\n");
  CHECK(e.code() == ErrorCode::SemanticError);
  CHECK(e.line() == 4);

  e = spec_error("[field]\np = 5\n[blocks]\nlengths = [3]\nshifts = [\"2\"]\n");
  CHECK(e.code() == ErrorCode::SemanticError);

  e = spec_error("[field]\np = 5\np = 5\n");
  CHECK(e.code() == ErrorCode::ParseError);
  CHECK(e.line() == 3);

  e = spec_error("[colour]\n");
  CHECK(e.line() == 1);
}

TEST_CASE("load_spec on a missing file") {
  try {
    load_spec("/nonexistent/none.spec");
    FAIL("expected an error");
  } catch (const SpecError& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}
