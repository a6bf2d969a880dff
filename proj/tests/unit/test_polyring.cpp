#include "doctest.h"
#include "mtcodes/literal.hpp"
#include "mtcodes/polyring.hpp"
#include "oracles.hpp"

using namespace mtc;

namespace {

Poly P(const Field& f, std::string_view s) { return parse_poly(f, s); }

void expect_error(ErrorCode code, auto&& fn) {
  try {
    fn();
    FAIL("no error thrown");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

// Horner evaluation written out against FieldElement, independent of eval().
FieldElement horner(const Poly& a, const FieldElement& v) {
  FieldElement acc = FieldElement::zero(a.field());
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = acc * v + FieldElement(a.field(), a.coeff(i));
  return acc;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  const Field f5 = Field::prime(5);
  CHECK(P(f5, "x + 2") * P(f5, "x + 2") * P(f5, "x + 2") == P(f5, "x^3 + x^2 + 2x + 3"));
  CHECK((P(f5, "x^2 + 1") - P(f5, "x^2 + 1")).is_zero());
  CHECK(P(f5, "2x").lead() == 2);
  CHECK(P(f5, "3x^2 + 1").monic() == P(f5, "x^2 + 2"));
  CHECK(Poly::binomial(f5, 3, 2) == P(f5, "x^3 - 2"));
  CHECK(P(f5, "x + 1").shifted(2) == P(f5, "x^3 + x^2"));
  CHECK_FALSE(Poly(f5).degree().has_value());
  expect_error(ErrorCode::ZeroArgument, [&] { (void)Poly(f5).deg(); });
}

TEST_CASE("printing is ascending with w-power coefficients") {
  const Field f9 = Field::make(3, 2, {2, 2, 1});
  CHECK(P(f9, "w^6*x^2 + w^3 + w^7*x").to_string() == "w^3 + w^7*x + w^6*x^2");
  CHECK(Poly(f9).to_string() == "0");
  CHECK(P(f9, "x").to_string() == "x");
  CHECK(P(f9, "2x^3 + 1").to_string() == "1 + 2*x^3");
}

TEST_CASE("gcd over GF(4) matches the worked values") {
  const Field f4 = Field::make(2, 2, {1, 1, 1});
  const Poly m = Poly::binomial(f4, 5, f4.omega());
  CHECK(associated(gcd(P(f4, "1 + x + w^2*x^2"), m), P(f4, "w + w*x + x^2")));
  CHECK(associated(gcd(P(f4, "1 + x + w*x^2 + x^3"), m), P(f4, "x + w^2") * P(f4, "x^2 + x + w")));
  CHECK(gcd(m, m).is_monic());
}

TEST_CASE("gcd of x^3 - 2 and x^9 - 3 over GF(5)") {
  const Field f5 = Field::prime(5);
  const Poly g = gcd(Poly::binomial(f5, 3, 2), Poly::binomial(f5, 9, 3));
  // Every root a of x^3 - 2 has a^9 = 2^3 = 3, so the whole binomial divides.
  CHECK(g == P(f5, "x^3 - 2"));
  CHECK(P(f5, "x + 2") * P(f5, "x^2 + 3x + 4") == P(f5, "x^3 - 2"));
}

TEST_CASE("division and gcd properties on random inputs") {
  std::mt19937_64 rng(7);
  for (const Field& f : oracle::small_fields()) {
    CAPTURE(f.name());
    for (int t = 0; t < 200; ++t) {
      const Poly a = oracle::random_poly(rng, f, rng() % 9);
      Poly b = oracle::random_poly(rng, f, rng() % 6);
      if (b.is_zero()) b = Poly::one(f);
      const DivRem qr = divrem(a, b);
      CHECK(qr.quotient * b + qr.remainder == a);
      CHECK((qr.remainder.is_zero() || qr.remainder.deg() < b.deg()));
      if (a.is_zero()) continue;
      const Poly g = gcd(a, b);
      CHECK(g.is_monic());
      CHECK(divides(g, a));
      CHECK(divides(g, b));
      const ExtendedGcd e = extended_gcd(a, b);
      CHECK(e.g == g);
      CHECK(e.s * a + e.t * b == g);
      CHECK(lcm(a, b) * g == (a * b).monic());
      if (a.coeff(0) != 0) {
        CHECK(reciprocal(reciprocal(a)) == a);
        CHECK(is_self_reciprocal(a * reciprocal(a)));
      }
      for (unsigned v = 0; v < f.order(); ++v) {
        const FieldElement x(f, Code(v));
        CHECK(eval(a, x) == horner(a, x));
      }
    }
  }
}

TEST_CASE("self-reciprocal test") {
  const Field f3 = Field::prime(3);
  CHECK(is_self_reciprocal(P(f3, "x + 1")));
  CHECK(is_self_reciprocal(P(f3, "x - 1")));  // x - 1 = -(1 - x)
  CHECK(is_self_reciprocal(P(f3, "x^4 - x^3 + x^2 - x + 1")));
  CHECK_FALSE(is_self_reciprocal(P(f3, "x + 2x^2 + 1 + x^3")));
  CHECK_FALSE(is_self_reciprocal(P(f3, "x")));
  const Field f4 = Field::make(2, 2, {1, 1, 1});
  CHECK_FALSE(is_self_reciprocal(P(f4, "x + w")));
  CHECK(is_self_reciprocal(P(f4, "x^2 + w*x + 1")));
}

TEST_CASE("CRT idempotents") {
  const Field f3 = Field::prime(3);
  const std::vector<Poly> two = {P(f3, "x - 1"), P(f3, "x + 1")};
  const auto e = crt_idempotents(two);
  CHECK(e[0] == P(f3, "2x + 2"));
  CHECK(e[1] == P(f3, "x + 2"));

  std::mt19937_64 rng(11);
  const Field f5 = Field::prime(5);
  const std::vector<Poly> mods = {P(f5, "x^2 + 2"), P(f5, "x + 1"), P(f5, "x^3 + x + 1")};
  Poly big = Poly::one(f5);
  for (const Poly& m : mods) big *= m;
  const auto idem = crt_idempotents(mods);
  Poly sum(f5);
  for (std::size_t i = 0; i < mods.size(); ++i) {
    sum += idem[i];
    for (std::size_t j = 0; j < mods.size(); ++j) CHECK(mod(idem[i], mods[j]) == (i == j ? Poly::one(f5) : Poly(f5)));
  }
  CHECK(mod(sum, big) == Poly::one(f5));
  expect_error(ErrorCode::NotCoprime, [&] {
    const std::vector<Poly> bad = {P(f5, "x + 1"), P(f5, "x^2 - 1")};
    crt_idempotents(bad);
  });
}

TEST_CASE("error cases") {
  const Field f = Field::prime(2);
  expect_error(ErrorCode::DivisionByZeroPoly, [&] { divrem(P(f, "x"), Poly(f)); });
  expect_error(ErrorCode::BothZero, [&] { gcd(Poly(f), Poly(f)); });
  expect_error(ErrorCode::ZeroArgument, [&] { lcm(Poly(f), P(f, "x")); });
  expect_error(ErrorCode::FieldMismatch, [&] { (void)(P(f, "x") + P(Field::prime(3), "x")); });
  CHECK(gcd(Poly(f), P(f, "x + 1")) == P(f, "x + 1"));
  const std::vector<Poly> with_zeros = {Poly(f), P(f, "x^2 + 1"), Poly(f), P(f, "x + 1")};
  CHECK(gcd(with_zeros) == P(f, "x + 1"));
}
