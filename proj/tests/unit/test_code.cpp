#include <set>

#include "doctest.h"
#include "mtcodes/code.hpp"
#include "oracles.hpp"

using namespace mtc;

namespace {

void expect_error(ErrorCode code, auto&& fn) {
  try {
    fn();
    FAIL("no error thrown");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("duals, hulls and LCD routes on random codes") {
  std::mt19937_64 rng(31);
  for (const Field& f : oracle::small_fields()) {
    CAPTURE(f.name());
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng() % 7;
      const LinearCode c(oracle::random_matrix(rng, f, 1 + rng() % n, n));
      const LinearCode d = dual(c);
      CHECK(c.dimension() + d.dimension() == n);
      CHECK(dual(d).same_space(c));
      const LinearCode h = hull(c);
      CHECK(h.same_space(hull(d)));
      CHECK(c.contains(h));
      CHECK(d.contains(h));
      CHECK(is_lcd_by_hull(c) == is_lcd_by_gram(c));
      CHECK(is_lcd(c) == (h.dimension() == 0));
      CHECK(is_self_orthogonal(c) == d.contains(c));
      CHECK(is_dual_containing(c) == c.contains(d));
      CHECK(is_lcd(c) == is_lcd(d));
    }
  }
}

TEST_CASE("minimum distance agrees with naive enumeration") {
  std::mt19937_64 rng(37);
  for (const Field& f : oracle::small_fields()) {
    CAPTURE(f.name());
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = 2 + rng() % 7;
      const std::size_t k = 1 + rng() % std::min<std::size_t>(n, f.order() > 4 ? 3 : 4);
      const LinearCode c(oracle::random_matrix(rng, f, k, n));
      if (c.dimension() == 0) continue;
      const auto want = oracle::naive_min_distance(LinearCode(c.basis()));
      CHECK(min_distance(c, kDefaultDistanceCap, 1) == want);
      CHECK(min_distance(c, kDefaultDistanceCap, 3) == want);
      CHECK(min_distance_via_dual(c, n) == want);
      CHECK(*want <= n - c.dimension() + 1);
      const auto low = low_weight_codeword(c, n);
      REQUIRE(low.has_value());
      CHECK(oracle::naive_weight(*low) == *want);
      CHECK(c.contains(*low));
    }
  }
}

TEST_CASE("distance search edge cases") {
  const Field f = Field::prime(5);
  const LinearCode zero = LinearCode::zero(f, 4);
  CHECK_FALSE(min_distance(zero).has_value());
  CHECK_FALSE(min_distance_via_dual(zero, 4).has_value());
  CHECK(min_distance(LinearCode::full(f, 4)) == 1u);
  CHECK(min_distance_via_dual(LinearCode::full(f, 4), 4) == 1u);
  // Repetition code: every column subset below n is independent in the dual.
  const LinearCode rep(Matrix::from_ints(f, {{1, 1, 1, 1, 1}}));
  CHECK(min_distance(rep) == 5u);
  CHECK_FALSE(min_distance_via_dual(rep, 4).has_value());
  CHECK(min_distance_via_dual(rep, 5) == 5u);
  expect_error(ErrorCode::CapExceeded, [&] { min_distance(LinearCode::full(f, 4), 100); });
  CHECK(message_count(LinearCode::full(f, 4)) == 625u);
  CHECK(message_count(LinearCode::full(Field::make(2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}), 9)) == UINT64_MAX);
}

TEST_CASE("known small codes") {
  const Field f5 = Field::prime(5);
  const LinearCode c(Matrix::from_ints(f5, {{1, 0, 1, 4, 2, 0, 2, 3, 4, 4}, {0, 1, 4, 2, 2, 2, 3, 4, 4, 0}}));
  CHECK(c.dimension() == 2);
  CHECK(hull(c).dimension() == 1);
  CHECK(hull(c).contains(Matrix::from_ints(f5, {{0, 1, 4, 2, 2, 2, 3, 4, 4, 0}}).row(0)));
  CHECK_FALSE(is_lcd(c));
  CHECK(min_distance(c) == 8u);
  const CodeFacts fx = facts(c);
  CHECK(fx.dual_dimension == 8);
  CHECK(fx.hull_dimension == 1);
  CHECK_FALSE(fx.min_distance.has_value());

  // Binary simplex code; its dual is the Hamming [7,4,3] code.
  const Field f2 = Field::prime(2);
  const LinearCode simplex(Matrix::from_ints(f2, {{1, 0, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}}));
  CHECK(is_self_orthogonal(simplex));
  CHECK(is_dual_containing(dual(simplex)));
  CHECK(min_distance(dual(simplex)) == 3u);
  CHECK(min_distance(simplex) == 4u);
  CHECK(gram(simplex).is_zero());
}
