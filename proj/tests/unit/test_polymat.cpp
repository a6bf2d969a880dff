#include "doctest.h"
#include "mtcodes/literal.hpp"
#include "mtcodes/matfq.hpp"
#include "mtcodes/polymat.hpp"
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

Matrix at_point(const PolyMatrix& m, Code v) {
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = eval(m.at(r, c), v);
  return out;
}

PolyMatrix random_poly_matrix(std::mt19937_64& rng, const Field& f, std::size_t rows, std::size_t cols) {
  PolyMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, oracle::random_poly(rng, f, rng() % 4));
  return m;
}

}  // namespace

TEST_CASE("determinant evaluated at every point matches the scalar determinant") {
  std::mt19937_64 rng(21);
  for (const Field& f : oracle::small_fields()) {
    for (int t = 0; t < 25; ++t) {
      const std::size_t k = 1 + rng() % 4;
      const PolyMatrix m = random_poly_matrix(rng, f, k, k);
      const Poly d = det(m);
      for (unsigned v = 0; v < f.order(); ++v) CHECK(eval(d, Code(v)) == mtc::det(at_point(m, Code(v))));
    }
  }
}

TEST_CASE("minors enumeration and determinantal divisor") {
  std::mt19937_64 rng(23);
  const Field f = Field::prime(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t rows = 2 + rng() % 3, cols = 1 + rng() % 2;
    const PolyMatrix m = random_poly_matrix(rng, f, rows, cols);
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
      const auto all = minors(m, k);
      CHECK(all.size() == subsets(rows, k).size() * subsets(cols, k).size());
      bool any = false;
      for (const Poly& p : all) any = any || !p.is_zero();
      if (!any) {
        expect_error(ErrorCode::AllMinorsZero, [&] { determinantal_divisor(m, k); });
        continue;
      }
      const Poly d = determinantal_divisor(m, k);
      CHECK(d.is_monic());
      for (const Poly& p : all) CHECK(divides(d, p));
    }
  }
  CHECK(subsets(4, 2).size() == 6);
  CHECK(subsets(4, 2).front() == std::vector<std::size_t>{0, 1});
  CHECK(subsets(4, 2).back() == std::vector<std::size_t>{2, 3});
}

TEST_CASE("stacked matrix of the GF(4) one-generator code") {
  const Field f = Field::make(2, 2, {1, 1, 1});
  const auto P = [&](std::string_view s) { return parse_poly(f, s); };
  const PolyMatrix m = PolyMatrix::from_rows(
      f, {{P("1"), P("w + w*x + x^2 + w^2*x^3 + w^2*x^4 + w^2*x^5 + w*x^6 + x^7")},
          {Poly::binomial(f, 4, f.omega_pow(2)), Poly(f)},
          {Poly(f), Poly::binomial(f, 8, f.omega())}});
  const auto all = minors(m, 2);
  REQUIRE(all.size() == 3);
  CHECK(associated(all[0], P("x^11 + w*x^10 + w^2*x^9 + w^2*x^8 + w*x^3 + w^2*x^2 + x + 1")));
  CHECK(associated(all[1], P("x^8 + w")));
  CHECK(associated(all[2], P("x^12 + w^2*x^8 + w*x^4 + 1")));
  CHECK(determinantal_divisor(m, 2) == P("x^8 + w"));
}

TEST_CASE("errors") {
  const Field f = Field::prime(2);
  expect_error(ErrorCode::NotSquare, [&] { det(PolyMatrix(f, 2, 3)); });
  expect_error(ErrorCode::TooLarge, [&] { det(PolyMatrix(f, 9, 9)); });
  expect_error(ErrorCode::BadSize, [&] { minors(PolyMatrix(f, 2, 2), 3); });
  expect_error(ErrorCode::BadSize, [&] { minors(PolyMatrix(f, 2, 2), 0); });
  CHECK(det(PolyMatrix(f, 0, 0)) == Poly::one(f));
}
