#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mtcodes/galois.hpp"

namespace mtc {

/// Dense polynomial over one field, ascending coefficients. Always normalized:
/// the coefficient list is empty for zero and otherwise ends in a nonzero.
class Poly {
 public:
  explicit Poly(Field field);
  Poly(Field field, std::vector<Code> coeffs);

  static Poly constant(const Field& f, Code c) { return Poly(f, {c}); }
  static Poly one(const Field& f) { return constant(f, 1); }
  static Poly monomial(const Field& f, Code c, std::size_t e);
  static Poly x(const Field& f) { return monomial(f, 1, 1); }
  /// x^m - lambda
  static Poly binomial(const Field& f, std::size_t m, Code lambda);
  static Poly from_ints(const Field& f, std::initializer_list<long long> coeffs);

  const Field& field() const { return field_; }
  std::span<const Code> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  /// Degree of a nonzero polynomial; throws ZeroArgument on zero.
  std::size_t deg() const;
  Code coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Code{0}; }
  Code lead() const { return coeffs_.empty() ? Code{0} : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  Poly monic() const;
  Poly scaled(Code c) const;
  Poly shifted(std::size_t e) const;  // times x^e

  Poly operator+(const Poly& b) const;
  Poly operator-(const Poly& b) const;
  Poly operator-() const;
  Poly operator*(const Poly& b) const;
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  bool operator==(const Poly& b) const { return field_ == b.field_ && coeffs_ == b.coeffs_; }
  bool operator!=(const Poly& b) const { return !(*this == b); }

  /// Ascending terms joined by " + ", coefficients as element literals.
  std::string to_string() const;

 private:
  void normalize();

  Field field_;
  std::vector<Code> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

DivRem divrem(const Poly& a, const Poly& b);
Poly quotient(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& m);
bool divides(const Poly& d, const Poly& a);

/// Monic gcd. gcd(a, 0) = monic(a); gcd(0, 0) throws BothZero.
Poly gcd(const Poly& a, const Poly& b);
/// Folded gcd over a list; zero entries are skipped, throws BothZero if all are zero.
Poly gcd(std::span<const Poly> polys);
/// Monic lcm of two nonzero polynomials.
Poly lcm(const Poly& a, const Poly& b);

struct ExtendedGcd {
  Poly g;  // monic gcd
  Poly s;  // s*a + t*b = g
  Poly t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// x^deg(a) * a(1/x).
Poly reciprocal(const Poly& a);
/// True when a is a nonzero scalar multiple of its reciprocal.
bool is_self_reciprocal(const Poly& a);
/// Equality up to a nonzero scalar.
bool associated(const Poly& a, const Poly& b);

/// f_i with f_i = 1 mod moduli[i] and f_i = 0 mod moduli[j] for j != i,
/// reduced mod the product. Moduli must be nonzero and pairwise coprime.
std::vector<Poly> crt_idempotents(std::span<const Poly> moduli);

FieldElement eval(const Poly& a, const FieldElement& v);
Code eval(const Poly& a, Code v);

}  // namespace mtc
