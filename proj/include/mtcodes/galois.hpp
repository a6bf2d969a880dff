#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mtcodes/error.hpp"

namespace mtc {

/// Packed element of GF(p^d): the coefficient tuple (c_0, ..., c_{d-1}) over
/// Z_p, ascending powers of w, stored as sum c_i * p^i. Fields are capped at
/// 256 elements so a code always fits in one byte.
using Code = std::uint8_t;

/**
 * @brief GF(p^d) defined by a monic irreducible modulus over Z_p.
 *
 * The class of x modulo the modulus is written `w`. A Field is an immutable
 * handle; copies share the same arithmetic tables and are cheap. Two handles
 * compare equal when they were built from the same (p, d, modulus).
 *
 * The raw `Code` operations below are the fast path used by the matrix and
 * polynomial layers. They assume codes come from this field.
 */
class Field {
 public:
  static constexpr unsigned kMaxOrder = 256;

  /// modulus: ascending coefficients c_0..c_d, monic (c_d = 1), irreducible.
  static Field make(unsigned p, unsigned d, const std::vector<unsigned>& modulus);
  /// GF(p) with modulus x, so w = 0 and omega_order() = 0.
  static Field prime(unsigned p);

  unsigned characteristic() const;
  unsigned degree() const;
  /// q = p^d
  unsigned order() const;
  const std::vector<unsigned>& modulus() const;
  /// Multiplicative order of w, or 0 when w = 0 (degree-one modulus x).
  unsigned omega_order() const;
  bool omega_is_primitive() const { return omega_order() == order() - 1; }
  std::string name() const;

  Code zero() const { return 0; }
  Code one() const { return 1; }
  Code omega() const;
  /// Some generator of the multiplicative group.
  Code primitive() const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t k) const;
  /// Row-major q x q addition table, for tight loops.
  std::span<const Code> addition_table() const;
  Code omega_pow(std::uint64_t k) const;

  /// Integer n read as an element of the prime subfield (reduced mod p).
  Code from_int(long long n) const;
  Code from_coeffs(std::span<const unsigned> coeffs) const;
  std::vector<unsigned> coeffs(Code a) const;
  bool in_prime_subfield(Code a) const;
  /// k with w^k = a, when a is a nonzero power of w.
  std::optional<unsigned> omega_log(Code a) const;

  /// Literal form: integers for the prime subfield, `w^k` for powers of w,
  /// otherwise a coefficient tuple.
  std::string format(Code a) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  struct Tables;

 private:
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

void require_same_field(const Field& a, const Field& b);

/// A field element bound to its field, for the value-level API.
class FieldElement {
 public:
  FieldElement(Field field, Code code);

  static FieldElement zero(const Field& f) { return {f, 0}; }
  static FieldElement one(const Field& f) { return {f, 1}; }
  static FieldElement from_int(const Field& f, long long n) { return {f, f.from_int(n)}; }
  static FieldElement omega_pow(const Field& f, std::uint64_t k) { return {f, f.omega_pow(k)}; }
  static FieldElement from_coeffs(const Field& f, std::span<const unsigned> c) {
    return {f, f.from_coeffs(c)};
  }

  const Field& field() const { return field_; }
  Code code() const { return code_; }
  std::vector<unsigned> coeffs() const { return field_.coeffs(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator-() const { return {field_, field_.neg(code_)}; }
  FieldElement operator*(const FieldElement& b) const;
  FieldElement operator/(const FieldElement& b) const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t k) const { return {field_, field_.pow(code_, k)}; }

  bool operator==(const FieldElement& b) const;
  bool operator!=(const FieldElement& b) const { return !(*this == b); }

  std::string to_string() const { return field_.format(code_); }

 private:
  Field field_;
  Code code_;
};

}  // namespace mtc
