#include "mtcodes/polyring.hpp"

#include <algorithm>

namespace mtc {

Poly::Poly(Field field) : field_(std::move(field)) {}

Poly::Poly(Field field, std::vector<Code> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Code c : coeffs_)
    if (c >= field_.order()) throw Error(ErrorCode::IndexOutOfRange, "coefficient code out of range");
  normalize();
}

Poly Poly::monomial(const Field& f, Code c, std::size_t e) {
  std::vector<Code> v(e + 1, 0);
  v[e] = c;
  return Poly(f, std::move(v));
}

Poly Poly::binomial(const Field& f, std::size_t m, Code lambda) {
  std::vector<Code> v(m + 1, 0);
  v[m] = 1;
  v[0] = f.sub(v[0], lambda);
  return Poly(f, std::move(v));
}

Poly Poly::from_ints(const Field& f, std::initializer_list<long long> coeffs) {
  std::vector<Code> v;
  v.reserve(coeffs.size());
  for (long long c : coeffs) v.push_back(f.from_int(c));
  return Poly(f, std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t Poly::deg() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroArgument, "degree of the zero polynomial");
  return coeffs_.size() - 1;
}

Poly Poly::monic() const {
  if (coeffs_.empty()) return *this;
  return scaled(field_.inv(coeffs_.back()));
}

Poly Poly::scaled(Code c) const {
  std::vector<Code> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.mul(coeffs_[i], c);
  return Poly(field_, std::move(v));
}

Poly Poly::shifted(std::size_t e) const {
  if (coeffs_.empty()) return *this;
  std::vector<Code> v(e, 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(field_, std::move(v));
}

Poly Poly::operator+(const Poly& b) const {
  require_same_field(field_, b.field_);
  std::vector<Code> v(std::max(coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.add(coeff(i), b.coeff(i));
  return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& b) const {
  require_same_field(field_, b.field_);
  std::vector<Code> v(std::max(coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.sub(coeff(i), b.coeff(i));
  return Poly(field_, std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Code> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.neg(coeffs_[i]);
  return Poly(field_, std::move(v));
}

Poly Poly::operator*(const Poly& b) const {
  require_same_field(field_, b.field_);
  if (is_zero() || b.is_zero()) return Poly(field_);
  std::vector<Code> v(coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] = field_.add(v[i + j], field_.mul(coeffs_[i], b.coeffs_[j]));
  }
  return Poly(field_, std::move(v));
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Code c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += field_.format(c);
      continue;
    }
    if (c != 1) out += field_.format(c) + "*";
    out += i == 1 ? std::string("x") : "x^" + std::to_string(i);
  }
  return out;
}

DivRem divrem(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
  const Field& f = a.field();
  if (a.is_zero() || a.deg() < b.deg()) return {Poly(f), a};
  std::vector<Code> r(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = b.deg();
  std::vector<Code> q(r.size() - db, 0);
  const Code lead_inv = f.inv(b.lead());
  const auto bc = b.coeffs();
  for (std::size_t k = r.size(); k-- > db;) {
    const Code c = f.mul(r[k], lead_inv);
    q[k - db] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = f.sub(r[k - db + i], f.mul(c, bc[i]));
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly quotient(const Poly& a, const Poly& b) { return divrem(a, b).quotient; }
Poly mod(const Poly& a, const Poly& m) { return divrem(a, m).remainder; }
bool divides(const Poly& d, const Poly& a) { return mod(a, d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly gcd(std::span<const Poly> polys) {
  std::optional<Poly> acc;
  for (const Poly& p : polys) {
    if (p.is_zero()) continue;
    acc = acc ? gcd(*acc, p) : p.monic();
    if (acc->deg() == 0) break;
  }
  if (!acc) throw Error(ErrorCode::BothZero, "gcd of only zero polynomials");
  return *acc;
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroArgument, "lcm with the zero polynomial");
  return quotient((a * b).monic(), gcd(a, b));
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(f), s1(f);
  Poly t0(f), t1 = Poly::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Code k = f.inv(r0.lead());
  return {r0.scaled(k), s0.scaled(k), t0.scaled(k)};
}

Poly reciprocal(const Poly& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroArgument, "reciprocal of the zero polynomial");
  std::vector<Code> v(a.coeffs().rbegin(), a.coeffs().rend());
  return Poly(a.field(), std::move(v));
}

bool is_self_reciprocal(const Poly& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroArgument, "self-reciprocal test on the zero polynomial");
  return a.monic() == reciprocal(a).monic();
}

bool associated(const Poly& a, const Poly& b) { return a.monic() == b.monic(); }

std::vector<Poly> crt_idempotents(std::span<const Poly> moduli) {
  if (moduli.empty()) return {};
  const Field& f = moduli.front().field();
  Poly product = Poly::one(f);
  for (const Poly& m : moduli) {
    if (m.is_zero()) throw Error(ErrorCode::ZeroArgument, "CRT modulus is zero");
    product *= m;
  }
  std::vector<Poly> out;
  out.reserve(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const Poly cofactor = quotient(product, moduli[i]);
    const auto eg = extended_gcd(cofactor, moduli[i]);
    if (!eg.g.is_one())
      throw Error(ErrorCode::NotCoprime, "modulus " + std::to_string(i + 1) + " shares the factor " +
                                             eg.g.to_string() + " with the others");
    out.push_back(mod(eg.s * cofactor, product));
  }
  return out;
}

Code eval(const Poly& a, Code v) {
  const Field& f = a.field();
  Code acc = 0;
  const auto c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, v), c[i]);
  return acc;
}

FieldElement eval(const Poly& a, const FieldElement& v) {
  require_same_field(a.field(), v.field());
  return {a.field(), eval(a, v.code())};
}

}  // namespace mtc
