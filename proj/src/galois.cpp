#include "mtcodes/galois.hpp"

#include <sstream>

namespace mtc {

struct Field::Tables {
  unsigned p = 0;
  unsigned d = 0;
  unsigned q = 0;
  std::vector<unsigned> modulus;
  std::vector<Code> add;
  std::vector<Code> mul;
  std::vector<Code> neg;
  std::vector<Code> inv;
  Code omega = 0;
  unsigned omega_order = 0;
  Code primitive = 1;
  std::vector<int> omega_log;  // -1 where the element is not a power of w
};

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// Remainder of a by the monic polynomial m, both over Z_p, ascending.
std::vector<unsigned> zp_mod(std::vector<unsigned> a, const std::vector<unsigned>& m, unsigned p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    a.pop_back();
  }
  return a;
}

bool zp_is_zero(const std::vector<unsigned>& a) {
  for (unsigned c : a)
    if (c != 0) return false;
  return true;
}

// Trial division by every monic polynomial of degree 1..d/2.
bool zp_irreducible(const std::vector<unsigned>& m, unsigned p) {
  const unsigned d = static_cast<unsigned>(m.size() - 1);
  for (unsigned k = 1; k <= d / 2; ++k) {
    unsigned count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (unsigned idx = 0; idx < count; ++idx) {
      std::vector<unsigned> div(k + 1, 0);
      unsigned v = idx;
      for (unsigned i = 0; i < k; ++i) {
        div[i] = v % p;
        v /= p;
      }
      div[k] = 1;
      if (zp_is_zero(zp_mod(m, div, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field Field::make(unsigned p, unsigned d, const std::vector<unsigned>& modulus_in) {
  if (!is_prime(p))
    throw Error(ErrorCode::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
  if (d < 1) throw Error(ErrorCode::DegreeMismatch, "extension degree must be at least 1");
  unsigned q = 1;
  for (unsigned i = 0; i < d; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Error(ErrorCode::FieldTooLarge, "p^d exceeds " + std::to_string(kMaxOrder));
  }
  if (modulus_in.size() != d + 1)
    throw Error(ErrorCode::DegreeMismatch, "modulus has " + std::to_string(modulus_in.size()) +
                                               " coefficients, expected " + std::to_string(d + 1));
  std::vector<unsigned> modulus(modulus_in.size());
  for (std::size_t i = 0; i < modulus.size(); ++i) modulus[i] = modulus_in[i] % p;
  if (modulus.back() != 1)
    throw Error(ErrorCode::DegreeMismatch, "modulus must be monic of degree " + std::to_string(d));
  if (!zp_irreducible(modulus, p))
    throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over Z_" + std::to_string(p));

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->d = d;
  t->q = q;
  t->modulus = modulus;

  auto unpack = [&](unsigned code) {
    std::vector<unsigned> c(d);
    for (unsigned i = 0; i < d; ++i) {
      c[i] = code % p;
      code /= p;
    }
    return c;
  };
  auto pack = [&](const std::vector<unsigned>& c) {
    unsigned code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
    return static_cast<Code>(code);
  };

  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const auto ca = unpack(a);
    std::vector<unsigned> cn(d);
    for (unsigned i = 0; i < d; ++i) cn[i] = (p - ca[i]) % p;
    t->neg[a] = pack(cn);
    for (unsigned b = 0; b < q; ++b) {
      const auto cb = unpack(b);
      std::vector<unsigned> s(d);
      for (unsigned i = 0; i < d; ++i) s[i] = (ca[i] + cb[i]) % p;
      t->add[a * q + b] = pack(s);
      std::vector<unsigned> prod(2 * d - 1, 0);
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      auto r = zp_mod(prod, modulus, p);
      r.resize(d, 0);
      t->mul[a * q + b] = pack(r);
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (t->mul[a * q + b] == 1) {
        t->inv[a] = static_cast<Code>(b);
        break;
      }

  // w is the class of x: coefficient tuple (0,1,0,...) for d >= 2, and
  // -c_0 for a linear modulus x + c_0.
  std::vector<unsigned> xw(d, 0);
  if (d >= 2)
    xw[1] = 1;
  else
    xw[0] = (p - modulus[0]) % p;
  t->omega = pack(xw);

  auto order_of = [&](Code a) -> unsigned {
    if (a == 0) return 0;
    unsigned k = 1;
    Code acc = a;
    while (acc != 1) {
      acc = t->mul[acc * q + a];
      ++k;
    }
    return k;
  };
  t->omega_order = order_of(t->omega);
  for (unsigned a = 1; a < q; ++a)
    if (order_of(static_cast<Code>(a)) == q - 1) {
      t->primitive = static_cast<Code>(a);
      break;
    }
  t->omega_log.assign(q, -1);
  if (t->omega != 0) {
    Code acc = 1;
    for (unsigned k = 0; k < t->omega_order; ++k) {
      t->omega_log[acc] = static_cast<int>(k);
      acc = t->mul[acc * q + t->omega];
    }
  }
  return Field(std::move(t));
}

Field Field::prime(unsigned p) { return make(p, 1, {0, 1}); }

unsigned Field::characteristic() const { return t_->p; }
unsigned Field::degree() const { return t_->d; }
unsigned Field::order() const { return t_->q; }
const std::vector<unsigned>& Field::modulus() const { return t_->modulus; }
unsigned Field::omega_order() const { return t_->omega_order; }
Code Field::omega() const { return t_->omega; }
Code Field::primitive() const { return t_->primitive; }

std::string Field::name() const { return "GF(" + std::to_string(t_->q) + ")"; }

Code Field::add(Code a, Code b) const { return t_->add[a * t_->q + b]; }
Code Field::sub(Code a, Code b) const { return t_->add[a * t_->q + t_->neg[b]]; }
Code Field::neg(Code a) const { return t_->neg[a]; }
Code Field::mul(Code a, Code b) const { return t_->mul[a * t_->q + b]; }

Code Field::inv(Code a) const {
  if (a == 0) throw Error(ErrorCode::ZeroInverse, "zero has no inverse in " + name());
  return t_->inv[a];
}

Code Field::pow(Code a, std::uint64_t k) const {
  Code result = 1;
  Code base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::span<const Code> Field::addition_table() const { return t_->add; }

Code Field::omega_pow(std::uint64_t k) const { return pow(t_->omega, k); }

Code Field::from_int(long long n) const {
  const long long p = t_->p;
  return static_cast<Code>(((n % p) + p) % p);
}

Code Field::from_coeffs(std::span<const unsigned> c) const {
  if (c.size() > t_->d)
    throw Error(ErrorCode::DegreeMismatch, "coefficient tuple longer than the extension degree");
  unsigned code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * t_->p + c[i] % t_->p;
  return static_cast<Code>(code);
}

std::vector<unsigned> Field::coeffs(Code a) const {
  std::vector<unsigned> c(t_->d);
  unsigned v = a;
  for (unsigned i = 0; i < t_->d; ++i) {
    c[i] = v % t_->p;
    v /= t_->p;
  }
  return c;
}

bool Field::in_prime_subfield(Code a) const { return a < t_->p; }

std::optional<unsigned> Field::omega_log(Code a) const {
  const int k = t_->omega_log[a];
  if (k < 0) return std::nullopt;
  return static_cast<unsigned>(k);
}

std::string Field::format(Code a) const {
  if (in_prime_subfield(a)) return std::to_string(a);
  if (auto k = omega_log(a)) return *k == 1 ? std::string("w") : "w^" + std::to_string(*k);
  std::ostringstream os;
  os << '(';
  const auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

bool Field::operator==(const Field& other) const {
  if (t_ == other.t_) return true;
  return t_->p == other.t_->p && t_->d == other.t_->d && t_->modulus == other.t_->modulus;
}

void require_same_field(const Field& a, const Field& b) {
  if (a != b) throw Error(ErrorCode::FieldMismatch, "operands over " + a.name() + " and " + b.name());
}

FieldElement::FieldElement(Field field, Code code) : field_(std::move(field)), code_(code) {
  if (code_ >= field_.order()) throw Error(ErrorCode::IndexOutOfRange, "element code out of range");
}

FieldElement FieldElement::operator+(const FieldElement& b) const {
  require_same_field(field_, b.field_);
  return {field_, field_.add(code_, b.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& b) const {
  require_same_field(field_, b.field_);
  return {field_, field_.sub(code_, b.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& b) const {
  require_same_field(field_, b.field_);
  return {field_, field_.mul(code_, b.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& b) const {
  require_same_field(field_, b.field_);
  return {field_, field_.div(code_, b.code_)};
}

FieldElement FieldElement::inv() const { return {field_, field_.inv(code_)}; }

bool FieldElement::operator==(const FieldElement& b) const {
  return field_ == b.field_ && code_ == b.code_;
}

}  // namespace mtc
