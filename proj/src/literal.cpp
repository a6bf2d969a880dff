#include "mtcodes/literal.hpp"

#include <cctype>
#include <vector>

namespace mtc {

namespace {

constexpr std::string_view kOmegaUtf8 = "\xCF\x89";

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept_omega() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == 'w') {
      ++pos_;
      return true;
    }
    if (s_.substr(pos_, kOmegaUtf8.size()) == kOmegaUtf8) {
      pos_ += kOmegaUtf8.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  unsigned long long integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    unsigned long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(s_[pos_] - '0');
      if (v > 1'000'000'000ull) fail("number too large");
      ++pos_;
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw LiteralError(pos_ + 1, what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

bool starts_element(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == 'w' || c == '(' || c == '\xCF'; }

Code element(const Field& f, Cursor& in) {
  if (in.accept_omega()) {
    if (in.accept('^')) return f.omega_pow(in.integer());
    return f.omega();
  }
  if (in.accept('(')) {
    std::vector<unsigned> coeffs;
    do {
      coeffs.push_back(static_cast<unsigned>(in.integer() % f.characteristic()));
    } while (in.accept(','));
    in.expect(')');
    if (coeffs.size() > f.degree()) in.fail("tuple has more than " + std::to_string(f.degree()) + " entries");
    return f.from_coeffs(coeffs);
  }
  return f.from_int(static_cast<long long>(in.integer() % f.characteristic()));
}

}  // namespace

Code parse_element(const Field& f, std::string_view text) {
  Cursor in(text);
  const bool negate = in.accept('-');
  if (in.done()) in.fail("empty element literal");
  Code c = element(f, in);
  if (!in.done()) in.fail("unexpected trailing text");
  return negate ? f.neg(c) : c;
}

Poly parse_poly(const Field& f, std::string_view text) {
  Cursor in(text);
  if (in.done()) in.fail("empty polynomial literal");
  Poly acc(f);
  bool first = true;
  while (!in.done()) {
    bool negate = false;
    if (in.accept('-'))
      negate = true;
    else if (!in.accept('+') && !first)
      in.fail("expected '+' or '-'");
    first = false;

    Code coef = 1;
    bool has_coef = false;
    if (starts_element(in.peek())) {
      coef = element(f, in);
      has_coef = true;
    }
    std::size_t exponent = 0;
    bool has_x = false;
    if (has_coef) in.accept('*');
    if (in.accept('x')) {
      has_x = true;
      exponent = in.accept('^') ? in.integer() : 1;
    }
    if (!has_coef && !has_x) in.fail("expected a term");
    if (exponent > 4096) in.fail("exponent too large");
    acc += Poly::monomial(f, negate ? f.neg(coef) : coef, exponent);
  }
  return acc;
}

}  // namespace mtc
