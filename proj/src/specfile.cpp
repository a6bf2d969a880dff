#include "mtcodes/specfile.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include "mtcodes/literal.hpp"

namespace mtc {

SpecError::SpecError(ErrorCode code, std::size_t line, std::size_t column, const std::string& what)
    : Error(code, line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what : what),
      line_(line),
      column_(column) {}

namespace {

struct Pos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Value {
  Pos pos;
  std::variant<long long, std::string, std::vector<Value>> data;
};

struct Entry {
  Pos pos;
  Value value;
};

struct Section {
  std::string name;
  Pos pos;
  std::map<std::string, Entry> entries;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : s_(text) {}

  std::vector<Section> sections() {
    std::vector<Section> out;
    while (true) {
      skip_blank(true);
      if (at_end()) break;
      if (peek() == '[') {
        out.push_back(header());
        continue;
      }
      if (out.empty()) fail("expected a section header such as [field]");
      const Pos kp = pos_;
      std::string key = ident();
      skip_blank(false);
      expect('=');
      skip_blank(false);
      Value v = value();
      skip_blank(false);
      if (!at_end() && peek() != '\n') fail("unexpected text after value");
      if (!out.back().entries.emplace(key, Entry{kp, std::move(v)}).second)
        throw SpecError(ErrorCode::ParseError, kp.line, kp.column, "duplicate key '" + key + "'");
    }
    return out;
  }

 private:
  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[i_]; }

  void advance() {
    if (s_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((static_cast<unsigned char>(s_[i_]) & 0xC0) != 0x80) {
      ++pos_.column;
    }
    ++i_;
  }

  // Skips spaces and comments; newlines too when `newlines` is set.
  void skip_blank(bool newlines) {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SpecError(ErrorCode::ParseError, pos_.line, pos_.column, what);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string ident() {
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      out += peek();
      advance();
    }
    if (out.empty()) fail("expected a key");
    return out;
  }

  Section header() {
    const Pos hp = pos_;
    expect('[');
    const bool array = peek() == '[';
    if (array) advance();
    std::string name = ident();
    expect(']');
    if (array) expect(']');
    skip_blank(false);
    if (!at_end() && peek() != '\n') fail("unexpected text after section header");
    if (array != (name == "generator"))
      throw SpecError(ErrorCode::ParseError, hp.line, hp.column,
                      name == "generator" ? "generators use the [[generator]] header"
                                          : "unknown section [" + std::string(array ? "[" : "") + name + "]");
    if (name != "field" && name != "blocks" && name != "generator")
      throw SpecError(ErrorCode::ParseError, hp.line, hp.column, "unknown section [" + name + "]");
    return Section{name, hp, {}};
  }

  Value value() {
    const Pos vp = pos_;
    const char c = peek();
    if (c == '"') {
      advance();
      std::string out;
      while (!at_end() && peek() != '"') {
        if (peek() == '\n') fail("unterminated string");
        if (peek() == '\\') advance();
        if (at_end()) break;
        out += peek();
        advance();
      }
      expect('"');
      return Value{vp, std::move(out)};
    }
    if (c == '[') {
      advance();
      std::vector<Value> items;
      skip_blank(true);
      while (peek() != ']') {
        items.push_back(value());
        skip_blank(true);
        if (peek() == ',') {
          advance();
          skip_blank(true);
        } else if (peek() != ']') {
          fail("expected ',' or ']'");
        }
      }
      expect(']');
      return Value{vp, std::move(items)};
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool neg = false;
      if (c == '-') {
        neg = true;
        advance();
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
      long long v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = v * 10 + (peek() - '0');
        if (v > 1'000'000'000) fail("number too large");
        advance();
      }
      return Value{vp, neg ? -v : v};
    }
    fail("expected a number, string or array");
  }

  std::string_view s_;
  std::size_t i_ = 0;
  Pos pos_;
};

[[noreturn]] void semantic(const Pos& p, const std::string& what) {
  throw SpecError(ErrorCode::SemanticError, p.line, p.column, what);
}

long long as_int(const Entry& e, const std::string& name) {
  if (const auto* v = std::get_if<long long>(&e.value.data)) return *v;
  semantic(e.value.pos, name + " must be an integer");
}

const std::vector<Value>& as_array(const Entry& e, const std::string& name) {
  if (const auto* v = std::get_if<std::vector<Value>>(&e.value.data)) return *v;
  semantic(e.value.pos, name + " must be an array");
}

const Entry& required(const Section& s, const std::string& key) {
  auto it = s.entries.find(key);
  if (it == s.entries.end()) semantic(s.pos, "[" + s.name + "] is missing '" + key + "'");
  return it->second;
}

void reject_unknown(const Section& s, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, entry] : s.entries) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) semantic(entry.pos, "unknown key '" + key + "' in [" + s.name + "]");
  }
}

template <class F>
auto with_literal_position(const Value& v, const std::string& name, F&& parse) {
  try {
    return parse();
  } catch (const LiteralError& e) {
    // +1 skips the opening quote.
    throw SpecError(ErrorCode::ParseError, v.pos.line, v.pos.column + e.column(), name + ": " + e.what());
  }
}

}  // namespace

MTSpec parse_spec(std::string_view text) {
  Reader reader(text);
  const auto sections = reader.sections();
  const Section* field_sec = nullptr;
  const Section* blocks_sec = nullptr;
  std::vector<const Section*> gen_secs;
  for (const auto& s : sections) {
    if (s.name == "field") {
      if (field_sec) semantic(s.pos, "duplicate [field] section");
      field_sec = &s;
    } else if (s.name == "blocks") {
      if (blocks_sec) semantic(s.pos, "duplicate [blocks] section");
      blocks_sec = &s;
    } else {
      gen_secs.push_back(&s);
    }
  }
  if (!field_sec) throw SpecError(ErrorCode::SemanticError, 0, 0, "missing [field] section");
  if (!blocks_sec) throw SpecError(ErrorCode::SemanticError, 0, 0, "missing [blocks] section");
  if (gen_secs.empty()) throw SpecError(ErrorCode::SemanticError, 0, 0, "missing [[generator]] section");

  reject_unknown(*field_sec, {"p", "degree", "modulus"});
  const Entry& pe = required(*field_sec, "p");
  const long long p = as_int(pe, "field.p");
  if (p < 2) semantic(pe.value.pos, "field.p must be a prime");
  long long d = 1;
  if (auto it = field_sec->entries.find("degree"); it != field_sec->entries.end()) {
    d = as_int(it->second, "field.degree");
    if (d < 1 || d > 8) semantic(it->second.value.pos, "field.degree must be between 1 and 8");
  }
  std::vector<unsigned> modulus;
  Pos mod_pos = field_sec->pos;
  if (auto it = field_sec->entries.find("modulus"); it != field_sec->entries.end()) {
    mod_pos = it->second.value.pos;
    for (const Value& v : as_array(it->second, "field.modulus")) {
      const auto* c = std::get_if<long long>(&v.data);
      if (!c || *c < 0) semantic(v.pos, "field.modulus entries must be non-negative integers");
      modulus.push_back(static_cast<unsigned>(*c));
    }
  } else if (d == 1) {
    modulus = {0, 1};
  } else {
    semantic(field_sec->pos, "[field] is missing 'modulus' (required when degree > 1)");
  }
  std::optional<Field> field;
  try {
    field = Field::make(static_cast<unsigned>(p), static_cast<unsigned>(d), modulus);
  } catch (const Error& e) {
    const Pos where = e.code() == ErrorCode::NonPrimeCharacteristic ? pe.value.pos : mod_pos;
    semantic(where, std::string("field: ") + e.what());
  }

  reject_unknown(*blocks_sec, {"lengths", "shifts"});
  const Entry& le = required(*blocks_sec, "lengths");
  const Entry& se = required(*blocks_sec, "shifts");
  std::vector<std::size_t> lengths;
  for (const Value& v : as_array(le, "blocks.lengths")) {
    const auto* m = std::get_if<long long>(&v.data);
    if (!m || *m < 1 || *m > 4096) semantic(v.pos, "blocks.lengths entries must be integers in [1, 4096]");
    lengths.push_back(static_cast<std::size_t>(*m));
  }
  std::vector<Code> shifts;
  const auto& shift_values = as_array(se, "blocks.shifts");
  for (std::size_t i = 0; i < shift_values.size(); ++i) {
    const Value& v = shift_values[i];
    const auto* lit = std::get_if<std::string>(&v.data);
    if (!lit) semantic(v.pos, "blocks.shifts entries must be quoted element literals");
    const std::string name = "blocks.shifts[" + std::to_string(i + 1) + "]";
    const Code c = with_literal_position(v, name, [&] { return parse_element(*field, *lit); });
    if (c == 0) semantic(v.pos, name + " is zero; shift constants must be nonzero");
    shifts.push_back(c);
  }
  if (shifts.size() != lengths.size())
    semantic(se.value.pos, "blocks.shifts has " + std::to_string(shifts.size()) + " entries but blocks.lengths has " +
                               std::to_string(lengths.size()));
  if (lengths.empty()) semantic(le.value.pos, "blocks.lengths must not be empty");

  std::vector<std::vector<Poly>> gens;
  for (std::size_t k = 0; k < gen_secs.size(); ++k) {
    const Section& g = *gen_secs[k];
    reject_unknown(g, {"blocks"});
    const Entry& be = required(g, "blocks");
    const auto& items = as_array(be, "generator.blocks");
    if (items.size() != lengths.size())
      semantic(be.value.pos, "generator " + std::to_string(k + 1) + " has " + std::to_string(items.size()) +
                                 " blocks, expected " + std::to_string(lengths.size()));
    std::vector<Poly> row;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto* lit = std::get_if<std::string>(&items[i].data);
      if (!lit) semantic(items[i].pos, "generator.blocks entries must be quoted polynomial literals");
      const std::string name = "generator " + std::to_string(k + 1) + " block " + std::to_string(i + 1);
      row.push_back(with_literal_position(items[i], name, [&] { return parse_poly(*field, *lit); }));
    }
    gens.push_back(std::move(row));
  }
  return MTSpec::make(*field, std::move(lengths), std::move(shifts), std::move(gens));
}

MTSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError(ErrorCode::ParseError, 0, 0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string write_spec(const MTSpec& spec, std::string_view comment) {
  const Field& f = spec.field();
  std::ostringstream os;
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    for (std::string line; std::getline(lines, line);) os << "# " << line << '\n';
  }
  os << "[field]\np = " << f.characteristic() << "\ndegree = " << f.degree() << "\nmodulus = [";
  for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? ", " : "") << f.modulus()[i];
  os << "]\n\n[blocks]\nlengths = [";
  for (std::size_t i = 0; i < spec.ell(); ++i) os << (i ? ", " : "") << spec.length(i);
  os << "]\nshifts = [";
  for (std::size_t i = 0; i < spec.ell(); ++i) os << (i ? ", " : "") << '"' << f.format(spec.shift(i)) << '"';
  os << "]\n";
  for (const auto& row : spec.generators()) {
    os << "\n[[generator]]\nblocks = [";
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << '"' << row[i].to_string() << '"';
    os << "]\n";
  }
  return os.str();
}

}  // namespace mtc
