#include "mtcodes/fixtures.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "mtcodes/literal.hpp"
#include "mtcodes/specfile.hpp"

namespace mtc {

namespace {

using Outcome = std::pair<bool, std::string>;

Matrix literal_matrix(const Field& f, std::initializer_list<std::string_view> rows) {
  std::vector<Word> words;
  for (std::string_view row : rows) {
    Word w;
    std::istringstream in{std::string(row)};
    std::string tok;
    while (in >> tok) w.push_back(parse_element(f, tok));
    words.push_back(std::move(w));
  }
  return Matrix::from_rows(f, words.front().size(), words);
}

Outcome same_size(std::size_t got, std::size_t want) {
  return {got == want, "got " + std::to_string(got) + ", expected " + std::to_string(want)};
}

Outcome same_flag(bool got, bool want) {
  return {got == want, std::string("got ") + (got ? "true" : "false")};
}

Outcome same_distance(std::optional<std::size_t> got, std::size_t want) {
  if (!got) return {false, "no codeword found up to weight " + std::to_string(want)};
  return same_size(*got, want);
}

Outcome same_poly(const Poly& got, const Poly& want) {
  return {associated(got, want), "got " + got.to_string() + ", expected " + want.to_string() + " up to a scalar"};
}

Outcome same_poly(const Poly& got, std::string_view want) { return same_poly(got, parse_poly(got.field(), want)); }

Outcome same_rows(const Matrix& got, const Matrix& want) {
  return {row_space_equal(got, want), "row spaces differ; got basis\n" + got.to_string()};
}

Outcome same_poly_set(const std::vector<Poly>& got, const Field& f, std::initializer_list<std::string_view> want) {
  std::vector<bool> used(got.size(), false);
  for (std::string_view w : want) {
    const Poly p = parse_poly(f, w);
    bool found = false;
    for (std::size_t i = 0; i < got.size() && !found; ++i) {
      if (!used[i] && associated(got[i], p)) used[i] = found = true;
    }
    if (!found) return {false, "missing " + p.to_string()};
  }
  return same_size(got.size(), want.size());
}

class Recorder {
 public:
  explicit Recorder(FixtureOutcome& out) : out_(out) {}

  void operator()(std::string claim, const std::function<Outcome()>& fn) {
    try {
      auto [ok, detail] = fn();
      out_.checks.push_back({std::move(claim), ok, ok ? std::string() : detail});
    } catch (const std::exception& e) {
      out_.checks.push_back({std::move(claim), false, e.what()});
    }
  }

 private:
  FixtureOutcome& out_;
};

std::optional<std::size_t> distance(const LinearCode& c, std::size_t expected, const SuiteOptions& o) {
  constexpr std::uint64_t kQuickMessages = 1'000'000;
  if (o.full_distance || message_count(c) <= kQuickMessages) return min_distance(c, kDefaultDistanceCap, o.threads);
  return min_distance_via_dual(c, expected);
}

bool claim_refuted(const MTSpec& s, const std::string& name) { return refuted_hypotheses(s).claim(name).refuted(); }

bool block_full(const MTSpec& s, std::size_t i) { return block_generator(s, i).is_one(); }

using Runner = void (*)(Recorder&, const MTSpec&, const SuiteOptions&);

// --- GF(5), (2,3), lengths (3,9), two generators ---------------------------

constexpr std::string_view kGf5Text = R"(# (2,3)-MT code over GF(5), block lengths (3,9)
[field]
p = 5
degree = 1

[blocks]
lengths = [3, 9]
shifts = ["2", "3"]

[[generator]]
blocks = ["1 + 4x + 3x^2", "4 + 2x + 3x^2 + x^3 + x^4 + x^5 + x^6 + 3x^8"]

[[generator]]
blocks = ["1 + 4x", "3 + 4x^3 + 2x^6 + 2x^7 + x^8"]
)";

Matrix gf5_parity(const Field& f) { return literal_matrix(f, {"1 3 4 3 4 2 1 3 4 2 1 3"}); }

void run_gf5_two_generator(Recorder& check, const MTSpec& s, const SuiteOptions& o) {
  const Field& f = s.field();
  const LinearCode c = expand(s);
  check("dimension is 11", [&] { return same_size(c.dimension(), 11); });
  check("printed generator matrix spans the code", [&] {
    return same_rows(c.basis(), literal_matrix(f, {
                                    "1 0 0 0 0 0 0 0 0 0 0 3", "0 1 0 0 0 0 0 0 0 0 0 4",
                                    "0 0 1 0 0 0 0 0 0 0 0 2", "0 0 0 1 0 0 0 0 0 0 0 4",
                                    "0 0 0 0 1 0 0 0 0 0 0 2", "0 0 0 0 0 1 0 0 0 0 0 1",
                                    "0 0 0 0 0 0 1 0 0 0 0 3", "0 0 0 0 0 0 0 1 0 0 0 4",
                                    "0 0 0 0 0 0 0 0 1 0 0 2", "0 0 0 0 0 0 0 0 0 1 0 1",
                                    "0 0 0 0 0 0 0 0 0 0 1 3",
                                }));
  });
  check("formula dimension 11 with d_2 = x + 2", [&] {
    const DimensionFormula df = dimension_formula(s);
    if (df.dimension != 11) return same_size(df.dimension, 11);
    return same_poly(df.divisor, "x + 2");
  });
  const LinearCode d = mt_dual(s);
  check("dual dimension is 1", [&] { return same_size(d.dimension(), 1); });
  check("dual spanned by (1,3,4,3,4,2,1,3,4,2,1,3)", [&] { return same_rows(d.basis(), gf5_parity(f)); });
  check("dual is invariant under the inverted shifts", [&] {
    return same_flag(is_shift_invariant(d, s.lengths(), {f.inv(s.shift(0)), f.inv(s.shift(1))}), true);
  });
  check("hull dimension is 1", [&] { return same_size(hull(c).dimension(), 1); });
  check("not LCD by the hull", [&] { return same_flag(is_lcd_by_hull(c), false); });
  check("not LCD by GG^T", [&] { return same_flag(is_lcd_by_gram(c), false); });
  check("minimum distance is 2", [&] { return same_distance(distance(c, 2, o), 2); });
  check("dual minimum distance is 12", [&] { return same_distance(distance(d, 12, o), 12); });
  const MTSpec ds = dual_spec(s);
  check("dual projection 1 generated by 4 + 2x + x^2", [&] { return same_poly(block_generator(ds, 0), "4 + 2x + x^2"); });
  check("dual projection 2 generated by 1 + 3x + 4x^2 + 2x^3 + x^4 + 3x^5 + 4x^6 + 2x^7 + x^8", [&] {
    return same_poly(block_generator(ds, 1), "1 + 3x + 4x^2 + 2x^3 + x^4 + 3x^5 + 4x^6 + 2x^7 + x^8");
  });
  check("small-dimension claim refuted", [&] { return same_flag(claim_refuted(s, "small-dimension"), true); });
  check("nontrivial-projections claim refuted", [&] {
    return same_flag(claim_refuted(s, "nontrivial-projections"), true);
  });
}

// --- GF(9), three blocks, dimension 4 ------------------------------------

constexpr std::string_view kGf9Text = R"(# (w^7,w^7,w^6)-MT code over GF(9), block lengths (4,4,8)
# GF(9) = GF(3)[w] with w^2 + 2w + 2 = 0
[field]
p = 3
degree = 2
modulus = [2, 2, 1]

[blocks]
lengths = [4, 4, 8]
shifts = ["w^7", "w^7", "w^6"]

[[generator]]
blocks = [
  "1",
  "w^3 + w^7*x + w^6*x^2",
  "w^7 + w^5*x + w^7*x^2 + w^5*x^3 + x^4 + w^6*x^5 + x^6 + w^6*x^7",
]
)";

void run_gf9(Recorder& check, const MTSpec& s, const SuiteOptions& o) {
  const Field& f = s.field();
  const LinearCode c = expand(s);
  const Matrix printed = literal_matrix(
      f, {
             "1 0 0 0 w^3 w^7 w^6 0 w^7 w^5 w^7 w^5 1 w^6 1 w^6",
             "0 1 0 0 0 w^3 w^7 w^6 2 w^7 w^5 w^7 w^5 1 w^6 1",
             "0 0 1 0 w^5 0 w^3 w^7 w^6 2 w^7 w^5 w^7 w^5 1 w^6",
             "0 0 0 1 w^6 w^5 0 w^3 2 w^6 2 w^7 w^5 w^7 w^5 1",
         });
  const Matrix g = gram(LinearCode(printed));
  check("dimension is 4", [&] { return same_size(c.dimension(), 4); });
  check("formula dimension is 4", [&] { return same_size(dimension_formula(s).dimension, 4); });
  check("printed generator matrix spans the code", [&] { return same_rows(c.basis(), printed); });
  check("GG^T matches the printed 4x4 matrix", [&] {
    const Matrix want = literal_matrix(f, {"w^5 w^7 0 w^3", "w^7 w^7 1 w^5", "0 1 w^7 0", "w^3 w^5 0 w"});
    return Outcome{g == want, "got\n" + g.to_string()};
  });
  check("GG^T is singular", [&] { return same_flag(is_nonsingular(g), false); });
  check("GG^T is nonzero", [&] { return same_flag(g.is_zero(), false); });
  check("not LCD", [&] { return same_flag(is_lcd(c), false); });
  check("not self-orthogonal", [&] { return same_flag(is_self_orthogonal(c), false); });
  check("hull spanned by the printed 16-vector", [&] {
    return same_rows(hull(c).basis(), literal_matrix(f, {"1 1 w^7 w^3 0 1 w^7 0 w 0 0 w^7 w^2 0 0 1"}));
  });
  check("minimum distance is 10", [&] { return same_distance(distance(c, 10, o), 10); });
  const LinearCode d = mt_dual(s);
  check("dual is not LCD", [&] { return same_flag(is_lcd(d), false); });
  check("dual is not dual-containing", [&] { return same_flag(is_dual_containing(d), false); });
  check("dimension-equals-min claim refuted", [&] {
    return same_flag(claim_refuted(s, "dimension-equals-min"), true);
  });
  check("dual-dimension-equals-min claim refuted on the dual", [&] {
    return same_flag(claim_refuted(dual_spec(s), "dual-dimension-equals-min"), true);
  });
}

// --- GF(5), (3,3), lengths (5,5), dimension 2 -------------------------------

constexpr std::string_view kGf5DimTwoText = R"(# (3,3)-MT code over GF(5), block lengths (5,5)
[field]
p = 5
degree = 1

[blocks]
lengths = [5, 5]
shifts = ["3", "3"]

[[generator]]
blocks = ["3 + 2x + x^2 + x^3", "4 + 2x + 2x^2 + 2x^4"]
)";

void run_gf5_dim_two(Recorder& check, const MTSpec& s, const SuiteOptions& o) {
  const Field& f = s.field();
  const LinearCode c = expand(s);
  const Poly cube = parse_poly(f, "x + 2") * parse_poly(f, "x + 2") * parse_poly(f, "x + 2");
  const Poly square = parse_poly(f, "x + 2") * parse_poly(f, "x + 2");
  const Coprimality cop = coprimality_condition(s);
  check("dimension is 2", [&] { return same_size(c.dimension(), 2); });
  check("printed generator matrix spans the code", [&] {
    return same_rows(c.basis(), literal_matrix(f, {"1 0 1 4 2 0 2 3 4 4", "0 1 4 2 2 2 3 4 4 0"}));
  });
  check("hull spanned by (0,1,4,2,2,2,3,4,4,0)", [&] {
    return same_rows(hull(c).basis(), literal_matrix(f, {"0 1 4 2 2 2 3 4 4 0"}));
  });
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string b = std::to_string(i + 1);
    check("g_" + b + " = (x+2)^3", [&] { return same_poly(cop.generators[i], cube); });
    check("quotient " + b + " = (x+2)^2", [&] { return same_poly(cop.quotients[i], square); });
    check("projection " + b + " is a [5,2,4] code", [&] {
      const LinearCode p = projection_code(s, i);
      if (p.dimension() != 2) return same_size(p.dimension(), 2);
      return same_distance(min_distance(p), 4);
    });
  }
  check("quotients share (x+2)^2", [&] {
    if (!cop.witness) return Outcome{false, "quotients are coprime"};
    return same_poly(cop.witness->common, square);
  });
  check("verdict is Inconclusive", [&] {
    const auto k = lcd_verdict(s).kind;
    return Outcome{k == LcdVerdict::Kind::Inconclusive, "got " + to_string(k)};
  });
  check("not LCD", [&] { return same_flag(is_lcd(c), false); });
  check("minimum distance is 8", [&] { return same_distance(distance(c, 8, o), 8); });
  check("small-dimension claim refuted", [&] { return same_flag(claim_refuted(s, "small-dimension"), true); });
  check("nontrivial-projections claim refuted", [&] {
    return same_flag(claim_refuted(s, "nontrivial-projections"), true);
  });
}

// --- GF(4), (w^2,w), lengths (4,8), dimension 4 -----------------------------

constexpr std::string_view kGf4DimFourText = R"(# (w^2,w)-MT code over GF(4), block lengths (4,8)
# GF(4) = GF(2)[w] with w^2 + w + 1 = 0
[field]
p = 2
degree = 2
modulus = [1, 1, 1]

[blocks]
lengths = [4, 8]
shifts = ["w^2", "w"]

[[generator]]
blocks = ["1", "w + w*x + x^2 + w^2*x^3 + w^2*x^4 + w^2*x^5 + w*x^6 + x^7"]
)";

void run_gf4_dim_four(Recorder& check, const MTSpec& s, const SuiteOptions& o) {
  const Field& f = s.field();
  const LinearCode c = expand(s);
  const DimensionFormula df = dimension_formula(s);
  check("dimension is 4", [&] { return same_size(c.dimension(), 4); });
  check("formula dimension is 4", [&] { return same_size(df.dimension, 4); });
  check("d_2 = x^8 + w", [&] { return same_poly(df.divisor, "x^8 + w"); });
  check("three 2x2 minors reproduced", [&] {
    return same_poly_set(df.minors, f,
                         {"x^11 + w*x^10 + w^2*x^9 + w^2*x^8 + w*x^3 + w^2*x^2 + x + 1", "x^8 + w",
                          "x^12 + w^2*x^8 + w*x^4 + 1"});
  });
  check("printed generator matrix spans the code", [&] {
    return same_rows(c.basis(), literal_matrix(f, {
                                    "1 0 0 0 w w 1 w^2 w^2 w^2 w 1",
                                    "0 1 0 0 w w w 1 w^2 w^2 w^2 w",
                                    "0 0 1 0 w^2 w w w 1 w^2 w^2 w^2",
                                    "0 0 0 1 1 w^2 w w w 1 w^2 w^2",
                                }));
  });
  check("hull spanned by the printed 12-vector", [&] {
    return same_rows(hull(c).basis(), literal_matrix(f, {"1 0 0 w^2 1 0 0 w w 0 0 w^2"}));
  });
  check("not LCD", [&] { return same_flag(is_lcd(c), false); });
  check("not self-orthogonal", [&] { return same_flag(is_self_orthogonal(c), false); });
  check("minimum distance is 6", [&] { return same_distance(distance(c, 6, o), 6); });
  const LinearCode d = mt_dual(s);
  check("dual is not LCD", [&] { return same_flag(is_lcd(d), false); });
  check("dual is not dual-containing", [&] { return same_flag(is_dual_containing(d), false); });
  check("dimension-equals-min claim refuted", [&] {
    return same_flag(claim_refuted(s, "dimension-equals-min"), true);
  });
  check("dual-dimension-equals-min claim refuted on the dual", [&] {
    return same_flag(claim_refuted(dual_spec(s), "dual-dimension-equals-min"), true);
  });
}

// --- GF(4), (w,w), lengths (5,5), LCD from coprime quotients -----------------

constexpr std::string_view kGf4LcdText = R"(# (w,w)-MT code over GF(4), block lengths (5,5)
[field]
p = 2
degree = 2
modulus = [1, 1, 1]

[blocks]
lengths = [5, 5]
shifts = ["w", "w"]

[[generator]]
blocks = ["1 + x + w^2*x^2", "1 + x + w*x^2 + x^3"]
)";

void run_gf4_lcd(Recorder& check, const MTSpec& s, const SuiteOptions& o) {
  const Field& f = s.field();
  const LinearCode c = expand(s);
  const Coprimality cop = coprimality_condition(s);
  const Poly cubic = parse_poly(f, "x + w^2") * parse_poly(f, "x^2 + x + w");
  check("dimension is 5", [&] { return same_size(c.dimension(), 5); });
  check("printed generator matrix spans the code", [&] {
    return same_rows(c.basis(), literal_matrix(f, {
                                    "1 0 0 1 1 0 0 0 0 0",
                                    "0 1 0 w w^2 0 0 0 0 0",
                                    "0 0 1 1 w^2 0 0 0 0 0",
                                    "0 0 0 0 0 1 0 w^2 w^2 1",
                                    "0 0 0 0 0 0 1 1 w 1",
                                }));
  });
  check("g_1 = w + w*x + x^2", [&] { return same_poly(cop.generators[0], "w + w*x + x^2"); });
  check("g_2 = (x+w^2)(x^2+x+w)", [&] { return same_poly(cop.generators[1], cubic); });
  check("quotient 1 = (x+w^2)(x^2+x+w)", [&] { return same_poly(cop.quotients[0], cubic); });
  check("quotient 2 = x^2 + w*x + w", [&] { return same_poly(cop.quotients[1], "x^2 + w*x + w"); });
  check("quotients coprime", [&] { return same_flag(cop.holds, true); });
  check("verdict is LCD", [&] {
    const auto k = lcd_verdict(s).kind;
    return Outcome{k == LcdVerdict::Kind::LCD, "got " + to_string(k)};
  });
  check("GG^T nonsingular", [&] { return same_flag(is_nonsingular(gram(c)), true); });
  check("exactly LCD", [&] { return same_flag(is_lcd(c), true); });
  check("direct sum of projections with dimensions 3 + 2", [&] {
    const DirectSum ds = direct_sum_check(s);
    return Outcome{ds.dimensions == std::vector<std::size_t>{3, 2}, "dimension split differs"};
  });
  check("minimum distance is 3", [&] { return same_distance(distance(c, 3, o), 3); });
  check("older binomial condition does not apply", [&] { return same_flag(legacy_lcd_condition(s), false); });
}

// --- GF(3), (2,1), lengths (5,7), LCD with lambda^2 = 1 ----------------------

constexpr std::string_view kGf3LcdText = R"(# (2,1)-MT code over GF(3), block lengths (5,7)
[field]
p = 3
degree = 1

[blocks]
lengths = [5, 7]
shifts = ["2", "1"]

[[generator]]
blocks = ["1 + x + x^2 + 2x^3 + x^4", "1 + 2x^2 + 2x^3 + x^4 + 2x^5 + x^6"]
)";

void run_gf3_lcd(Recorder& check, const MTSpec& s, const SuiteOptions& o) {
  const Field& f = s.field();
  const LinearCode c = expand(s);
  const Coprimality cop = coprimality_condition(s);
  check("dimension is 10", [&] { return same_size(c.dimension(), 10); });
  check("printed generator matrix spans the code", [&] {
    return same_rows(c.basis(), literal_matrix(f, {
                                    "1 0 0 0 2 0 0 0 0 0 0 0", "0 1 0 0 1 0 0 0 0 0 0 0",
                                    "0 0 1 0 2 0 0 0 0 0 0 0", "0 0 0 1 1 0 0 0 0 0 0 0",
                                    "0 0 0 0 0 1 0 0 0 0 0 2", "0 0 0 0 0 0 1 0 0 0 0 2",
                                    "0 0 0 0 0 0 0 1 0 0 0 2", "0 0 0 0 0 0 0 0 1 0 0 2",
                                    "0 0 0 0 0 0 0 0 0 1 0 2", "0 0 0 0 0 0 0 0 0 0 1 2",
                                }));
  });
  check("g_1 = x + 1", [&] { return same_poly(cop.generators[0], "x + 1"); });
  check("g_2 = x - 1", [&] { return same_poly(cop.generators[1], "x - 1"); });
  check("quotient 1 = x^4 - x^3 + x^2 - x + 1", [&] {
    return same_poly(cop.quotients[0], "x^4 - x^3 + x^2 - x + 1");
  });
  check("quotient 2 = x^6 + x^5 + x^4 + x^3 + x^2 + x + 1", [&] {
    return same_poly(cop.quotients[1], "x^6 + x^5 + x^4 + x^3 + x^2 + x + 1");
  });
  check("quotients coprime", [&] { return same_flag(cop.holds, true); });
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string b = std::to_string(i + 1);
    check("lambda_" + b + "^2 = 1", [&] { return same_flag(f.mul(s.shift(i), s.shift(i)) == 1, true); });
    check("g_" + b + " self-reciprocal and coprime to its quotient", [&] {
      return same_flag(is_self_reciprocal(cop.generators[i]) && gcd(cop.generators[i], cop.quotients[i]).is_one(),
                       true);
    });
  }
  check("verdict is LCD", [&] {
    const auto k = lcd_verdict(s).kind;
    return Outcome{k == LcdVerdict::Kind::LCD, "got " + to_string(k)};
  });
  check("GG^T nonsingular", [&] { return same_flag(is_nonsingular(gram(c)), true); });
  check("exactly LCD", [&] { return same_flag(is_lcd(c), true); });
  check("direct sum of projections with dimensions 4 + 6", [&] {
    const DirectSum ds = direct_sum_check(s);
    return Outcome{ds.dimensions == std::vector<std::size_t>{4, 6}, "dimension split differs"};
  });
  check("minimum distance is 2", [&] { return same_distance(distance(c, 2, o), 2); });
  check("older binomial condition does not apply", [&] { return same_flag(legacy_lcd_condition(s), false); });
}

// --- determinantal divisor data for the GF(5) two-generator code -------------

void run_gf5_minors(Recorder& check, const MTSpec& s, const SuiteOptions&) {
  const Field& f = s.field();
  const DimensionFormula df = dimension_formula(s);
  check("stacked matrix is 4x2", [&] {
    return Outcome{df.stacked.rows() == 4 && df.stacked.cols() == 2, "wrong shape"};
  });
  check("six 2x2 minors reproduced", [&] {
    return same_poly_set(df.minors, f,
                         {
                             "3x^10 + 3x^9 + 2x^8 + x^7 + 2x^6 + 2x^5 + x^4 + x^3 + 3x^2 + 4x + 4",
                             "2x^11 + 4x^9 + 4x^7 + x^6 + 4x^5 + 3x^3 + x^2 + 4x + 3",
                             "3x^11 + 4x^10 + x^9 + x^2 + 3x + 2",
                             "4x^11 + 3x^10 + 3x^9 + 2x^8 + 4x^7 + 1",
                             "4x^10 + x^9 + 3x + 2",
                             "x^12 + 3x^9 + 2x^3 + 1",
                         });
  });
  check("d_2 = x + 2", [&] { return same_poly(df.divisor, "x + 2"); });
  check("dimension 12 - 1 = 11", [&] { return same_size(df.dimension, 11); });
}

// --- the GF(5) dual written as its own (3,2)-MT spec ------------------------

constexpr std::string_view kGf5DualText = R"(# (3,2)-MT code over GF(5), block lengths (3,9)
[field]
p = 5
degree = 1

[blocks]
lengths = [3, 9]
shifts = ["3", "2"]

[[generator]]
blocks = ["1 + 3x + 4x^2", "3 + 4x + 2x^2 + x^3 + 3x^4 + 4x^5 + 2x^6 + x^7 + 3x^8"]
)";

void run_gf5_dual(Recorder& check, const MTSpec& s, const SuiteOptions& o) {
  const Field& f = s.field();
  const LinearCode c = expand(s);
  const Coprimality cop = coprimality_condition(s);
  check("dimension is 1", [&] { return same_size(c.dimension(), 1); });
  check("spanned by (1,3,4,3,4,2,1,3,4,2,1,3)", [&] { return same_rows(c.basis(), gf5_parity(f)); });
  check("g_1 = 4 + 2x + x^2", [&] { return same_poly(cop.generators[0], "4 + 2x + x^2"); });
  check("g_2 = 1 + 3x + 4x^2 + 2x^3 + x^4 + 3x^5 + 4x^6 + 2x^7 + x^8", [&] {
    return same_poly(cop.generators[1], "1 + 3x + 4x^2 + 2x^3 + x^4 + 3x^5 + 4x^6 + 2x^7 + x^8");
  });
  check("quotients share x + 3", [&] {
    if (!cop.witness) return Outcome{false, "quotients are coprime"};
    return Outcome{divides(parse_poly(f, "x + 3"), cop.witness->common),
                   "common factor " + cop.witness->common.to_string()};
  });
  check("verdict is Inconclusive", [&] {
    const auto k = lcd_verdict(s).kind;
    return Outcome{k == LcdVerdict::Kind::Inconclusive, "got " + to_string(k)};
  });
  check("not LCD", [&] { return same_flag(is_lcd(c), false); });
  check("both projections differ from <1>", [&] {
    return same_flag(!block_full(s, 0) && !block_full(s, 1), true);
  });
  check("minimum distance is 12", [&] { return same_distance(distance(c, 12, o), 12); });
}

// --- GF(4), (w,w), lengths (5,5), LCD without coprime quotients --------------

constexpr std::string_view kGf4NoncoprimeText = R"(# (w,w)-MT code over GF(4), block lengths (5,5)
[field]
p = 2
degree = 2
modulus = [1, 1, 1]

[blocks]
lengths = [5, 5]
shifts = ["w", "w"]

[[generator]]
blocks = ["x + x^2 + x^3 + w^2*x^4", "1 + w*x^2 + w*x^3 + w^2*x^4"]
)";

void run_gf4_noncoprime(Recorder& check, const MTSpec& s, const SuiteOptions& o) {
  const LinearCode c = expand(s);
  const HypothesisReport h = refuted_hypotheses(s);
  check("dimension is 5", [&] { return same_size(c.dimension(), 5); });
  check("all four projections are <1>", [&] {
    bool all = true;
    for (std::size_t i = 0; i < s.ell(); ++i) all = all && h.projection_full[i] && h.dual_projection_full[i];
    return same_flag(all, true);
  });
  check("quotients not coprime", [&] { return same_flag(coprimality_condition(s).holds, false); });
  check("verdict is Inconclusive", [&] {
    const auto k = lcd_verdict(s).kind;
    return Outcome{k == LcdVerdict::Kind::Inconclusive, "got " + to_string(k)};
  });
  check("GG^T nonsingular", [&] { return same_flag(is_nonsingular(gram(c)), true); });
  check("exactly LCD", [&] { return same_flag(is_lcd(c), true); });
  check("minimum distance is 5", [&] { return same_distance(distance(c, 5, o), 5); });
}

struct Entry {
  Fixture fixture;
  Runner run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {{"gf5-2gen-3x9", "(2,3)-MT over GF(5), two generators; dual of dimension 1 below min m_i, yet not LCD",
        std::string(kGf5Text)},
       run_gf5_two_generator},
      {{"gf9-3block-dim4", "(w^7,w^7,w^6)-MT over GF(9); dimension equals min m_i, neither LCD nor self-orthogonal",
        std::string(kGf9Text)},
       run_gf9},
      {{"gf5-5x5-dim2", "(3,3)-MT over GF(5), m_i = q; dimension 2 and nontrivial projections, yet not LCD",
        std::string(kGf5DimTwoText)},
       run_gf5_dim_two},
      {{"gf4-4x8-dim4", "(w^2,w)-MT over GF(4), m_i even; dimension 4 by rank and by d_2 = x^8 + w",
        std::string(kGf4DimFourText)},
       run_gf4_dim_four},
      {{"gf4-5x5-lcd", "(w,w)-MT over GF(4); coprime quotients certify LCD where the binomial test cannot",
        std::string(kGf4LcdText)},
       run_gf4_lcd},
      {{"gf3-5x7-lcd", "(2,1)-MT over GF(3); lambda_i^2 = 1 and self-reciprocal generators give LCD",
        std::string(kGf3LcdText)},
       run_gf3_lcd},
      {{"gf5-minors", "all 2x2 minors of the stacked matrix for gf5-2gen-3x9; d_2 = x + 2", std::string(kGf5Text)},
       run_gf5_minors},
      {{"gf5-3x9-dual-spec", "(3,2)-MT over GF(5), the dual of gf5-2gen-3x9; quotients share x + 3",
        std::string(kGf5DualText)},
       run_gf5_dual},
      {{"gf4-5x5-noncoprime-lcd", "(w,w)-MT over GF(4); LCD although the quotients are not coprime",
        std::string(kGf4NoncoprimeText)},
       run_gf4_noncoprime},
  };
  return all;
}

const Entry* find_entry(std::string_view name) {
  for (const Entry& e : entries())
    if (e.fixture.name == name) return &e;
  return nullptr;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> out;
    for (const Entry& e : entries()) out.push_back(e.fixture);
    return out;
  }();
  return all;
}

const Fixture* find_fixture(std::string_view name) {
  for (const Fixture& f : fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

MTSpec fixture_spec(const Fixture& fx) { return parse_spec(fx.spec_text); }

MTSpec tamper_spec(const MTSpec& spec) {
  const std::size_t i = spec.ell() >= 2 ? 1 : spec.ell() - 1;
  const Field& f = spec.field();
  return spec.with_shift(i, f.mul(spec.shift(i), f.primitive()));
}

bool FixtureOutcome::passed() const {
  if (checks.empty()) return false;
  for (const Check& c : checks)
    if (!c.passed) return false;
  return true;
}

bool SuiteOutcome::passed() const {
  for (const FixtureOutcome& f : fixtures)
    if (!f.passed()) return false;
  return !fixtures.empty();
}

std::size_t SuiteOutcome::failed_checks() const {
  std::size_t n = 0;
  for (const FixtureOutcome& f : fixtures)
    for (const Check& c : f.checks) n += c.passed ? 0 : 1;
  return n;
}

FixtureOutcome run_fixture(const Fixture& fx, const SuiteOptions& options, bool tamper) {
  const Entry* e = find_entry(fx.name);
  if (!e) throw Error(ErrorCode::UsageError, "unknown fixture '" + fx.name + "'");
  FixtureOutcome out{fx.name, fx.citation, tamper, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(out);
  try {
    MTSpec spec = fixture_spec(fx);
    if (tamper) spec = tamper_spec(spec);
    e->run(rec, spec, options);
  } catch (const std::exception& ex) {
    out.checks.push_back({"evaluation", false, ex.what()});
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

SuiteOutcome run_suite(const SuiteOptions& options) {
  if (options.tamper && !find_entry(*options.tamper))
    throw Error(ErrorCode::UsageError, "unknown fixture '" + *options.tamper + "'");
  SuiteOutcome out;
  for (const Entry& e : entries()) {
    const bool tamper = options.tamper && *options.tamper == e.fixture.name;
    out.fixtures.push_back(run_fixture(e.fixture, options, tamper));
  }
  return out;
}

std::string render_suite(const SuiteOutcome& outcome) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const FixtureOutcome& f : outcome.fixtures) {
    std::size_t ok = 0;
    for (const Check& c : f.checks) ok += c.passed ? 1 : 0;
    passed += f.passed() ? 1 : 0;
    os << (f.passed() ? "PASS " : "FAIL ") << f.name << (f.tampered ? " (tampered)" : "") << "  " << ok << "/"
       << f.checks.size() << " checks\n";
    for (const Check& c : f.checks) {
      if (c.passed) continue;
      os << "  AssertionFailure: " << f.name << ": " << c.claim;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << "\n";
    }
  }
  os << passed << "/" << outcome.fixtures.size() << " fixtures pass\n";
  return os.str();
}

std::string render_fixture_list() {
  std::ostringstream os;
  for (const Fixture& f : fixtures()) os << f.name << "  " << f.citation << "\n";
  return os.str();
}

}  // namespace mtc
