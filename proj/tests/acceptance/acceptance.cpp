// Acceptance gate: one PASS/FAIL line per criterion.
//   acceptance            run all criteria
//   acceptance 3 7        run the listed criteria only
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mtcodes/audit.hpp"
#include "mtcodes/code.hpp"
#include "mtcodes/literal.hpp"
#include "mtcodes/mt.hpp"
#include "mtcodes/specfile.hpp"

using namespace mtc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void within(double secs, double limit, const std::string& what) {
    std::ostringstream os;
    os << what << " took " << secs << " s, limit " << limit << " s";
    expect(secs < limit, os.str());
  }
};

MTSpec spec(const std::string& name) { return load_spec(std::string(MTC_DATA_DIR) + "/specs/" + name + ".spec"); }

Matrix rows(const Field& f, std::initializer_list<std::string_view> text) {
  std::vector<Word> out;
  for (std::string_view r : text) {
    std::istringstream in{std::string(r)};
    Word w;
    std::string tok;
    while (in >> tok) w.push_back(parse_element(f, tok));
    out.push_back(std::move(w));
  }
  return Matrix::from_rows(f, out.front().size(), out);
}

bool assoc(const Poly& a, std::string_view b) { return associated(a, parse_poly(a.field(), b)); }

bool poly_set(const std::vector<Poly>& got, std::initializer_list<std::string_view> want) {
  if (got.size() != want.size()) return false;
  std::vector<bool> used(got.size(), false);
  for (std::string_view w : want) {
    bool hit = false;
    for (std::size_t i = 0; i < got.size() && !hit; ++i)
      if (!used[i] && assoc(got[i], w)) used[i] = hit = true;
    if (!hit) return false;
  }
  return true;
}

// (x^m_i - lambda_i) / g_i
Poly block_quotient(const MTSpec& s, std::size_t i) { return quotient(s.modulus(i), block_generator(s, i)); }

void criterion1(Criterion& c) {
  const MTSpec s = spec("gf5-2gen-3x9");
  const Field& f = s.field();
  const auto t0 = Clock::now();
  const LinearCode code = expand(s);
  const LinearCode d = mt_dual(s);
  const DimensionFormula df = dimension_formula(s);
  c.expect(code.dimension() == 11, "dimension 11");
  c.expect(d.dimension() == 1, "dual dimension 1");
  c.expect(row_space_equal(d.basis(), rows(f, {"1 3 4 3 4 2 1 3 4 2 1 3"})), "dual basis (1,3,4,3,4,2,1,3,4,2,1,3)");
  c.expect(hull(code).dimension() == 1, "hull dimension 1");
  c.expect(!is_lcd_by_hull(code) && !is_lcd_by_gram(code), "not LCD by both routes");
  c.expect(assoc(df.divisor, "x + 2"), "d_2 = x + 2");
  c.expect(poly_set(df.minors, {"3x^10 + 3x^9 + 2x^8 + x^7 + 2x^6 + 2x^5 + x^4 + x^3 + 3x^2 + 4x + 4",
                                "2x^11 + 4x^9 + 4x^7 + x^6 + 4x^5 + 3x^3 + x^2 + 4x + 3",
                                "3x^11 + 4x^10 + x^9 + x^2 + 3x + 2", "4x^11 + 3x^10 + 3x^9 + 2x^8 + 4x^7 + 1",
                                "4x^10 + x^9 + 3x + 2", "x^12 + 3x^9 + 2x^3 + 1"}),
           "six minors as a set");
  c.expect(df.dimension == 11, "formula dimension 11");
  c.within(seconds_since(t0), 1.0, "structure checks");

  const auto t1 = Clock::now();
  const auto witness = low_weight_codeword(code, 2);
  c.expect(witness && weight(*witness) == 2 && code.contains(*witness), "weight-2 codeword witness");
  c.expect(min_distance_via_dual(code, 2) == 2u, "d = 2 via dual columns");
  c.within(seconds_since(t1), 1.0, "weight-2 fallback");

  const auto t2 = Clock::now();
  c.expect(min_distance(code, message_count(code)) == 2u, "d = 2 by full enumeration");
  c.within(seconds_since(t2), 300.0, "full enumeration");
}

void criterion2(Criterion& c) {
  const MTSpec s = spec("gf9-3block-dim4");
  const Field& f = s.field();
  c.expect(f.order() == 9 && f.modulus() == std::vector<unsigned>{2, 2, 1}, "GF(9) with w^2 + 2w + 2");
  const LinearCode code = expand(s);
  c.expect(code.dimension() == 4, "dimension 4");
  const Matrix g = rows(f, {"1 0 0 0 w^3 w^7 w^6 0 w^7 w^5 w^7 w^5 1 w^6 1 w^6",
                            "0 1 0 0 0 w^3 w^7 w^6 2 w^7 w^5 w^7 w^5 1 w^6 1",
                            "0 0 1 0 w^5 0 w^3 w^7 w^6 2 w^7 w^5 w^7 w^5 1 w^6",
                            "0 0 0 1 w^6 w^5 0 w^3 2 w^6 2 w^7 w^5 w^7 w^5 1"});
  c.expect(row_space_equal(code.basis(), g), "printed G spans the code");
  const Matrix ggt = g * transpose(g);
  const Matrix printed = rows(f, {"w^5 w^7 0 w^3", "w^7 w^7 1 w^5", "0 1 w^7 0", "w^3 w^5 0 w"});
  c.expect(ggt == printed, "GG^T equals the printed 4x4 matrix entrywise; computed\n" + ggt.to_string());
  c.expect(rank(ggt) < 4 && !ggt.is_zero(), "GG^T singular but nonzero");
  c.expect(!is_lcd(code) && !is_self_orthogonal(code), "not LCD, not self-orthogonal");
  c.expect(row_space_equal(hull(code).basis(), rows(f, {"1 1 w^7 w^3 0 1 w^7 0 w 0 0 w^7 w^2 0 0 1"})),
           "hull basis is the printed 16-vector");
  const auto t0 = Clock::now();
  c.expect(message_count(code) == 6561, "6561 messages");
  c.expect(min_distance(code, 6561) == 10u, "d_min = 10");
  c.within(seconds_since(t0), 1.0, "enumeration");
  const LinearCode d = mt_dual(s);
  c.expect(!is_lcd(d) && !is_dual_containing(d), "dual neither LCD nor dual-containing");
}

void criterion3(Criterion& c) {
  const MTSpec s = spec("gf5-5x5-dim2");
  const Field& f = s.field();
  const LinearCode code = expand(s);
  c.expect(code.dimension() == 2, "dimension 2");
  c.expect(row_space_equal(hull(code).basis(), rows(f, {"0 1 4 2 2 2 3 4 4 0"})), "hull (0,1,4,2,2,2,3,4,4,0)");
  const Poly x2 = parse_poly(f, "x + 2");
  for (std::size_t i = 0; i < 2; ++i) {
    c.expect(associated(block_generator(s, i), x2 * x2 * x2), "g_" + std::to_string(i + 1) + " = (x+2)^3");
    c.expect(associated(block_quotient(s, i), x2 * x2), "quotient " + std::to_string(i + 1) + " = (x+2)^2");
  }
  c.expect(lcd_verdict(s).kind == LcdVerdict::Kind::Inconclusive, "verdict Inconclusive");
  c.expect(!is_lcd(code), "exact not-LCD");
  c.expect(min_distance(code) == 8u, "d_min = 8");
}

void criterion4(Criterion& c) {
  const MTSpec s = spec("gf4-4x8-dim4");
  const Field& f = s.field();
  const LinearCode code = expand(s);
  const DimensionFormula df = dimension_formula(s);
  c.expect(code.dimension() == 4 && df.dimension == 4, "dimension 4 by rank and formula");
  c.expect(assoc(df.divisor, "x^8 + w"), "d_2 = x^8 + w");
  c.expect(poly_set(df.minors, {"x^11 + w*x^10 + w^2*x^9 + w^2*x^8 + w*x^3 + w^2*x^2 + x + 1", "x^8 + w",
                                "x^12 + w^2*x^8 + w*x^4 + 1"}),
           "three minors");
  c.expect(row_space_equal(hull(code).basis(), rows(f, {"1 0 0 w^2 1 0 0 w w 0 0 w^2"})), "hull is the 12-vector");
  c.expect(!is_lcd(code) && !is_self_orthogonal(code), "not LCD, not self-orthogonal");
  c.expect(message_count(code) == 256, "256 messages");
  c.expect(min_distance(code) == 6u, "d_min = 6");
}

void criterion5(Criterion& c) {
  const MTSpec s = spec("gf4-5x5-lcd");
  const Field& f = s.field();
  const LinearCode code = expand(s);
  c.expect(assoc(block_generator(s, 0), "w + w*x + x^2"), "g_1 = w + wx + x^2");
  c.expect(associated(block_generator(s, 1), parse_poly(f, "x + w^2") * parse_poly(f, "x^2 + x + w")),
           "g_2 = (x+w^2)(x^2+x+w)");
  c.expect(coprimality_condition(s).holds, "quotients coprime");
  c.expect(lcd_verdict(s).kind == LcdVerdict::Kind::LCD, "verdict LCD");
  c.expect(rank(gram(code)) == code.dimension(), "GG^T nonsingular");
  c.expect(direct_sum_check(s).dimensions == std::vector<std::size_t>{3, 2}, "direct sum 3 + 2");
  c.expect(min_distance(code) == 3u, "d_min = 3");
  c.expect(!legacy_lcd_condition(s), "legacy condition false");
}

void criterion6(Criterion& c) {
  const MTSpec s = spec("gf3-5x7-lcd");
  const Field& f = s.field();
  const LinearCode code = expand(s);
  c.expect(assoc(block_generator(s, 0), "x + 1") && assoc(block_generator(s, 1), "x - 1"), "g = (x+1, x-1)");
  c.expect(assoc(block_quotient(s, 0), "x^4 - x^3 + x^2 - x + 1"), "quotient 1");
  c.expect(assoc(block_quotient(s, 1), "x^6 + x^5 + x^4 + x^3 + x^2 + x + 1"), "quotient 2");
  c.expect(coprimality_condition(s).holds, "quotients coprime");
  for (std::size_t i = 0; i < 2; ++i) {
    const Poly g = block_generator(s, i);
    c.expect(f.mul(s.shift(i), s.shift(i)) == 1, "lambda_i^2 = 1");
    c.expect(is_self_reciprocal(g) && gcd(g, block_quotient(s, i)).is_one(), "self-reciprocal clause");
  }
  c.expect(lcd_verdict(s).kind == LcdVerdict::Kind::LCD, "verdict LCD");
  c.expect(rank(gram(code)) == code.dimension(), "GG^T nonsingular");
  c.expect(code.dimension() == 10, "dimension 10");
  c.expect(min_distance(code) == 2u, "d_min = 2");
  c.expect(!legacy_lcd_condition(s), "legacy condition false");
}

void criterion7(Criterion& c) {
  const MTSpec dual1 = spec("gf5-3x9-dual-spec");
  c.expect(expand(dual1).same_space(mt_dual(spec("gf5-2gen-3x9"))), "dual spec spans the dual code");
  const Coprimality a = coprimality_condition(dual1);
  c.expect(a.witness && divides(parse_poly(dual1.field(), "x + 3"), a.witness->common), "(a) shared factor x + 3");

  const MTSpec five = spec("gf5-5x5-dim2");
  const Coprimality b = coprimality_condition(five);
  const Poly sq = parse_poly(five.field(), "x + 2") * parse_poly(five.field(), "x + 2");
  c.expect(b.witness && associated(b.witness->common, sq), "(b) shared factor (x+2)^2");

  const MTSpec s = spec("gf4-5x5-noncoprime-lcd");
  const LinearCode code = expand(s);
  const LinearCode d = mt_dual(s);
  bool full = true;
  for (std::size_t i = 0; i < 2; ++i) {
    full = full && block_projection(code, s, i).dimension() == 5 && block_projection(d, s, i).dimension() == 5;
  }
  c.expect(full, "(c) all four projections are <1>");
  c.expect(!coprimality_condition(s).holds, "(c) coprimality fails");
  c.expect(rank(gram(code)) == code.dimension() && is_lcd(code), "(c) exactly LCD");
  c.expect(code.dimension() == 5, "(c) dimension 5");
  c.expect(min_distance(code) == 5u, "(c) d_min = 5");
}

void criterion8(Criterion& c) {
  struct Case {
    const char* file;
    bool dual;
    std::vector<std::string> claims;
  };
  const std::vector<Case> cases = {
      {"gf5-2gen-3x9", false, {"small-dimension", "nontrivial-projections"}},
      {"gf5-3x9-dual-spec", false, {"small-dimension", "nontrivial-projections"}},
      {"gf9-3block-dim4", false, {"dimension-equals-min"}},
      {"gf9-3block-dim4", true, {"dual-dimension-equals-min"}},
      {"gf5-5x5-dim2", false, {"small-dimension", "nontrivial-projections"}},
      {"gf4-4x8-dim4", false, {"dimension-equals-min"}},
      {"gf4-4x8-dim4", true, {"dual-dimension-equals-min"}},
  };
  for (const Case& k : cases) {
    const MTSpec s = k.dual ? dual_spec(spec(k.file)) : spec(k.file);
    const HypothesisReport h = refuted_hypotheses(s);
    for (const std::string& name : k.claims) {
      const Claim& cl = h.claim(name);
      c.expect(cl.hypothesis && !cl.conclusion,
               std::string(k.file) + (k.dual ? " (dual)" : "") + ": " + name + " hypothesis true, conclusion false");
    }
    c.expect(!h.is_lcd, std::string(k.file) + ": not LCD");
  }
  // Coprime lengths on the first pair, non-coprime on the others.
  c.expect(gcd(parse_poly(Field::prime(5), "x^3 - 2"), parse_poly(Field::prime(5), "x^9 - 3")).deg() > 0,
           "GF(5) (2,3) binomials share a factor");
}

void criterion9(Criterion& c) {
  AuditOptions o;
  o.trials = 1000;
  o.seed = 42;
  o.bounds.orders = {2, 3, 4, 5};
  o.bounds.max_ell = 3;
  o.bounds.max_length = 8;
  o.bounds.max_rho = 3;
  const auto t0 = Clock::now();
  try {
    const AuditSummary s = run_audit(o);
    c.expect(s.trials == 1000, "1000 trials");
    c.expect(s.formula_agreements == s.trials, "(i) formula dimension equals rank");
    c.expect(s.verdict_agreements == s.coprime_cases, "(ii) verdict matches hull among coprime cases");
    c.expect(s.verdict_lcd >= s.legacy_lcd, "LCD detections from quotients >= legacy detections");
    c.expect(s.verdict_lcd > s.legacy_lcd, "strictly more detections at seed 42");
  } catch (const Error& e) {
    c.expect(false, std::string("violation: ") + e.what());  // (iii)-(v) surface here
  }
  c.within(seconds_since(t0), 120.0, "audit");
  // Witnesses for the strict gap.
  for (const char* name : {"gf4-5x5-lcd", "gf3-5x7-lcd"}) {
    const MTSpec s = spec(name);
    c.expect(lcd_verdict(s).kind == LcdVerdict::Kind::LCD && !legacy_lcd_condition(s),
             std::string(name) + " detected only from quotients");
  }
}

const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> kCriteria = {
    {"GF(5) (2,3)-MT code with two generators", criterion1},
    {"GF(9) three-block code of dimension 4", criterion2},
    {"GF(5) (3,3)-MT code of dimension 2", criterion3},
    {"GF(4) (w^2,w)-MT code of dimension 4", criterion4},
    {"GF(4) (w,w)-MT LCD code from coprime quotients", criterion5},
    {"GF(3) (2,1)-MT LCD code", criterion6},
    {"shared quotient factors and LCD without coprimality", criterion7},
    {"refuted dimension and projection claims", criterion8},
    {"property audit, seed 42, 1000 specs", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> which;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > static_cast<int>(kCriteria.size())) {
      std::cerr << "unknown criterion " << argv[i] << "\n";
      return 2;
    }
    which.push_back(static_cast<std::size_t>(k));
  }
  if (which.empty())
    for (std::size_t k = 1; k <= kCriteria.size(); ++k) which.push_back(k);

  std::size_t failed = 0;
  for (std::size_t k : which) {
    const auto& [title, run] = kCriteria[k - 1];
    Criterion c;
    const auto t0 = Clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", seconds_since(t0));
    std::cout << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << k << ": " << title << " (" << secs
              << ")\n";
    for (const std::string& f : c.failures) std::cout << "    " << f << "\n";
    failed += !c.failures.empty();
  }
  std::cout << which.size() - failed << "/" << which.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
