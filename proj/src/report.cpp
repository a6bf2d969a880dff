#include "mtcodes/report.hpp"

#include <sstream>

namespace mtc {

namespace {

std::uint64_t subset_budget(std::size_t n, std::uint64_t cap, std::size_t& max_weight) {
  // Largest w such that sum_{j<=w} C(n, j) stays within the cap.
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  max_weight = 0;
  for (std::size_t w = 1; w <= n; ++w) {
    binom = binom * (n - w + 1) / w;
    if (total + binom > cap) break;
    total += binom;
    max_weight = w;
  }
  return total;
}

}  // namespace

Report analyze(const MTSpec& input, const AnalyzeOptions& options) {
  MTSpec spec = options.dual ? dual_spec(input) : input;
  const Field& f = spec.field();
  const LinearCode code = expand(spec);
  const DimensionFormula formula = dimension_formula(spec);
  Coprimality cop = coprimality_condition(spec);
  std::vector<BlockReport> blocks;
  for (std::size_t i = 0; i < spec.ell(); ++i) {
    const Code l = spec.shift(i);
    blocks.push_back({cop.generators[i], cop.quotients[i], f.mul(l, l) == 1});
  }
  LcdVerdict verdict = lcd_verdict(spec);
  const LinearCode d = mt_dual(spec);
  const LinearCode h = hull(code);
  const bool exact = is_lcd(code);
  bool consistent = true;
  if (verdict.kind == LcdVerdict::Kind::LCD) consistent = exact;
  if (verdict.kind == LcdVerdict::Kind::NotLCD) consistent = !exact;
  if (cop.holds) direct_sum_check(spec);
  const MTSpec ds = dual_spec(spec);
  Coprimality dual_cop = coprimality_condition(ds);
  if (dual_cop.holds) direct_sum_check(ds);

  Report r{
      .spec = spec,
      .dual_input = options.dual,
      .dimension_rank = code.dimension(),
      .dimension_formula = formula.dimension,
      .divisor = formula.divisor,
      .blocks = std::move(blocks),
      .coprimality = std::move(cop),
      .dual_coprimality = std::move(dual_cop),
      .verdict = std::move(verdict),
      .verdict_consistent = consistent,
      .dual_dimension = d.dimension(),
      .hull_dimension = h.dimension(),
      .hull_basis = h.basis(),
      .exact_lcd = exact,
      .self_orthogonal = is_self_orthogonal(code),
      .dual_containing = is_dual_containing(code),
      .legacy = legacy_lcd_condition(spec),
      .hypotheses = refuted_hypotheses(spec),
  };

  if (options.min_distance) {
    r.distance_requested = true;
    if (code.dimension() == 0) {
      r.distance_note = "zero code";
    } else if (message_count(code) <= options.cap) {
      r.min_distance = min_distance(code, options.cap, options.threads);
      r.distance_method = "enumeration";
    } else {
      std::size_t max_w = 0;
      subset_budget(code.length(), options.cap, max_w);
      r.min_distance = min_distance_via_dual(code, max_w);
      if (r.min_distance) {
        r.distance_method = "dual-columns";
      } else {
        r.distance_note = "exceeds cap: " + std::to_string(message_count(code)) + " messages; distance > " +
                          std::to_string(max_w);
      }
    }
  }
  return r;
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string word_string(const Field& f, std::span<const Code> w, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += f.format(w[i]);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> machine_pairs(const Report& r) {
  const MTSpec& s = r.spec;
  const Field& f = s.field();
  std::vector<std::pair<std::string, std::string>> kv;
  auto put = [&](std::string k, std::string v) { kv.emplace_back(std::move(k), std::move(v)); };
  put("input", r.dual_input ? "dual" : "spec");
  put("field", f.name());
  put("field.p", std::to_string(f.characteristic()));
  put("field.degree", std::to_string(f.degree()));
  std::string mod;
  for (std::size_t i = 0; i < f.modulus().size(); ++i) mod += (i ? "," : "") + std::to_string(f.modulus()[i]);
  put("field.modulus", mod);
  put("n", std::to_string(s.n()));
  put("ell", std::to_string(s.ell()));
  put("rho", std::to_string(s.rho()));
  std::string lengths;
  std::string shifts;
  for (std::size_t i = 0; i < s.ell(); ++i) {
    lengths += (i ? "," : "") + std::to_string(s.length(i));
    shifts += (i ? "," : "") + f.format(s.shift(i));
  }
  put("lengths", lengths);
  put("shifts", shifts);
  for (std::size_t k = 0; k < s.rho(); ++k)
    for (std::size_t i = 0; i < s.ell(); ++i)
      put("generator." + std::to_string(k + 1) + "." + std::to_string(i + 1), s.generator(k, i).to_string());
  put("dimension.rank", std::to_string(r.dimension_rank));
  put("dimension.formula", std::to_string(r.dimension_formula));
  put("divisor", r.divisor.to_string());
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    const std::string b = "block." + std::to_string(i + 1) + ".";
    put(b + "g", r.blocks[i].generator.to_string());
    put(b + "quotient", r.blocks[i].quotient.to_string());
    put(b + "lambda_squared_one", yes_no(r.blocks[i].lambda_squared_one));
  }
  put("coprime", yes_no(r.coprimality.holds));
  if (const auto& w = r.coprimality.witness)
    put("coprime.witness", std::to_string(w->i + 1) + "," + std::to_string(w->j + 1) + "," + w->common.to_string());
  put("dual.coprime", yes_no(r.dual_coprimality.holds));
  if (const auto& w = r.dual_coprimality.witness)
    put("dual.coprime.witness",
        std::to_string(w->i + 1) + "," + std::to_string(w->j + 1) + "," + w->common.to_string());
  put("verdict", to_string(r.verdict.kind));
  if (r.verdict.failing_block) put("verdict.failing_block", std::to_string(*r.verdict.failing_block + 1));
  put("verdict.consistent", yes_no(r.verdict_consistent));
  put("exact.lcd", yes_no(r.exact_lcd));
  put("dual.dimension", std::to_string(r.dual_dimension));
  put("hull.dimension", std::to_string(r.hull_dimension));
  for (std::size_t k = 0; k < r.hull_basis.rows(); ++k)
    put("hull.basis." + std::to_string(k + 1), word_string(f, r.hull_basis.row(k), ","));
  put("self_orthogonal", yes_no(r.self_orthogonal));
  put("dual_containing", yes_no(r.dual_containing));
  put("legacy", yes_no(r.legacy));
  put("shifts_non_involutive", yes_no(r.hypotheses.shifts_non_involutive));
  for (std::size_t i = 0; i < s.ell(); ++i) {
    const std::string b = "projection." + std::to_string(i + 1) + ".";
    put(b + "full", yes_no(r.hypotheses.projection_full[i]));
    put(b + "dual_full", yes_no(r.hypotheses.dual_projection_full[i]));
  }
  for (const Claim& c : r.hypotheses.claims) {
    const std::string b = "claim." + c.name + ".";
    put(b + "hypothesis", yes_no(c.hypothesis));
    put(b + "conclusion", yes_no(c.conclusion));
    put(b + "refuted", yes_no(c.refuted()));
  }
  if (r.distance_requested) {
    put("min_distance", r.min_distance ? std::to_string(*r.min_distance) : "unknown");
    if (!r.distance_method.empty()) put("min_distance.method", r.distance_method);
    if (!r.distance_note.empty()) put("min_distance.note", r.distance_note);
  }
  return kv;
}

}  // namespace

std::string render_machine(const Report& r) {
  std::string out;
  for (const auto& [k, v] : machine_pairs(r)) out += k + "=" + v + "\n";
  return out;
}

std::map<std::string, std::string> parse_machine(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::ParseError, "machine line without '=': " + std::string(line));
    out[std::string(line.substr(0, eq))] = std::string(line.substr(eq + 1));
  }
  return out;
}

std::string render_text(const Report& r) {
  const MTSpec& s = r.spec;
  const Field& f = s.field();
  std::ostringstream os;
  os << (r.dual_input ? "Dual of the input code\n" : "");
  os << "Code: (";
  for (std::size_t i = 0; i < s.ell(); ++i) os << (i ? ", " : "") << f.format(s.shift(i));
  os << ")-MT over " << f.name() << ", block lengths (";
  for (std::size_t i = 0; i < s.ell(); ++i) os << (i ? ", " : "") << s.length(i);
  os << "), n = " << s.n() << ", " << s.rho() << " generator" << (s.rho() == 1 ? "" : "s") << "\n";
  for (std::size_t k = 0; k < s.rho(); ++k) {
    os << "  g_" << k + 1 << " = (";
    for (std::size_t i = 0; i < s.ell(); ++i) os << (i ? ", " : "") << s.generator(k, i).to_string();
    os << ")\n";
  }
  os << "\nDimension\n";
  os << "  rank of expansion      " << r.dimension_rank << "\n";
  os << "  n - deg d_ell          " << r.dimension_formula << "   (d_ell = " << r.divisor.to_string() << ")\n";
  os << "\nBlocks\n";
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    const auto& b = r.blocks[i];
    os << "  " << i + 1 << ": g = " << b.generator.to_string() << ";  (x^m - lambda)/g = " << b.quotient.to_string()
       << (b.lambda_squared_one ? ";  lambda^2 = 1" : "") << "\n";
  }
  os << "\nCoprimality of quotients: " << (r.coprimality.holds ? "holds" : "fails");
  if (const auto& w = r.coprimality.witness)
    os << " (blocks " << w->i + 1 << " and " << w->j + 1 << " share " << w->common.to_string() << ")";
  os << "\nCoprimality for the dual: " << (r.dual_coprimality.holds ? "holds" : "fails");
  if (const auto& w = r.dual_coprimality.witness)
    os << " (blocks " << w->i + 1 << " and " << w->j + 1 << " share " << w->common.to_string() << ")";
  os << "\nLCD verdict from generators: " << to_string(r.verdict.kind);
  if (r.verdict.failing_block) os << " (block " << *r.verdict.failing_block + 1 << " fails the self-reciprocal test)";
  os << "\n\nExact facts\n";
  os << "  LCD                    " << yes_no(r.exact_lcd) << "\n";
  os << "  dual dimension         " << r.dual_dimension << "\n";
  os << "  hull dimension         " << r.hull_dimension << "\n";
  for (std::size_t k = 0; k < r.hull_basis.rows(); ++k)
    os << "    [" << word_string(f, r.hull_basis.row(k), ", ") << "]\n";
  os << "  self-orthogonal        " << yes_no(r.self_orthogonal) << "\n";
  os << "  dual-containing        " << yes_no(r.dual_containing) << "\n";
  if (r.distance_requested) {
    os << "  minimum distance       " << (r.min_distance ? std::to_string(*r.min_distance) : "unknown");
    if (!r.distance_method.empty()) os << " (" << r.distance_method << ")";
    if (!r.distance_note.empty()) os << " (" << r.distance_note << ")";
    os << "\n";
  }
  if (!r.verdict_consistent) os << "  WARNING: generator verdict disagrees with the exact hull\n";
  os << "\nOlder pairwise-coprime-binomial condition: " << (r.legacy ? "applies (LCD)" : "does not apply") << "\n";
  os << "\nDimension/projection claims (hypothesis / conclusion / refuted)\n";
  for (const Claim& c : r.hypotheses.claims)
    os << "  " << c.name << ": " << yes_no(c.hypothesis) << " / " << yes_no(c.conclusion) << " / "
       << yes_no(c.refuted()) << "\n";
  return os.str();
}

}  // namespace mtc
