#include "mtcodes/audit.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "mtcodes/specfile.hpp"

namespace mtc {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

Poly random_poly(std::mt19937_64& rng, const Field& f, std::size_t max_degree) {
  std::vector<Code> c(max_degree + 1);
  for (auto& x : c) x = static_cast<Code>(draw(rng, 0, f.order() - 1));
  return Poly(f, std::move(c));
}

Poly random_monic(std::mt19937_64& rng, const Field& f, std::size_t degree) {
  Poly p = random_poly(rng, f, degree == 0 ? 0 : degree - 1);
  return p + Poly::monomial(f, 1, degree);
}

// Strips a few random low-degree factors off the modulus.
Poly random_divisor(std::mt19937_64& rng, const Poly& modulus) {
  const Field& f = modulus.field();
  Poly d = modulus.monic();
  const std::size_t rounds = draw(rng, 1, 4);
  for (std::size_t r = 0; r < rounds && d.deg() > 0; ++r) {
    const Poly h = gcd(d, random_monic(rng, f, draw(rng, 1, 3)));
    if (h.deg() > 0) d = quotient(d, h);
  }
  return d;
}

Poly random_entry(std::mt19937_64& rng, const Field& f, std::size_t m, Code lambda) {
  switch (rng() % 4) {
    case 0:
      return Poly(f);
    case 1: {
      const Poly modulus = Poly::binomial(f, m, lambda);
      const Poly d = random_divisor(rng, modulus);
      const std::size_t room = m - d.deg();
      return mod(d * random_poly(rng, f, room == 0 ? 0 : room - 1), modulus);
    }
    default:
      return random_poly(rng, f, m - 1);
  }
}

[[noreturn]] void violation(const MTSpec& spec, const std::string& what) {
  throw Error(ErrorCode::PropertyViolation, what + "\nreproducer:\n" + write_spec(spec));
}

}  // namespace

Field audit_field(unsigned order) {
  switch (order) {
    case 4:
      return Field::make(2, 2, {1, 1, 1});
    case 8:
      return Field::make(2, 3, {1, 1, 0, 1});
    case 9:
      return Field::make(3, 2, {2, 2, 1});
    default:
      return Field::prime(order);
  }
}

MTSpec random_spec(std::mt19937_64& rng, const AuditBounds& bounds) {
  const Field f = audit_field(bounds.orders.at(draw(rng, 0, bounds.orders.size() - 1)));
  const std::size_t ell = draw(rng, 1, bounds.max_ell);
  std::vector<std::size_t> lengths(ell);
  std::vector<Code> shifts(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    lengths[i] = draw(rng, 1, bounds.max_length);
    shifts[i] = static_cast<Code>(draw(rng, 1, f.order() - 1));
  }
  const std::size_t rho = draw(rng, 1, bounds.max_rho);
  std::vector<std::vector<Poly>> gens(rho);
  for (auto& row : gens)
    for (std::size_t i = 0; i < ell; ++i) row.push_back(random_entry(rng, f, lengths[i], shifts[i]));
  return MTSpec::make(f, lengths, shifts, gens);
}

void audit_spec(const MTSpec& spec, AuditSummary& s) {
  const Field& f = spec.field();
  const LinearCode c = expand(spec);
  const LinearCode d = dual(c);

  std::size_t formula = 0;
  try {
    formula = dimension_formula(spec).dimension;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::FormulaRankDisagreement) throw;
    violation(spec, std::string("(i) formula vs rank: ") + e.what());
  }
  if (formula != c.dimension()) violation(spec, "(i) formula dimension differs from rank");
  ++s.formula_agreements;

  if (c.dimension() + d.dimension() != spec.n()) violation(spec, "(iii) dim C + dim C^perp != n");

  if (!is_shift_invariant(c, spec.lengths(), spec.shifts())) violation(spec, "(iv) C not T-invariant");
  std::vector<Code> inverted;
  for (Code l : spec.shifts()) inverted.push_back(f.inv(l));
  if (!is_shift_invariant(d, spec.lengths(), inverted)) violation(spec, "(iv) C^perp not invariant under inverted shifts");

  const LinearCode h = hull(c);
  if (!h.same_space(hull(d))) violation(spec, "(v) hull(C) != hull(C^perp)");

  bool exact = false;
  try {
    exact = is_lcd(c);
  } catch (const Error& e) {
    violation(spec, std::string("LCD routes disagree: ") + e.what());
  }
  s.exact_lcd += exact ? 1 : 0;

  const LcdVerdict verdict = lcd_verdict(spec);
  const bool coprime = verdict.kind != LcdVerdict::Kind::Inconclusive;
  if (coprime) {
    ++s.coprime_cases;
    if ((verdict.kind == LcdVerdict::Kind::LCD) != exact) violation(spec, "(ii) verdict disagrees with the hull");
    ++s.verdict_agreements;
    s.verdict_lcd += verdict.kind == LcdVerdict::Kind::LCD ? 1 : 0;
    try {
      direct_sum_check(spec);
    } catch (const Error& e) {
      violation(spec, std::string("direct-sum certificate: ") + e.what());
    }
    ++s.direct_sums;
  }

  const MTSpec ds = dual_spec(spec);
  const LcdVerdict dual_verdict = lcd_verdict(ds);
  if (dual_verdict.kind != LcdVerdict::Kind::Inconclusive) {
    ++s.dual_coprime_cases;
    if ((dual_verdict.kind == LcdVerdict::Kind::LCD) != exact) violation(spec, "(ii) dual verdict disagrees with the hull");
  }
  s.coprime_mismatches += coprime != (dual_verdict.kind != LcdVerdict::Kind::Inconclusive) ? 1 : 0;

  if (legacy_lcd_condition(spec)) {
    ++s.legacy_lcd;
    if (verdict.kind != LcdVerdict::Kind::LCD) violation(spec, "binomial condition holds but verdict is not LCD");
    if (!exact) violation(spec, "binomial condition holds but C is not LCD");
  }
  ++s.trials;
}

AuditSummary run_audit(const AuditOptions& options) {
  if (options.trials == 0) throw Error(ErrorCode::UsageError, "trials must be at least 1");
  const auto& b = options.bounds;
  if (b.orders.empty() || b.max_ell == 0 || b.max_length == 0 || b.max_rho == 0)
    throw Error(ErrorCode::UsageError, "audit bounds must be positive");

  struct Slot {
    AuditSummary summary;
    std::optional<std::string> failure;
  };
  std::vector<Slot> slots(options.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < options.trials; t = next++) {
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
      std::mt19937_64 rng(seq);
      try {
        audit_spec(random_spec(rng, b), slots[t].summary);
      } catch (const Error& e) {
        slots[t].failure = "trial " + std::to_string(t) + ": " + e.what();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, options.trials));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  AuditSummary total;
  for (const Slot& s : slots) {
    if (s.failure) {
      throw Error(ErrorCode::PropertyViolation, *s.failure);
    }
    total.trials += s.summary.trials;
    total.formula_agreements += s.summary.formula_agreements;
    total.coprime_cases += s.summary.coprime_cases;
    total.verdict_agreements += s.summary.verdict_agreements;
    total.verdict_lcd += s.summary.verdict_lcd;
    total.legacy_lcd += s.summary.legacy_lcd;
    total.exact_lcd += s.summary.exact_lcd;
    total.direct_sums += s.summary.direct_sums;
    total.dual_coprime_cases += s.summary.dual_coprime_cases;
    total.coprime_mismatches += s.summary.coprime_mismatches;
  }
  return total;
}

std::string render_audit(const AuditSummary& s, const AuditOptions& o) {
  std::ostringstream os;
  os << "audit seed=" << o.seed << " trials=" << o.trials << " fields=";
  for (std::size_t i = 0; i < o.bounds.orders.size(); ++i) os << (i ? "," : "") << "GF(" << o.bounds.orders[i] << ")";
  os << " max_ell=" << o.bounds.max_ell << " max_length=" << o.bounds.max_length << " max_rho=" << o.bounds.max_rho
     << "\n";
  const auto row = [&](std::string_view label, const std::string& value) {
    os << std::left << std::setw(37) << label << value << "\n";
  };
  const auto of = [](std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); };
  row("specs checked", std::to_string(s.trials));
  row("formula == rank", of(s.formula_agreements, s.trials));
  row("coprime-quotient specs", std::to_string(s.coprime_cases));
  row("verdict == hull among those", of(s.verdict_agreements, s.coprime_cases));
  row("direct-sum certificates", std::to_string(s.direct_sums));
  row("coprime quotients on the dual", std::to_string(s.dual_coprime_cases));
  row("C and dual disagree on coprimality", std::to_string(s.coprime_mismatches));
  row("exactly LCD", std::to_string(s.exact_lcd));
  row("LCD from coprime quotients", std::to_string(s.verdict_lcd));
  row("LCD from pairwise-coprime binomials", std::to_string(s.legacy_lcd));
  row("violations", "0");
  return os.str();
}

}  // namespace mtc
