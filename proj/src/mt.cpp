#include "mtcodes/mt.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace mtc {

MTSpec MTSpec::make(Field field, std::vector<std::size_t> lengths, std::vector<Code> shifts,
                    std::vector<std::vector<Poly>> generators) {
  if (lengths.empty()) throw Error(ErrorCode::SemanticError, "at least one block is required");
  if (lengths.size() != shifts.size())
    throw Error(ErrorCode::SemanticError, std::to_string(lengths.size()) + " block lengths but " +
                                              std::to_string(shifts.size()) + " shifts");
  if (generators.empty()) throw Error(ErrorCode::SemanticError, "at least one generator is required");
  MTSpec s(field);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] == 0)
      throw Error(ErrorCode::SemanticError, "lengths[" + std::to_string(i + 1) + "] must be at least 1");
    if (shifts[i] >= field.order())
      throw Error(ErrorCode::SemanticError, "shifts[" + std::to_string(i + 1) + "] is not a field element");
    if (shifts[i] == 0) throw Error(ErrorCode::SemanticError, "shifts[" + std::to_string(i + 1) + "] is zero");
    s.offsets_.push_back(s.n_);
    s.n_ += lengths[i];
  }
  s.lengths_ = std::move(lengths);
  s.shifts_ = std::move(shifts);
  for (std::size_t k = 0; k < generators.size(); ++k) {
    auto& row = generators[k];
    if (row.size() != s.ell())
      throw Error(ErrorCode::SemanticError, "generator " + std::to_string(k + 1) + " has " +
                                                std::to_string(row.size()) + " blocks, expected " +
                                                std::to_string(s.ell()));
    for (std::size_t i = 0; i < row.size(); ++i) {
      require_same_field(field, row[i].field());
      row[i] = mod(row[i], s.modulus(i));
    }
  }
  s.gens_ = std::move(generators);
  return s;
}

std::size_t MTSpec::min_length() const { return *std::min_element(lengths_.begin(), lengths_.end()); }

Poly MTSpec::modulus(std::size_t i) const { return Poly::binomial(field_, lengths_.at(i), shifts_.at(i)); }

Word MTSpec::generator_word(std::size_t k) const { return from_blocks(gens_.at(k)); }

std::vector<Poly> MTSpec::to_blocks(std::span<const Code> word) const {
  if (word.size() != n_) throw Error(ErrorCode::LengthMismatch, "word length differs from n");
  std::vector<Poly> out;
  for (std::size_t i = 0; i < ell(); ++i) {
    std::vector<Code> c(word.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                        word.begin() + static_cast<std::ptrdiff_t>(offsets_[i] + lengths_[i]));
    out.emplace_back(field_, std::move(c));
  }
  return out;
}

Word MTSpec::from_blocks(const std::vector<Poly>& blocks) const {
  if (blocks.size() != ell()) throw Error(ErrorCode::LengthMismatch, "block count differs from ell");
  Word w(n_, 0);
  for (std::size_t i = 0; i < ell(); ++i) {
    const Poly r = mod(blocks[i], modulus(i));
    for (std::size_t j = 0; j < r.coeffs().size(); ++j) w[offsets_[i] + j] = r.coeffs()[j];
  }
  return w;
}

MTSpec MTSpec::with_shift(std::size_t i, Code lambda) const {
  auto shifts = shifts_;
  shifts.at(i) = lambda;
  return make(field_, lengths_, std::move(shifts), gens_);
}

Word mt_shift(const Field& f, const std::vector<std::size_t>& lengths, const std::vector<Code>& shifts,
              std::span<const Code> v) {
  const std::size_t n = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  if (v.size() != n)
    throw Error(ErrorCode::LengthMismatch, "word of length " + std::to_string(v.size()) + ", expected " +
                                               std::to_string(n));
  Word out(n);
  std::size_t off = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const std::size_t m = lengths[i];
    out[off] = f.mul(shifts[i], v[off + m - 1]);
    for (std::size_t j = 1; j < m; ++j) out[off + j] = v[off + j - 1];
    off += m;
  }
  return out;
}

Word mt_shift(const MTSpec& spec, std::span<const Code> v) {
  return mt_shift(spec.field(), spec.lengths(), spec.shifts(), v);
}

bool is_shift_invariant(const LinearCode& c, const std::vector<std::size_t>& lengths,
                        const std::vector<Code>& shifts) {
  const Matrix& b = c.basis();
  for (std::size_t r = 0; r < b.rows(); ++r)
    if (!c.contains(mt_shift(c.field(), lengths, shifts, b.row(r)))) return false;
  return true;
}

LinearCode expand(const MTSpec& spec) {
  RowBasis basis(spec.field(), spec.n());
  std::deque<Word> pending;
  for (std::size_t k = 0; k < spec.rho(); ++k) pending.push_back(spec.generator_word(k));
  // Krylov closure: every accepted row has its shift queued, so the span is invariant.
  while (!pending.empty()) {
    Word v = std::move(pending.front());
    pending.pop_front();
    if (basis.insert(v)) pending.push_back(mt_shift(spec, v));
  }
  return LinearCode(basis.matrix());
}

Poly block_generator(const MTSpec& spec, std::size_t i) {
  std::vector<Poly> polys{spec.modulus(i)};
  for (std::size_t k = 0; k < spec.rho(); ++k) polys.push_back(spec.generator(k, i));
  return gcd(polys);
}

std::vector<Poly> block_generators(const MTSpec& spec) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < spec.ell(); ++i) out.push_back(block_generator(spec, i));
  return out;
}

LinearCode constacyclic_code(const Field& f, std::size_t m, Code lambda, const Poly& g) {
  const Poly modulus = Poly::binomial(f, m, lambda);
  const Poly gen = g.is_zero() ? modulus : gcd(g, modulus);
  Matrix rows(f, 0, m);
  const std::size_t k = m - gen.deg();
  for (std::size_t j = 0; j < k; ++j) {
    const Poly r = mod(gen.shifted(j), modulus);
    Word w(m, 0);
    for (std::size_t t = 0; t < r.coeffs().size(); ++t) w[t] = r.coeffs()[t];
    rows.append_row(w);
  }
  return LinearCode(std::move(rows));
}

LinearCode block_projection(const LinearCode& c, const MTSpec& spec, std::size_t i) {
  return LinearCode(c.basis().columns(spec.offset(i), spec.length(i)));
}

LinearCode projection_code(const MTSpec& spec, std::size_t i) {
  LinearCode from_gen = constacyclic_code(spec.field(), spec.length(i), spec.shift(i), block_generator(spec, i));
  const LinearCode from_code = block_projection(expand(spec), spec, i);
  if (!from_gen.same_space(from_code))
    throw Error(ErrorCode::InternalDisagreement,
                "block " + std::to_string(i + 1) + ": generator-polynomial code differs from the projection");
  return from_gen;
}

namespace {

std::vector<Code> inverse_shifts(const MTSpec& spec) {
  std::vector<Code> inv;
  for (Code l : spec.shifts()) inv.push_back(spec.field().inv(l));
  return inv;
}

}  // namespace

LinearCode mt_dual(const MTSpec& spec) {
  LinearCode d = dual(expand(spec));
  if (!is_shift_invariant(d, spec.lengths(), inverse_shifts(spec)))
    throw Error(ErrorCode::InvarianceViolation, "dual is not invariant under the inverse-shift map");
  return d;
}

MTSpec dual_spec(const MTSpec& spec) {
  const LinearCode d = mt_dual(spec);
  std::vector<std::vector<Poly>> gens;
  for (std::size_t r = 0; r < d.basis().rows(); ++r) gens.push_back(spec.to_blocks(d.basis().row(r)));
  if (gens.empty()) gens.emplace_back(spec.ell(), Poly(spec.field()));
  return MTSpec::make(spec.field(), spec.lengths(), inverse_shifts(spec), std::move(gens));
}

PolyMatrix stacked_matrix(const MTSpec& spec) {
  PolyMatrix m(spec.field(), spec.rho() + spec.ell(), spec.ell());
  for (std::size_t k = 0; k < spec.rho(); ++k)
    for (std::size_t i = 0; i < spec.ell(); ++i) m.set(k, i, spec.generator(k, i));
  for (std::size_t i = 0; i < spec.ell(); ++i) m.set(spec.rho() + i, i, spec.modulus(i));
  return m;
}

DimensionFormula dimension_formula(const MTSpec& spec) {
  PolyMatrix stacked = stacked_matrix(spec);
  std::vector<Poly> all = minors(stacked, spec.ell());
  // The diagonal block contributes a nonzero minor, so the gcd is defined.
  Poly divisor = gcd(std::span<const Poly>(all));
  const std::size_t dim = spec.n() - divisor.deg();
  const std::size_t by_rank = expand(spec).dimension();
  if (dim != by_rank)
    throw Error(ErrorCode::FormulaRankDisagreement, "n - deg d_ell = " + std::to_string(dim) +
                                                        " but the expanded code has rank " +
                                                        std::to_string(by_rank));
  return {dim, std::move(divisor), std::move(all), std::move(stacked)};
}

Coprimality coprimality_condition(const MTSpec& spec) {
  Coprimality out{true, block_generators(spec), {}, std::nullopt};
  for (std::size_t i = 0; i < spec.ell(); ++i) out.quotients.push_back(quotient(spec.modulus(i), out.generators[i]));
  for (std::size_t i = 0; i < spec.ell() && out.holds; ++i)
    for (std::size_t j = i + 1; j < spec.ell(); ++j) {
      Poly g = gcd(out.quotients[i], out.quotients[j]);
      if (!g.is_one()) {
        out.holds = false;
        out.witness = CoprimePair{i, j, std::move(g)};
        break;
      }
    }
  return out;
}

DirectSum direct_sum_check(const MTSpec& spec) {
  const Coprimality cond = coprimality_condition(spec);
  if (!cond.holds)
    throw Error(ErrorCode::ConditionNotMet, "quotients " + std::to_string(cond.witness->i + 1) + " and " +
                                                std::to_string(cond.witness->j + 1) + " share " +
                                                cond.witness->common.to_string());
  const LinearCode c = expand(spec);
  const LinearCode d = dual(c);
  DirectSum out{{}, {}, 0};
  for (std::size_t i = 0; i < spec.ell(); ++i) {
    const std::string where = "block " + std::to_string(i + 1) + ": ";
    LinearCode comp = projection_code(spec, i);
    if (comp.dimension() != spec.length(i) - cond.generators[i].deg())
      throw Error(ErrorCode::CertificateFailure, where + "projection dimension is not m_i - deg g_i");
    Matrix embedded(spec.field(), 0, spec.n());
    for (std::size_t r = 0; r < comp.basis().rows(); ++r) {
      Word w(spec.n(), 0);
      for (std::size_t t = 0; t < spec.length(i); ++t) w[spec.offset(i) + t] = comp.basis().at(r, t);
      embedded.append_row(w);
    }
    if (!c.contains(LinearCode(embedded)))
      throw Error(ErrorCode::CertificateFailure, where + "embedded projection is not inside C");
    if (!block_projection(d, spec, i).same_space(dual(comp)))
      throw Error(ErrorCode::CertificateFailure, where + "projection of the dual is not the dual of the projection");
    out.dimensions.push_back(comp.dimension());
    out.total_dimension += comp.dimension();
    out.components.push_back(std::move(comp));
  }
  if (out.total_dimension != c.dimension())
    throw Error(ErrorCode::CertificateFailure, "sum of projection dimensions differs from dim C");
  return out;
}

std::string to_string(LcdVerdict::Kind k) {
  switch (k) {
    case LcdVerdict::Kind::LCD: return "LCD";
    case LcdVerdict::Kind::NotLCD: return "NotLCD";
    case LcdVerdict::Kind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

LcdVerdict lcd_verdict(const MTSpec& spec) {
  Coprimality cond = coprimality_condition(spec);
  LcdVerdict out{LcdVerdict::Kind::Inconclusive, cond.quotients, std::nullopt, std::nullopt};
  if (!cond.holds) {
    out.coprimality_witness = std::move(cond.witness);
    return out;
  }
  const Field& f = spec.field();
  for (std::size_t i = 0; i < spec.ell(); ++i) {
    const Code l = spec.shift(i);
    if (f.mul(l, l) != 1) continue;
    const Poly& g = cond.generators[i];
    if (!is_self_reciprocal(g) || !gcd(g, cond.quotients[i]).is_one()) {
      out.kind = LcdVerdict::Kind::NotLCD;
      out.failing_block = i;
      return out;
    }
  }
  out.kind = LcdVerdict::Kind::LCD;
  return out;
}

bool legacy_lcd_condition(const MTSpec& spec) {
  const Field& f = spec.field();
  for (std::size_t i = 0; i < spec.ell(); ++i) {
    const Code l = spec.shift(i);
    if (f.mul(l, l) == 1) return false;
    for (std::size_t j = i + 1; j < spec.ell(); ++j)
      if (!gcd(spec.modulus(i), spec.modulus(j)).is_one()) return false;
  }
  return true;
}

const Claim& HypothesisReport::claim(const std::string& name) const {
  for (const Claim& c : claims)
    if (c.name == name) return c;
  throw Error(ErrorCode::IndexOutOfRange, "no claim named " + name);
}

HypothesisReport refuted_hypotheses(const MTSpec& spec) {
  const Field& f = spec.field();
  const LinearCode c = expand(spec);
  const LinearCode d = mt_dual(spec);
  HypothesisReport r{};
  r.shifts_non_involutive = true;
  for (Code l : spec.shifts())
    if (f.mul(l, l) == 1) r.shifts_non_involutive = false;
  r.min_length = spec.min_length();
  r.dimension = c.dimension();
  r.dual_dimension = d.dimension();
  bool every_block_nontrivial = true;
  for (std::size_t i = 0; i < spec.ell(); ++i) {
    const bool full = block_projection(c, spec, i).dimension() == spec.length(i);
    const bool dual_full = block_projection(d, spec, i).dimension() == spec.length(i);
    r.projection_full.push_back(full);
    r.dual_projection_full.push_back(dual_full);
    if (full && dual_full) every_block_nontrivial = false;
  }
  r.is_lcd = is_lcd(c);
  r.is_self_orthogonal = is_self_orthogonal(c);
  r.is_dual_containing = is_dual_containing(c);

  const bool ni = r.shifts_non_involutive;
  const std::size_t mn = r.min_length;
  r.claims.push_back({"small-dimension",
                      "shifts non-involutive and min(dim C, dim C^perp) < min m_i imply LCD",
                      ni && (r.dimension < mn || r.dual_dimension < mn), r.is_lcd, false});
  r.claims.push_back({"dimension-equals-min",
                      "shifts non-involutive and dim C = min m_i imply LCD or self-orthogonal",
                      ni && r.dimension == mn, r.is_lcd || r.is_self_orthogonal, true});
  r.claims.push_back({"dual-dimension-equals-min",
                      "shifts non-involutive and dim C^perp = min m_i imply LCD or dual-containing",
                      ni && r.dual_dimension == mn, r.is_lcd || r.is_dual_containing, true});
  r.claims.push_back({"nontrivial-projections",
                      "shifts non-involutive and pi_i(C) != <1> or pi_i(C^perp) != <1> for every i imply LCD",
                      ni && every_block_nontrivial, r.is_lcd, false});
  return r;
}

}  // namespace mtc
