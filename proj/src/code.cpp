#include "mtcodes/code.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "mtcodes/polymat.hpp"

namespace mtc {

LinearCode::LinearCode(Matrix generator) : gen_(std::move(generator)), basis_(row_basis(gen_)) {}

LinearCode dual(const LinearCode& c) { return LinearCode(nullspace(c.basis())); }

LinearCode hull(const LinearCode& c) {
  return LinearCode(row_space_intersection(c.basis(), dual(c).basis()));
}

bool is_lcd_by_hull(const LinearCode& c) { return hull(c).dimension() == 0; }

bool is_lcd_by_gram(const LinearCode& c) {
  const Matrix& g = c.basis();
  return is_nonsingular(g * transpose(g));
}

bool is_lcd(const LinearCode& c) {
  const bool by_hull = is_lcd_by_hull(c);
  const bool by_gram = is_lcd_by_gram(c);
  if (by_hull != by_gram)
    throw Error(ErrorCode::InternalDisagreement,
                std::string("hull route says ") + (by_hull ? "LCD" : "not LCD") + ", Gram route says " +
                    (by_gram ? "LCD" : "not LCD"));
  return by_hull;
}

bool is_self_orthogonal(const LinearCode& c) {
  const Matrix& g = c.basis();
  return (g * transpose(g)).is_zero();
}

bool is_dual_containing(const LinearCode& c) { return c.contains(dual(c)); }

Matrix gram(const LinearCode& c) { return c.generator() * transpose(c.generator()); }

std::uint64_t message_count(const LinearCode& c) {
  const std::uint64_t q = c.field().order();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    count *= q;
  }
  return count;
}

namespace {

struct Task {
  std::size_t lead;
  std::uint64_t prefix;
};

// Enumerates codewords row[lead] + sum over tail digit-rows, where the tail
// is expanded over the prime subfield so each step is a single row addition.
class DistanceSearch {
 public:
  DistanceSearch(const LinearCode& c) : field_(c.field()), basis_(c.basis()), n_(c.length()) {
    p_ = field_.characteristic();
    d_ = field_.degree();
    add_ = field_.addition_table();
    q_ = field_.order();
    for (std::size_t s = 0; s < d_; ++s) {
      std::vector<unsigned> e(d_, 0);
      e[s] = 1;
      units_.push_back(field_.from_coeffs(e));
    }
  }

  std::vector<Task> tasks(unsigned threads) const {
    std::vector<Task> out;
    for (std::size_t lead = 0; lead < basis_.rows(); ++lead) {
      const std::size_t tail = tail_digits(lead);
      const std::size_t split = split_digits(tail, threads);
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < split; ++i) count *= p_;
      for (std::uint64_t pre = 0; pre < count; ++pre) out.push_back({lead, pre});
    }
    return out;
  }

  std::size_t run(const Task& task, unsigned threads, const std::atomic<std::size_t>& best) const {
    const std::size_t tail = tail_digits(task.lead);
    const std::size_t split = split_digits(tail, threads);
    const std::size_t low = tail - split;
    std::vector<Word> digit_rows;
    digit_rows.reserve(tail);
    for (std::size_t r = task.lead + 1; r < basis_.rows(); ++r)
      for (std::size_t s = 0; s < d_; ++s) {
        Word w(n_);
        for (std::size_t c = 0; c < n_; ++c) w[c] = field_.mul(basis_.at(r, c), units_[s]);
        digit_rows.push_back(std::move(w));
      }

    Word cw = basis_.row_word(task.lead);
    std::uint64_t pre = task.prefix;
    for (std::size_t i = low; i < tail; ++i) {
      const unsigned digit = static_cast<unsigned>(pre % p_);
      pre /= p_;
      for (unsigned t = 0; t < digit; ++t) add_row(cw, digit_rows[i]);
    }

    std::size_t local = n_ + 1;
    std::vector<unsigned> digits(low, 0);
    std::uint64_t steps = 0;
    while (true) {
      local = std::min(local, weight(cw));
      if (local <= 1) break;
      if ((++steps & 0xFFFF) == 0 && best.load(std::memory_order_relaxed) <= 1) break;
      std::size_t i = 0;
      while (i < low) {
        add_row(cw, digit_rows[i]);
        if (++digits[i] < p_) break;
        digits[i] = 0;
        ++i;
      }
      if (i == low) break;
    }
    return local;
  }

 private:
  std::size_t tail_digits(std::size_t lead) const { return (basis_.rows() - lead - 1) * d_; }

  std::size_t split_digits(std::size_t tail, unsigned threads) const {
    std::size_t split = 0;
    std::uint64_t chunks = 1;
    while (split < tail && chunks < 8ull * threads) {
      chunks *= p_;
      ++split;
    }
    return split;
  }

  void add_row(Word& cw, const Word& row) const {
    const Code* table = add_.data();
    for (std::size_t c = 0; c < n_; ++c) cw[c] = table[cw[c] * q_ + row[c]];
  }

  Field field_;
  Matrix basis_;
  std::size_t n_;
  unsigned p_ = 0;
  unsigned d_ = 0;
  unsigned q_ = 0;
  std::span<const Code> add_;
  std::vector<Code> units_;
};

}  // namespace

std::optional<std::size_t> min_distance(const LinearCode& c, std::uint64_t cap, unsigned threads) {
  if (c.dimension() == 0) return std::nullopt;
  const std::uint64_t needed = message_count(c);
  if (needed > cap)
    throw Error(ErrorCode::CapExceeded, "enumeration needs " + std::to_string(needed) +
                                            " messages, cap is " + std::to_string(cap));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const DistanceSearch search(c);
  const auto tasks = search.tasks(threads);
  std::atomic<std::size_t> best{c.length() + 1};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || best.load() <= 1) return;
      const std::size_t w = search.run(tasks[i], threads, best);
      std::size_t cur = best.load();
      while (w < cur && !best.compare_exchange_weak(cur, w)) {
      }
    }
  };
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return best.load();
}

std::optional<Word> low_weight_codeword(const LinearCode& c, std::size_t max_weight) {
  if (c.dimension() == 0) return std::nullopt;
  const Matrix h = dual(c).basis();
  const std::size_t n = c.length();
  for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
    for (const auto& cols : subsets(n, w)) {
      Matrix sub(c.field(), h.rows(), w);
      for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t j = 0; j < w; ++j) sub.at(r, j) = h.at(r, cols[j]);
      if (rank(sub) == w) continue;
      // The smaller sizes were all independent, so every kernel vector has full support.
      const Matrix ker = nullspace(sub);
      Word cw(n, 0);
      for (std::size_t j = 0; j < w; ++j) cw[cols[j]] = ker.at(0, j);
      return cw;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> min_distance_via_dual(const LinearCode& c, std::size_t max_weight) {
  const auto cw = low_weight_codeword(c, max_weight);
  if (!cw) return std::nullopt;
  return weight(*cw);
}

CodeFacts facts(const LinearCode& c) {
  CodeFacts f;
  f.length = c.length();
  f.dimension = c.dimension();
  f.dual_dimension = dual(c).dimension();
  f.hull_dimension = hull(c).dimension();
  f.is_lcd = is_lcd(c);
  f.is_self_orthogonal = is_self_orthogonal(c);
  f.is_dual_containing = is_dual_containing(c);
  return f;
}

}  // namespace mtc
