#include "peaklab/permutation_oracle.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "peaklab/errors.hpp"

namespace peaklab {
namespace {

void require_within_limit(int n, const OracleLimits& limits) {
  if (n > limits.max_size) throw ExhaustionLimit(n, limits.max_size);
}

// Depth-first construction of the members of P(c) in lexicographic order.
// is_peak[i] (1-based) says whether position i must be a peak.
template <typename Visit>
class ClassWalker {
 public:
  ClassWalker(const Composition& c, Visit& visit)
      : n_(c.total()), is_peak_(static_cast<std::size_t>(n_) + 2, false),
        word_(static_cast<std::size_t>(n_)), used_(static_cast<std::size_t>(n_) + 1, false),
        visit_(visit) {
    int running = 0;
    for (std::size_t i = 0; i + 1 < c.num_parts(); ++i) {
      running += c[i];
      is_peak_[static_cast<std::size_t>(running)] = true;
    }
  }

  void run() {
    if (n_ == 0) {
      visit_(std::span<const int>{});
      return;
    }
    extend(0);
  }

 private:
  // Returns false once the visitor asks to stop.
  bool extend(int filled) {
    if (filled == n_) return visit_(std::span<const int>(word_.data(), word_.size()));
    for (int v = 1; v <= n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      word_[static_cast<std::size_t>(filled)] = v;
      // Placing position filled+1 completes the neighbourhood of position filled.
      if (filled >= 2) {
        const int left = word_[static_cast<std::size_t>(filled - 2)];
        const int mid = word_[static_cast<std::size_t>(filled - 1)];
        const bool peak = left < mid && mid > v;
        if (peak != is_peak_[static_cast<std::size_t>(filled)]) continue;
      }
      used_[static_cast<std::size_t>(v)] = true;
      const bool go_on = extend(filled + 1);
      used_[static_cast<std::size_t>(v)] = false;
      if (!go_on) return false;
    }
    return true;
  }

  int n_;
  std::vector<bool> is_peak_;
  std::vector<int> word_;
  std::vector<bool> used_;
  Visit& visit_;
};

template <typename Visit>
void walk_class(const Composition& c, Visit&& visit, const OracleLimits& limits) {
  require_within_limit(c.total(), limits);
  if (!is_admissible(c)) return;
  ClassWalker<std::remove_reference_t<Visit>> walker(c, visit);
  walker.run();
}

struct BoundaryTally {
  int n;
  std::vector<std::uint64_t> ini;
  std::vector<std::uint64_t> inter;
};

BoundaryTally tally_boundaries(const Composition& c, const OracleLimits& limits) {
  const int n = c.total();
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  BoundaryTally t{n, std::vector<std::uint64_t>(cells, 0),
                  std::vector<std::uint64_t>(cells, 0)};
  walk_class(
      c,
      [&](std::span<const int> w) {
        // For n = 1 there is no sigma_(n-1), so no member qualifies.
        if (w.size() < 2) return true;
        const std::size_t last = w.size() - 1;
        if (!(w[last - 1] < w[last])) return true;
        const auto cell = static_cast<std::size_t>(w[0] - 1) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(w[last] - 1);
        ++t.ini[cell];
        if (w[0] > w[1]) ++t.inter[cell];
        return true;
      },
      limits);
  return t;
}

CountMatrix to_matrix(int n, const std::vector<std::uint64_t>& cells) {
  CountMatrix m(n);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      m.at(a, b) = cells[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(b - 1)];
    }
  }
  return m;
}

}  // namespace

Permutation::Permutation(std::initializer_list<int> word)
    : Permutation(std::vector<int>(word)) {}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<int> sorted = word_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("permutation entries must be distinct");
  }
  if (!sorted.empty() && sorted.front() < 1) {
    throw InvalidInput("permutation entries must be positive");
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == ',') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw InvalidInput("cannot parse permutation '" + std::string(text) + "'");
    }
    word.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(word));
}

bool Permutation::is_standard() const {
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size())) return false;
  }
  return true;  // entries are already known to be distinct
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

PeakSet peak_set(std::span<const int> word) {
  std::vector<int> positions;
  for (std::size_t i = 1; i + 1 < word.size(); ++i) {
    if (word[i - 1] < word[i] && word[i] > word[i + 1]) {
      positions.push_back(static_cast<int>(i) + 1);
    }
  }
  return PeakSet(std::move(positions), static_cast<int>(word.size()));
}

PeakSet peak_set(const Permutation& p) { return peak_set(p.word()); }

Composition peak_composition(std::span<const int> word) {
  return peakset_to_composition(peak_set(word));
}

Permutation pattern_of(std::span<const int> word) {
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return word[static_cast<std::size_t>(x)] < word[static_cast<std::size_t>(y)]; });
  std::vector<int> ranks(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[static_cast<std::size_t>(order[r])] == word[static_cast<std::size_t>(order[r - 1])]) {
      throw InvalidInput("pattern_of: duplicate entry " +
                         std::to_string(word[static_cast<std::size_t>(order[r])]));
    }
    ranks[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks));
}

void for_each_in_class(const Composition& c,
                       const std::function<bool(std::span<const int>)>& visit,
                       const OracleLimits& limits) {
  walk_class(c, visit, limits);
}

std::vector<Permutation> class_members(const Composition& c, std::size_t max_count,
                                       const OracleLimits& limits) {
  std::vector<Permutation> out;
  if (max_count == 0) return out;
  walk_class(
      c,
      [&](std::span<const int> w) {
        out.emplace_back(std::vector<int>(w.begin(), w.end()));
        return out.size() < max_count;
      },
      limits);
  return out;
}

BigCount count_bruteforce(const Composition& c, const OracleLimits& limits) {
  std::uint64_t count = 0;
  walk_class(
      c,
      [&](std::span<const int>) {
        ++count;
        return true;
      },
      limits);
  return BigCount(count);
}

std::map<Composition, BigCount> peak_composition_histogram(int n,
                                                           const OracleLimits& limits) {
  if (n < 1) throw InvalidInput("histogram needs n >= 1");
  require_within_limit(n, limits);
  // Peak sets are keyed by bitmask while streaming; compositions are only
  // materialized at the end.
  std::map<std::uint32_t, std::uint64_t> by_mask;
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    std::uint32_t mask = 0;
    for (int i = 1; i + 1 < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (word[u - 1] < word[u] && word[u] > word[u + 1]) mask |= 1u << i;
    }
    ++by_mask[mask];
  } while (std::next_permutation(word.begin(), word.end()));

  std::map<Composition, BigCount> out;
  for (const auto& [mask, count] : by_mask) {
    std::vector<int> positions;
    for (int i = 1; i + 1 < n; ++i) {
      if (mask & (1u << i)) positions.push_back(i + 1);
    }
    out.emplace(peakset_to_composition(PeakSet(std::move(positions), n)), BigCount(count));
  }
  return out;
}

CountMatrix::CountMatrix(int n)
    : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

const BigCount& CountMatrix::at(int a, int b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_) throw InvalidInput("matrix index out of range");
  return cells_[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(b - 1)];
}

BigCount& CountMatrix::at(int a, int b) {
  return const_cast<BigCount&>(std::as_const(*this).at(a, b));
}

const BigCount& IniVector::at(int b) const {
  if (b < 1 || b > n()) throw InvalidInput("vector index out of range");
  return values_[static_cast<std::size_t>(b - 1)];
}

CountMatrix ini_matrix(const Composition& c, const OracleLimits& limits) {
  auto t = tally_boundaries(c, limits);
  return to_matrix(t.n, t.ini);
}

CountMatrix int_matrix(const Composition& c, const OracleLimits& limits) {
  auto t = tally_boundaries(c, limits);
  return to_matrix(t.n, t.inter);
}

IniVector t_vector(const Composition& c, const OracleLimits& limits) {
  auto t = tally_boundaries(c, limits);
  std::vector<BigCount> values(static_cast<std::size_t>(t.n));
  for (int b = 0; b < t.n; ++b) {
    std::uint64_t sum = 0;
    for (int a = 0; a < t.n; ++a) {
      sum += t.ini[static_cast<std::size_t>(a) * static_cast<std::size_t>(t.n) +
                   static_cast<std::size_t>(b)];
    }
    values[static_cast<std::size_t>(b)] = sum;
  }
  return IniVector(std::move(values));
}

}  // namespace peaklab
