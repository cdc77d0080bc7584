#include "peaklab/fast_count.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "peaklab/errors.hpp"

namespace peaklab {
namespace {

using RankVector = std::vector<BigCount>;

// v[r] counts prefixes of length m whose last letter has rank r+1 among
// them. Appending a letter of rank r'+1 among m+1 letters is an ascent
// iff r' > r.
RankVector step(const RankVector& v, Sign sign) {
  const std::size_t m = v.size();
  RankVector out(m + 1);
  if (sign == Sign::Up) {
    BigCount running = 0;
    for (std::size_t r = 0; r <= m; ++r) {
      out[r] = running;
      if (r < m) running += v[r];
    }
  } else {
    BigCount running = 0;
    for (std::size_t r = m + 1; r-- > 0;) {
      if (r < m) running += v[r];
      out[r] = running;
    }
  }
  return out;
}

void add_into(RankVector& acc, const RankVector& v) {
  if (acc.empty()) {
    acc = v;
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
}

BigCount total(const RankVector& v) {
  BigCount sum = 0;
  for (const auto& x : v) sum += x;
  return sum;
}

// Final rank distributions indexed by the sign of the last step. Requires
// n >= 2 and an admissible composition.
std::array<RankVector, 2> constrained_pass(const Composition& c) {
  const int n = c.total();
  std::vector<bool> is_peak(static_cast<std::size_t>(n) + 1, false);
  int running = 0;
  for (std::size_t i = 0; i + 1 < c.num_parts(); ++i) {
    running += c[i];
    is_peak[static_cast<std::size_t>(running)] = true;
  }

  // Index 0: last step Up, index 1: last step Down.
  std::array<RankVector, 2> state{step(RankVector{1}, Sign::Up),
                                  step(RankVector{1}, Sign::Down)};
  for (int i = 2; i <= n - 1; ++i) {
    std::array<RankVector, 2> next;
    for (int prev = 0; prev < 2; ++prev) {
      if (state[prev].empty()) continue;
      for (int cur = 0; cur < 2; ++cur) {
        const bool peak = prev == 0 && cur == 1;
        if (peak != is_peak[static_cast<std::size_t>(i)]) continue;
        add_into(next[cur], step(state[prev], cur == 0 ? Sign::Up : Sign::Down));
      }
    }
    for (auto& v : next) {
      if (v.empty()) v.assign(static_cast<std::size_t>(i) + 1, BigCount(0));
    }
    state = std::move(next);
  }
  return state;
}

}  // namespace

SignWord SignWord::parse(std::string_view text) {
  std::vector<Sign> signs;
  for (char ch : text) {
    if (ch == '+') {
      signs.push_back(Sign::Up);
    } else if (ch == '-') {
      signs.push_back(Sign::Down);
    } else {
      throw InvalidInput("sign words use '+' and '-', got '" + std::string(1, ch) + "'");
    }
  }
  return SignWord(std::move(signs));
}

std::string SignWord::to_string() const {
  std::string out;
  for (Sign s : signs_) out += static_cast<char>(s);
  return out;
}

BigCount beta(const SignWord& w) {
  RankVector v{1};
  for (Sign s : w.signs()) v = step(v, s);
  return total(v);
}

void for_each_compatible_word(const PeakSet& peaks,
                              const std::function<void(const SignWord&)>& visit) {
  const int n = peaks.n();
  if (n <= 1) {
    visit(SignWord{});
    return;
  }
  std::vector<Sign> word(static_cast<std::size_t>(n - 1));
  // word[j] is z_(j+1). Choosing z_i fixes whether position i is a peak.
  std::function<void(int)> extend = [&](int i) {
    if (i == n) {
      visit(SignWord(word));
      return;
    }
    for (Sign s : {Sign::Up, Sign::Down}) {
      word[static_cast<std::size_t>(i - 1)] = s;
      if (i >= 2) {
        const bool peak = word[static_cast<std::size_t>(i - 2)] == Sign::Up && s == Sign::Down;
        if (peak != peaks.contains(i)) continue;
      }
      extend(i + 1);
    }
  };
  extend(1);
}

std::vector<SignWord> compatible_words(const PeakSet& peaks) {
  std::vector<SignWord> out;
  for_each_compatible_word(peaks, [&](const SignWord& w) { out.push_back(w); });
  return out;
}

BigCount count_fast(const Composition& c) {
  if (!is_admissible(c)) return 0;
  if (c.total() <= 1) return 1;
  const auto state = constrained_pass(c);
  return total(state[0]) + total(state[1]);
}

BigCount count_via_words(const Composition& c) {
  if (!is_admissible(c)) return 0;
  BigCount sum = 0;
  for_each_compatible_word(composition_to_peakset(c),
                           [&](const SignWord& w) { sum += beta(w); });
  return sum;
}

IniVector t_vector_fast(const Composition& c) {
  const int n = c.total();
  if (n == 0) return IniVector{};
  if (!is_admissible(c)) return IniVector(std::vector<BigCount>(static_cast<std::size_t>(n)));
  if (n == 1) return IniVector(std::vector<BigCount>{0});
  // After all n letters the rank of the last letter is its value.
  return IniVector(constrained_pass(c)[0]);
}

std::vector<BigCount> count_fast_batch(std::span<const Composition> batch, unsigned workers) {
  std::vector<BigCount> out(batch.size());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(batch.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) out[i] = count_fast(batch[i]);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < batch.size(); i += workers) out[i] = count_fast(batch[i]);
      });
    }
  }
  return out;
}

}  // namespace peaklab
