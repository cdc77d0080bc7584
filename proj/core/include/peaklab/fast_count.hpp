#ifndef PEAKLAB_FAST_COUNT_HPP
#define PEAKLAB_FAST_COUNT_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "peaklab/big_count.hpp"
#include "peaklab/composition.hpp"
#include "peaklab/permutation_oracle.hpp"

namespace peaklab {

enum class Sign : char { Up = '+', Down = '-' };

/// Up-down word z_1..z_(n-1): z_i = Up when sigma_i < sigma_(i+1).
class SignWord {
 public:
  SignWord() = default;
  explicit SignWord(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  /// Parses a string over {'+','-'}.
  static SignWord parse(std::string_view text);

  std::span<const Sign> signs() const noexcept { return signs_; }
  /// Length of the permutations the word describes (one more than the word).
  int n() const noexcept { return static_cast<int>(signs_.size()) + 1; }
  std::string to_string() const;

  friend bool operator==(const SignWord&, const SignWord&) = default;
  friend auto operator<=>(const SignWord& a, const SignWord& b) {
    return a.signs_ <=> b.signs_;
  }

 private:
  std::vector<Sign> signs_;
};

/// Number of permutations with up-down word w. Boustrophedon recurrence on
/// the rank of the last letter: an ascent takes strict prefix sums, a
/// descent takes suffix sums.
BigCount beta(const SignWord& w);

/// Words whose peak positions {i : z_(i-1) = Up, z_i = Down} are exactly S.
void for_each_compatible_word(const PeakSet& peaks,
                              const std::function<void(const SignWord&)>& visit);
std::vector<SignWord> compatible_words(const PeakSet& peaks);

/// P(c) in one pass of the peak-constrained recurrence. The state is the
/// rank of the last letter split by the sign of the last step; only sign
/// pairs consistent with the peak set are allowed at each position.
/// Returns 0 for inadmissible c and 1 for the empty composition.
BigCount count_fast(const Composition& c);

/// P(c) as the sum of beta over compatible words. Exponential in the
/// number of long parts; kept as an independent route for cross-checks.
BigCount count_via_words(const Composition& c);

/// T c = (Ini_{.,b}(c))_b from the final rank distribution of the
/// constrained recurrence, restricted to a final ascent. No exhaustion limit.
IniVector t_vector_fast(const Composition& c);

/// count_fast over a batch, split across `workers` threads. The result is
/// index-aligned with the input and independent of the worker count.
std::vector<BigCount> count_fast_batch(std::span<const Composition> batch,
                                       unsigned workers = 1);

}  // namespace peaklab

#endif  // PEAKLAB_FAST_COUNT_HPP
