#ifndef PEAKLAB_BIJECTION_LAB_HPP
#define PEAKLAB_BIJECTION_LAB_HPP

// Executable versions of the comparison constructions: the window
// embedding used to show non-surjectivity, the injection Gamma between peak
// classes that differ in one block, and the componentwise comparators that
// certify non-maximality.

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "peaklab/big_count.hpp"
#include "peaklab/composition.hpp"
#include "peaklab/permutation_oracle.hpp"

namespace peaklab {

enum class Relation { StrictlyDominated, Equal, Incomparable, Dominates };

std::string_view to_string(Relation relation);

/// Result of comparing x against y componentwise. For StrictlyDominated the
/// witness is the first index with x_i < y_i; for Dominates, the first with
/// x_i > y_i, which is also the witness for Incomparable. Matrix comparisons
/// report the (a,b) cell of the witness.
struct DominanceVerdict {
  Relation relation = Relation::Equal;
  std::optional<std::size_t> witness;
  std::optional<std::pair<int, int>> cell;
};

DominanceVerdict compare_componentwise(std::span<const BigCount> x, std::span<const BigCount> y);

/// Compares T c against T c' (first argument on the left).
DominanceVerdict dominates_T(const Composition& c, const Composition& cp,
                             const OracleLimits& limits = {});

/// Compares the Int tables of 1+c and 1+c' entrywise.
DominanceVerdict dominates_Int(const Composition& c, const Composition& cp,
                               const OracleLimits& limits = {});

/// Builds sigma in P(c1+c2+c3) whose window sigma_(n1)..sigma_(n1+n2) is
/// order-isomorphic to tau, where tau is in Int_{u,v}(1+c2) and n_i = |c_i|.
/// The outer pieces are the lexicographically smallest members of
/// Ini_{.,n1}(c1) and Ini_{.,n3+1}(r'(1+c3)).
Permutation embed_middle(const Composition& c1, const Composition& c2, const Composition& c3,
                         const Permutation& tau, const OracleLimits& limits = {});

/// The injection P(a+c+b) -> P(a+c'+b). The window of length |c|+1 that
/// starts at the last letter of a is re-patterned through a fixed injection
/// Int_{x,y}(1+c) -> Int_{x,y}(1+c'), built by matching both classes in
/// lexicographic order. Letters outside the window are untouched.
class GammaInjection {
 public:
  /// Throws InvalidInput on shape errors and DominanceViolation, naming the
  /// offending (x,y), when some Int_{x,y}(1+c) exceeds Int_{x,y}(1+c').
  GammaInjection(Composition a, Composition c, Composition cp, Composition b,
                 const OracleLimits& limits = {});

  Permutation operator()(const Permutation& sigma) const;

  /// a+c+b and a+c'+b.
  const Composition& source() const noexcept { return source_; }
  const Composition& target() const noexcept { return target_; }

  /// True when some Int class of 1+c is strictly smaller, i.e. the map
  /// misses part of the target class.
  bool strict() const noexcept { return strict_; }

 private:
  Composition source_;
  Composition target_;
  int window_start_;  // 0-based index of sigma_r
  int window_length_;
  bool strict_ = false;
  std::map<std::vector<int>, std::vector<int>> phi_;
};

Permutation gamma_injection(const Composition& a, const Composition& c, const Composition& cp,
                            const Composition& b, const Permutation& sigma,
                            const OracleLimits& limits = {});

}  // namespace peaklab

#endif  // PEAKLAB_BIJECTION_LAB_HPP
