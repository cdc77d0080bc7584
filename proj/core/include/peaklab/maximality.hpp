#ifndef PEAKLAB_MAXIMALITY_HPP
#define PEAKLAB_MAXIMALITY_HPP

// Exact computation of the maximal peak compositions of n, the forbidden
// pattern rules that certify non-maximality, and per-n verification of the
// predicted maximal families and their counts.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "peaklab/big_count.hpp"
#include "peaklab/composition.hpp"
#include "peaklab/count_cache.hpp"

namespace peaklab {

enum class PruneRule {
  LargePart,   // single part n >= 5, an inner part >= 5, or last part >= 4
  Head,        // (2,2), (2,3), (2,4) followed by anything nonempty
  Tail,        // anything nonempty followed by (2,1), (3,1), (4,1)
  Infix2442,   // (2,4) or (4,2) with a nonempty neighbour on either side
  Head44,      // (4,4) followed by anything nonempty
  Head2,       // (4,3,2), (4,3,4), (3,2,3,2), (3,3,2,3,2) + nonempty
  Tail2,       // nonempty + (2,3,3), (4,3,3), (2,3,2,2), (2,3,2,3,2)
  Factor,      // >= 3 parts and the 3-factorization leaves the canonical shape
  Cor62,       // >= 3 parts and the part-count restrictions on 2s and 4s fail
};

std::string_view to_string(PruneRule rule);

struct PruneHit {
  PruneRule rule;
  std::string pattern;
};

/// First rule (in declaration order) certifying that c is not maximal.
/// Throws InvalidInput for inadmissible c.
std::optional<PruneHit> prune(const Composition& c);

/// Membership in the short list of shapes every maximal composition with at
/// least three parts must take: (3^l), (4,3^l), (4,3^(l-2),2),
/// (4,3^(l-2),2,2), (3^l,2), (3^l,2,2), (3^s,2,3^t,2) with l >= 2, s >= 1,
/// t >= 0.
bool in_reformulation_family(const Composition& c);

enum class Verdict { Match, Mismatch, OutsideTheoremRange };
std::string_view to_string(Verdict verdict);

struct TwoPartSummary {
  BigCount best;
  std::vector<Composition> argmax;
  bool attains_max = false;
};

struct SearchStats {
  std::size_t candidates = 0;
  std::size_t evaluated = 0;
  std::size_t pruned = 0;
  std::size_t pruned_sampled = 0;
  bool oracle_checked = false;
  std::map<PruneRule, std::size_t> pruned_by_rule;
};

struct MaximalityReport {
  int n = 0;
  BigCount max_value;
  std::vector<Composition> argmax;  // sorted lexicographically
  std::vector<Composition> predicted;  // empty when n < 6
  std::optional<BigCount> predicted_value;
  Verdict verdict = Verdict::OutsideTheoremRange;  // argmax vs predicted
  Verdict value_verdict = Verdict::OutsideTheoremRange;  // max vs predicted value
  std::optional<TwoPartSummary> two_part;
  SearchStats stats;
  std::vector<std::pair<Composition, BigCount>> counts;  // only when requested

  bool verified() const noexcept {
    return verdict != Verdict::Mismatch && value_verdict != Verdict::Mismatch;
  }
};

/// True when two reports describe the same outcome (everything except the
/// search statistics and the optional count dump).
bool same_outcome(const MaximalityReport& x, const MaximalityReport& y);

struct SearchOptions {
  bool use_pruning = false;
  unsigned workers = 1;
  bool dump_counts = false;
  /// Re-count every evaluated composition by brute force when n is at most
  /// this size. 0 disables the cross-check.
  int oracle_cross_check_max = 9;
  /// Every k-th pruned composition (in enumeration order) is still counted
  /// and must lose to the maximum.
  std::size_t prune_sample_stride = 3;
  CountCache* cache = nullptr;
};

/// Throws Error if a sampled pruned composition reaches the maximum or if the
/// brute-force cross-check disagrees with the fast counter.
MaximalityReport exact_maximal(int n, const SearchOptions& options = {});

/// exact_maximal for each n in [from, to]; requires 6 <= from <= to.
std::vector<MaximalityReport> verify_theorems(int from, int to, const SearchOptions& options = {});

/// Whether P(x0 + (3) + x1 + ... + (3) + xk) is unchanged when the middle
/// factors x1..x(k-1) are reordered. `middle_order` lists the 0-based
/// positions of x1..x(k-1) in their new order.
bool invariance_check(std::span<const Composition> factors, std::span<const int> middle_order);

/// JSON text for a report, with keys in a fixed order.
std::string report_to_json(const MaximalityReport& report, int indent = 2);

}  // namespace peaklab

#endif  // PEAKLAB_MAXIMALITY_HPP
