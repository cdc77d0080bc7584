#ifndef PEAKLAB_PERMUTATION_ORACLE_HPP
#define PEAKLAB_PERMUTATION_ORACLE_HPP

// Ground-truth enumeration over the symmetric group. Everything here walks
// actual permutations; the fast counter and the closed forms are checked
// against it.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "peaklab/big_count.hpp"
#include "peaklab/composition.hpp"

namespace peaklab {

/// A word of distinct positive integers. Standard when it is a bijection
/// on [n].
class Permutation {
 public:
  Permutation() = default;
  Permutation(std::initializer_list<int> word);
  explicit Permutation(std::vector<int> word);

  /// Parses "2 6 5 1 4 3" or "2,6,5,1,4,3".
  static Permutation parse(std::string_view text);

  std::span<const int> word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  int operator[](std::size_t i) const { return word_[i]; }
  bool is_standard() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

struct OracleLimits {
  /// Largest permutation length the oracle will enumerate.
  int max_size = 10;
};

PeakSet peak_set(std::span<const int> word);
PeakSet peak_set(const Permutation& p);
Composition peak_composition(std::span<const int> word);

/// The permutation of [len] order-isomorphic to `word`. Throws InvalidInput
/// on repeated entries.
Permutation pattern_of(std::span<const int> word);

/// Visits every sigma in S_n with peak composition c in lexicographic order.
/// The walk extends prefixes one letter at a time and abandons a prefix as
/// soon as a completed position disagrees with the peak set, so the cost is
/// proportional to the class, not to n!. `visit` returns false to stop.
/// Inadmissible compositions have no members.
void for_each_in_class(const Composition& c,
                       const std::function<bool(std::span<const int>)>& visit,
                       const OracleLimits& limits = {});

/// First `max_count` members of the class, lexicographically.
std::vector<Permutation> class_members(const Composition& c, std::size_t max_count,
                                       const OracleLimits& limits = {});

BigCount count_bruteforce(const Composition& c, const OracleLimits& limits = {});

/// One in-place lexicographic pass over all of S_n, tallying each
/// permutation's peak composition. Keys are exactly the admissible
/// compositions of n.
std::map<Composition, BigCount> peak_composition_histogram(
    int n, const OracleLimits& limits = {});

/// Square table indexed 1..n on both axes.
class CountMatrix {
 public:
  explicit CountMatrix(int n);

  int n() const noexcept { return n_; }
  const BigCount& at(int a, int b) const;
  BigCount& at(int a, int b);

 private:
  int n_;
  std::vector<BigCount> cells_;
};

/// Vector indexed 1..n; used for T c = (Ini_{.,b}(c))_b.
class IniVector {
 public:
  IniVector() = default;
  explicit IniVector(std::vector<BigCount> values) : values_(std::move(values)) {}

  int n() const noexcept { return static_cast<int>(values_.size()); }
  const BigCount& at(int b) const;
  std::span<const BigCount> values() const noexcept { return values_; }

  friend bool operator==(const IniVector&, const IniVector&) = default;

 private:
  std::vector<BigCount> values_;
};

/// Entry (a,b): members with sigma_1 = a and sigma_(n-1) < sigma_n = b.
CountMatrix ini_matrix(const Composition& c, const OracleLimits& limits = {});

/// Entry (a,b): members with a = sigma_1 > sigma_2 and sigma_(n-1) < sigma_n = b.
CountMatrix int_matrix(const Composition& c, const OracleLimits& limits = {});

/// Column sums of ini_matrix.
IniVector t_vector(const Composition& c, const OracleLimits& limits = {});

}  // namespace peaklab

#endif  // PEAKLAB_PERMUTATION_ORACLE_HPP
