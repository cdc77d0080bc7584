#ifndef PEAKLAB_COMPOSITION_HPP
#define PEAKLAB_COMPOSITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace peaklab {

/// An ordered list of positive parts. The default-constructed value is the
/// empty composition, which has no parts and total 0.
///
/// Ordering is lexicographic on the parts, which is also the order in which
/// enumerate_admissible() produces compositions of a fixed total.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  /// Parses "4,3,2". Whitespace around parts is allowed; "" is the empty
  /// composition.
  static Composition parse(std::string_view text);

  /// k copies of `part`.
  static Composition repeat(int part, int count);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t num_parts() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Sum of the parts (the length of the permutations it indexes).
  int total() const noexcept { return total_; }

  int operator[](std::size_t i) const { return parts_[i]; }
  int front() const { return parts_.front(); }
  int back() const { return parts_.back(); }

  /// Number of parts equal to `value`.
  std::size_t count(int value) const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a,
                                          const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

Composition concat(const Composition& a, const Composition& b);
Composition operator+(const Composition& a, const Composition& b);

/// Composition reversal induced by reversing a permutation:
/// (c1..ck) -> (ck+1, c(k-1), ..., c2, c1-1); single parts are fixed.
Composition reverse_r(const Composition& c);

/// The composition with its first part incremented.
Composition increase_first(const Composition& c);

/// True iff some permutation has this peak composition: a single part, or
/// every part before the last is at least 2. The empty composition counts
/// as admissible (it indexes the empty permutation).
bool is_admissible(const Composition& c);

/// Peak positions of a permutation of length n. Positions are 1-based,
/// strictly increasing, each in [2, n-1], and never adjacent.
class PeakSet {
 public:
  PeakSet(std::vector<int> positions, int n);

  /// Parses "2,5" (or "" for no peaks) against an ambient length n.
  static PeakSet parse(std::string_view positions, int n);

  std::span<const int> positions() const noexcept { return positions_; }
  int n() const noexcept { return n_; }
  bool contains(int position) const;
  std::string to_string() const;

  friend bool operator==(const PeakSet&, const PeakSet&) = default;

 private:
  std::vector<int> positions_;
  int n_;
};

Composition peakset_to_composition(const PeakSet& peaks);
PeakSet composition_to_peakset(const Composition& c);

/// Splitting of a composition at its parts equal to 3:
/// c = x0 + (3) + x1 + ... + (3) + xk, where no factor has a part 3.
struct Factorization3 {
  std::vector<Composition> factors;

  /// Number of separating 3s.
  std::size_t k() const noexcept { return factors.empty() ? 0 : factors.size() - 1; }
  Composition reassemble() const;

  friend bool operator==(const Factorization3&, const Factorization3&) = default;
};

Factorization3 three_factorization(const Composition& c);

/// Calls `visit` with every admissible composition of n, once each, in
/// lexicographic order of parts. Returning false from `visit` stops early.
void for_each_admissible(int n, const std::function<bool(const Composition&)>& visit);
std::vector<Composition> enumerate_admissible(int n);

/// The maximal compositions claimed for n >= 6, sorted lexicographically:
/// {(3^l), (4, 3^(l-2), 2)} for n = 3l, {(3^s, 2, 3^t, 2) : s >= 1, s+t = l-1}
/// for n = 3l+1 and {(3^l, 2)} for n = 3l+2.
std::vector<Composition> predicted_maximal(int n);

}  // namespace peaklab

template <>
struct std::hash<peaklab::Composition> {
  std::size_t operator()(const peaklab::Composition& c) const noexcept;
};

#endif  // PEAKLAB_COMPOSITION_HPP
