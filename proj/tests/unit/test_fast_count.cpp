#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "helpers.hpp"
#include "peaklab/errors.hpp"
#include "peaklab/fast_count.hpp"
#include "peaklab/permutation_oracle.hpp"

using peaklab::Composition;
using peaklab::PeakSet;
using peaklab::SignWord;

namespace {

std::vector<std::string> words(const PeakSet& s) {
  std::vector<std::string> out;
  for (const auto& w : peaklab::compatible_words(s)) out.push_back(w.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("fast_count") {

TEST_CASE("beta") {
  CHECK(peaklab::beta(SignWord::parse("+-+")) == 5);
  CHECK(peaklab::beta(SignWord::parse("++++++")) == 1);
  CHECK(peaklab::beta(SignWord::parse("+---")) == 4);
  CHECK(peaklab::beta(SignWord::parse("")) == 1);
  CHECK_THROWS_AS(SignWord::parse("+x"), peaklab::InvalidInput);
}

TEST_CASE("beta sums to n! and alternating words give Euler numbers") {
  for (int n = 1; n <= 8; ++n) {
    peaklab::BigCount total = 0;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<peaklab::Sign> s;
      for (int i = 0; i < n - 1; ++i) {
        s.push_back((mask >> i) & 1u ? peaklab::Sign::Up : peaklab::Sign::Down);
      }
      total += peaklab::beta(SignWord(s));
    }
    CHECK(total == brute::factorial(n));
  }
  const std::vector<int> euler{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936};
  for (int n = 1; n < static_cast<int>(euler.size()); ++n) {
    std::string w;
    for (int i = 0; i < n - 1; ++i) w += i % 2 ? '-' : '+';
    CHECK(peaklab::beta(SignWord::parse(w)) == euler[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("compatible words") {
  using V = std::vector<std::string>;
  CHECK(words(PeakSet({2}, 4)) == V{"+-+", "+--"});
  CHECK(words(PeakSet({}, 4)) == V{"+++", "-++", "--+", "---"});
  CHECK(words(PeakSet({3, 5}, 8)).size() == 6);
}

TEST_CASE("single values") {
  CHECK(peaklab::count_fast(Composition{2, 2, 3}) == 400);
  CHECK(peaklab::count_fast(Composition{3, 2, 3}) == 3200);
  CHECK(peaklab::count_fast(Composition{2, 4}) == 64);
  CHECK(peaklab::count_fast(Composition{1, 2}) == 0);
  CHECK(peaklab::count_fast(Composition{}) == 1);
  CHECK(peaklab::count_fast(Composition{1}) == 1);
}

TEST_CASE("fast counter equals the reference for every composition up to size 9") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& [parts, count] : brute::histogram(n)) {
      const Composition c(parts);
      CAPTURE(c.to_string());
      CHECK(peaklab::count_fast(c) == count);
      CHECK(peaklab::count_via_words(c) == count);
    }
  }
}

TEST_CASE("word sum matches the constrained DP up to size 14") {
  for (int n = 10; n <= 14; ++n) {
    for (const auto& c : peaklab::enumerate_admissible(n)) {
      if (c.num_parts() > 3) continue;
      CHECK(peaklab::count_via_words(c) == peaklab::count_fast(c));
    }
  }
}

TEST_CASE("T vector from the DP equals the oracle") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& c : peaklab::enumerate_admissible(n)) {
      CAPTURE(c.to_string());
      CHECK(peaklab::t_vector_fast(c) == peaklab::t_vector(c));
    }
  }
}

TEST_CASE("batch counting is independent of worker count") {
  const auto cs = peaklab::enumerate_admissible(13);
  const auto one = peaklab::count_fast_batch(cs, 1);
  const auto four = peaklab::count_fast_batch(cs, 4);
  CHECK(one == four);
  peaklab::BigCount total = 0;
  for (const auto& v : one) total += v;
  CHECK(total == peaklab::factorial(13));
}

TEST_CASE("large sizes stay exact") {
  // 3^-ell * n! for n = 3*ell + 2
  const int ell = 10;
  const auto c = Composition::repeat(3, ell) + Composition{2};
  peaklab::BigCount expected = peaklab::factorial(3 * ell + 2);
  for (int i = 0; i < ell; ++i) expected /= 3;
  CHECK(peaklab::count_fast(c) == expected);
}

}  // TEST_SUITE
