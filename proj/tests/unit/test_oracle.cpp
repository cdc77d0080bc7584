#include <doctest.h>

#include "brute.hpp"
#include "helpers.hpp"
#include "peaklab/errors.hpp"
#include "peaklab/permutation_oracle.hpp"

using peaklab::Composition;
using peaklab::Permutation;

namespace {

void check_table(const peaklab::CountMatrix& m, const brute::Table& expected) {
  REQUIRE(static_cast<std::size_t>(m.n()) == expected.size());
  for (int a = 1; a <= m.n(); ++a) {
    for (int b = 1; b <= m.n(); ++b) {
      CHECK(m.at(a, b) == expected[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)]);
    }
  }
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("peak sets of words") {
  CHECK(peaklab::peak_set(Permutation{2, 6, 5, 1, 4, 3}).to_string() == "2,5");
  CHECK(peaklab::peak_set(Permutation{1, 2, 3, 4}).positions().empty());
  CHECK(peaklab::peak_set(Permutation{1, 3, 2}).to_string() == "2");
  CHECK(peaklab::peak_composition(std::vector<int>{2, 6, 5, 1, 4, 3}) == Composition{2, 3, 1});
}

TEST_CASE("patterns") {
  CHECK(peaklab::pattern_of(std::vector<int>{7, 3, 9}) == Permutation{2, 1, 3});
  CHECK(peaklab::pattern_of(std::vector<int>{1, 2, 3}) == Permutation{1, 2, 3});
  CHECK(peaklab::pattern_of(std::vector<int>{5, 8, 2, 6}) == Permutation{2, 4, 1, 3});
  CHECK_THROWS_AS(peaklab::pattern_of(std::vector<int>{4, 4}), peaklab::InvalidInput);
}

TEST_CASE("permutation parsing") {
  CHECK(Permutation::parse("1 3 2") == Permutation{1, 3, 2});
  CHECK(Permutation::parse("2,3,1").is_standard());
  CHECK_FALSE(Permutation{2, 5}.is_standard());
  CHECK_THROWS_AS(Permutation::parse("1 1"), peaklab::InvalidInput);
  CHECK_THROWS_AS(Permutation::parse("1 0"), peaklab::InvalidInput);
}

TEST_CASE("brute-force counts") {
  CHECK(peaklab::count_bruteforce(Composition{2, 1}) == 2);
  CHECK(peaklab::count_bruteforce(Composition{2, 2, 2}) == 96);
  CHECK(peaklab::count_bruteforce(Composition{1, 2}) == 0);
  CHECK(peaklab::count_bruteforce(Composition{}) == 1);
  CHECK_THROWS_AS(peaklab::count_bruteforce(Composition{3, 3, 3, 2}), peaklab::ExhaustionLimit);
  CHECK(peaklab::count_bruteforce(Composition{3, 3, 3, 2}, {.max_size = 11}) == 1478400);
}

TEST_CASE("class walk agrees with the reference enumeration") {
  for (int n = 1; n <= 8; ++n) {
    const auto reference = brute::histogram(n);
    for (const auto& [parts, count] : reference) {
      CHECK(peaklab::count_bruteforce(Composition(parts)) == count);
    }
    const auto hist = peaklab::peak_composition_histogram(n);
    CHECK(hist.size() == reference.size());
    for (const auto& [c, count] : hist) CHECK(reference.at(testing::parts_of(c)) == count);
  }
}

TEST_CASE("class members are listed lexicographically") {
  const auto members = peaklab::class_members(Composition{2, 1}, 10);
  REQUIRE(members.size() == 2);
  CHECK(members[0] == Permutation{1, 3, 2});
  CHECK(members[1] == Permutation{2, 3, 1});
  CHECK(peaklab::class_members(Composition{1, 2}, 10).empty());

  const auto all = peaklab::class_members(Composition{2, 2, 2}, 1000);
  CHECK(all.size() == 96);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& p : all) CHECK(peaklab::peak_composition(p.word()) == Composition{2, 2, 2});
  CHECK(peaklab::class_members(Composition{2, 2, 2}, 5) ==
        std::vector<Permutation>(all.begin(), all.begin() + 5));
}

TEST_CASE("Int and Ini against the reference") {
  for (const auto& c : {Composition{5, 2}, Composition{4, 3}, Composition{2, 2, 1},
                        Composition{3, 2, 2}, Composition{4}, Composition{2, 4, 1}}) {
    CAPTURE(c.to_string());
    check_table(peaklab::int_matrix(c), brute::boundary(testing::parts_of(c), true));
    check_table(peaklab::ini_matrix(c), brute::boundary(testing::parts_of(c), false));
    CHECK(testing::decimals(peaklab::t_vector(c).values()) ==
          testing::decimals(brute::t_vector(testing::parts_of(c))));
  }
}

TEST_CASE("Int spot values for (5,2) and (4,3)") {
  CHECK(peaklab::int_matrix(Composition{5, 2}).at(7, 2) == 7);
  CHECK(peaklab::int_matrix(Composition{4, 3}).at(2, 4) == 2);
}

TEST_CASE("diagonal of Int is zero") {
  for (const auto& c : {Composition{2, 2}, Composition{3, 1}, Composition{4, 3}, Composition{2, 3, 2}}) {
    const auto m = peaklab::int_matrix(c);
    for (int a = 1; a <= m.n(); ++a) CHECK(m.at(a, a) == 0);
  }
}

TEST_CASE("T vector goldens") {
  using testing::decimals;
  using V = std::vector<std::string>;
  CHECK(decimals(peaklab::t_vector(Composition{2, 2}).values()) == V{"0", "1", "2", "2"});
  CHECK(decimals(peaklab::t_vector(Composition{4}).values()) == V{"0", "1", "2", "4"});
  CHECK(decimals(peaklab::t_vector(Composition{3, 2, 3}).values()) ==
        V{"0", "96", "192", "288", "384", "480", "576", "672"});
}

TEST_CASE("degenerate sizes") {
  CHECK(peaklab::int_matrix(Composition{1}).at(1, 1) == 0);
  CHECK(peaklab::t_vector(Composition{1}).values().size() == 1);
  CHECK(peaklab::t_vector(Composition{1, 2}).values().size() == 3);
  CHECK(peaklab::t_vector(Composition{1, 2}).at(3) == 0);
}

}  // TEST_SUITE
