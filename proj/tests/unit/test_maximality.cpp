#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "peaklab/errors.hpp"
#include "peaklab/fast_count.hpp"
#include "peaklab/maximality.hpp"

using peaklab::Composition;
using peaklab::PruneRule;
using peaklab::SearchOptions;
using peaklab::Verdict;

namespace {

std::optional<PruneRule> rule_of(const Composition& c) {
  const auto hit = peaklab::prune(c);
  return hit ? std::optional(hit->rule) : std::nullopt;
}

}  // namespace

TEST_SUITE("maximality") {

TEST_CASE("prune rules") {
  CHECK(rule_of(Composition{3, 5, 2}) == PruneRule::LargePart);
  CHECK(rule_of(Composition{5}) == PruneRule::LargePart);
  CHECK(rule_of(Composition{3, 4}) == PruneRule::LargePart);
  CHECK(rule_of(Composition{2, 3, 3, 2}) == PruneRule::Head);
  CHECK(rule_of(Composition{3, 3, 3, 1}) == PruneRule::Tail);
  CHECK(rule_of(Composition{3, 4, 2, 2}) == PruneRule::Infix2442);
  CHECK(rule_of(Composition{4, 4, 3}) == PruneRule::Head44);
  CHECK(rule_of(Composition{4, 3, 2, 3}) == PruneRule::Head2);
  CHECK(rule_of(Composition{3, 4, 3, 3}) == PruneRule::Tail2);
  CHECK(rule_of(Composition{3, 2, 2, 2, 3, 2}) == PruneRule::Factor);
  CHECK(rule_of(Composition{3, 3, 4, 3, 2}) == PruneRule::Cor62);
  CHECK_FALSE(rule_of(Composition{3, 3}).has_value());
  CHECK_FALSE(rule_of(Composition{4}).has_value());
  CHECK_FALSE(rule_of(Composition{3, 3, 2, 2}).has_value());
  CHECK(peaklab::prune(Composition{3, 5, 2})->pattern.find('5') != std::string::npos);
  CHECK_THROWS_AS(peaklab::prune(Composition{1, 2}), peaklab::InvalidInput);
  CHECK(peaklab::to_string(PruneRule::Infix2442) == "INFIX_24_42");
}

TEST_CASE("every pruned composition loses to the maximum") {
  for (int n = 4; n <= 13; ++n) {
    const auto all = peaklab::enumerate_admissible(n);
    const auto counts = peaklab::count_fast_batch(all, 1);
    const auto best = *std::max_element(counts.begin(), counts.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!peaklab::prune(all[i])) continue;
      CAPTURE(all[i].to_string());
      CHECK(counts[i] < best);
    }
  }
}

TEST_CASE("reformulation family") {
  for (const auto& c : {Composition{3, 3}, Composition{4, 3, 3}, Composition{4, 2}, Composition{4, 3, 2, 2},
                        Composition{3, 3, 2}, Composition{3, 3, 2, 2}, Composition{3, 2, 3, 2},
                        Composition{3, 2, 2}}) {
    CHECK(peaklab::in_reformulation_family(c));
  }
  for (const auto& c : {Composition{3, 2, 3}, Composition{2, 3}, Composition{4, 3, 4}, Composition{3, 2, 2, 2}}) {
    CHECK_FALSE(peaklab::in_reformulation_family(c));
  }
}

TEST_CASE("small searches") {
  using testing::names;
  using V = std::vector<std::string>;
  const auto r4 = peaklab::exact_maximal(4);
  CHECK(names(r4.argmax) == V{"2,2", "3,1", "4"});
  CHECK(r4.max_value == 8);
  CHECK(r4.verdict == Verdict::OutsideTheoremRange);
  const auto r5 = peaklab::exact_maximal(5);
  CHECK(names(r5.argmax) == V{"3,2"});
  CHECK(r5.max_value == 40);
  const auto r3 = peaklab::exact_maximal(3);
  CHECK(names(r3.argmax) == V{"3"});
  CHECK(r3.max_value == 4);
  CHECK(r3.stats.candidates == 2);
  const auto r6 = peaklab::exact_maximal(6);
  CHECK(names(r6.argmax) == V{"3,3", "4,2"});
  CHECK(r6.max_value == 144);
  CHECK(r6.stats.candidates == 8);
  CHECK(r6.stats.oracle_checked);
  CHECK(r6.verified());
  CHECK(peaklab::exact_maximal(1).max_value == 1);
  CHECK_THROWS_AS(peaklab::exact_maximal(0), peaklab::InvalidInput);
}

TEST_CASE("frozen maxima") {
  using testing::names;
  using V = std::vector<std::string>;
  const std::vector<std::pair<int, std::string>> maxima{
      {7, "672"},      {8, "4480"},        {9, "24192"},        {10, "161280"},
      {11, "1478400"}, {12, "10644480"},   {13, "92252160"},    {14, "1076275200"},
      {15, "9686476800"}};
  SearchOptions options;
  options.use_pruning = true;
  for (const auto& [n, value] : maxima) {
    const auto r = peaklab::exact_maximal(n, options);
    CHECK(peaklab::to_decimal(r.max_value) == value);
    CHECK(r.verified());
  }
  CHECK(names(peaklab::exact_maximal(9).argmax) == V{"3,3,3", "4,3,2"});
  CHECK(names(peaklab::exact_maximal(13, options).argmax) == V{"3,2,3,3,2", "3,3,2,3,2", "3,3,3,2,2"});
}

TEST_CASE("pruning and worker count leave the report unchanged") {
  for (int n = 4; n <= 12; ++n) {
    const auto plain = peaklab::exact_maximal(n);
    SearchOptions options;
    options.use_pruning = true;
    options.workers = 3;
    const auto pruned = peaklab::exact_maximal(n, options);
    CHECK(peaklab::same_outcome(plain, pruned));
    CHECK(peaklab::report_to_json(plain).size() > 0);
    for (const auto& c : plain.argmax) CHECK_FALSE(peaklab::prune(c).has_value());
  }
}

TEST_CASE("argmax is closed under reversal and matches the reformulation") {
  for (int n = 4; n <= 12; ++n) {
    const auto r = peaklab::exact_maximal(n);
    for (const auto& c : r.argmax) {
      CHECK(std::find(r.argmax.begin(), r.argmax.end(), peaklab::reverse_r(c)) != r.argmax.end());
      if (n >= 6 && c.num_parts() >= 3) CHECK(peaklab::in_reformulation_family(c));
    }
  }
}

TEST_CASE("two-part case") {
  for (int n = 6; n <= 12; ++n) {
    const auto r = peaklab::exact_maximal(n);
    REQUIRE(r.two_part.has_value());
    CHECK(r.two_part->attains_max == (n == 6));
  }
}

TEST_CASE("verify range") {
  const auto reports = peaklab::verify_theorems(6, 10);
  CHECK(reports.size() == 5);
  for (const auto& r : reports) CHECK(r.verified());
  CHECK(testing::names(reports.back().argmax) == std::vector<std::string>{"3,2,3,2", "3,3,2,2"});
  CHECK_THROWS_AS(peaklab::verify_theorems(5, 8), peaklab::InvalidInput);
  CHECK_THROWS_AS(peaklab::verify_theorems(9, 8), peaklab::InvalidInput);
}

TEST_CASE("middle factors commute") {
  const std::vector<Composition> f{Composition{}, Composition{2}, Composition{4}, Composition{2}};
  const std::vector<int> swap{1, 0};
  CHECK(peaklab::invariance_check(f, swap));
  CHECK(peaklab::count_fast(Composition{3, 2, 3, 4, 3, 2}) == peaklab::count_fast(Composition{3, 4, 3, 2, 3, 2}));
  const std::vector<Composition> g{Composition{4}, Composition{2}, Composition{}, Composition{2, 2}};
  CHECK(peaklab::invariance_check(g, swap));
  const std::vector<Composition> same{Composition{}, Composition{2}, Composition{2}, Composition{1}};
  CHECK(peaklab::invariance_check(same, swap));
  const std::vector<Composition> bad{Composition{}, Composition{2}, Composition{}};
  CHECK_THROWS_AS(peaklab::invariance_check(bad, std::vector<int>{0}), peaklab::InvalidInput);
  CHECK_THROWS_AS(peaklab::invariance_check(f, std::vector<int>{0, 0}), peaklab::InvalidInput);
}

TEST_CASE("report json") {
  SearchOptions options;
  options.dump_counts = true;
  const auto r = peaklab::exact_maximal(6, options);
  const auto doc = nlohmann::json::parse(peaklab::report_to_json(r));
  CHECK(doc["n"] == 6);
  CHECK(doc["max_value"] == "144");
  CHECK(doc["argmax"] == nlohmann::json::array({"3,3", "4,2"}));
  CHECK(doc["verdict"] == "match");
  CHECK(doc["counts"]["3,3"] == "144");
  CHECK(doc["counts"].size() == 8);
  const auto small = nlohmann::json::parse(peaklab::report_to_json(peaklab::exact_maximal(3)));
  CHECK(small["predicted"].is_null());
  CHECK(small["verdict"] == "outside theorem range");
}

TEST_CASE("cached search matches the uncached one") {
  peaklab::CountCache cache;
  SearchOptions options;
  options.cache = &cache;
  const auto first = peaklab::exact_maximal(11, options);
  CHECK(cache.size() > 0);
  const auto second = peaklab::exact_maximal(11, options);
  CHECK(peaklab::same_outcome(first, second));
  CHECK(peaklab::same_outcome(first, peaklab::exact_maximal(11)));
  CHECK(cache.hits() > 0);
}

}  // TEST_SUITE
