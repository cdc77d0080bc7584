#include "peaklab/maximality.hpp"

#include <algorithm>
#include <regex>

#include <json.hpp>

#include "peaklab/closed_forms.hpp"
#include "peaklab/errors.hpp"
#include "peaklab/fast_count.hpp"
#include "peaklab/permutation_oracle.hpp"

namespace peaklab {
namespace {

using Pattern = std::vector<int>;

std::string show(const Pattern& p) { return "(" + Composition(p).to_string() + ")"; }

bool is_prefix(std::span<const int> parts, const Pattern& p) {
  return parts.size() >= p.size() && std::equal(p.begin(), p.end(), parts.begin());
}

bool is_suffix(std::span<const int> parts, const Pattern& p) {
  return parts.size() >= p.size() && std::equal(p.begin(), p.end(), parts.end() - static_cast<long>(p.size()));
}

// Pattern followed by at least one more part.
std::optional<PruneHit> head(std::span<const int> parts, PruneRule rule,
                             std::initializer_list<Pattern> patterns) {
  for (const auto& p : patterns) {
    if (parts.size() > p.size() && is_prefix(parts, p)) return PruneHit{rule, show(p) + "+b"};
  }
  return std::nullopt;
}

// Pattern preceded by at least one more part.
std::optional<PruneHit> tail(std::span<const int> parts, PruneRule rule,
                             std::initializer_list<Pattern> patterns) {
  for (const auto& p : patterns) {
    if (parts.size() > p.size() && is_suffix(parts, p)) return PruneHit{rule, "a+" + show(p)};
  }
  return std::nullopt;
}

std::optional<PruneHit> large_part(const Composition& c) {
  if (c.num_parts() == 1) {
    if (c.total() >= 5) return PruneHit{PruneRule::LargePart, "single part " + std::to_string(c.total())};
    return std::nullopt;
  }
  for (std::size_t i = 0; i + 1 < c.num_parts(); ++i) {
    if (c[i] >= 5) {
      return PruneHit{PruneRule::LargePart,
                      "part " + std::to_string(c[i]) + " at position " + std::to_string(i + 1)};
    }
  }
  if (c.back() >= 4) return PruneHit{PruneRule::LargePart, "last part " + std::to_string(c.back())};
  return std::nullopt;
}

std::optional<PruneHit> infix_24_42(std::span<const int> parts) {
  for (const Pattern& p : {Pattern{2, 4}, Pattern{4, 2}}) {
    if (parts.size() <= p.size()) continue;
    for (std::size_t i = 0; i + p.size() <= parts.size(); ++i) {
      if (std::equal(p.begin(), p.end(), parts.begin() + static_cast<long>(i))) {
        const bool left = i > 0;
        const bool right = i + p.size() < parts.size();
        if (left || right) {
          return PruneHit{PruneRule::Infix2442,
                          std::string(left ? "a+" : "") + show(p) + (right ? "+b" : "")};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<PruneHit> factor_shape(const Composition& c) {
  if (c.num_parts() < 3) return std::nullopt;
  const auto f = three_factorization(c);
  if (f.k() == 0) return PruneHit{PruneRule::Factor, "no part equal to 3"};
  const auto& first = f.factors.front();
  if (!(first.empty() || first == Composition{4})) {
    return PruneHit{PruneRule::Factor, "leading factor (" + first.to_string() + ")"};
  }
  const auto& last = f.factors.back();
  if (!(last.empty() || last == Composition{2} || last == Composition{2, 2})) {
    return PruneHit{PruneRule::Factor, "trailing factor (" + last.to_string() + ")"};
  }
  for (std::size_t i = 1; i < f.k(); ++i) {
    const auto& x = f.factors[i];
    if (!(x.empty() || x == Composition{2} || x == Composition{4})) {
      return PruneHit{PruneRule::Factor,
                      "inner factor " + std::to_string(i) + " (" + x.to_string() + ")"};
    }
  }
  return std::nullopt;
}

std::optional<PruneHit> cor62(const Composition& c) {
  if (c.num_parts() < 3) return std::nullopt;
  const auto fours = c.count(4);
  const auto twos = c.count(2);
  if (c.front() == 3 && fours > 0) return PruneHit{PruneRule::Cor62, "starts with 3 and has a 4"};
  if (c.front() == 4 && fours > 1) return PruneHit{PruneRule::Cor62, "starts with 4 and has another 4"};
  if (c.front() == 3 && c.back() == 3 && twos > 1) {
    return PruneHit{PruneRule::Cor62, "starts and ends with 3 and has two 2s"};
  }
  if (c.front() == 3 && c.back() == 2 && twos > 2) {
    return PruneHit{PruneRule::Cor62, "starts with 3, ends with 2 and has three 2s"};
  }
  if (c.front() == 4 && twos > 0) {
    // Must be (4, 3^s, 2^t) with s >= 1 and 1 <= t <= 2.
    const auto parts = c.parts();
    std::size_t i = 1;
    while (i < parts.size() && parts[i] == 3) ++i;
    const std::size_t s = i - 1;
    const std::size_t t = parts.size() - i;
    const bool rest_twos = std::all_of(parts.begin() + static_cast<long>(i), parts.end(),
                                       [](int p) { return p == 2; });
    if (!(s >= 1 && rest_twos && t >= 1 && t <= 2)) {
      return PruneHit{PruneRule::Cor62, "starts with 4 and is not (4,3^s,2^t)"};
    }
  }
  return std::nullopt;
}

std::vector<std::string> names(const std::vector<Composition>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.to_string());
  return out;
}

}  // namespace

std::string_view to_string(PruneRule rule) {
  switch (rule) {
    case PruneRule::LargePart: return "LARGE_PART";
    case PruneRule::Head: return "HEAD";
    case PruneRule::Tail: return "TAIL";
    case PruneRule::Infix2442: return "INFIX_24_42";
    case PruneRule::Head44: return "HEAD_44";
    case PruneRule::Head2: return "HEAD2";
    case PruneRule::Tail2: return "TAIL2";
    case PruneRule::Factor: return "FACTOR";
    case PruneRule::Cor62: return "COR62";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::OutsideTheoremRange: return "outside theorem range";
  }
  return "?";
}

std::optional<PruneHit> prune(const Composition& c) {
  if (c.empty() || !is_admissible(c)) {
    throw InvalidInput("prune needs a nonempty admissible composition, got (" + c.to_string() + ")");
  }
  const auto parts = c.parts();
  if (auto hit = large_part(c)) return hit;
  if (auto hit = head(parts, PruneRule::Head, {{2, 2}, {2, 3}, {2, 4}})) return hit;
  if (auto hit = tail(parts, PruneRule::Tail, {{2, 1}, {3, 1}, {4, 1}})) return hit;
  if (auto hit = infix_24_42(parts)) return hit;
  if (auto hit = head(parts, PruneRule::Head44, {{4, 4}})) return hit;
  if (auto hit = head(parts, PruneRule::Head2, {{4, 3, 2}, {4, 3, 4}, {3, 2, 3, 2}, {3, 3, 2, 3, 2}})) {
    return hit;
  }
  if (auto hit = tail(parts, PruneRule::Tail2, {{2, 3, 3}, {4, 3, 3}, {2, 3, 2, 2}, {2, 3, 2, 3, 2}})) {
    return hit;
  }
  if (auto hit = factor_shape(c)) return hit;
  return cor62(c);
}

bool in_reformulation_family(const Composition& c) {
  std::string digits;
  for (int p : c.parts()) {
    if (p > 4) return false;
    digits += static_cast<char>('0' + p);
  }
  static const std::regex family("3{2,}|43{2,}|43*2|43*22|3{2,}2|3{2,}22|3+23*2");
  return std::regex_match(digits, family);
}

bool same_outcome(const MaximalityReport& x, const MaximalityReport& y) {
  auto two_part_equal = [](const std::optional<TwoPartSummary>& a,
                           const std::optional<TwoPartSummary>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->best == b->best && a->argmax == b->argmax && a->attains_max == b->attains_max);
  };
  return x.n == y.n && x.max_value == y.max_value && x.argmax == y.argmax &&
         x.predicted == y.predicted && x.predicted_value == y.predicted_value &&
         x.verdict == y.verdict && x.value_verdict == y.value_verdict &&
         two_part_equal(x.two_part, y.two_part);
}

MaximalityReport exact_maximal(int n, const SearchOptions& options) {
  if (n < 1) throw InvalidInput("exact_maximal needs n >= 1");
  MaximalityReport report;
  report.n = n;

  const auto candidates = enumerate_admissible(n);
  report.stats.candidates = candidates.size();

  std::vector<Composition> kept;
  std::vector<Composition> sampled;
  for (const auto& c : candidates) {
    const auto hit = options.use_pruning ? prune(c) : std::nullopt;
    if (!hit) {
      kept.push_back(c);
      continue;
    }
    if (report.stats.pruned % std::max<std::size_t>(options.prune_sample_stride, 1) == 0) {
      sampled.push_back(c);
    }
    ++report.stats.pruned;
    ++report.stats.pruned_by_rule[hit->rule];
  }

  auto count_all = [&](const std::vector<Composition>& batch) {
    if (!options.cache) return count_fast_batch(batch, options.workers);
    std::vector<Composition> missing;
    for (const auto& c : batch) {
      if (!options.cache->find(c)) missing.push_back(c);
    }
    const auto fresh = count_fast_batch(missing, options.workers);
    for (std::size_t i = 0; i < missing.size(); ++i) options.cache->insert(missing[i], fresh[i]);
    std::vector<BigCount> out;
    for (const auto& c : batch) {
      out.push_back(options.cache->get_or_compute(c, [](const Composition& x) { return count_fast(x); }));
    }
    return out;
  };

  const auto kept_counts = count_all(kept);
  const auto sampled_counts = count_all(sampled);
  report.stats.evaluated = kept.size() + sampled.size();
  report.stats.pruned_sampled = sampled.size();

  report.max_value = 0;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept_counts[i] > report.max_value) {
      report.max_value = kept_counts[i];
      report.argmax.clear();
    }
    if (kept_counts[i] == report.max_value) report.argmax.push_back(kept[i]);
  }
  for (std::size_t i = 0; i < sampled.size(); ++i) {
    if (sampled_counts[i] >= report.max_value) {
      throw Error("pruning unsound: (" + sampled[i].to_string() + ") reaches " +
                  to_decimal(sampled_counts[i]) + " >= max " + to_decimal(report.max_value));
    }
  }

  if (options.oracle_cross_check_max > 0 && n <= options.oracle_cross_check_max) {
    const auto truth = peak_composition_histogram(n, {.max_size = options.oracle_cross_check_max});
    auto verify = [&](const std::vector<Composition>& cs, const std::vector<BigCount>& counts) {
      for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto it = truth.find(cs[i]);
        const BigCount expected = it == truth.end() ? BigCount(0) : it->second;
        if (expected != counts[i]) {
          throw Error("fast counter disagrees with brute force on (" + cs[i].to_string() + ")");
        }
      }
    };
    verify(kept, kept_counts);
    verify(sampled, sampled_counts);
    report.stats.oracle_checked = true;
  }

  std::vector<Composition> two_parts;
  for (const auto& c : candidates) {
    if (c.num_parts() == 2) two_parts.push_back(c);
  }
  if (!two_parts.empty()) {
    const auto counts = count_all(two_parts);
    TwoPartSummary summary;
    summary.best = *std::max_element(counts.begin(), counts.end());
    for (std::size_t i = 0; i < two_parts.size(); ++i) {
      if (counts[i] == summary.best) summary.argmax.push_back(two_parts[i]);
    }
    summary.attains_max = summary.best == report.max_value;
    report.two_part = std::move(summary);
  }

  if (n >= 6) {
    report.predicted = predicted_maximal(n);
    report.predicted_value = theorem2_value(n);
    report.verdict = report.argmax == report.predicted ? Verdict::Match : Verdict::Mismatch;
    report.value_verdict =
        report.max_value == *report.predicted_value ? Verdict::Match : Verdict::Mismatch;
  }

  if (options.dump_counts) {
    for (std::size_t i = 0; i < kept.size(); ++i) report.counts.emplace_back(kept[i], kept_counts[i]);
    for (std::size_t i = 0; i < sampled.size(); ++i) {
      report.counts.emplace_back(sampled[i], sampled_counts[i]);
    }
    std::sort(report.counts.begin(), report.counts.end());
  }
  return report;
}

std::vector<MaximalityReport> verify_theorems(int from, int to, const SearchOptions& options) {
  if (from < 6 || from > to) throw InvalidInput("verify_theorems needs 6 <= from <= to");
  std::vector<MaximalityReport> out;
  for (int n = from; n <= to; ++n) out.push_back(exact_maximal(n, options));
  return out;
}

bool invariance_check(std::span<const Composition> factors, std::span<const int> middle_order) {
  if (factors.size() < 2) throw InvalidInput("invariance_check needs at least two factors");
  if (factors.back().empty()) throw InvalidInput("invariance_check needs a nonempty last factor");
  const std::size_t middle = factors.size() - 2;
  std::vector<int> check(middle_order.begin(), middle_order.end());
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check.size() != middle || check[i] != static_cast<int>(i)) {
      throw InvalidInput("middle_order must be a permutation of the middle factor positions");
    }
  }
  if (check.size() != middle) {
    throw InvalidInput("middle_order must be a permutation of the middle factor positions");
  }

  const Composition three{3};
  Composition original = factors.front();
  Composition reordered = factors.front();
  for (std::size_t i = 0; i < middle; ++i) {
    original = original + three + factors[i + 1];
    reordered = reordered + three + factors[static_cast<std::size_t>(middle_order[i]) + 1];
  }
  original = original + three + factors.back();
  reordered = reordered + three + factors.back();
  return count_fast(original) == count_fast(reordered);
}

std::string report_to_json(const MaximalityReport& report, int indent) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["n"] = report.n;
  doc["max_value"] = to_decimal(report.max_value);
  doc["argmax"] = names(report.argmax);
  if (report.n >= 6) {
    doc["predicted"] = names(report.predicted);
    doc["predicted_value"] = to_decimal(*report.predicted_value);
  } else {
    doc["predicted"] = nullptr;
    doc["predicted_value"] = nullptr;
  }
  doc["verdict"] = to_string(report.verdict);
  doc["value_verdict"] = to_string(report.value_verdict);
  if (report.two_part) {
    doc["two_part"] = {{"best", to_decimal(report.two_part->best)},
                       {"argmax", names(report.two_part->argmax)},
                       {"attains_max", report.two_part->attains_max}};
  } else {
    doc["two_part"] = nullptr;
  }
  ordered_json by_rule = ordered_json::object();
  for (const auto& [rule, count] : report.stats.pruned_by_rule) {
    by_rule[std::string(to_string(rule))] = count;
  }
  doc["search"] = {{"candidates", report.stats.candidates},
                   {"evaluated", report.stats.evaluated},
                   {"pruned", report.stats.pruned},
                   {"pruned_sampled", report.stats.pruned_sampled},
                   {"oracle_checked", report.stats.oracle_checked},
                   {"pruned_by_rule", by_rule}};
  if (!report.counts.empty()) {
    ordered_json counts = ordered_json::object();
    for (const auto& [c, value] : report.counts) counts[c.to_string()] = to_decimal(value);
    doc["counts"] = counts;
  }
  return doc.dump(indent);
}

}  // namespace peaklab
