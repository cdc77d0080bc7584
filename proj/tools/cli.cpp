#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "peaklab/closed_forms.hpp"
#include "peaklab/composition.hpp"
#include "peaklab/count_cache.hpp"
#include "peaklab/errors.hpp"
#include "peaklab/fast_count.hpp"
#include "peaklab/maximality.hpp"
#include "peaklab/permutation_oracle.hpp"

namespace peaklab::cli {
namespace {

using nlohmann::ordered_json;

struct Shared {
  std::string cache_path;
  int exhaustion_limit = 10;
};

struct CountArgs {
  std::optional<std::string> composition;
  std::optional<std::string> peakset;
  std::optional<int> n;
  std::vector<std::string> methods;
};

struct TableArgs {
  std::string composition;
  std::string stat = "int";
  std::string format = "json";
};

struct MaximalArgs {
  int n = 0;
  bool prune = false;
  unsigned workers = 1;
  bool dump = false;
  int oracle_check_max = 9;
};

struct VerifyArgs {
  int from = 6;
  int to = 12;
  bool prune = false;
  unsigned workers = 1;
  int oracle_check_max = 9;
};

struct EnumerateArgs {
  std::string composition;
  std::size_t limit = 20;
};

// Closed forms that cover a whole composition: a single part, (3,n-3), or a
// 3-factorization with a nonempty last factor.
BigCount count_by_formula(const Composition& c) {
  if (!is_admissible(c)) return 0;
  if (c.num_parts() == 1) return p_single(c.total());
  if (c.num_parts() == 2 && c.front() == 3 && c.total() >= 4) return p_3block(c.total());
  const auto f = three_factorization(c);
  if (f.k() >= 1 && !f.factors.back().empty()) return multinomial_count(f);
  throw FormulaNotStated("no closed form covers (" + c.to_string() + ")");
}

class Session {
 public:
  Session(const Shared& shared, std::ostream& out, std::ostream& err)
      : shared_(shared), out_(out), err_(err) {
    if (const char* env = std::getenv("PEAKLAB_CACHE"); shared_.cache_path.empty() && env) {
      shared_.cache_path = env;
    }
    if (!shared_.cache_path.empty()) cache_.load(shared_.cache_path);
  }

  ~Session() {
    if (!shared_.cache_path.empty()) {
      try {
        cache_.save(shared_.cache_path);
      } catch (const std::exception& e) {
        err_ << "warning: cache not saved: " << e.what() << '\n';
      }
    }
  }

  int count(const CountArgs& args) {
    Composition c;
    std::optional<PeakSet> peaks;
    if (args.composition) {
      c = Composition::parse(*args.composition);
      if (is_admissible(c) && !c.empty()) peaks = composition_to_peakset(c);
    } else {
      if (!args.n) throw InvalidInput("--peakset needs --n");
      peaks = PeakSet::parse(*args.peakset, *args.n);
      c = peakset_to_composition(*peaks);
    }
    std::vector<std::string> methods = args.methods;
    if (methods.empty()) methods.push_back("fast");

    std::vector<BigCount> values;
    for (const auto& method : methods) {
      if (method == "fast") {
        values.push_back(cache_.get_or_compute(c, [](const Composition& x) { return count_fast(x); }));
      } else if (method == "brute") {
        values.push_back(count_bruteforce(c, limits()));
      } else {
        values.push_back(count_by_formula(c));
      }
    }

    ordered_json doc;
    doc["n"] = c.total();
    doc["composition"] = c.to_string();
    doc["peakset"] = peaks ? ordered_json(peaks->to_string()) : ordered_json(nullptr);
    doc["count"] = to_decimal(values.front());
    doc["method"] = methods.size() == 1 ? ordered_json(methods.front()) : ordered_json(methods);
    const bool agree = std::all_of(values.begin(), values.end(),
                                   [&](const BigCount& v) { return v == values.front(); });
    if (!agree) {
      ordered_json per_method = ordered_json::object();
      for (std::size_t i = 0; i < methods.size(); ++i) per_method[methods[i]] = to_decimal(values[i]);
      doc["disagreement"] = per_method;
    }
    out_ << doc.dump(2) << '\n';
    if (!agree) {
      err_ << "error: methods disagree on (" << c.to_string() << ")\n";
      return kMismatch;
    }
    return kOk;
  }

  int table(const TableArgs& args) {
    const auto c = Composition::parse(args.composition);
    const int n = c.total();
    std::vector<std::string> row_labels;
    std::vector<std::vector<BigCount>> rows;
    if (args.stat == "t") {
      const auto t = t_vector(c, limits());
      row_labels.push_back("sum");
      rows.emplace_back(t.values().begin(), t.values().end());
    } else {
      const auto m = args.stat == "int" ? int_matrix(c, limits()) : ini_matrix(c, limits());
      for (int a = 1; a <= m.n(); ++a) {
        row_labels.push_back(std::to_string(a));
        auto& row = rows.emplace_back();
        for (int b = 1; b <= m.n(); ++b) row.push_back(m.at(a, b));
      }
    }

    if (args.format == "csv") {
      out_ << "a\\b";
      for (int b = 1; b <= n; ++b) out_ << ',' << b;
      out_ << '\n';
      for (std::size_t r = 0; r < rows.size(); ++r) {
        out_ << row_labels[r];
        for (const auto& v : rows[r]) out_ << ',' << to_decimal(v);
        out_ << '\n';
      }
      return kOk;
    }

    ordered_json doc;
    doc["composition"] = c.to_string();
    doc["stat"] = args.stat;
    doc["n"] = n;
    auto to_strings = [](const std::vector<BigCount>& row) {
      std::vector<std::string> s;
      for (const auto& v : row) s.push_back(to_decimal(v));
      return s;
    };
    if (args.stat == "t") {
      doc["values"] = rows.empty() ? std::vector<std::string>{} : to_strings(rows.front());
    } else {
      ordered_json matrix = ordered_json::array();
      for (const auto& row : rows) matrix.push_back(to_strings(row));
      doc["values"] = matrix;
    }
    out_ << doc.dump(2) << '\n';
    return kOk;
  }

  int maximal(const MaximalArgs& args) {
    SearchOptions options;
    options.use_pruning = args.prune;
    options.workers = args.workers;
    options.dump_counts = args.dump;
    options.oracle_cross_check_max = std::min(args.oracle_check_max, shared_.exhaustion_limit);
    options.cache = &cache_;
    const auto report = exact_maximal(args.n, options);
    out_ << report_to_json(report) << '\n';
    return report.verified() ? kOk : kMismatch;
  }

  int verify(const VerifyArgs& args) {
    SearchOptions options;
    options.use_pruning = args.prune;
    options.workers = args.workers;
    options.oracle_cross_check_max = std::min(args.oracle_check_max, shared_.exhaustion_limit);
    options.cache = &cache_;
    const auto reports = verify_theorems(args.from, args.to, options);
    const bool all = std::all_of(reports.begin(), reports.end(),
                                 [](const MaximalityReport& r) { return r.verified(); });
    ordered_json doc;
    doc["from"] = args.from;
    doc["to"] = args.to;
    doc["all_match"] = all;
    doc["reports"] = ordered_json::array();
    for (const auto& r : reports) doc["reports"].push_back(ordered_json::parse(report_to_json(r, -1)));
    out_ << doc.dump(2) << '\n';
    return all ? kOk : kMismatch;
  }

  int factorize(const std::string& text) {
    const auto c = Composition::parse(text);
    const auto f = three_factorization(c);
    ordered_json doc;
    doc["composition"] = c.to_string();
    doc["admissible"] = is_admissible(c);
    doc["k"] = f.k();
    doc["factors"] = ordered_json::array();
    for (const auto& x : f.factors) doc["factors"].push_back(x.to_string());
    out_ << doc.dump(2) << '\n';
    return kOk;
  }

  int enumerate(const EnumerateArgs& args) {
    const auto c = Composition::parse(args.composition);
    const auto members = class_members(c, args.limit, limits());
    ordered_json doc;
    doc["composition"] = c.to_string();
    doc["limit"] = args.limit;
    doc["permutations"] = ordered_json::array();
    for (const auto& p : members) {
      doc["permutations"].push_back(std::vector<int>(p.word().begin(), p.word().end()));
    }
    out_ << doc.dump(2) << '\n';
    return kOk;
  }

 private:
  OracleLimits limits() const { return {.max_size = shared_.exhaustion_limit}; }

  Shared shared_;
  std::ostream& out_;
  std::ostream& err_;
  CountCache cache_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of permutations by peak composition", "peaklab"};
  app.require_subcommand(1);
  app.fallthrough();

  Shared shared;
  app.add_option("--cache", shared.cache_path, "Count cache file (default: $PEAKLAB_CACHE)");
  app.add_option("--exhaustion-limit", shared.exhaustion_limit,
                 "Largest permutation length enumerated by brute force")
      ->check(CLI::Range(1, 16));

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count permutations with a given peak composition or peak set");
  auto* comp_opt = count->add_option("--composition", count_args.composition, "Composition, e.g. 3,2,3");
  auto* peak_opt = count->add_option("--peakset", count_args.peakset, "Peak positions, e.g. 2,5");
  count->add_option("--n", count_args.n, "Permutation length for --peakset")->check(CLI::PositiveNumber);
  count->add_option("--method", count_args.methods, "fast, brute or formula (repeatable)")
      ->check(CLI::IsMember({"fast", "brute", "formula"}));
  comp_opt->excludes(peak_opt);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Boundary statistics of a composition");
  table->add_option("--composition", table_args.composition, "Composition")->required();
  table->add_option("--stat", table_args.stat, "int, ini or t")
      ->check(CLI::IsMember({"int", "ini", "t"}));
  table->add_option("--format", table_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  MaximalArgs maximal_args;
  auto* maximal = app.add_subcommand("maximal", "Exact maximal peak compositions of n");
  maximal->add_option("--n", maximal_args.n, "Size")->required()->check(CLI::Range(1, 40));
  maximal->add_flag("--prune", maximal_args.prune, "Skip compositions certified non-maximal");
  maximal->add_option("--workers", maximal_args.workers, "Counting threads")->check(CLI::Range(1u, 256u));
  maximal->add_flag("--dump", maximal_args.dump, "Include every evaluated count");
  maximal->add_option("--oracle-check-max", maximal_args.oracle_check_max,
                      "Brute-force cross-check up to this n (0 disables)")
      ->check(CLI::Range(0, 16));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the predicted maximal families for a range of n");
  verify->add_option("--from", verify_args.from, "First n (>= 6)")->required();
  verify->add_option("--to", verify_args.to, "Last n")->required();
  verify->add_flag("--prune", verify_args.prune, "Skip compositions certified non-maximal");
  verify->add_option("--workers", verify_args.workers, "Counting threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--oracle-check-max", verify_args.oracle_check_max,
                     "Brute-force cross-check up to this n (0 disables)")
      ->check(CLI::Range(0, 16));

  std::string factorize_text;
  auto* factorize = app.add_subcommand("factorize", "Split a composition at its parts equal to 3");
  factorize->add_option("--composition", factorize_text, "Composition")->required();

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "List the first permutations with a peak composition");
  enumerate->add_option("--composition", enumerate_args.composition, "Composition")->required();
  enumerate->add_option("--limit", enumerate_args.limit, "Maximum number listed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (count->parsed() && !count_args.composition && !count_args.peakset) {
      throw CLI::ValidationError("count", "one of --composition or --peakset is required");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    Session session(shared, out, err);
    if (count->parsed()) return session.count(count_args);
    if (table->parsed()) return session.table(table_args);
    if (maximal->parsed()) return session.maximal(maximal_args);
    if (verify->parsed()) return session.verify(verify_args);
    if (factorize->parsed()) return session.factorize(factorize_text);
    return session.enumerate(enumerate_args);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const FormulaNotStated& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ExhaustionLimit& e) {
    err << "error: " << e.what() << " (raise --exhaustion-limit)\n";
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace peaklab::cli
