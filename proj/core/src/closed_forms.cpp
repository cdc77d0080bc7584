#include "peaklab/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "peaklab/errors.hpp"
#include "peaklab/fast_count.hpp"

namespace peaklab {
namespace {

constexpr std::array kFormulaNames = {
    std::pair{FormulaId::L32a, std::string_view("L32a")},
    std::pair{FormulaId::L32b, std::string_view("L32b")},
    std::pair{FormulaId::L32_2a, std::string_view("L32_2a")},
    std::pair{FormulaId::L32_2b, std::string_view("L32_2b")},
    std::pair{FormulaId::L33_1a, std::string_view("L33_1a")},
    std::pair{FormulaId::L33_1b, std::string_view("L33_1b")},
    std::pair{FormulaId::L33_1c, std::string_view("L33_1c")},
    std::pair{FormulaId::P_single, std::string_view("P_single")},
    std::pair{FormulaId::P_3_nminus3, std::string_view("P_3_nminus3")},
    std::pair{FormulaId::SEP51, std::string_view("SEP51")},
    std::pair{FormulaId::MULT52, std::string_view("MULT52")},
    std::pair{FormulaId::GEN56, std::string_view("GEN56")},
    std::pair{FormulaId::C57_T3ell, std::string_view("C57_T3ell")},
    std::pair{FormulaId::C57_3ell2, std::string_view("C57_3ell2")},
    std::pair{FormulaId::C57_3s23m, std::string_view("C57_3s23m")},
    std::pair{FormulaId::C57_3s23t2, std::string_view("C57_3s23t2")},
    std::pair{FormulaId::C57_43ell, std::string_view("C57_43ell")},
    std::pair{FormulaId::THM12, std::string_view("THM12")},
};

const std::array<FormulaId, kFormulaNames.size()> kFormulaIds = [] {
  std::array<FormulaId, kFormulaNames.size()> ids{};
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = kFormulaNames[i].first;
  return ids;
}();

void require_indices(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n) {
    throw InvalidInput("index (" + std::to_string(a) + "," + std::to_string(b) +
                       ") outside [1," + std::to_string(n) + "]");
  }
}

Composition threes(int count) { return Composition::repeat(3, count); }

const Composition kOne{1};
const Composition kTwo{2};
const Composition kThree{3};
const Composition kFour{4};

CrossCheck make_check(FormulaId id, std::string subject, Rational formula, BigCount reference) {
  CrossCheck check{id, std::move(subject), std::move(formula), std::move(reference)};
  check.integral = is_integral(check.formula_value);
  check.agrees = check.integral && to_integer(check.formula_value) == check.reference;
  return check;
}

std::string index_subject(int n, const char* shape, int a, int b) {
  return std::string(shape) + " n=" + std::to_string(n) + " (a,b)=(" + std::to_string(a) +
         "," + std::to_string(b) + ")";
}

}  // namespace

std::string_view to_string(FormulaId id) {
  for (const auto& [key, name] : kFormulaNames) {
    if (key == id) return name;
  }
  return "?";
}

std::optional<FormulaId> parse_formula_id(std::string_view name) {
  for (const auto& [key, text] : kFormulaNames) {
    if (text == name) return key;
  }
  return std::nullopt;
}

std::span<const FormulaId> all_formula_ids() { return kFormulaIds; }

BigCount int_single(int n, int a, int b) {
  if (n < 3) throw InvalidInput("int_single needs n >= 3");
  require_indices(n, a, b);
  if (a == n && b >= 2 && b <= n - 1) return pow2(b - 2);
  if (b == n && a >= 2 && a <= n - 1) return pow2(a - 2);
  return 0;
}

BigCount ini_single(int n, int a, int b) {
  if (n < 3) throw InvalidInput("ini_single needs n >= 3");
  require_indices(n, a, b);
  if (a == 1) return b == n ? 1 : 0;
  return int_single(n, a, b);
}

std::optional<FormulaId> int_3block_clause(int n, int a, int b) {
  if ((a == n && b == n - 1) || (a == n - 1 && b == n)) return FormulaId::L33_1a;
  if (a == n && b >= 2 && b <= n - 2) return FormulaId::L33_1b;
  if (b == n && a >= 2 && a <= n - 2) return FormulaId::L33_1c;
  return std::nullopt;
}

namespace {

BigCount int_3block_oracle(int n, int a, int b, const OracleLimits& limits) {
  if (n > limits.max_size) {
    throw FormulaNotStated("no closed form for Int_{" + std::to_string(a) + "," +
                           std::to_string(b) + "}(3," + std::to_string(n - 3) +
                           ") and n exceeds the oracle limit");
  }
  return int_matrix(Composition{3, n - 3}, limits).at(a, b);
}

}  // namespace

BigCount int_3block(int n, int a, int b, const OracleLimits& limits) {
  if (n < 5) throw InvalidInput("int_3block needs n >= 5");
  require_indices(n, a, b);
  const auto clause = int_3block_clause(n, a, b);
  if (!clause) return int_3block_oracle(n, a, b, limits);
  switch (*clause) {
    case FormulaId::L33_1a:
      return BigCount(n - 4) * pow2(n - 4);
    case FormulaId::L33_1b: {
      BigCount value = BigCount(n - 2 - b) * pow2(b - 2);
      if (b >= 3) value += BigCount(b - 1) * pow2(b - 3);
      return value;
    }
    default: {
      // Permutations ending in n-1, n split off the final letter n, leaving
      // a member of P(3, n-4) that ends in an ascent to n-1.
      const BigCount smaller = n - 1 >= 5
                                   ? int_3block(n - 1, a, n - 1, limits)
                                   : int_matrix(Composition{3, n - 4}, limits).at(a, n - 1);
      return smaller + BigCount(a - 1) * pow2(n - 5);
    }
  }
}

BigCount int_3block_1c_as_printed(int n, int a, const OracleLimits& limits) {
  if (n < 5) throw InvalidInput("int_3block needs n >= 5");
  if (a < 2 || a > n - 2) throw InvalidInput("recursive clause needs 2 <= a <= n-2");
  return int_3block_oracle(n, a, n - 1, limits) + BigCount(a - 1) * pow2(n - 5);
}

BigCount p_single(int n) {
  if (n < 1) throw InvalidInput("p_single needs n >= 1");
  return pow2(n - 1);
}

BigCount p_3block(int n) {
  if (n < 5) throw InvalidInput("p_3block needs n >= 5");
  return (binomial(n - 1, 2) - 1) * pow2(n - 2);
}

BigCount separation(const Composition& a, const Composition& b) {
  if (b.empty()) throw InvalidInput("separation needs a nonempty right factor");
  if (!is_admissible(a + kThree + b)) {
    throw InvalidInput("separation needs an admissible a+(3)+b, got " +
                       (a + kThree + b).to_string());
  }
  return binomial(a.total() + b.total() + 3, a.total() + 1) * count_fast(a + kOne) *
         count_fast(kTwo + b);
}

BigCount multinomial_count(const Factorization3& f) {
  const std::size_t k = f.k();
  if (k < 1) throw InvalidInput("multinomial_count needs at least one part 3");
  if (f.factors.back().empty()) {
    throw InvalidInput("multinomial_count needs a nonempty last factor");
  }
  std::vector<int> blocks;
  blocks.push_back(f.factors.front().total() + 1);
  BigCount product = count_fast(f.factors.front() + kOne);
  for (std::size_t i = 1; i < k; ++i) {
    blocks.push_back(3 + f.factors[i].total());
    product *= count_fast(kTwo + f.factors[i] + kOne);
  }
  blocks.push_back(f.factors.back().total() + 2);
  product *= count_fast(kTwo + f.factors.back());
  return multinomial(blocks) * product;
}

Composition general_count_subject(std::span<const Composition> factors,
                                  std::span<const int> runs) {
  if (runs.empty()) throw InvalidInput("general_count needs k >= 1");
  if (factors.size() != runs.size() + 1) {
    throw InvalidInput("general_count needs k+1 factors for k runs");
  }
  Composition c = factors[0];
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i] < 1) throw InvalidInput("general_count needs every run length >= 1");
    c = c + threes(runs[i]) + factors[i + 1];
  }
  return c;
}

Rational general_count_exact(std::span<const Composition> factors, std::span<const int> runs) {
  general_count_subject(factors, runs);  // validates shapes
  const std::size_t k = runs.size();
  if (factors.back().empty()) throw InvalidInput("general_count needs a nonempty last factor");

  int run_total = 0;
  for (int l : runs) run_total += l;
  int size = 3 * run_total;
  for (const auto& f : factors) size += f.total();

  BigCount denominator = factorial(1 + factors.front().total());
  BigCount product = count_fast(factors.front() + kOne);
  for (std::size_t i = 1; i < k; ++i) {
    denominator *= factorial(3 + factors[i].total());
    product *= count_fast(kTwo + factors[i] + kOne);
  }
  denominator *= factorial(factors.back().total() + 2);
  product *= count_fast(kTwo + factors.back());

  Rational value(factorial(size) * product, denominator);
  value *= pow3(-(run_total - static_cast<int>(k)));
  return value;
}

BigCount general_count(std::span<const Composition> factors, std::span<const int> runs) {
  const Rational value = general_count_exact(factors, runs);
  if (!is_integral(value)) {
    throw FormulaInconsistency("general count for " +
                               general_count_subject(factors, runs).to_string() +
                               " evaluates to non-integer " + to_decimal(value));
  }
  return to_integer(value);
}

Rational corollary_formula(FormulaId id, const CorollaryParams& p) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw InvalidInput(std::string("parameter out of range: ") + what);
  };
  switch (id) {
    case FormulaId::C57_T3ell:
      need(p.ell >= 2, "l >= 2");
      return Rational(1, 5) * pow3(2 - p.ell) * Rational(factorial(3 * p.ell));
    case FormulaId::C57_3ell2:
      need(p.ell >= 2, "l >= 2");
      return pow3(-p.ell) * Rational(factorial(3 * p.ell + 2));
    case FormulaId::C57_3s23m:
      need(p.s >= 1 && p.m >= 1, "s, m >= 1");
      return Rational(2, 25) * pow3(-p.s - p.m) * Rational(factorial(3 * p.s + 3 * p.m + 2));
    case FormulaId::C57_3s23t2:
      need(p.s >= 1 && p.t >= 0, "s >= 1, t >= 0");
      return Rational(2, 5) * pow3(-p.s - p.t) * Rational(factorial(3 * p.s + 3 * p.t + 4));
    case FormulaId::C57_43ell:
      need(p.ell >= 2, "l >= 2");
      return Rational(1, 25) * pow3(2 - p.ell) * Rational(factorial(3 * p.ell + 4));
    default:
      throw InvalidInput("not a closed-form family: " + std::string(to_string(id)));
  }
}

std::vector<Composition> corollary_subjects(FormulaId id, const CorollaryParams& p) {
  corollary_formula(id, p);  // validates parameters
  switch (id) {
    case FormulaId::C57_T3ell:
      return {threes(p.ell), kFour + threes(p.ell - 2) + kTwo};
    case FormulaId::C57_3ell2:
      return {threes(p.ell) + kTwo};
    case FormulaId::C57_3s23m:
      return {threes(p.s) + kTwo + threes(p.m),
              kFour + threes(p.m - 1) + kTwo + threes(p.s - 1) + kTwo};
    case FormulaId::C57_3s23t2:
      return {threes(p.s) + kTwo + threes(p.t) + kTwo,
              threes(p.t + 1) + kTwo + threes(p.s - 1) + kTwo};
    default:  // C57_43ell
      return {kFour + threes(p.ell)};
  }
}

BigCount corollary_value(FormulaId id, const CorollaryParams& params) {
  const Rational value = corollary_formula(id, params);
  if (!is_integral(value)) {
    const auto subject = corollary_subjects(id, params).front();
    throw FormulaInconsistency(std::string(to_string(id)) + " for " + subject.to_string() +
                               " evaluates to non-integer " + to_decimal(value) +
                               "; dynamic programming gives " +
                               to_decimal(count_fast(subject)));
  }
  return to_integer(value);
}

BigCount theorem2_value(int n) {
  if (n < 6) throw InvalidInput("theorem2_value needs n >= 6");
  const int ell = n / 3;
  Rational value(factorial(n));
  switch (n % 3) {
    case 0:
      value *= Rational(1, 5) * pow3(2 - ell);
      break;
    case 1:
      value *= Rational(2, 5) * pow3(1 - ell);
      break;
    default:
      value *= pow3(-ell);
      break;
  }
  if (!is_integral(value)) {
    throw FormulaInconsistency("theorem value for n=" + std::to_string(n) +
                               " is not an integer: " + to_decimal(value));
  }
  return to_integer(value);
}

std::string describe(const CrossCheck& check) {
  std::string verdict = check.agrees ? "agree" : (check.integral ? "DISAGREE" : "NON-INTEGER");
  return std::string(to_string(check.id)) + " " + check.subject +
         ": formula=" + to_decimal(check.formula_value) +
         " reference=" + to_decimal(check.reference) + " -> " + verdict;
}

CrossCheck check_separation(const Composition& a, const Composition& b) {
  return make_check(FormulaId::SEP51, "a=(" + a.to_string() + ") b=(" + b.to_string() + ")",
                    Rational(separation(a, b)), count_fast(a + kThree + b));
}

CrossCheck check_multinomial(const Factorization3& f) {
  const auto c = f.reassemble();
  return make_check(FormulaId::MULT52, "(" + c.to_string() + ")",
                    Rational(multinomial_count(f)), count_fast(c));
}

CrossCheck check_general(std::span<const Composition> factors, std::span<const int> runs) {
  const auto c = general_count_subject(factors, runs);
  return make_check(FormulaId::GEN56, "(" + c.to_string() + ")",
                    general_count_exact(factors, runs), count_fast(c));
}

std::vector<CrossCheck> check_corollary(FormulaId id, const CorollaryParams& params) {
  const Rational value = corollary_formula(id, params);
  std::vector<CrossCheck> out;
  for (const auto& c : corollary_subjects(id, params)) {
    out.push_back(make_check(id, "(" + c.to_string() + ")", value, count_fast(c)));
  }
  return out;
}

CrossCheck check_theorem2(int n, const BigCount& exact_max) {
  return make_check(FormulaId::THM12, "n=" + std::to_string(n), Rational(theorem2_value(n)),
                    exact_max);
}

namespace {

// Splits c into 3-free factors around maximal runs of 3s.
bool run_length_form(const Composition& c, std::vector<Composition>& factors,
                     std::vector<int>& runs) {
  factors.clear();
  runs.clear();
  std::vector<int> current;
  auto parts = c.parts();
  for (std::size_t i = 0; i < parts.size();) {
    if (parts[i] != 3) {
      current.push_back(parts[i++]);
      continue;
    }
    int run = 0;
    while (i < parts.size() && parts[i] == 3) {
      ++run;
      ++i;
    }
    factors.emplace_back(current);
    current.clear();
    runs.push_back(run);
  }
  factors.emplace_back(current);
  return !runs.empty() && !factors.back().empty();
}

}  // namespace

std::vector<CrossCheck> run_formula_harness(int max_size, const OracleLimits& limits) {
  std::vector<CrossCheck> out;
  const int table_max = std::min(max_size, limits.max_size);

  for (int n = 3; n <= table_max; ++n) {
    const auto ints = int_matrix(Composition{n}, limits);
    const auto inis = ini_matrix(Composition{n}, limits);
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        const bool on_edge = (a == n) != (b == n) && std::min(a, b) >= 2;
        out.push_back(make_check(on_edge ? FormulaId::L32a : FormulaId::L32b,
                                 index_subject(n, "Int (n)", a, b),
                                 Rational(int_single(n, a, b)), ints.at(a, b)));
        out.push_back(make_check(a == 1 ? FormulaId::L32_2a : FormulaId::L32_2b,
                                 index_subject(n, "Ini (n)", a, b),
                                 Rational(ini_single(n, a, b)), inis.at(a, b)));
      }
    }
  }

  for (int n = 5; n <= table_max; ++n) {
    const auto ints = int_matrix(Composition{3, n - 3}, limits);
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        const auto clause = int_3block_clause(n, a, b);
        if (!clause) continue;
        out.push_back(make_check(*clause, index_subject(n, "Int (3,n-3)", a, b),
                                 Rational(int_3block(n, a, b, limits)), ints.at(a, b)));
      }
    }
  }

  for (int n = 1; n <= max_size; ++n) {
    out.push_back(make_check(FormulaId::P_single, "(" + std::to_string(n) + ")",
                             Rational(p_single(n)), count_fast(Composition{n})));
  }
  for (int n = 5; n <= max_size; ++n) {
    const Composition c{3, n - 3};
    out.push_back(make_check(FormulaId::P_3_nminus3, "(" + c.to_string() + ")",
                             Rational(p_3block(n)), count_fast(c)));
  }

  std::vector<Composition> factors;
  std::vector<int> runs;
  for (int n = 1; n <= max_size; ++n) {
    for (const auto& c : enumerate_admissible(n)) {
      auto parts = c.parts();
      for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (parts[i] != 3) continue;
        out.push_back(check_separation(
            Composition(std::vector<int>(parts.begin(), parts.begin() + static_cast<long>(i))),
            Composition(std::vector<int>(parts.begin() + static_cast<long>(i) + 1, parts.end()))));
      }
      const auto f = three_factorization(c);
      if (f.k() >= 1 && !f.factors.back().empty()) out.push_back(check_multinomial(f));
      if (run_length_form(c, factors, runs)) out.push_back(check_general(factors, runs));
    }
  }

  for (int ell = 2; 3 * ell + 4 <= max_size || 3 * ell <= max_size; ++ell) {
    if (3 * ell <= max_size) {
      for (auto& ch : check_corollary(FormulaId::C57_T3ell, {.ell = ell})) out.push_back(ch);
    }
    if (3 * ell + 2 <= max_size) {
      for (auto& ch : check_corollary(FormulaId::C57_3ell2, {.ell = ell})) out.push_back(ch);
    }
    if (3 * ell + 4 <= max_size) {
      for (auto& ch : check_corollary(FormulaId::C57_43ell, {.ell = ell})) out.push_back(ch);
    }
  }
  for (int s = 1; 3 * s + 5 <= max_size; ++s) {
    for (int m = 1; 3 * s + 3 * m + 2 <= max_size; ++m) {
      for (auto& ch : check_corollary(FormulaId::C57_3s23m, {.s = s, .m = m})) out.push_back(ch);
    }
  }
  for (int s = 1; 3 * s + 4 <= max_size; ++s) {
    for (int t = 0; 3 * s + 3 * t + 4 <= max_size; ++t) {
      for (auto& ch : check_corollary(FormulaId::C57_3s23t2, {.s = s, .t = t})) out.push_back(ch);
    }
  }

  for (int n = 6; n <= max_size; ++n) {
    BigCount best = 0;
    for (const auto& c : enumerate_admissible(n)) best = std::max(best, count_fast(c));
    out.push_back(check_theorem2(n, best));
  }
  return out;
}

}  // namespace peaklab
