#ifndef PEAKLAB_CLOSED_FORMS_HPP
#define PEAKLAB_CLOSED_FORMS_HPP

// Exact evaluations of the explicit peak-count formulas, each paired with a
// cross-check against the dynamic-programming counter. Fractional
// prefactors are carried as exact rationals and integrality is asserted,
// never assumed.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "peaklab/big_count.hpp"
#include "peaklab/composition.hpp"
#include "peaklab/permutation_oracle.hpp"

namespace peaklab {

enum class FormulaId {
  L32a,         // Int_{n,a}(n) = Int_{a,n}(n) = 2^(a-2)
  L32b,         // Int_{a,b}(n) = 0 off the last row/column, or a = 1, or b = 1
  L32_2a,       // Ini_{1,n}(n) = 1, Ini_{1,b}(n) = 0 for b < n
  L32_2b,       // Ini_{a,b}(n) = Int_{a,b}(n) for a != 1
  L33_1a,       // Int_{n,n-1}(3,n-3) = Int_{n-1,n}(3,n-3) = (n-4) 2^(n-4)
  L33_1b,       // Int_{n,a}(3,n-3) = (n-2-a) 2^(a-2) + [a>=3] (a-1) 2^(a-3)
  L33_1c,       // Int_{a,n}(3,n-3) = Int_{a,n-1}(3,n-4) + (a-1) 2^(n-5)
  P_single,     // P(n) = 2^(n-1)
  P_3_nminus3,  // P(3,n-3) = (C(n-1,2) - 1) 2^(n-2)
  SEP51,        // separation across a single part 3
  MULT52,       // multinomial product over the 3-factorization
  GEN56,        // runs of 3s with a (1/3)^(sum l - k) prefactor
  C57_T3ell,    // P(3^l) = P(4,3^(l-2),2) = (1/5) 3^(2-l) (3l)!
  C57_3ell2,    // P(3^l,2) = 3^(-l) (3l+2)!
  C57_3s23m,    // P(3^s,2,3^m) = (2/25) 3^(-s-m) (3s+3m+2)!   (as printed)
  C57_3s23t2,   // P(3^s,2,3^t,2) = (2/5) 3^(-s-t) (3s+3t+4)!
  C57_43ell,    // P(4,3^l) = (1/25) 3^(2-l) (3l+4)!
  THM12,        // maximum of P over compositions of n >= 6
};

std::string_view to_string(FormulaId id);
std::optional<FormulaId> parse_formula_id(std::string_view name);
std::span<const FormulaId> all_formula_ids();

/// Int_{a,b}(n) for the single-part composition (n). Requires n >= 3 and
/// 1 <= a,b <= n.
BigCount int_single(int n, int a, int b);

/// Ini_{a,b}(n) for the single-part composition (n).
BigCount ini_single(int n, int a, int b);

/// Which clause of the (3,n-3) Int formulas covers (a,b), if any.
std::optional<FormulaId> int_3block_clause(int n, int a, int b);

/// Int_{a,b}(3,n-3), n >= 5. Pairs covered by a stated clause are evaluated
/// from it; the recursive clause and every uncovered pair fall back to the
/// oracle, which throws FormulaNotStated once n exceeds the oracle limit.
BigCount int_3block(int n, int a, int b, const OracleLimits& limits = {});

/// The recursive clause read literally, with the smaller Int term taken on
/// (3,n-3) itself. Kept so the cross-check harness can report it.
BigCount int_3block_1c_as_printed(int n, int a, const OracleLimits& limits = {});

BigCount p_single(int n);
BigCount p_3block(int n);

/// C(|a|+|b|+3, |a|+1) P(a+(1)) P((2)+b); equals P(a+(3)+b). Requires b
/// nonempty and a+(3)+b admissible.
BigCount separation(const Composition& a, const Composition& b);

/// Multinomial(|x0|+1, 3+|x1|, ..., 3+|x(k-1)|, |xk|+2) times
/// P(x0+(1)) prod P((2)+xi+(1)) P((2)+xk). Requires k >= 1 and xk nonempty.
BigCount multinomial_count(const Factorization3& f);

/// P(c1 + 3^l1 + c2 + ... + ck + 3^lk + c(k+1)) from the run-length form.
/// `factors` holds c1..c(k+1), `runs` holds l1..lk. Throws InvalidInput on
/// bad shapes and FormulaInconsistency if the quotient is not an integer.
BigCount general_count(std::span<const Composition> factors, std::span<const int> runs);
Rational general_count_exact(std::span<const Composition> factors, std::span<const int> runs);
Composition general_count_subject(std::span<const Composition> factors,
                                  std::span<const int> runs);

struct CorollaryParams {
  int ell = 0;
  int s = 0;
  int t = 0;
  int m = 0;
};

/// Raw value of a closed-form family member (may be non-integral if the
/// formula is wrong).
Rational corollary_formula(FormulaId id, const CorollaryParams& params);

/// Compositions the family member claims to count: the primary shape
/// first, followed by the equal-count companion when one is stated.
std::vector<Composition> corollary_subjects(FormulaId id, const CorollaryParams& params);

/// Integral value of corollary_formula; throws FormulaInconsistency,
/// reporting the formula value and the DP count, when it is not an integer.
BigCount corollary_value(FormulaId id, const CorollaryParams& params);

/// (1/5) 3^(2-l) n!, (2/5) 3^(1-l) n!, 3^(-l) n! for n = 0, 1, 2 mod 3,
/// with l = floor(n/3). Requires n >= 6.
BigCount theorem2_value(int n);

/// One formula evaluation set against an independent reference count.
struct CrossCheck {
  FormulaId id;
  std::string subject;  // composition or index description
  Rational formula_value;
  BigCount reference;   // count_fast, or the oracle for table entries
  bool integral = false;
  bool agrees = false;
};

std::string describe(const CrossCheck& check);

CrossCheck check_separation(const Composition& a, const Composition& b);
CrossCheck check_multinomial(const Factorization3& f);
CrossCheck check_general(std::span<const Composition> factors, std::span<const int> runs);
std::vector<CrossCheck> check_corollary(FormulaId id, const CorollaryParams& params);
CrossCheck check_theorem2(int n, const BigCount& exact_max);

/// Every formula in the registry, at every parameter choice whose
/// compositions have size at most `max_size` (table formulas up to the
/// oracle limit). Disagreements are reported in the results, not thrown.
std::vector<CrossCheck> run_formula_harness(int max_size, const OracleLimits& limits = {});

}  // namespace peaklab

#endif  // PEAKLAB_CLOSED_FORMS_HPP
