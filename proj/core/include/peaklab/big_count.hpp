#ifndef PEAKLAB_BIG_COUNT_HPP
#define PEAKLAB_BIG_COUNT_HPP

#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace peaklab {

/// Exact nonnegative count. Every cardinality in the library is carried in
/// this type; nothing on a counting path goes through floating point.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational, used only where a closed form carries a fractional
/// prefactor such as 1/5 or 3^(2-l).
using Rational = boost::multiprecision::cpp_rational;

BigCount factorial(int n);
BigCount binomial(int n, int k);
BigCount pow2(int exponent);

/// n! / (b_1! b_2! ... b_k!) with n = sum of the blocks.
BigCount multinomial(std::span<const int> blocks);

/// 3^e for any integer e, exact.
Rational pow3(int exponent);

bool is_integral(const Rational& value);

/// Numerator of an integral rational; throws std::domain_error otherwise.
BigCount to_integer(const Rational& value);

std::string to_decimal(const BigCount& value);

/// "p/q" for non-integers, plain decimal for integers.
std::string to_decimal(const Rational& value);

/// Parses a nonnegative decimal string; throws InvalidInput on anything else.
BigCount parse_count(std::string_view text);

}  // namespace peaklab

#endif  // PEAKLAB_BIG_COUNT_HPP
