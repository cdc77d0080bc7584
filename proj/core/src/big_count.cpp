#include "peaklab/big_count.hpp"

#include <numeric>
#include <stdexcept>

#include "peaklab/errors.hpp"

namespace peaklab {

BigCount factorial(int n) {
  if (n < 0) throw InvalidInput("factorial of negative number");
  BigCount result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigCount binomial(int n, int k) {
  if (n < 0) throw InvalidInput("binomial with negative top");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigCount pow2(int exponent) {
  if (exponent < 0) throw InvalidInput("negative power of two");
  BigCount result = 1;
  result <<= exponent;
  return result;
}

BigCount multinomial(std::span<const int> blocks) {
  int total = 0;
  BigCount result = 1;
  for (int block : blocks) {
    if (block < 0) throw InvalidInput("negative multinomial block");
    total += block;
    result *= binomial(total, block);
  }
  return result;
}

Rational pow3(int exponent) {
  BigCount magnitude = 1;
  for (int i = 0; i < std::abs(exponent); ++i) magnitude *= 3;
  if (exponent >= 0) return Rational(magnitude);
  return Rational(BigCount(1), magnitude);
}

bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

BigCount to_integer(const Rational& value) {
  if (!is_integral(value)) {
    throw std::domain_error("rational " + to_decimal(value) +
                            " is not an integer");
  }
  return boost::multiprecision::numerator(value);
}

std::string to_decimal(const BigCount& value) { return value.str(); }

std::string to_decimal(const Rational& value) {
  if (is_integral(value)) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

BigCount parse_count(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty count");
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw InvalidInput("count is not a nonnegative decimal: '" +
                         std::string(text) + "'");
    }
  }
  return BigCount(std::string(text));
}

}  // namespace peaklab
