#ifndef PEAKLAB_TESTS_HELPERS_HPP
#define PEAKLAB_TESTS_HELPERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "peaklab/big_count.hpp"
#include "peaklab/composition.hpp"

namespace testing {

inline std::vector<int> parts_of(const peaklab::Composition& c) {
  return {c.parts().begin(), c.parts().end()};
}

inline std::vector<std::string> decimals(std::span<const peaklab::BigCount> values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(peaklab::to_decimal(v));
  return out;
}

inline std::vector<std::string> decimals(const std::vector<std::uint64_t>& values) {
  std::vector<std::string> out;
  for (auto v : values) out.push_back(std::to_string(v));
  return out;
}

inline std::vector<std::string> names(const std::vector<peaklab::Composition>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.to_string());
  return out;
}

}  // namespace testing

#endif  // PEAKLAB_TESTS_HELPERS_HPP
