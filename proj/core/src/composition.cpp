#include "peaklab/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "peaklab/errors.hpp"

namespace peaklab {
namespace {

int parse_int(std::string_view token, std::string_view context) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw InvalidInput("cannot parse integer '" + std::string(token) + "' in " +
                       std::string(context));
  }
  return value;
}

std::vector<int> parse_list(std::string_view text, std::string_view context) {
  std::vector<int> values;
  if (text.find_first_not_of(' ') == std::string_view::npos) return values;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    values.push_back(parse_int(text.substr(start, comma - start), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) {
    if (part < 1) {
      throw InvalidInput("composition parts must be >= 1, got " +
                         std::to_string(part));
    }
    total_ += part;
  }
}

Composition Composition::parse(std::string_view text) {
  return Composition(parse_list(text, "composition"));
}

Composition Composition::repeat(int part, int count) {
  if (count < 0) throw InvalidInput("negative repeat count");
  return Composition(std::vector<int>(static_cast<std::size_t>(count), part));
}

std::size_t Composition::count(int value) const {
  return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Composition::to_string() const { return join(parts_); }

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(parts));
}

Composition operator+(const Composition& a, const Composition& b) {
  return concat(a, b);
}

Composition reverse_r(const Composition& c) {
  if (c.empty()) throw InvalidInput("reverse_r of the empty composition");
  if (c.num_parts() == 1) return c;
  if (c.front() < 2) {
    throw InvalidInput("reverse_r needs first part >= 2, got " + c.to_string());
  }
  std::vector<int> parts(c.parts().rbegin(), c.parts().rend());
  parts.front() += 1;
  parts.back() -= 1;
  return Composition(std::move(parts));
}

Composition increase_first(const Composition& c) {
  if (c.empty()) throw InvalidInput("increase_first of the empty composition");
  std::vector<int> parts(c.parts().begin(), c.parts().end());
  parts.front() += 1;
  return Composition(std::move(parts));
}

bool is_admissible(const Composition& c) {
  if (c.num_parts() <= 1) return true;
  auto parts = c.parts();
  return std::all_of(parts.begin(), parts.end() - 1, [](int p) { return p >= 2; });
}

PeakSet::PeakSet(std::vector<int> positions, int n)
    : positions_(std::move(positions)), n_(n) {
  if (n_ < 0) throw InvalidInput("peak set ambient length must be >= 0");
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    int p = positions_[i];
    if (p < 2 || p > n_ - 1) {
      throw InvalidInput("peak position " + std::to_string(p) +
                         " outside [2, n-1] for n=" + std::to_string(n_));
    }
    if (i > 0 && p <= positions_[i - 1]) {
      throw InvalidInput("peak positions must be strictly increasing");
    }
    if (i > 0 && p == positions_[i - 1] + 1) {
      throw InvalidInput("adjacent peak positions " + std::to_string(p - 1) +
                         "," + std::to_string(p));
    }
  }
}

PeakSet PeakSet::parse(std::string_view positions, int n) {
  return PeakSet(parse_list(positions, "peak set"), n);
}

bool PeakSet::contains(int position) const {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

std::string PeakSet::to_string() const { return join(positions_); }

Composition peakset_to_composition(const PeakSet& peaks) {
  if (peaks.n() == 0) return {};
  std::vector<int> parts;
  int previous = 0;
  for (int p : peaks.positions()) {
    parts.push_back(p - previous);
    previous = p;
  }
  parts.push_back(peaks.n() - previous);
  return Composition(std::move(parts));
}

PeakSet composition_to_peakset(const Composition& c) {
  if (!is_admissible(c)) {
    throw InvalidInput("composition " + c.to_string() + " is not admissible");
  }
  std::vector<int> positions;
  int running = 0;
  for (std::size_t i = 0; i + 1 < c.num_parts(); ++i) {
    running += c[i];
    positions.push_back(running);
  }
  return PeakSet(std::move(positions), c.total());
}

Composition Factorization3::reassemble() const {
  std::vector<int> parts;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) parts.push_back(3);
    parts.insert(parts.end(), factors[i].parts().begin(), factors[i].parts().end());
  }
  return Composition(std::move(parts));
}

Factorization3 three_factorization(const Composition& c) {
  Factorization3 result;
  std::vector<int> current;
  for (int part : c.parts()) {
    if (part == 3) {
      result.factors.emplace_back(std::move(current));
      current.clear();
    } else {
      current.push_back(part);
    }
  }
  result.factors.emplace_back(std::move(current));
  return result;
}

void for_each_admissible(int n, const std::function<bool(const Composition&)>& visit) {
  if (n < 1) throw InvalidInput("enumerate_admissible needs n >= 1");
  std::vector<int> prefix;
  // Parts before the last must be >= 2; the last part is whatever remains.
  // Trying the next part in increasing order yields lexicographic order.
  std::function<bool(int)> extend = [&](int remaining) -> bool {
    for (int part = 1; part <= remaining; ++part) {
      if (part == remaining) {
        prefix.push_back(part);
        bool go_on = visit(Composition(prefix));
        prefix.pop_back();
        if (!go_on) return false;
      } else if (part >= 2) {
        prefix.push_back(part);
        bool go_on = extend(remaining - part);
        prefix.pop_back();
        if (!go_on) return false;
      }
    }
    return true;
  };
  extend(n);
}

std::vector<Composition> enumerate_admissible(int n) {
  std::vector<Composition> out;
  for_each_admissible(n, [&](const Composition& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::vector<Composition> predicted_maximal(int n) {
  if (n < 6) {
    throw InvalidInput("predicted_maximal is stated for n >= 6, got " +
                       std::to_string(n));
  }
  const int ell = n / 3;
  const Composition two{2};
  std::vector<Composition> out;
  switch (n % 3) {
    case 0:
      out.push_back(Composition::repeat(3, ell));
      out.push_back(Composition{4} + Composition::repeat(3, ell - 2) + two);
      break;
    case 1:
      for (int s = 1; s <= ell - 1; ++s) {
        out.push_back(Composition::repeat(3, s) + two +
                      Composition::repeat(3, ell - 1 - s) + two);
      }
      break;
    default:
      out.push_back(Composition::repeat(3, ell) + two);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace peaklab

std::size_t std::hash<peaklab::Composition>::operator()(
    const peaklab::Composition& c) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int part : c.parts()) {
    h ^= static_cast<std::size_t>(part);
    h *= 0x100000001b3ull;
  }
  return h;
}
