#include "peaklab/bijection_lab.hpp"

#include <algorithm>

#include "peaklab/errors.hpp"

namespace peaklab {
namespace {

std::vector<BigCount> flatten(const CountMatrix& m) {
  std::vector<BigCount> out;
  out.reserve(static_cast<std::size_t>(m.n() * m.n()));
  for (int a = 1; a <= m.n(); ++a) {
    for (int b = 1; b <= m.n(); ++b) out.push_back(m.at(a, b));
  }
  return out;
}

bool has_int_shape(std::span<const int> w) {
  return w.size() >= 2 && w[0] > w[1] && w[w.size() - 2] < w[w.size() - 1];
}

// Lexicographically first member of P(c) ending in an ascent to `last`.
std::optional<std::vector<int>> first_ini_member(const Composition& c, int last,
                                                 const OracleLimits& limits) {
  std::optional<std::vector<int>> found;
  for_each_in_class(
      c,
      [&](std::span<const int> w) {
        if (w.size() >= 2 && w.back() == last && w[w.size() - 2] < w.back()) {
          found.emplace(w.begin(), w.end());
          return false;
        }
        return true;
      },
      limits);
  return found;
}

// Members of Int_{x,y}(c), grouped by (x,y), each group in lexicographic order.
std::map<std::pair<int, int>, std::vector<std::vector<int>>> int_classes(
    const Composition& c, const OracleLimits& limits) {
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> out;
  for_each_in_class(
      c,
      [&](std::span<const int> w) {
        if (has_int_shape(w)) out[{w.front(), w.back()}].emplace_back(w.begin(), w.end());
        return true;
      },
      limits);
  return out;
}

}  // namespace

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::StrictlyDominated:
      return "strictly-dominated";
    case Relation::Equal:
      return "equal";
    case Relation::Incomparable:
      return "incomparable";
    case Relation::Dominates:
      return "dominates";
  }
  return "?";
}

DominanceVerdict compare_componentwise(std::span<const BigCount> x, std::span<const BigCount> y) {
  if (x.size() != y.size()) throw InvalidInput("componentwise comparison of unequal lengths");
  std::optional<std::size_t> first_less;
  std::optional<std::size_t> first_greater;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i] && !first_less) first_less = i;
    if (x[i] > y[i] && !first_greater) first_greater = i;
  }
  if (first_less && first_greater) return {Relation::Incomparable, first_greater, std::nullopt};
  if (first_less) return {Relation::StrictlyDominated, first_less, std::nullopt};
  if (first_greater) return {Relation::Dominates, first_greater, std::nullopt};
  return {Relation::Equal, std::nullopt, std::nullopt};
}

DominanceVerdict dominates_T(const Composition& c, const Composition& cp,
                             const OracleLimits& limits) {
  if (c.total() != cp.total()) throw InvalidInput("dominates_T needs equal sizes");
  const auto x = t_vector(c, limits);
  const auto y = t_vector(cp, limits);
  return compare_componentwise(x.values(), y.values());
}

DominanceVerdict dominates_Int(const Composition& c, const Composition& cp,
                               const OracleLimits& limits) {
  if (c.total() != cp.total()) throw InvalidInput("dominates_Int needs equal sizes");
  const auto x = int_matrix(increase_first(c), limits);
  const auto y = int_matrix(increase_first(cp), limits);
  auto verdict = compare_componentwise(flatten(x), flatten(y));
  if (verdict.witness) {
    const int n = x.n();
    const int index = static_cast<int>(*verdict.witness);
    verdict.cell = std::pair{index / n + 1, index % n + 1};
  }
  return verdict;
}

Permutation embed_middle(const Composition& c1, const Composition& c2, const Composition& c3,
                         const Permutation& tau, const OracleLimits& limits) {
  if (c1.empty() || c2.empty() || c3.empty()) {
    throw InvalidInput("embed_middle needs three nonempty compositions");
  }
  const Composition whole = c1 + c2 + c3;
  if (!is_admissible(whole)) {
    throw InvalidInput("embed_middle: " + whole.to_string() + " is not admissible");
  }
  const Composition window_shape = increase_first(c2);
  const int n1 = c1.total();
  const int n2 = c2.total();
  const int n3 = c3.total();
  if (static_cast<int>(tau.size()) != n2 + 1 || !tau.is_standard() ||
      !has_int_shape(tau.word()) || peak_composition(tau.word()) != window_shape) {
    throw InvalidInput("embed_middle: tau must lie in Int_{u,v}(" + window_shape.to_string() +
                       ")");
  }

  const auto gamma = first_ini_member(c1, n1, limits);
  const auto beta = first_ini_member(reverse_r(increase_first(c3)), n3 + 1, limits);
  if (!gamma || !beta) {
    throw Error("embed_middle: an outer Ini class is empty for " + whole.to_string());
  }

  std::vector<int> sigma(static_cast<std::size_t>(n1 + n2 + n3));
  for (int i = 0; i < n1 - 1; ++i) sigma[static_cast<std::size_t>(i)] = (*gamma)[static_cast<std::size_t>(i)];
  for (int j = 0; j <= n2; ++j) {
    sigma[static_cast<std::size_t>(n1 - 1 + j)] = tau[static_cast<std::size_t>(j)] + n1 + n3 - 1;
  }
  // The tail is beta_1..beta_(n3) read from the right end inwards.
  const int total = n1 + n2 + n3;
  for (int j = 0; j < n3; ++j) {
    sigma[static_cast<std::size_t>(total - 1 - j)] = (*beta)[static_cast<std::size_t>(j)] + n1 - 1;
  }
  return Permutation(std::move(sigma));
}

GammaInjection::GammaInjection(Composition a, Composition c, Composition cp, Composition b,
                               const OracleLimits& limits)
    : source_(a + c + b),
      target_(a + cp + b),
      window_start_(a.total() - 1),
      window_length_(c.total() + 1) {
  if (a.empty() || b.empty() || c.empty()) {
    throw InvalidInput("Gamma needs nonempty a, c and b");
  }
  if (c.total() != cp.total()) throw InvalidInput("Gamma needs |c| = |c'|");
  if (!is_admissible(source_)) {
    throw InvalidInput("Gamma: " + source_.to_string() + " is not admissible");
  }

  const auto from = int_classes(increase_first(c), limits);
  const auto to = int_classes(increase_first(cp), limits);
  for (const auto& [key, members] : from) {
    const auto it = to.find(key);
    const std::size_t available = it == to.end() ? 0 : it->second.size();
    if (members.size() > available) throw DominanceViolation(key.first, key.second);
    for (std::size_t i = 0; i < members.size(); ++i) phi_.emplace(members[i], it->second[i]);
  }
  for (const auto& [key, members] : to) {
    const auto it = from.find(key);
    if (it == from.end() || it->second.size() < members.size()) strict_ = true;
  }
}

Permutation GammaInjection::operator()(const Permutation& sigma) const {
  if (static_cast<int>(sigma.size()) != source_.total() || !sigma.is_standard() ||
      peak_composition(sigma.word()) != source_) {
    throw InvalidInput("Gamma: permutation " + sigma.to_string() + " is not in P(" +
                       source_.to_string() + ")");
  }
  const auto word = sigma.word();
  const auto window = word.subspan(static_cast<std::size_t>(window_start_),
                                   static_cast<std::size_t>(window_length_));
  const auto tau = pattern_of(window);
  const auto it = phi_.find(std::vector<int>(tau.word().begin(), tau.word().end()));
  if (it == phi_.end()) throw Error("Gamma: window pattern outside the Int classes");

  std::vector<int> values(window.begin(), window.end());
  std::sort(values.begin(), values.end());
  std::vector<int> out(word.begin(), word.end());
  for (std::size_t j = 0; j < it->second.size(); ++j) {
    out[static_cast<std::size_t>(window_start_) + j] =
        values[static_cast<std::size_t>(it->second[j] - 1)];
  }
  return Permutation(std::move(out));
}

Permutation gamma_injection(const Composition& a, const Composition& c, const Composition& cp,
                            const Composition& b, const Permutation& sigma,
                            const OracleLimits& limits) {
  return GammaInjection(a, c, cp, b, limits)(sigma);
}

}  // namespace peaklab
