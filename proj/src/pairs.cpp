#include "chevalley/pairs.hpp"

#include <stdexcept>
#include <string>

namespace chevalley {

bool SumDictionary::contains(std::size_t gamma) const {
  return gamma < by_sum_.size() && !by_sum_[gamma].empty();
}

std::span<const SpecialPair> SumDictionary::pairs(std::size_t gamma) const {
  if (!contains(gamma)) throw std::out_of_range("no special pairs sum to root " + std::to_string(gamma));
  return by_sum_[gamma];
}

SumDictionary build_sum_dictionary(const RootSystem& system) {
  SumDictionary dict;
  const std::size_t n = system.size();
  dict.by_sum_.resize(n);
  // Ascending (i, j) so the first pair recorded for each sum is extraspecial.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (auto gamma = system.index_of_sum(i, j)) dict.by_sum_[*gamma].push_back({i, j});
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (dict.by_sum_[g].empty()) continue;
    if (system.is_simple(g)) throw std::logic_error("simple root decomposes as a sum");
    if (!system.is_simple(dict.by_sum_[g].front().i)) {
      throw std::logic_error("extraspecial pair of root " + std::to_string(g) + " does not start with a simple root");
    }
    dict.keys_.push_back(g);
  }
  return dict;
}

SpecialPair extraspecial_pair_of(const SumDictionary& dict, std::size_t gamma) {
  if (!dict.contains(gamma)) {
    throw std::invalid_argument("root " + std::to_string(gamma) + " has no extraspecial pair");
  }
  return dict.pairs(gamma).front();
}

int root_string_depth(const RootSystem& system, const Root& alpha, const Root& beta) {
  int p = 0;
  Root probe = beta - alpha;
  while (system.is_root(probe)) {
    ++p;
    probe = probe - alpha;
  }
  return p;
}

int extraspecial_constant(const RootSystem& system, SpecialPair pair) {
  if (!system.index_of_sum(pair.i, pair.j)) {
    throw std::invalid_argument("pair (" + std::to_string(pair.i) + ", " + std::to_string(pair.j) +
                                ") does not sum to a root");
  }
  const Root& r1 = system.root(pair.i);
  const Root& s1 = system.root(pair.j);
  int p = 0;
  for (Root probe = s1 - r1; system.is_root(probe); probe = probe - r1) {
    if (!probe.is_positive()) throw std::logic_error("negative root in extraspecial root string");
    ++p;
  }
  return p + 1;
}

ExtraspecialAssignment::ExtraspecialAssignment(const RootSystem& system, const SumDictionary& dict)
    : by_sum_(system.size()) {
  for (std::size_t gamma : dict.keys()) {
    const SpecialPair pair = dict.pairs(gamma).front();
    by_sum_[gamma] = ExtraspecialEntry{gamma, pair, extraspecial_constant(system, pair)};
  }
}

bool ExtraspecialAssignment::contains(std::size_t gamma) const {
  return gamma < by_sum_.size() && by_sum_[gamma].has_value();
}

const ExtraspecialEntry& ExtraspecialAssignment::at(std::size_t gamma) const {
  if (!contains(gamma)) throw std::out_of_range("no extraspecial entry for root " + std::to_string(gamma));
  return *by_sum_[gamma];
}

std::vector<ExtraspecialEntry> ExtraspecialAssignment::entries() const {
  std::vector<ExtraspecialEntry> out;
  for (const auto& e : by_sum_) {
    if (e) out.push_back(*e);
  }
  return out;
}

} // namespace chevalley
