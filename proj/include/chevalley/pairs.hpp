#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chevalley/root_data.hpp"

namespace chevalley {

/// Indices into the regular ordering with i < j and roots[i] + roots[j] a root.
struct SpecialPair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const SpecialPair&, const SpecialPair&) = default;
  friend auto operator<=>(const SpecialPair&, const SpecialPair&) = default;
};

/// For every non-simple positive root gamma, the ascending list of special
/// pairs summing to it. The head of each list is the extraspecial pair.
class SumDictionary {
public:
  bool contains(std::size_t gamma) const;
  /// Throws std::out_of_range when gamma is not a key.
  std::span<const SpecialPair> pairs(std::size_t gamma) const;
  /// Keys in ascending index order.
  const std::vector<std::size_t>& keys() const { return keys_; }
  std::size_t size() const { return keys_.size(); }

private:
  friend SumDictionary build_sum_dictionary(const RootSystem& system);

  std::vector<std::vector<SpecialPair>> by_sum_;
  std::vector<std::size_t> keys_;
};

SumDictionary build_sum_dictionary(const RootSystem& system);

/// Head of the list for gamma. Throws std::invalid_argument if gamma has no
/// decomposition (simple root or out of range).
SpecialPair extraspecial_pair_of(const SumDictionary& dict, std::size_t gamma);

/// Largest k >= 0 with beta - k * alpha a root (of either sign).
int root_string_depth(const RootSystem& system, const Root& alpha, const Root& beta);

/// Positive seed p + 1 for an extraspecial pair (r1, s1), where p is the depth
/// of the s1 - k r1 string. Throws std::invalid_argument if the sum is not a root.
int extraspecial_constant(const RootSystem& system, SpecialPair pair);

struct ExtraspecialEntry {
  std::size_t gamma = 0;
  SpecialPair pair;
  int value = 0;
};

/// Seeds for every key of the dictionary, indexed by gamma.
class ExtraspecialAssignment {
public:
  ExtraspecialAssignment(const RootSystem& system, const SumDictionary& dict);

  const ExtraspecialEntry& at(std::size_t gamma) const;
  bool contains(std::size_t gamma) const;
  /// Entries in ascending gamma order.
  std::vector<ExtraspecialEntry> entries() const;

private:
  std::vector<std::optional<ExtraspecialEntry>> by_sum_;
};

} // namespace chevalley
