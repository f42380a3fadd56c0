#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "chevalley/pairs.hpp"
#include "chevalley/root_data.hpp"

namespace chevalley {

/// (r1, r, s, s1) with r1 + s1 = r + s, r1 < r < s < s1 in regular order and
/// (r1, s1) the extraspecial pair of the common sum.
struct Quartet {
  std::size_t r1 = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t s1 = 0;
  friend bool operator==(const Quartet&, const Quartet&) = default;
  friend auto operator<=>(const Quartet&, const Quartet&) = default;
};

struct QuartetClass {
  bool mono = false;
  bool simple = false;
  bool s_minus_r1_is_root = false;
  bool r_minus_r1_is_root = false;
  Rational phi{1};
};

/// Table ordinals start at 1.
inline constexpr std::size_t kFirstQuartetOrdinal = 1;

/// One quartet per non-extraspecial special pair, sorted by (r1, s1, r).
std::vector<Quartet> enumerate_quartets(const RootSystem& system, const SumDictionary& dict);

/// |r1 + s1|^2 / |s1|^2 for a special pair.
Rational phi_of(const RootSystem& system, SpecialPair pair);

QuartetClass classify_quartet(const RootSystem& system, const Quartet& q);

struct QuartetReport {
  Diagram diagram;
  std::size_t total = 0;
  std::size_t mono = 0;
  std::size_t simple = 0;
  std::vector<std::size_t> non_simple_ordinals;
  /// phi over every quartet.
  std::map<Rational, std::size_t> phi_by_quartet;
  /// phi over all extraspecial pairs, and over the ones that head a quartet.
  std::map<Rational, std::size_t> phi_by_extraspecial_pair;
  std::map<Rational, std::size_t> phi_by_pair_with_quartets;
};

QuartetReport quartet_report(const RootSystem& system);

} // namespace chevalley
