#include "chevalley/quartets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace chevalley {

std::vector<Quartet> enumerate_quartets(const RootSystem& system, const SumDictionary& dict) {
  std::vector<Quartet> out;
  for (std::size_t gamma : dict.keys()) {
    const auto pairs = dict.pairs(gamma);
    const SpecialPair head = pairs.front();
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Quartet q{head.i, pairs[k].i, pairs[k].j, head.j};
      if (!(q.r1 < q.r && q.r < q.s && q.s < q.s1) ||
          system.root(q.r1) + system.root(q.s1) != system.root(q.r) + system.root(q.s)) {
        throw std::logic_error("malformed quartet for root " + std::to_string(gamma));
      }
      out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end(), [](const Quartet& a, const Quartet& b) {
    return std::tie(a.r1, a.s1, a.r) < std::tie(b.r1, b.s1, b.r);
  });
  return out;
}

Rational phi_of(const RootSystem& system, SpecialPair pair) {
  const Root sum = system.root(pair.i) + system.root(pair.j);
  return system.squared_length(sum) / system.squared_length(pair.j);
}

QuartetClass classify_quartet(const RootSystem& system, const Quartet& q) {
  QuartetClass c;
  const Root& r1 = system.root(q.r1);
  const auto s_diff = system.index_of_root(system.root(q.s) - r1);
  const auto r_diff = system.index_of_root(system.root(q.r) - r1);
  c.s_minus_r1_is_root = s_diff.has_value();
  c.r_minus_r1_is_root = r_diff.has_value();
  c.mono = !(c.s_minus_r1_is_root && c.r_minus_r1_is_root);
  c.simple = (!s_diff || system.squared_length(*s_diff) == system.squared_length(q.s)) &&
             (!r_diff || system.squared_length(*r_diff) == system.squared_length(q.r));
  c.phi = phi_of(system, {q.r1, q.s1});
  return c;
}

QuartetReport quartet_report(const RootSystem& system) {
  const SumDictionary dict = build_sum_dictionary(system);
  const auto quartets = enumerate_quartets(system, dict);

  QuartetReport report;
  report.diagram = system.diagram();
  report.total = quartets.size();
  std::set<SpecialPair> heads;
  for (std::size_t k = 0; k < quartets.size(); ++k) {
    const auto c = classify_quartet(system, quartets[k]);
    report.mono += c.mono;
    report.simple += c.simple;
    if (!c.simple) report.non_simple_ordinals.push_back(k + kFirstQuartetOrdinal);
    ++report.phi_by_quartet[c.phi];
    heads.insert({quartets[k].r1, quartets[k].s1});
  }
  for (std::size_t gamma : dict.keys()) {
    const SpecialPair head = dict.pairs(gamma).front();
    const Rational phi = phi_of(system, head);
    ++report.phi_by_extraspecial_pair[phi];
    if (heads.count(head)) ++report.phi_by_pair_with_quartets[phi];
  }
  return report;
}

} // namespace chevalley
