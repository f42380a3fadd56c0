#include "doctest.h"

#include <set>
#include <stdexcept>
#include <vector>

#include "chevalley/root_data.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace chevalley;

namespace {

std::vector<Diagram> every_diagram(int max_rank) {
  std::vector<Diagram> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({DiagramKind::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({DiagramKind::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({DiagramKind::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({DiagramKind::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({DiagramKind::E, n});
  out.push_back({DiagramKind::F, 4});
  out.push_back({DiagramKind::G, 2});
  return out;
}

void check_golden(const RootSystem& sys, const std::vector<golden::GoldenRoot>& table) {
  REQUIRE(sys.size() == table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    CAPTURE(i);
    CHECK(sys.root(i) == Root(table[i].coords));
    CHECK(sys.squared_length(i) == Rational(table[i].squared_length));
  }
}

// Exact determinant by fraction-valued Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].numerator() == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

} // namespace

TEST_CASE("A1 has a single root") {
  const auto sys = build_root_system({DiagramKind::A, 1});
  REQUIRE(sys.size() == 1);
  CHECK(sys.root(0) == Root{1});
  CHECK(sys.squared_length(0) == Rational(2));
}

TEST_CASE("golden tables for B6, C6 and F4") {
  check_golden(build_root_system({DiagramKind::B, 6}), golden::kB6);
  check_golden(build_root_system({DiagramKind::C, 6}), golden::kC6);
  check_golden(build_root_system({DiagramKind::F, 4}), golden::kF4);
}

TEST_CASE("B6 index 15 is the long root [0,0,0,0,1,2]") {
  const auto sys = build_root_system({DiagramKind::B, 6});
  CHECK(sys.root(15) == Root{0, 0, 0, 0, 1, 2});
  CHECK(sys.squared_length(15) == Rational(2));
}

TEST_CASE("inner products") {
  const auto f4 = build_root_system({DiagramKind::F, 4});
  CHECK(f4.inner_product(f4.root(1), f4.root(2)) == Rational(-1));
  CHECK(f4.inner_product(f4.root(2), f4.root(3)) == Rational(-1, 2));
  const Root highest{2, 3, 4, 2};
  CHECK(f4.inner_product(highest, f4.root(0)) == Rational(1));

  for (const auto& d : every_diagram(6)) {
    CAPTURE(d.name());
    const auto sys = build_root_system(d);
    Rational longest(0);
    for (std::size_t i = 0; i < sys.size(); ++i) longest = std::max(longest, sys.squared_length(i));
    CHECK(longest == Rational(2));
  }
}

TEST_CASE("G2 lengths") {
  const auto g2 = build_root_system({DiagramKind::G, 2});
  CHECK(g2.squared_length(0) == Rational(2, 3));
  CHECK(g2.squared_length(1) == Rational(2));
  CHECK(g2.root(5) == Root{3, 2});
}

TEST_CASE("root lookup agrees with a linear scan") {
  for (const auto& d : every_diagram(5)) {
    CAPTURE(d.name());
    const auto sys = build_root_system(d);
    const auto pos = oracle::positive(sys);
    const auto all = oracle::all_roots(sys);
    // Probe every small coefficient vector.
    const int n = sys.rank();
    std::vector<int> v(static_cast<std::size_t>(n), -2);
    while (true) {
      const long expected = oracle::position(pos, v);
      const auto got = sys.index_of_root(Root(v));
      if (expected < 0) {
        CHECK_FALSE(got.has_value());
      } else {
        REQUIRE(got.has_value());
        CHECK(*got == static_cast<std::size_t>(expected));
      }
      CHECK(sys.is_root(Root(v)) == oracle::member(all, v));
      std::size_t k = 0;
      while (k < v.size() && v[k] == 3) v[k++] = -2;
      if (k == v.size()) break;
      ++v[k];
    }
  }
}

TEST_CASE("lookup examples") {
  const auto b6 = build_root_system({DiagramKind::B, 6});
  CHECK(b6.index_of_root(Root{0, 0, 0, 1, 1, 1}) == std::optional<std::size_t>(14));
  CHECK_FALSE(b6.index_of_root(Root{0, 0, 0, 0, 0, 2}).has_value());
  CHECK_FALSE(b6.index_of_root(Root{0, 0, 0, 1}).has_value());
  const auto f4 = build_root_system({DiagramKind::F, 4});
  CHECK(f4.index_of_root(Root{1, 2, 3, 2}) == std::optional<std::size_t>(20));
  CHECK_FALSE(f4.index_of_root(Root{1, -1, 0, 0}).has_value());
  CHECK(f4.is_root(Root{-1, -2, -3, -2}));

  const auto b2 = build_root_system({DiagramKind::B, 2});
  CHECK(b2.index_of_sum(0, 1) == std::optional<std::size_t>(2));
  CHECK(b2.index_of_sum(1, 2) == std::optional<std::size_t>(3));
  CHECK_FALSE(b2.index_of_sum(0, 2).has_value());
  CHECK(b2.index_of_difference(3, 1) == std::optional<std::size_t>(2));
  for (std::size_t i = 0; i < b2.size(); ++i) CHECK_FALSE(b2.index_of_sum(i, i).has_value());
}

TEST_CASE("positive root counts match the classification") {
  for (const auto& d : every_diagram(8)) {
    CAPTURE(d.name());
    const auto sys = build_root_system(d);
    CHECK(sys.size() == expected_positive_root_count(d));
    std::set<Root> distinct(sys.positive_roots().begin(), sys.positive_roots().end());
    CHECK(distinct.size() == sys.size());
  }
}

TEST_CASE("regular ordering") {
  for (const auto& d : every_diagram(6)) {
    CAPTURE(d.name());
    const auto sys = build_root_system(d);
    for (int i = 0; i < sys.rank(); ++i) {
      std::vector<int> e(static_cast<std::size_t>(sys.rank()), 0);
      e[static_cast<std::size_t>(i)] = 1;
      CHECK(sys.root(static_cast<std::size_t>(i)) == Root(e));
    }
    for (std::size_t i = 0; i + 1 < sys.size(); ++i) {
      CHECK(regular_precedes(sys.root(i), sys.root(i + 1)));
      CHECK(sys.root(i).is_positive());
    }
    // Every pair whose sum is a root sums to a later index.
    for (std::size_t i = 0; i < sys.size(); ++i) {
      for (std::size_t j = i + 1; j < sys.size(); ++j) {
        if (auto k = sys.index_of_sum(i, j)) CHECK(*k > j);
      }
    }
  }
}

TEST_CASE("explicit B and C families") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const auto b = build_root_system({DiagramKind::B, n});
    const auto bf = oracle::b_family(n);
    REQUIRE(bf.size() == b.size());
    for (const auto& [v, len] : bf) {
      const auto idx = b.index_of_root(Root(v));
      REQUIRE(idx.has_value());
      CHECK(b.squared_length(*idx) == Rational(len));
    }
    const auto c = build_root_system({DiagramKind::C, n});
    const auto cf = oracle::c_family(n);
    REQUIRE(cf.size() == c.size());
    for (const auto& [v, len] : cf) {
      const auto idx = c.index_of_root(Root(v));
      REQUIRE(idx.has_value());
      CHECK(c.squared_length(*idx) == Rational(len));
    }
    std::size_t short_b = 0, long_c = 0;
    for (std::size_t i = 0; i < b.size(); ++i) short_b += b.squared_length(i) == Rational(1);
    for (std::size_t i = 0; i < c.size(); ++i) long_c += c.squared_length(i) == Rational(2);
    CHECK(short_b == static_cast<std::size_t>(n));
    CHECK(long_c == static_cast<std::size_t>(n));
  }
}

TEST_CASE("root strings are short and sums of equal-length roots are constrained") {
  for (const auto& d : every_diagram(5)) {
    CAPTURE(d.name());
    const auto sys = build_root_system(d);
    const auto all = oracle::all_roots(sys);
    const int cap = d.kind == DiagramKind::G ? 3 : 2;
    for (std::size_t i = 0; i < sys.size(); ++i) {
      for (std::size_t j = 0; j < sys.size(); ++j) {
        if (i == j) continue;
        const auto& a = all[i];
        const auto& b = all[j];
        int len = 1;
        while (oracle::member(all, oracle::add(b, a, len))) ++len;
        int back = 1;
        while (oracle::member(all, oracle::add(b, a, -back))) ++back;
        CHECK(len + back - 1 <= cap + 1);
        // Two long roots, or two short roots in B/C, never sum to a shorter root.
        if (sys.squared_length(i) == sys.squared_length(j)) {
          if (auto k = sys.index_of_sum(i, j)) CHECK(sys.squared_length(*k) >= sys.squared_length(i) / 2);
        }
      }
    }
  }
}

TEST_CASE("F4 sums of a long and a short root are short") {
  const auto f4 = build_root_system({DiagramKind::F, 4});
  for (std::size_t i = 0; i < f4.size(); ++i) {
    for (std::size_t j = 0; j < f4.size(); ++j) {
      if (f4.squared_length(i) == Rational(2) && f4.squared_length(j) == Rational(1)) {
        if (auto k = f4.index_of_sum(i, j)) CHECK(f4.squared_length(*k) == Rational(1));
      }
    }
  }
}

TEST_CASE("forms are symmetric and positive definite") {
  for (const auto& d : every_diagram(8)) {
    CAPTURE(d.name());
    const auto form = BilinearForm::for_diagram(d);
    const std::size_t n = form.rank();
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::vector<Rational>> minor(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          minor[i][j] = form(i, j);
          CHECK(form(i, j) == form(j, i));
        }
      }
      CHECK(determinant(minor) > Rational(0));
    }
  }
}

TEST_CASE("F4 form") {
  const auto f = BilinearForm::for_diagram({DiagramKind::F, 4});
  const Rational h(1, 2);
  const std::vector<std::vector<Rational>> expected = {
      {Rational(2), Rational(-1), Rational(0), Rational(0)},
      {Rational(-1), Rational(2), Rational(-1), Rational(0)},
      {Rational(0), Rational(-1), Rational(1), -h},
      {Rational(0), Rational(0), -h, Rational(1)},
  };
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(f(i, j) == expected[i][j]);
  }
}

TEST_CASE("invalid diagrams are rejected") {
  const std::vector<Diagram> bad = {{DiagramKind::A, 0}, {DiagramKind::B, 1}, {DiagramKind::C, 1},
                                    {DiagramKind::D, 3}, {DiagramKind::E, 5}, {DiagramKind::E, 9},
                                    {DiagramKind::F, 3}, {DiagramKind::G, 3}};
  for (const auto& d : bad) {
    CAPTURE(d.name());
    CHECK_THROWS_AS(build_root_system(d), std::invalid_argument);
  }
  CHECK(parse_diagram("B6") == Diagram{DiagramKind::B, 6});
  CHECK(parse_diagram("e8") == Diagram{DiagramKind::E, 8});
  CHECK_THROWS_AS(parse_diagram("H3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("B"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("B2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("F5"), std::invalid_argument);
}
