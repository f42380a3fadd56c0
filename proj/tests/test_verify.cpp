#include "doctest.h"

#include <cstdlib>
#include <stdexcept>

#include "chevalley/verify.hpp"

using namespace chevalley;

namespace {

struct Built {
  explicit Built(Diagram d) : sys(build_root_system(d)), m(compute_all_positive(sys)) {}
  RootSystem sys;
  ConstantMatrix m;
};

std::size_t failures(const VerificationReport& r, const std::string& name) {
  const auto* c = r.find(name);
  REQUIRE(c != nullptr);
  return c->failures.size();
}

int max_magnitude(const ConstantMatrix& m) {
  int best = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) best = std::max(best, std::abs(m.at(i, j)));
  }
  return best;
}

} // namespace

TEST_CASE("computed matrices pass every check") {
  for (Diagram d : {Diagram{DiagramKind::A, 1}, Diagram{DiagramKind::A, 3}, Diagram{DiagramKind::B, 3},
                    Diagram{DiagramKind::C, 4}, Diagram{DiagramKind::D, 4}, Diagram{DiagramKind::F, 4},
                    Diagram{DiagramKind::G, 2}}) {
    CAPTURE(d.name());
    const Built b(d);
    const auto report = verify_matrix(b.sys, b.m);
    CHECK(report.passed());
    for (const char* name : {"antisymmetry", "chevalley_magnitude", "tits_triples", "carter_quadruples",
                             "bracket_antisymmetry", "jacobi"}) {
      CAPTURE(name);
      REQUIRE(report.find(name) != nullptr);
      CHECK(report.find(name)->passed());
    }
  }
}

TEST_CASE("A1 passes vacuously") {
  const Built b({DiagramKind::A, 1});
  const auto r = check_antisymmetry(b.m);
  CHECK(r.passed());
  CHECK(check_carter_quadruples(b.sys, b.m).checks.at(0).population == 0);
}

TEST_CASE("magnitudes") {
  CHECK(max_magnitude(Built({DiagramKind::A, 3}).m) == 1);
  CHECK(max_magnitude(Built({DiagramKind::B, 4}).m) == 2);
  CHECK(max_magnitude(Built({DiagramKind::C, 4}).m) == 2);
  CHECK(max_magnitude(Built({DiagramKind::F, 4}).m) == 2);
  CHECK(max_magnitude(Built({DiagramKind::G, 2}).m) == 3);
}

TEST_CASE("a single flipped sign breaks antisymmetry twice") {
  Built b({DiagramKind::B, 3});
  b.m.set_cell(0, 1, -b.m.at(0, 1));
  const auto r = check_antisymmetry(b.m);
  CHECK(failures(r, "antisymmetry") == 2);
  const auto full = verify_matrix(b.sys, b.m);
  CHECK_FALSE(full.passed());
  CHECK(full.find("jacobi") == nullptr);
}

TEST_CASE("a wrong magnitude in one cell yields a Tits witness") {
  Built b({DiagramKind::F, 4});
  const int v = b.m.at(0, 1);
  b.m.set_cell(0, 1, 2 * v);
  const auto tits = check_tits_triples(b.sys, b.m);
  REQUIRE(failures(tits, "tits_triples") > 0);
  const auto& w = tits.checks.at(0).failures.front();
  CHECK(w.roots.size() == 3);
  CHECK(failures(check_chevalley_magnitude(b.sys, b.m), "chevalley_magnitude") > 0);
}

TEST_CASE("a consistent wrong magnitude breaks the magnitude law and Jacobi") {
  Built b({DiagramKind::F, 4});
  b.m.fill(0, 1, 2 * b.m.at(0, 1));
  const auto r = verify_matrix(b.sys, b.m);
  CHECK_FALSE(r.passed());
  CHECK(failures(r, "antisymmetry") == 0);
  CHECK(failures(r, "chevalley_magnitude") > 0);
  CHECK(failures(r, "jacobi") > 0);
}

TEST_CASE("a consistent sign flip on one pair is caught by the identities") {
  Built b({DiagramKind::B, 3});
  b.m.fill(0, 1, -b.m.at(0, 1));
  const auto r = verify_matrix(b.sys, b.m);
  CHECK(failures(r, "antisymmetry") == 0);
  CHECK(failures(r, "chevalley_magnitude") == 0);
  CHECK(failures(r, "jacobi") > 0);
  CHECK_FALSE(r.passed());
}

TEST_CASE("formula cross-check") {
  for (Diagram d : {Diagram{DiagramKind::A, 4}, Diagram{DiagramKind::B, 6}, Diagram{DiagramKind::C, 6},
                    Diagram{DiagramKind::D, 5}, Diagram{DiagramKind::E, 6}}) {
    CAPTURE(d.name());
    const auto r = cross_check_formulas(build_root_system(d));
    CHECK(r.passed());
    CHECK(failures(r, "formula_agreement") == 0);
    CHECK(failures(r, "matrix_agreement") == 0);
  }
  CHECK_THROWS_AS(cross_check_formulas(build_root_system({DiagramKind::F, 4})), std::invalid_argument);
  CHECK_THROWS_AS(cross_check_formulas(build_root_system({DiagramKind::G, 2})), std::invalid_argument);
}

TEST_CASE("coroots") {
  const auto b2 = build_root_system({DiagramKind::B, 2});
  // [1,1] is short: its coroot is 2[1,0] + [0,1] in simple coroots.
  const auto h = coroot_coordinates(b2, Root{1, 1});
  CHECK(h == std::vector<Rational>{Rational(2), Rational(1)});
  const auto h2 = coroot_coordinates(b2, Root{1, 2});
  CHECK(h2 == std::vector<Rational>{Rational(1), Rational(1)});
  for (Diagram d : {Diagram{DiagramKind::F, 4}, Diagram{DiagramKind::G, 2}, Diagram{DiagramKind::C, 5}}) {
    const auto sys = build_root_system(d);
    for (const auto& r : sys.positive_roots()) {
      for (const auto& c : coroot_coordinates(sys, r)) CHECK(is_integral(c));
    }
  }
}

TEST_CASE("report helpers") {
  VerificationReport a;
  a.checks.push_back({"x", 3, {}});
  VerificationReport b;
  b.checks.push_back({"y", 2, {Witness{{}, "bad"}}});
  CHECK(a.passed());
  a.append(b);
  CHECK_FALSE(a.passed());
  CHECK(a.find("y")->failures.size() == 1);
  CHECK(a.find("z") == nullptr);
}
