#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chevalley/constants.hpp"
#include "chevalley/root_data.hpp"

namespace chevalley {

/// A failing instance: the roots or basis elements involved, plus a short note.
struct Witness {
  std::vector<SignedRoot> roots;
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::size_t population = 0;
  std::vector<Witness> failures;

  bool passed() const { return failures.empty(); }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  void append(VerificationReport other);
  const CheckResult* find(const std::string& name) const;
};

/// N(i, j) == -N(j, i) over positive indices; one witness per failing ordered pair.
VerificationReport check_antisymmetry(const ConstantMatrix& matrix);

/// |N(a, b)| == p + 1 for every signed pair with a + b a root.
VerificationReport check_chevalley_magnitude(const RootSystem& system, const ConstantMatrix& matrix);

/// N(a, b)/|c|^2 == N(b, c)/|a|^2 == N(c, a)/|b|^2 whenever a + b + c == 0.
VerificationReport check_tits_triples(const RootSystem& system, const ConstantMatrix& matrix);

/// Carter's four-root identity, one representative per unordered quadruple.
VerificationReport check_carter_quadruples(const RootSystem& system, const ConstantMatrix& matrix);

/// Jacobi identity on the full Chevalley basis {h_i} + {e_a}.
VerificationReport check_jacobi(const RootSystem& system, const ConstantMatrix& matrix);

/// Recomputes each quartet through both formulas and compares them with each
/// other, and the specialized matrix with a fully general one. Only A-E.
VerificationReport cross_check_formulas(const RootSystem& system);

/// The five matrix checks above, run concurrently.
VerificationReport verify_matrix(const RootSystem& system, const ConstantMatrix& matrix);

/// Coefficients of h_a = 2a/(a,a) over the simple coroots h_i.
std::vector<Rational> coroot_coordinates(const RootSystem& system, const Root& alpha);

} // namespace chevalley
