#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chevalley/pairs.hpp"
#include "chevalley/quartets.hpp"
#include "chevalley/root_data.hpp"

namespace chevalley {

/// +roots[index] or -roots[index].
struct SignedRoot {
  std::size_t index = 0;
  bool negative = false;

  SignedRoot opposite() const { return {index, !negative}; }
  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

Root coords_of(const RootSystem& system, SignedRoot a);
/// Inverse of coords_of; nullopt when coords is not a root.
std::optional<SignedRoot> signed_root_of(const RootSystem& system, const Root& coords);

/// Raised when a structure constant is requested for an opposite pair:
/// [e_a, e_-a] = h_a is not a multiple of a root vector.
class CartanBracket : public std::domain_error {
public:
  explicit CartanBracket(SignedRoot alpha);
  SignedRoot alpha() const { return alpha_; }

private:
  SignedRoot alpha_;
};

/// Square table of N(roots[i], roots[j]) over positive roots. Cells start
/// unknown; unknown is a separate state from 0.
class ConstantMatrix {
public:
  ConstantMatrix() = default;
  explicit ConstantMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const { return n_; }
  bool known(std::size_t i, std::size_t j) const { return cells_[i * n_ + j].has_value(); }
  std::optional<int> get(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  /// Throws std::logic_error if the cell is unknown.
  int at(std::size_t i, std::size_t j) const;

  /// Writes N at (i, j) and -N at (j, i).
  void fill(std::size_t i, std::size_t j, int value);
  /// Writes a single cell only (import and fault injection).
  void set_cell(std::size_t i, std::size_t j, int value) { cells_[i * n_ + j] = value; }

  bool complete() const;
  friend bool operator==(const ConstantMatrix&, const ConstantMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::optional<int>> cells_;
};

enum class FormulaMode {
  specialized,  // simply-laced and B: no length factors; C: extra phi factor; F, G: general
  general,      // full length-weighted quartet formula for every diagram
};

/// The four constants feeding the quartet formula (0 where the difference is not a root).
struct QuartetInputs {
  int s_minus_r1_with_r1 = 0;   // N(s - r1, r1)
  int s1_minus_r_with_r = 0;    // N(s1 - r, r)
  int r1_with_r_minus_r1 = 0;   // N(r1, r - r1)
  int s1_minus_s_with_s = 0;    // N(s1 - s, s)
};

/// Length-weighted formula valid for any quartet.
Rational general_quartet_formula(const RootSystem& system, const Quartet& q, const QuartetInputs& in,
                                 int n_extraspecial);
/// (N1 N2 + N3 N4) / N(r1, s1), times phi = |r1 + s1|^2 / |s1|^2.
Rational simple_quartet_formula(const RootSystem& system, const Quartet& q, const QuartetInputs& in,
                                int n_extraspecial);

/// Reads the inputs of the quartet formula from a complete matrix.
QuartetInputs quartet_inputs(const RootSystem& system, const ConstantMatrix& matrix, const Quartet& q);

/// Recursive, memoized computation of structure constants. Single-threaded.
class ConstantsEngine {
public:
  explicit ConstantsEngine(const RootSystem& system, FormulaMode mode = FormulaMode::specialized);

  const RootSystem& system() const { return system_; }
  const SumDictionary& dictionary() const { return dict_; }
  const ExtraspecialAssignment& assignment() const { return seeds_; }
  const ConstantMatrix& matrix() const { return matrix_; }
  FormulaMode mode() const { return mode_; }
  /// True when N(r, s) for this diagram goes through the length-free formula.
  bool uses_simple_formula() const;

  /// N(roots[r], roots[s]). Throws std::logic_error if the result is not integral.
  int n_positive(std::size_t r, std::size_t s);
  /// N(roots[a], -roots[b_opposite]).
  int n_pos_neg(std::size_t a, std::size_t b_opposite);
  int n_any(SignedRoot a, SignedRoot b);

  /// Fills every cell and returns the finished table.
  const ConstantMatrix& compute_all();

  /// Deepest nesting of quartet-formula evaluations seen so far.
  int max_depth() const { return max_depth_; }

private:
  int evaluate_quartet(std::size_t r, std::size_t s, std::size_t gamma);

  const RootSystem& system_;
  FormulaMode mode_;
  SumDictionary dict_;
  ExtraspecialAssignment seeds_;
  ConstantMatrix matrix_;
  std::vector<std::pair<std::int64_t, std::int64_t>> phi_;  // per gamma, numerator/denominator
  int depth_ = 0;
  int max_depth_ = 0;
};

ConstantMatrix compute_all_positive(const RootSystem& system, FormulaMode mode = FormulaMode::specialized);

// Evaluation on a complete matrix. These are pure and thread-safe.

/// N(roots[a], -roots[b_opposite]) as an exact rational.
Rational n_pos_neg_exact(const RootSystem& system, const ConstantMatrix& matrix, std::size_t a,
                         std::size_t b_opposite);
Rational n_any_exact(const RootSystem& system, const ConstantMatrix& matrix, SignedRoot a, SignedRoot b);
/// As n_any_exact, asserting the value is an integer.
int n_any(const RootSystem& system, const ConstantMatrix& matrix, SignedRoot a, SignedRoot b);

} // namespace chevalley
