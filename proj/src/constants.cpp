#include "chevalley/constants.hpp"

#include <stdexcept>
#include <string>

namespace chevalley {

namespace {

std::string describe(SignedRoot a) {
  return std::string(a.negative ? "-" : "+") + "#" + std::to_string(a.index);
}

int require_integral(const Rational& value, const char* what) {
  if (!is_integral(value)) {
    throw std::logic_error(std::string(what) + ": non-integral structure constant " + to_string(value));
  }
  return static_cast<int>(value.numerator());
}

// N(a, beta) with a positive and beta = -roots[b_opposite], given a lookup for
// positive pairs. Both sign cases reduce to a positive pair via a Tits triple.
template <class PositiveLookup>
Rational pos_neg_impl(const RootSystem& sys, std::size_t a, std::size_t b_opposite, PositiveLookup&& lookup) {
  if (a == b_opposite) throw CartanBracket({a, false});
  const Root sum = sys.root(a) - sys.root(b_opposite);
  if (sum.is_positive()) {
    const auto c = sys.index_of_root(sum);
    if (!c) return Rational(0);
    return Rational(lookup(*c, b_opposite)) * sys.squared_length(*c) / sys.squared_length(a);
  }
  if (sum.is_negative()) {
    const auto c = sys.index_of_root(-sum);
    if (!c) return Rational(0);
    return Rational(lookup(*c, a)) * sys.squared_length(*c) / sys.squared_length(b_opposite);
  }
  return Rational(0);
}

template <class PositiveLookup>
Rational any_impl(const RootSystem& sys, SignedRoot a, SignedRoot b, PositiveLookup&& lookup) {
  if (a == b.opposite()) throw CartanBracket(a);
  if (a == b) return Rational(0);
  if (!a.negative && !b.negative) return Rational(lookup(a.index, b.index));
  if (!a.negative) return pos_neg_impl(sys, a.index, b.index, lookup);
  if (!b.negative) return -pos_neg_impl(sys, b.index, a.index, lookup);
  return Rational(-lookup(a.index, b.index));
}

} // namespace

Root coords_of(const RootSystem& system, SignedRoot a) {
  return a.negative ? -system.root(a.index) : system.root(a.index);
}

std::optional<SignedRoot> signed_root_of(const RootSystem& system, const Root& coords) {
  if (coords.is_negative()) {
    if (auto i = system.index_of_root(-coords)) return SignedRoot{*i, true};
    return std::nullopt;
  }
  if (auto i = system.index_of_root(coords)) return SignedRoot{*i, false};
  return std::nullopt;
}

CartanBracket::CartanBracket(SignedRoot alpha)
    : std::domain_error("opposite roots " + describe(alpha) + " and " + describe(alpha.opposite()) +
                        " bracket into the Cartan subalgebra"),
      alpha_(alpha) {}

// ---------------------------------------------------------------------------
// ConstantMatrix

int ConstantMatrix::at(std::size_t i, std::size_t j) const {
  const auto& cell = cells_.at(i * n_ + j);
  if (!cell) throw std::logic_error("structure constant (" + std::to_string(i) + ", " + std::to_string(j) + ") unknown");
  return *cell;
}

void ConstantMatrix::fill(std::size_t i, std::size_t j, int value) {
  cells_[i * n_ + j] = value;
  cells_[j * n_ + i] = -value;
}

bool ConstantMatrix::complete() const {
  for (const auto& c : cells_) {
    if (!c) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Quartet formulas

Rational general_quartet_formula(const RootSystem& sys, const Quartet& q, const QuartetInputs& in,
                                 int n_extraspecial) {
  const Rational& len_s1 = sys.squared_length(q.s1);
  Rational bracket(0);
  if (in.s_minus_r1_with_r1 != 0 && in.s1_minus_r_with_r != 0) {
    const Rational len_s1_minus_r = sys.squared_length(sys.root(q.s1) - sys.root(q.r));
    bracket += Rational(in.s_minus_r1_with_r1 * in.s1_minus_r_with_r) * len_s1_minus_r /
               (sys.squared_length(q.s) * len_s1);
  }
  if (in.r1_with_r_minus_r1 != 0 && in.s1_minus_s_with_s != 0) {
    const Rational len_r_minus_r1 = sys.squared_length(sys.root(q.r) - sys.root(q.r1));
    bracket += Rational(in.r1_with_r_minus_r1 * in.s1_minus_s_with_s) * len_r_minus_r1 /
               (sys.squared_length(q.r) * len_s1);
  }
  const Rational len_sum = sys.squared_length(sys.root(q.r) + sys.root(q.s));
  return len_sum / n_extraspecial * bracket;
}

Rational simple_quartet_formula(const RootSystem& sys, const Quartet& q, const QuartetInputs& in,
                                int n_extraspecial) {
  const int numerator = in.s_minus_r1_with_r1 * in.s1_minus_r_with_r + in.r1_with_r_minus_r1 * in.s1_minus_s_with_s;
  return phi_of(sys, {q.r1, q.s1}) * Rational(numerator, n_extraspecial);
}

QuartetInputs quartet_inputs(const RootSystem& sys, const ConstantMatrix& m, const Quartet& q) {
  QuartetInputs in;
  if (auto d = sys.index_of_difference(q.s, q.r1)) {
    in.s_minus_r1_with_r1 = m.at(*d, q.r1);
    in.s1_minus_r_with_r = m.at(*d, q.r);  // s1 - r == s - r1
  }
  if (auto d = sys.index_of_difference(q.r, q.r1)) {
    in.r1_with_r_minus_r1 = m.at(q.r1, *d);
    in.s1_minus_s_with_s = m.at(*d, q.s);  // s1 - s == r - r1
  }
  return in;
}

// ---------------------------------------------------------------------------
// ConstantsEngine

ConstantsEngine::ConstantsEngine(const RootSystem& system, FormulaMode mode)
    : system_(system),
      mode_(mode),
      dict_(build_sum_dictionary(system)),
      seeds_(system, dict_),
      matrix_(system.size()),
      phi_(system.size(), {1, 1}) {
  for (std::size_t i = 0; i < system.size(); ++i) matrix_.set_cell(i, i, 0);
  for (const auto& e : seeds_.entries()) {
    matrix_.fill(e.pair.i, e.pair.j, e.value);
    const Rational phi = phi_of(system, e.pair);
    phi_[e.gamma] = {phi.numerator(), phi.denominator()};
  }
}

bool ConstantsEngine::uses_simple_formula() const {
  if (mode_ == FormulaMode::general) return false;
  const auto kind = system_.diagram().kind;
  return kind != DiagramKind::F && kind != DiagramKind::G;
}

int ConstantsEngine::n_positive(std::size_t r, std::size_t s) {
  if (auto known = matrix_.get(r, s)) return *known;
  const auto gamma = system_.index_of_sum(r, s);
  if (!gamma) {
    matrix_.fill(r, s, 0);
    return 0;
  }
  if (r > s) return -n_positive(s, r);
  const int value = evaluate_quartet(r, s, *gamma);
  matrix_.fill(r, s, value);
  return value;
}

int ConstantsEngine::evaluate_quartet(std::size_t r, std::size_t s, std::size_t gamma) {
  if (!seeds_.contains(gamma)) {
    throw std::logic_error("root " + std::to_string(gamma) + " is a sum but has no extraspecial pair");
  }
  const auto& seed = seeds_.at(gamma);
  const Quartet q{seed.pair.i, r, s, seed.pair.j};

  if (++depth_ > max_depth_) max_depth_ = depth_;
  if (depth_ > system_.max_height()) throw std::logic_error("quartet recursion exceeds the highest root height");

  // Every recursive call below has a sum of strictly smaller height than gamma.
  QuartetInputs in;
  if (auto d = system_.index_of_difference(s, q.r1)) {
    in.s_minus_r1_with_r1 = n_positive(*d, q.r1);
    in.s1_minus_r_with_r = n_positive(*d, r);
  }
  if (auto d = system_.index_of_difference(r, q.r1)) {
    in.r1_with_r_minus_r1 = n_positive(q.r1, *d);
    in.s1_minus_s_with_s = n_positive(*d, s);
  }
  --depth_;

  if (!uses_simple_formula()) {
    return require_integral(general_quartet_formula(system_, q, in, seed.value), "general quartet formula");
  }
  // Integer-only path: (N1 N2 + N3 N4) * phi / N(r1, s1).
  const std::int64_t numerator =
      std::int64_t{in.s_minus_r1_with_r1} * in.s1_minus_r_with_r + std::int64_t{in.r1_with_r_minus_r1} * in.s1_minus_s_with_s;
  const auto [phi_num, phi_den] = phi_[gamma];
  const std::int64_t top = numerator * phi_num;
  const std::int64_t bottom = phi_den * seed.value;
  if (top % bottom != 0) {
    throw std::logic_error("simple quartet formula: non-integral structure constant " + std::to_string(top) + "/" +
                           std::to_string(bottom));
  }
  return static_cast<int>(top / bottom);
}

int ConstantsEngine::n_pos_neg(std::size_t a, std::size_t b_opposite) {
  return require_integral(
      pos_neg_impl(system_, a, b_opposite, [this](std::size_t i, std::size_t j) { return n_positive(i, j); }),
      "n_pos_neg");
}

int ConstantsEngine::n_any(SignedRoot a, SignedRoot b) {
  return require_integral(any_impl(system_, a, b, [this](std::size_t i, std::size_t j) { return n_positive(i, j); }),
                          "n_any");
}

const ConstantMatrix& ConstantsEngine::compute_all() {
  for (std::size_t i = 0; i < system_.size(); ++i) {
    for (std::size_t j = i + 1; j < system_.size(); ++j) n_positive(i, j);
  }
  return matrix_;
}

ConstantMatrix compute_all_positive(const RootSystem& system, FormulaMode mode) {
  ConstantsEngine engine(system, mode);
  return engine.compute_all();
}

// ---------------------------------------------------------------------------
// Complete-matrix evaluation

Rational n_pos_neg_exact(const RootSystem& system, const ConstantMatrix& matrix, std::size_t a,
                         std::size_t b_opposite) {
  return pos_neg_impl(system, a, b_opposite, [&](std::size_t i, std::size_t j) { return matrix.at(i, j); });
}

Rational n_any_exact(const RootSystem& system, const ConstantMatrix& matrix, SignedRoot a, SignedRoot b) {
  return any_impl(system, a, b, [&](std::size_t i, std::size_t j) { return matrix.at(i, j); });
}

int n_any(const RootSystem& system, const ConstantMatrix& matrix, SignedRoot a, SignedRoot b) {
  return require_integral(n_any_exact(system, matrix, a, b), "n_any");
}

} // namespace chevalley
