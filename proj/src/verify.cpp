#include "chevalley/verify.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "chevalley/quartets.hpp"

namespace chevalley {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

void VerificationReport::append(VerificationReport other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

VerificationReport single(CheckResult result) {
  VerificationReport r;
  r.checks.push_back(std::move(result));
  return r;
}

// Every root of both signs, positive ones first.
std::vector<SignedRoot> all_signed_roots(const RootSystem& sys) {
  std::vector<SignedRoot> out;
  out.reserve(2 * sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) out.push_back({i, false});
  for (std::size_t i = 0; i < sys.size(); ++i) out.push_back({i, true});
  return out;
}

std::size_t code_of(const RootSystem& sys, SignedRoot a) { return a.index + (a.negative ? sys.size() : 0); }

std::optional<SignedRoot> signed_sum(const RootSystem& sys, SignedRoot a, SignedRoot b) {
  return signed_root_of(sys, coords_of(sys, a) + coords_of(sys, b));
}

std::string as_string(const Rational& q) { return to_string(q); }

} // namespace

VerificationReport check_antisymmetry(const ConstantMatrix& m) {
  CheckResult res{"antisymmetry", 0, {}};
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      ++res.population;
      const auto a = m.get(i, j);
      const auto b = m.get(j, i);
      if (!a || !b) {
        res.failures.push_back({{{i, false}, {j, false}}, "unknown entry"});
      } else if (*a != -*b) {
        res.failures.push_back({{{i, false}, {j, false}},
                                "N(i,j)=" + std::to_string(*a) + " N(j,i)=" + std::to_string(*b)});
      }
    }
  }
  return single(std::move(res));
}

VerificationReport check_chevalley_magnitude(const RootSystem& sys, const ConstantMatrix& m) {
  CheckResult res{"chevalley_magnitude", 0, {}};
  const auto roots = all_signed_roots(sys);
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      if (a == b || a == b.opposite() || !signed_sum(sys, a, b)) continue;
      ++res.population;
      const Rational n = n_any_exact(sys, m, a, b);
      const int p = root_string_depth(sys, coords_of(sys, a), coords_of(sys, b));
      if (abs(n) != Rational(p + 1)) {
        res.failures.push_back({{a, b}, "N=" + as_string(n) + " expected magnitude " + std::to_string(p + 1)});
      }
    }
  }
  return single(std::move(res));
}

VerificationReport check_tits_triples(const RootSystem& sys, const ConstantMatrix& m) {
  CheckResult res{"tits_triples", 0, {}};
  const auto roots = all_signed_roots(sys);
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      if (a == b || a == b.opposite()) continue;
      const auto sum = signed_sum(sys, a, b);
      if (!sum) continue;
      const SignedRoot c = sum->opposite();
      ++res.population;
      const Rational len_a = sys.squared_length(a.index);
      const Rational len_b = sys.squared_length(b.index);
      const Rational len_c = sys.squared_length(c.index);
      const Rational x = n_any_exact(sys, m, a, b) / len_c;
      const Rational y = n_any_exact(sys, m, b, c) / len_a;
      const Rational z = n_any_exact(sys, m, c, a) / len_b;
      if (x != y || y != z) {
        res.failures.push_back({{a, b, c}, "ratios " + as_string(x) + ", " + as_string(y) + ", " + as_string(z)});
      }
    }
  }
  return single(std::move(res));
}

VerificationReport check_carter_quadruples(const RootSystem& sys, const ConstantMatrix& m) {
  CheckResult res{"carter_quadruples", 0, {}};
  const auto roots = all_signed_roots(sys);
  const std::size_t count = roots.size();

  // (x, y) -> N(x, y) / |x + y|^2, or 0 when x + y is not a root.
  auto term = [&](SignedRoot x, SignedRoot y, SignedRoot z, SignedRoot w) {
    const auto sum = signed_sum(sys, x, y);
    if (!sum) return Rational(0);
    return n_any_exact(sys, m, x, y) * n_any_exact(sys, m, z, w) / sys.squared_length(sum->index);
  };

  // Canonical representative per multiset: codes a <= b <= c <= d.
  for (std::size_t ia = 0; ia < count; ++ia) {
    const SignedRoot a = roots[ia];
    const Root ra = coords_of(sys, a);
    for (std::size_t ib = ia; ib < count; ++ib) {
      const SignedRoot b = roots[ib];
      if (a == b.opposite()) continue;
      const Root rab = ra + coords_of(sys, b);
      for (std::size_t ic = ib; ic < count; ++ic) {
        const SignedRoot c = roots[ic];
        if (a == c.opposite() || b == c.opposite()) continue;
        const auto d = signed_root_of(sys, -(rab + coords_of(sys, c)));
        if (!d || code_of(sys, *d) < ic) continue;
        if (a == d->opposite() || b == d->opposite() || c == d->opposite()) continue;
        ++res.population;
        const Rational total = term(a, b, c, *d) + term(b, c, a, *d) + term(c, a, b, *d);
        if (total.numerator() != 0) res.failures.push_back({{a, b, c, *d}, "sum " + as_string(total)});
      }
    }
  }
  return single(std::move(res));
}

std::vector<Rational> coroot_coordinates(const RootSystem& sys, const Root& alpha) {
  const Rational len = sys.squared_length(alpha);
  std::vector<Rational> out(static_cast<std::size_t>(sys.rank()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = Rational(alpha[k]) * sys.form()(k, k) / len;
  return out;
}

namespace {

using Term = std::pair<std::size_t, Rational>;
using Element = std::vector<Term>;

// Structure table of the Chevalley basis: h_0..h_{n-1}, then e_a for every
// signed root in all_signed_roots order.
class BracketTable {
public:
  BracketTable(const RootSystem& sys, const ConstantMatrix& m)
      : rank_(static_cast<std::size_t>(sys.rank())), dim_(rank_ + 2 * sys.size()), table_(dim_ * dim_) {
    const auto roots = all_signed_roots(sys);
    auto e = [&](std::size_t code) { return rank_ + code; };
    for (std::size_t ca = 0; ca < roots.size(); ++ca) {
      const Root ra = coords_of(sys, roots[ca]);
      for (std::size_t i = 0; i < rank_; ++i) {
        // a(h_i) = 2 (a, a_i) / (a_i, a_i)
        std::vector<int> c(rank_, 0);
        c[i] = 1;
        const Rational pairing = 2 * sys.inner_product(ra, Root(c)) / sys.form()(i, i);
        if (pairing.numerator() != 0) {
          at(i, e(ca)).push_back({e(ca), pairing});
          at(e(ca), i).push_back({e(ca), -pairing});
        }
      }
      for (std::size_t cb = 0; cb < roots.size(); ++cb) {
        if (ca == cb) continue;
        if (roots[ca] == roots[cb].opposite()) {
          const auto h = coroot_coordinates(sys, ra);
          for (std::size_t k = 0; k < rank_; ++k) {
            if (h[k].numerator() != 0) at(e(ca), e(cb)).push_back({k, h[k]});
          }
          continue;
        }
        const auto sum = signed_root_of(sys, ra + coords_of(sys, roots[cb]));
        if (!sum) continue;
        const Rational n = n_any_exact(sys, m, roots[ca], roots[cb]);
        if (n.numerator() != 0) at(e(ca), e(cb)).push_back({e(code_of(sys, *sum)), n});
      }
    }
  }

  std::size_t dim() const { return dim_; }
  const Element& operator()(std::size_t x, std::size_t y) const { return table_[x * dim_ + y]; }

private:
  Element& at(std::size_t x, std::size_t y) { return table_[x * dim_ + y]; }

  std::size_t rank_;
  std::size_t dim_;
  std::vector<Element> table_;
};

} // namespace

VerificationReport check_jacobi(const RootSystem& sys, const ConstantMatrix& m) {
  CheckResult antisym{"bracket_antisymmetry", 0, {}};
  CheckResult jacobi{"jacobi", 0, {}};
  const BracketTable table(sys, m);
  const std::size_t dim = table.dim();
  const std::size_t rank = static_cast<std::size_t>(sys.rank());

  auto label = [&](std::size_t x) {
    // Cartan elements are reported with index = simple root and a note.
    if (x < rank) return SignedRoot{x, false};
    const std::size_t code = x - rank;
    return code < sys.size() ? SignedRoot{code, false} : SignedRoot{code - sys.size(), true};
  };
  auto kind = [&](std::size_t x) { return x < rank ? std::string("h") : std::string("e"); };

  // [x, y] == -[y, x] on basis elements, compared as dense vectors.
  std::vector<Rational> dense(dim, Rational(0));
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = x; y < dim; ++y) {
      ++antisym.population;
      for (const auto& [k, v] : table(x, y)) dense[k] += v;
      for (const auto& [k, v] : table(y, x)) dense[k] += v;
      bool ok = true;
      for (const auto& [k, v] : table(x, y)) ok = ok && dense[k].numerator() == 0;
      for (const auto& [k, v] : table(y, x)) ok = ok && dense[k].numerator() == 0;
      for (const auto& [k, v] : table(x, y)) dense[k] = 0;
      for (const auto& [k, v] : table(y, x)) dense[k] = 0;
      if (!ok) antisym.failures.push_back({{label(x), label(y)}, kind(x) + "," + kind(y)});
    }
  }

  // With the bracket alternating, checking x < y < z covers every triple.
  std::vector<std::size_t> touched;
  auto accumulate = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& [k, v] : table(a, b)) {
      for (const auto& [t, w] : table(k, c)) {
        if (dense[t].numerator() == 0) touched.push_back(t);
        dense[t] += v * w;
      }
    }
  };
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = x + 1; y < dim; ++y) {
      for (std::size_t z = y + 1; z < dim; ++z) {
        ++jacobi.population;
        accumulate(x, y, z);
        accumulate(y, z, x);
        accumulate(z, x, y);
        bool ok = true;
        for (std::size_t t : touched) {
          if (dense[t].numerator() != 0) ok = false;
          dense[t] = 0;
        }
        touched.clear();
        if (!ok) {
          jacobi.failures.push_back({{label(x), label(y), label(z)}, kind(x) + "," + kind(y) + "," + kind(z)});
        }
      }
    }
  }
  VerificationReport r;
  r.checks.push_back(std::move(antisym));
  r.checks.push_back(std::move(jacobi));
  return r;
}

VerificationReport cross_check_formulas(const RootSystem& sys) {
  const auto kind = sys.diagram().kind;
  if (kind == DiagramKind::F || kind == DiagramKind::G) {
    throw std::invalid_argument("formula cross-check is defined for A-E only, got " + sys.diagram().name());
  }
  ConstantsEngine specialized(sys, FormulaMode::specialized);
  const ConstantMatrix& m = specialized.compute_all();

  CheckResult per_quartet{"formula_agreement", 0, {}};
  for (const Quartet& q : enumerate_quartets(sys, specialized.dictionary())) {
    ++per_quartet.population;
    const auto in = quartet_inputs(sys, m, q);
    const int n11 = m.at(q.r1, q.s1);
    const Rational simple = simple_quartet_formula(sys, q, in, n11);
    const Rational general = general_quartet_formula(sys, q, in, n11);
    if (simple != general || general != Rational(m.at(q.r, q.s))) {
      per_quartet.failures.push_back({{{q.r1, false}, {q.r, false}, {q.s, false}, {q.s1, false}},
                                      "simple " + as_string(simple) + " general " + as_string(general) +
                                          " table " + std::to_string(m.at(q.r, q.s))});
    }
  }

  CheckResult per_entry{"matrix_agreement", 0, {}};
  const ConstantMatrix general = compute_all_positive(sys, FormulaMode::general);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = 0; j < sys.size(); ++j) {
      ++per_entry.population;
      if (m.at(i, j) != general.at(i, j)) {
        per_entry.failures.push_back({{{i, false}, {j, false}},
                                      std::to_string(m.at(i, j)) + " vs " + std::to_string(general.at(i, j))});
      }
    }
  }
  VerificationReport r;
  r.checks.push_back(std::move(per_quartet));
  r.checks.push_back(std::move(per_entry));
  return r;
}

VerificationReport verify_matrix(const RootSystem& sys, const ConstantMatrix& m) {
  auto antisym = check_antisymmetry(m);
  if (!antisym.passed()) return antisym;  // later checks assume a complete, consistent table
  auto magnitude = std::async(std::launch::async, [&] { return check_chevalley_magnitude(sys, m); });
  auto tits = std::async(std::launch::async, [&] { return check_tits_triples(sys, m); });
  auto carter = std::async(std::launch::async, [&] { return check_carter_quadruples(sys, m); });
  auto jacobi = std::async(std::launch::async, [&] { return check_jacobi(sys, m); });
  VerificationReport r = std::move(antisym);
  r.append(magnitude.get());
  r.append(tits.get());
  r.append(carter.get());
  r.append(jacobi.get());
  return r;
}

} // namespace chevalley
