#include "chevalley/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace chevalley {

char to_char(DiagramKind kind) {
  return static_cast<char>('A' + static_cast<int>(kind));
}

DiagramKind kind_from_char(char c) {
  const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper < 'A' || upper > 'G') {
    throw std::invalid_argument(std::string("unknown diagram kind '") + c + "'");
  }
  return static_cast<DiagramKind>(upper - 'A');
}

std::string Diagram::name() const { return to_char(kind) + std::to_string(rank); }

void validate(const Diagram& d) {
  const auto fail = [&](const char* why) {
    throw std::invalid_argument("invalid diagram " + d.name() + ": " + why);
  };
  switch (d.kind) {
  case DiagramKind::A: if (d.rank < 1) fail("A requires rank >= 1"); break;
  case DiagramKind::B: if (d.rank < 2) fail("B requires rank >= 2"); break;
  case DiagramKind::C: if (d.rank < 2) fail("C requires rank >= 2"); break;
  case DiagramKind::D: if (d.rank < 4) fail("D requires rank >= 4"); break;
  case DiagramKind::E: if (d.rank < 6 || d.rank > 8) fail("E requires rank 6, 7 or 8"); break;
  case DiagramKind::F: if (d.rank != 4) fail("F requires rank 4"); break;
  case DiagramKind::G: if (d.rank != 2) fail("G requires rank 2"); break;
  }
}

Diagram parse_diagram(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad diagram name '" + name + "'");
  Diagram d;
  d.kind = kind_from_char(name[0]);
  try {
    std::size_t used = 0;
    d.rank = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad diagram name '" + name + "'");
  }
  validate(d);
  return d;
}

// ---------------------------------------------------------------------------
// Root

int Root::height() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](int c) { return c <= 0; });
}

Root Root::operator-() const {
  std::vector<int> out(coords_.size());
  std::transform(coords_.begin(), coords_.end(), out.begin(), std::negate<>());
  return Root(std::move(out));
}

Root operator+(const Root& a, const Root& b) {
  std::vector<int> out(a.size());
  std::transform(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), out.begin(), std::plus<>());
  return Root(std::move(out));
}

Root operator-(const Root& a, const Root& b) {
  std::vector<int> out(a.size());
  std::transform(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), out.begin(), std::minus<>());
  return Root(std::move(out));
}

Root operator*(int k, const Root& a) {
  std::vector<int> out(a.size());
  std::transform(a.coords_.begin(), a.coords_.end(), out.begin(), [k](int c) { return k * c; });
  return Root(std::move(out));
}

std::string Root::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i];
  os << ']';
  return os.str();
}

std::size_t RootHash::operator()(const Root& r) const noexcept {
  std::size_t h = r.size();
  for (int c : r.coords()) h = h * 31 + static_cast<std::size_t>(c + 7);
  return h;
}

bool regular_precedes(const Root& a, const Root& b) {
  const int ha = a.height();
  const int hb = b.height();
  if (ha != hb) return ha < hb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

// ---------------------------------------------------------------------------
// BilinearForm

BilinearForm::BilinearForm(std::vector<std::vector<Rational>> matrix) : matrix_(std::move(matrix)) {
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (matrix_[i].size() != matrix_.size()) throw std::invalid_argument("form matrix is not square");
    for (std::size_t j = 0; j < i; ++j) {
      if (matrix_[i][j] != matrix_[j][i]) throw std::invalid_argument("form matrix is not symmetric");
    }
  }
}

Rational BilinearForm::evaluate(std::span<const int> a, std::span<const int> b) const {
  Rational sum(0);
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < matrix_.size(); ++j) {
      if (b[j] == 0 || matrix_[i][j].numerator() == 0) continue;
      sum += matrix_[i][j] * static_cast<std::int64_t>(a[i] * b[j]);
    }
  }
  return sum;
}

namespace {

struct DynkinData {
  std::vector<Rational> lengths;  // squared lengths of simple roots
  std::vector<std::pair<int, int>> edges;
};

DynkinData dynkin_data(const Diagram& d) {
  const int n = d.rank;
  DynkinData out;
  out.lengths.assign(static_cast<std::size_t>(n), Rational(2));
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) out.edges.emplace_back(i, i + 1);
  };
  switch (d.kind) {
  case DiagramKind::A:
    chain(n);
    break;
  case DiagramKind::B:
    chain(n);
    out.lengths[n - 1] = 1;
    break;
  case DiagramKind::C:
    chain(n);
    std::fill(out.lengths.begin(), out.lengths.end() - 1, Rational(1));
    break;
  case DiagramKind::D:
    chain(n - 1);
    out.edges.emplace_back(n - 3, n - 1);
    break;
  case DiagramKind::E:
    // Bourbaki labelling: 1-3-4-5-...-n with 2 attached to 4.
    out.edges = {{0, 2}, {1, 3}};
    for (int i = 2; i + 1 < n; ++i) out.edges.emplace_back(i, i + 1);
    break;
  case DiagramKind::F:
    chain(4);
    out.lengths[2] = out.lengths[3] = 1;
    break;
  case DiagramKind::G:
    chain(2);
    out.lengths[0] = Rational(2, 3);
    break;
  }
  return out;
}

} // namespace

BilinearForm BilinearForm::for_diagram(const Diagram& d) {
  validate(d);
  const auto data = dynkin_data(d);
  const auto n = static_cast<std::size_t>(d.rank);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = data.lengths[i];
  // Adjacent simple roots: (a_i, a_j) = -max(|a_i|^2, |a_j|^2) / 2.
  for (auto [i, j] : data.edges) {
    const Rational v = -std::max(data.lengths[i], data.lengths[j]) / 2;
    m[i][j] = m[j][i] = v;
  }
  return BilinearForm(std::move(m));
}

// ---------------------------------------------------------------------------
// RootSystem

Rational RootSystem::inner_product(const Root& a, const Root& b) const {
  return form_.evaluate(a.coords(), b.coords());
}

std::optional<std::size_t> RootSystem::index_of_root(const Root& coords) const {
  if (coords.size() != static_cast<std::size_t>(rank())) return std::nullopt;
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RootSystem::index_of_sum(std::size_t i, std::size_t j) const {
  return index_of_root(roots_.at(i) + roots_.at(j));
}

std::optional<std::size_t> RootSystem::index_of_difference(std::size_t i, std::size_t j) const {
  return index_of_root(roots_.at(i) - roots_.at(j));
}

bool RootSystem::is_root(const Root& coords) const {
  if (coords.is_negative()) return index_of_root(-coords).has_value();
  return index_of_root(coords).has_value();
}

RootSystem build_root_system(const Diagram& diagram) {
  validate(diagram);
  RootSystem sys;
  sys.diagram_ = diagram;
  sys.form_ = BilinearForm::for_diagram(diagram);

  const auto n = static_cast<std::size_t>(diagram.rank);
  std::vector<Root> simple;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    simple.emplace_back(std::move(c));
  }

  std::unordered_map<Root, std::size_t, RootHash> seen;
  std::vector<Root> found = simple;
  for (std::size_t i = 0; i < n; ++i) seen.emplace(simple[i], i);

  // Breadth-first closure under s_i(b) = b - <b, a_i^v> a_i, keeping positive images.
  std::vector<Root> frontier = simple;
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& b : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        const Rational pairing = 2 * sys.inner_product(b, simple[i]) / sys.form_(i, i);
        if (!is_integral(pairing)) throw std::logic_error("non-integral Cartan pairing");
        if (pairing.numerator() == 0) continue;
        Root image = b - static_cast<int>(pairing.numerator()) * simple[i];
        if (!image.is_positive() || seen.count(image)) continue;
        seen.emplace(image, found.size());
        found.push_back(image);
        next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }

  std::sort(found.begin(), found.end(), regular_precedes);
  sys.roots_ = std::move(found);
  sys.lengths_.reserve(sys.roots_.size());
  for (std::size_t i = 0; i < sys.roots_.size(); ++i) {
    sys.lengths_.push_back(sys.inner_product(sys.roots_[i], sys.roots_[i]));
    sys.index_.emplace(sys.roots_[i], i);
  }
  return sys;
}

std::size_t expected_positive_root_count(const Diagram& d) {
  validate(d);
  const auto n = static_cast<std::size_t>(d.rank);
  switch (d.kind) {
  case DiagramKind::A: return n * (n + 1) / 2;
  case DiagramKind::B:
  case DiagramKind::C: return n * n;
  case DiagramKind::D: return n * (n - 1);
  case DiagramKind::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  case DiagramKind::F: return 24;
  case DiagramKind::G: return 6;
  }
  return 0;
}

} // namespace chevalley
