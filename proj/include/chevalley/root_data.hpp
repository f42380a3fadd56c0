#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "chevalley/rational.hpp"

namespace chevalley {

enum class DiagramKind { A, B, C, D, E, F, G };

char to_char(DiagramKind kind);
/// Accepts 'A'..'G' in either case; throws std::invalid_argument otherwise.
DiagramKind kind_from_char(char c);

struct Diagram {
  DiagramKind kind = DiagramKind::A;
  int rank = 1;

  std::string name() const;  // "B6", "F4", ...
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// Throws std::invalid_argument when the rank is not admissible for the kind.
void validate(const Diagram& diagram);

/// Parses names like "B6" or "e8".
Diagram parse_diagram(const std::string& name);

/// Integer coordinates over the simple roots.
class Root {
public:
  Root() = default;
  explicit Root(std::vector<int> coords) : coords_(std::move(coords)) {}
  Root(std::initializer_list<int> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  std::span<const int> coords() const { return coords_; }

  int height() const;
  bool is_zero() const;
  bool is_positive() const;  // nonzero, all coordinates >= 0
  bool is_negative() const;  // nonzero, all coordinates <= 0

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend Root operator*(int k, const Root& a);

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

  std::string to_string() const;  // "[1, 0, 2]"

private:
  std::vector<int> coords_;
};

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept;
};

/// Strict regular-ordering comparison: height first, then the root with the
/// larger value at the first differing coordinate comes first.
bool regular_precedes(const Root& a, const Root& b);

/// Symmetric form on the simple roots. Long simple roots have squared length 2.
class BilinearForm {
public:
  BilinearForm() = default;
  explicit BilinearForm(std::vector<std::vector<Rational>> matrix);

  std::size_t rank() const { return matrix_.size(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return matrix_[i][j]; }
  Rational evaluate(std::span<const int> a, std::span<const int> b) const;

  static BilinearForm for_diagram(const Diagram& diagram);

private:
  std::vector<std::vector<Rational>> matrix_;
};

/// Immutable after construction.
class RootSystem {
public:
  const Diagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank; }
  const BilinearForm& form() const { return form_; }

  /// Number of positive roots.
  std::size_t size() const { return roots_.size(); }
  std::span<const Root> positive_roots() const { return roots_; }
  const Root& root(std::size_t i) const { return roots_.at(i); }
  const Rational& squared_length(std::size_t i) const { return lengths_.at(i); }
  Rational squared_length(const Root& r) const { return inner_product(r, r); }
  bool is_simple(std::size_t i) const { return i < static_cast<std::size_t>(rank()); }
  int max_height() const { return roots_.back().height(); }

  Rational inner_product(const Root& a, const Root& b) const;

  std::optional<std::size_t> index_of_root(const Root& coords) const;
  std::optional<std::size_t> index_of_sum(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> index_of_difference(std::size_t i, std::size_t j) const;

  /// True when coords is a root of either sign.
  bool is_root(const Root& coords) const;

private:
  friend RootSystem build_root_system(const Diagram& diagram);

  Diagram diagram_;
  BilinearForm form_;
  std::vector<Root> roots_;
  std::vector<Rational> lengths_;
  std::unordered_map<Root, std::size_t, RootHash> index_;
};

/// Closes the simple roots under simple reflections and sorts the result into
/// regular order. Throws std::invalid_argument for an inadmissible diagram.
RootSystem build_root_system(const Diagram& diagram);

/// Number of positive roots from the classification, independent of generation.
std::size_t expected_positive_root_count(const Diagram& diagram);

} // namespace chevalley
