#pragma once

#include "hm/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hm {

// Unvalidated description of a finite metric space.
struct RawSpace {
  std::vector<std::string> points;
  std::vector<std::vector<Rational>> dist;
};

enum class SpaceAxiom {
  shape,
  duplicate_label,
  nonzero_diagonal,
  negative_distance,
  zero_off_diagonal,
  asymmetry,
  bound_exceeded,
  triangle_inequality,
};

std::string_view axiom_name(SpaceAxiom axiom);

// A distance table that failed validation. `what()` names the axiom and the offending indices.
class SpaceError : public InputError {
 public:
  SpaceError(SpaceAxiom axiom, const std::string& detail);
  SpaceAxiom axiom() const noexcept { return axiom_; }

 private:
  SpaceAxiom axiom_;
};

// A finite set of labelled points with a rational metric bounded by 1.
// Only obtainable through validate_space, so every instance satisfies the metric axioms.
class FiniteMetricSpace {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Rational& distance(std::size_t i, std::size_t j) const { return dist_[i * labels_.size() + j]; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  // Throws InputError on an unknown label.
  std::size_t require_index(std::string_view label) const;
  Rational diameter() const;

  bool operator==(const FiniteMetricSpace& other) const {
    return labels_ == other.labels_ && dist_ == other.dist_;
  }

 private:
  friend std::shared_ptr<const FiniteMetricSpace> validate_space(const RawSpace& candidate);
  FiniteMetricSpace() = default;

  std::vector<std::string> labels_;
  std::vector<Rational> dist_;
  std::unordered_map<std::string, std::size_t> index_;
};

using SpaceHandle = std::shared_ptr<const FiniteMetricSpace>;

// Checks squareness, distinct labels, and then the axioms in a fixed order:
// zero diagonal, nonnegativity, positivity off the diagonal, symmetry, bound 1, triangle inequality.
SpaceHandle validate_space(const RawSpace& candidate);

bool same_space(const SpaceHandle& a, const SpaceHandle& b);
void require_same_space(const SpaceHandle& a, const SpaceHandle& b, std::string_view context);

// A real function on the points of a space (every function on a finite space is continuous).
class TestFunctional {
 public:
  TestFunctional(SpaceHandle space, std::vector<Rational> values);
  static TestFunctional from_table(SpaceHandle space, const std::map<std::string, Rational>& table);
  // phi(q) = 1 if q == point else 0.
  static TestFunctional indicator(SpaceHandle space, std::size_t point);

  const SpaceHandle& space() const noexcept { return space_; }
  const Rational& value(std::size_t point) const { return values_.at(point); }
  const std::vector<Rational>& values() const noexcept { return values_; }

  bool operator==(const TestFunctional& other) const {
    return same_space(space_, other.space_) && values_ == other.values_;
  }

 private:
  SpaceHandle space_;
  std::vector<Rational> values_;
};

struct RationalInterval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool operator==(const RationalInterval&) const = default;
};

// max |phi(x)|.
Rational functional_norm(const TestFunctional& phi);

// [min |phi(x)|, max |phi(x)|], the coordinate interval of the product embedding as printed.
RationalInterval functional_range(const TestFunctional& phi);

// [min phi(x), max phi(x)]; every windowed average of phi lies in this interval.
RationalInterval functional_value_range(const TestFunctional& phi);

// A total map between the point sets of two spaces.
class SpaceMap {
 public:
  SpaceMap(SpaceHandle domain, SpaceHandle codomain, std::vector<std::size_t> table);
  static SpaceMap from_table(SpaceHandle domain, SpaceHandle codomain,
                             const std::map<std::string, std::string>& table);
  static SpaceMap identity(SpaceHandle space);
  // outer ∘ inner.
  static SpaceMap compose(const SpaceMap& outer, const SpaceMap& inner);

  const SpaceHandle& domain() const noexcept { return domain_; }
  const SpaceHandle& codomain() const noexcept { return codomain_; }
  std::size_t operator()(std::size_t point) const { return table_.at(point); }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

 private:
  SpaceHandle domain_;
  SpaceHandle codomain_;
  std::vector<std::size_t> table_;
};

}  // namespace hm
