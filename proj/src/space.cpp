#include "hm/space.hpp"

#include <algorithm>
#include <set>

namespace hm {

std::string_view axiom_name(SpaceAxiom axiom) {
  switch (axiom) {
    case SpaceAxiom::shape: return "shape";
    case SpaceAxiom::duplicate_label: return "duplicate label";
    case SpaceAxiom::nonzero_diagonal: return "nonzero diagonal";
    case SpaceAxiom::negative_distance: return "negative distance";
    case SpaceAxiom::zero_off_diagonal: return "zero off-diagonal";
    case SpaceAxiom::asymmetry: return "asymmetry";
    case SpaceAxiom::bound_exceeded: return "bound exceeded";
    case SpaceAxiom::triangle_inequality: return "triangle inequality";
  }
  return "unknown";
}

SpaceError::SpaceError(SpaceAxiom axiom, const std::string& detail)
    : InputError(std::string(axiom_name(axiom)) + ": " + detail), axiom_(axiom) {}

std::optional<std::size_t> FiniteMetricSpace::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteMetricSpace::require_index(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw InputError("unknown point label \"" + std::string(label) + "\"");
}

Rational FiniteMetricSpace::diameter() const {
  Rational best = 0;
  for (const auto& d : dist_) best = std::max(best, d);
  return best;
}

SpaceHandle validate_space(const RawSpace& candidate) {
  const std::size_t n = candidate.points.size();
  if (n == 0) throw SpaceError(SpaceAxiom::shape, "space has no points");
  if (candidate.dist.size() != n)
    throw SpaceError(SpaceAxiom::shape, "distance table has " + std::to_string(candidate.dist.size()) +
                                            " rows for " + std::to_string(n) + " points");
  for (const auto& row : candidate.dist)
    if (row.size() != n) throw SpaceError(SpaceAxiom::shape, "distance table is not square");

  std::set<std::string> seen;
  for (const auto& p : candidate.points)
    if (!seen.insert(p).second) throw SpaceError(SpaceAxiom::duplicate_label, "\"" + p + "\"");

  const auto& d = candidate.dist;
  auto at = [&](std::size_t i, std::size_t j) {
    return "d(" + candidate.points[i] + "," + candidate.points[j] + ")";
  };
  for (std::size_t i = 0; i < n; ++i)
    if (d[i][i] != 0) throw SpaceError(SpaceAxiom::nonzero_diagonal, at(i, i) + " != 0");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i][j] < 0) throw SpaceError(SpaceAxiom::negative_distance, at(i, j) + " < 0");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d[i][j] == 0) throw SpaceError(SpaceAxiom::zero_off_diagonal, at(i, j) + " = 0");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d[i][j] != d[j][i]) throw SpaceError(SpaceAxiom::asymmetry, at(i, j) + " != " + at(j, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i][j] > 1) throw SpaceError(SpaceAxiom::bound_exceeded, at(i, j) + " > 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d[i][j] > d[i][k] + d[k][j])
          throw SpaceError(SpaceAxiom::triangle_inequality, at(i, j) + " > " + at(i, k) + " + " + at(k, j));

  auto space = std::shared_ptr<FiniteMetricSpace>(new FiniteMetricSpace());
  space->labels_ = candidate.points;
  space->dist_.reserve(n * n);
  for (const auto& row : d)
    for (const auto& v : row) space->dist_.push_back(v);
  for (std::size_t i = 0; i < n; ++i) space->index_.emplace(candidate.points[i], i);
  return space;
}

bool same_space(const SpaceHandle& a, const SpaceHandle& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_space(const SpaceHandle& a, const SpaceHandle& b, std::string_view context) {
  if (!same_space(a, b)) throw InputError("mismatched spaces in " + std::string(context));
}

TestFunctional::TestFunctional(SpaceHandle space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw InputError("functional without a space");
  if (values_.size() != space_->size())
    throw InputError("functional must assign exactly one value to each point");
}

TestFunctional TestFunctional::from_table(SpaceHandle space, const std::map<std::string, Rational>& table) {
  if (!space) throw InputError("functional without a space");
  std::vector<std::optional<Rational>> slots(space->size());
  for (const auto& [label, value] : table) slots[space->require_index(label)] = value;
  std::vector<Rational> values;
  values.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw InputError("functional has no value at point \"" + space->label(i) + "\"");
    values.push_back(*slots[i]);
  }
  return TestFunctional(std::move(space), std::move(values));
}

TestFunctional TestFunctional::indicator(SpaceHandle space, std::size_t point) {
  std::vector<Rational> values(space->size(), Rational(0));
  values.at(point) = 1;
  return TestFunctional(std::move(space), std::move(values));
}

Rational functional_norm(const TestFunctional& phi) {
  Rational best = 0;
  for (const auto& v : phi.values()) best = std::max(best, abs_value(v));
  return best;
}

RationalInterval functional_range(const TestFunctional& phi) {
  RationalInterval r{abs_value(phi.values().front()), abs_value(phi.values().front())};
  for (const auto& v : phi.values()) {
    Rational a = abs_value(v);
    r.lo = std::min(r.lo, a);
    r.hi = std::max(r.hi, a);
  }
  return r;
}

RationalInterval functional_value_range(const TestFunctional& phi) {
  auto [lo, hi] = std::minmax_element(phi.values().begin(), phi.values().end());
  return {*lo, *hi};
}

SpaceMap::SpaceMap(SpaceHandle domain, SpaceHandle codomain, std::vector<std::size_t> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (!domain_ || !codomain_) throw InputError("map without domain or codomain");
  if (table_.size() != domain_->size()) throw InputError("map must be total on its domain");
  for (auto target : table_)
    if (target >= codomain_->size()) throw InputError("map target outside the codomain");
}

SpaceMap SpaceMap::from_table(SpaceHandle domain, SpaceHandle codomain,
                              const std::map<std::string, std::string>& table) {
  std::vector<std::optional<std::size_t>> slots(domain->size());
  for (const auto& [from, to] : table) slots[domain->require_index(from)] = codomain->require_index(to);
  std::vector<std::size_t> resolved;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw InputError("map has no image for point \"" + domain->label(i) + "\"");
    resolved.push_back(*slots[i]);
  }
  return SpaceMap(std::move(domain), std::move(codomain), std::move(resolved));
}

SpaceMap SpaceMap::identity(SpaceHandle space) {
  std::vector<std::size_t> table(space->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  return SpaceMap(space, space, std::move(table));
}

SpaceMap SpaceMap::compose(const SpaceMap& outer, const SpaceMap& inner) {
  require_same_space(inner.codomain(), outer.domain(), "map composition");
  std::vector<std::size_t> table(inner.table_.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = outer(inner(i));
  return SpaceMap(inner.domain(), outer.codomain(), std::move(table));
}

}  // namespace hm
