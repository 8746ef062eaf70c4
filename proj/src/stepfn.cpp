#include "hm/stepfn.hpp"

#include <algorithm>

namespace hm {

StepFunction StepFunction::from_pieces(SpaceHandle space, std::vector<Rational> breakpoints,
                                       std::vector<std::size_t> values) {
  if (!space) throw InputError("step function without a space");
  if (values.empty()) throw InputError("step function has no pieces");
  if (breakpoints.size() != values.size() + 1)
    throw InputError("step function needs exactly one value per piece");
  if (breakpoints.front() != 0 || breakpoints.back() != 1)
    throw InputError("breakpoints must start at 0 and end at 1");
  for (const auto& t : breakpoints)
    if (t < 0 || t > 1) throw InputError("breakpoint " + format_rational(t) + " outside [0,1]");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (breakpoints[i] > breakpoints[i + 1]) throw InputError("breakpoints must be nondecreasing");
  for (auto v : values)
    if (v >= space->size()) throw InputError("step value outside the space");

  std::vector<Rational> bps{Rational(0)};
  std::vector<std::size_t> vals;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (breakpoints[i] == breakpoints[i + 1]) continue;
    if (!vals.empty() && vals.back() == values[i]) {
      bps.back() = breakpoints[i + 1];
      continue;
    }
    vals.push_back(values[i]);
    bps.push_back(breakpoints[i + 1]);
  }
  return StepFunction(std::move(space), std::move(bps), std::move(vals));
}

StepFunction StepFunction::constant(SpaceHandle space, std::size_t point) {
  return from_pieces(std::move(space), {Rational(0), Rational(1)}, {point});
}

StepFunction canonicalize(const SpaceHandle& space, const RawStep& raw) {
  if (raw.values.empty()) throw InputError("step function has no pieces");
  std::vector<std::size_t> values;
  values.reserve(raw.values.size());
  for (const auto& label : raw.values) values.push_back(space->require_index(label));
  return StepFunction::from_pieces(space, raw.breakpoints, std::move(values));
}

std::size_t evaluate(const StepFunction& f, const Rational& t) {
  if (t < 0 || t >= 1) throw InputError("evaluation point " + format_rational(t) + " outside [0,1)");
  auto bps = f.breakpoints();
  auto it = std::upper_bound(bps.begin(), bps.end(), t);
  return f.values()[static_cast<std::size_t>(it - bps.begin()) - 1];
}

Refinement common_refinement(const StepFunction& f, const StepFunction& g) {
  require_same_space(f.space(), g.space(), "common refinement");
  Refinement r;
  r.breakpoints.push_back(Rational(0));
  std::size_t i = 0, j = 0;
  while (i < f.piece_count() && j < g.piece_count()) {
    const Rational& end_f = f.piece_end(i);
    const Rational& end_g = g.piece_end(j);
    r.values.emplace_back(f.values()[i], g.values()[j]);
    if (end_f < end_g) {
      r.breakpoints.push_back(end_f);
      ++i;
    } else if (end_g < end_f) {
      r.breakpoints.push_back(end_g);
      ++j;
    } else {
      r.breakpoints.push_back(end_f);
      ++i;
      ++j;
    }
  }
  return r;
}

Rational hm_distance(const StepFunction& f, const StepFunction& g) {
  const Refinement r = common_refinement(f, g);
  const auto& space = *f.space();
  Rational total = 0;
  for (std::size_t k = 0; k < r.values.size(); ++k) {
    const auto [a, b] = r.values[k];
    if (a != b) total += space.distance(a, b) * (r.breakpoints[k + 1] - r.breakpoints[k]);
  }
  return total;
}

std::size_t piece_count(const StepFunction& f) { return f.piece_count(); }

bool in_hm_n(const StepFunction& f, long n) {
  if (n < 1) throw InputError("HM_n requires n >= 1");
  return f.piece_count() <= static_cast<std::size_t>(n);
}

Rational bad_set_measure(const StepFunction& alpha, const Rational& delta, const StepFunction& beta) {
  const Refinement r = common_refinement(alpha, beta);
  const auto& space = *alpha.space();
  Rational measure = 0;
  for (std::size_t k = 0; k < r.values.size(); ++k) {
    const auto [a, b] = r.values[k];
    if (space.distance(a, b) >= delta) measure += r.breakpoints[k + 1] - r.breakpoints[k];
  }
  return measure;
}

bool neighborhood_contains(const StepFunction& alpha, const Rational& delta, const Rational& epsilon,
                           const StepFunction& beta) {
  if (delta <= 0 || epsilon <= 0) throw InputError("neighbourhood radii must be positive");
  return bad_set_measure(alpha, delta, beta) < epsilon;
}

StepFunction pushforward(const SpaceMap& m, const StepFunction& f) {
  require_same_space(m.domain(), f.space(), "pushforward");
  std::vector<std::size_t> values;
  values.reserve(f.piece_count());
  for (auto v : f.values()) values.push_back(m(v));
  auto bps = f.breakpoints();
  return StepFunction::from_pieces(m.codomain(), {bps.begin(), bps.end()}, std::move(values));
}

}  // namespace hm
