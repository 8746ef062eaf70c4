#pragma once

#include "hm/space.hpp"

#include <span>
#include <utility>
#include <vector>

namespace hm {

// Step data as written by a user: nondecreasing breakpoints 0 = t0 <= ... <= tn = 1 and
// one label per piece [t_i, t_{i+1}).
struct RawStep {
  std::vector<Rational> breakpoints;
  std::vector<std::string> values;
};

// An element of HM X: a right-continuous step function [0,1) -> X in canonical form
// (strictly increasing breakpoints, no two adjacent pieces with the same value).
class StepFunction {
 public:
  // Drops zero-length pieces and merges equal neighbours. `values` are point indices.
  static StepFunction from_pieces(SpaceHandle space, std::vector<Rational> breakpoints,
                                  std::vector<std::size_t> values);
  static StepFunction constant(SpaceHandle space, std::size_t point);

  const SpaceHandle& space() const noexcept { return space_; }
  std::span<const Rational> breakpoints() const noexcept { return breakpoints_; }
  std::span<const std::size_t> values() const noexcept { return values_; }
  std::size_t piece_count() const noexcept { return values_.size(); }
  const Rational& piece_begin(std::size_t i) const { return breakpoints_[i]; }
  const Rational& piece_end(std::size_t i) const { return breakpoints_[i + 1]; }

  bool operator==(const StepFunction& other) const {
    return same_space(space_, other.space_) && breakpoints_ == other.breakpoints_ &&
           values_ == other.values_;
  }

 private:
  StepFunction(SpaceHandle space, std::vector<Rational> breakpoints, std::vector<std::size_t> values)
      : space_(std::move(space)), breakpoints_(std::move(breakpoints)), values_(std::move(values)) {}

  SpaceHandle space_;
  std::vector<Rational> breakpoints_;
  std::vector<std::size_t> values_;
};

StepFunction canonicalize(const SpaceHandle& space, const RawStep& raw);

// Value on the piece with t_i <= t < t_{i+1}.
std::size_t evaluate(const StepFunction& f, const Rational& t);

struct Refinement {
  std::vector<Rational> breakpoints;
  // (value of f, value of g) on each refined piece.
  std::vector<std::pair<std::size_t, std::size_t>> values;
};

Refinement common_refinement(const StepFunction& f, const StepFunction& g);

// Integral over [0,1) of d(f(t), g(t)).
Rational hm_distance(const StepFunction& f, const StepFunction& g);

std::size_t piece_count(const StepFunction& f);
bool in_hm_n(const StepFunction& f, long n);

// Lebesgue measure of {t : d(alpha(t), beta(t)) >= delta}.
Rational bad_set_measure(const StepFunction& alpha, const Rational& delta, const StepFunction& beta);

// Membership of beta in the basic neighbourhood of alpha for the metric entourage d < delta.
bool neighborhood_contains(const StepFunction& alpha, const Rational& delta, const Rational& epsilon,
                           const StepFunction& beta);

// m ∘ f, canonicalized.
StepFunction pushforward(const SpaceMap& m, const StepFunction& f);

}  // namespace hm
