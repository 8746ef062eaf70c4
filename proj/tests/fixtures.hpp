#pragma once

#include "hm/equiconnect.hpp"

#include <string>
#include <vector>

namespace fx {

using hm::Rational;
using hm::StepFunction;

inline hm::Rational q(const char* text) { return hm::parse_rational(text); }

// {x, y} with d(x, y) = 1
inline hm::SpaceHandle two_point(const char* d = "1") {
  return hm::validate_space({{"x", "y"}, {{0, q(d)}, {q(d), 0}}});
}

inline hm::SpaceHandle three_point() {
  return hm::validate_space({{"x", "y", "z"}, {{0, q("1/2"), q("1")}, {q("1/2"), 0, q("1/2")}, {q("1"), q("1/2"), 0}}});
}

// "x|0-1/2,y|1/2-1" style is too clever; pieces are given as parallel lists.
inline StepFunction step(const hm::SpaceHandle& space, std::vector<const char*> bps, std::vector<std::string> labels) {
  hm::RawStep raw;
  for (auto b : bps) raw.breakpoints.push_back(q(b));
  raw.values = std::move(labels);
  return hm::canonicalize(space, raw);
}

inline StepFunction constant(const hm::SpaceHandle& space, const std::string& label) {
  return StepFunction::constant(space, space->require_index(label));
}

inline hm::TestFunctional phi(const hm::SpaceHandle& space, std::vector<const char*> values) {
  std::vector<Rational> v;
  for (auto s : values) v.push_back(q(s));
  return hm::TestFunctional(space, v);
}

}  // namespace fx
