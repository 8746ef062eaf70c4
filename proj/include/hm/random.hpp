#pragma once

// Seeded generators shared by the property suites, sample_family and shrink_probe.
//
// All randomness flows from one 64-bit seed through std::mt19937_64 (fully specified by the
// standard, so sequences replay across platforms). Bounded draws use rejection sampling
// rather than std::uniform_int_distribution, whose output is implementation-defined.

#include "hm/functionals.hpp"

#include <cstdint>
#include <random>

namespace hm {

std::uint64_t splitmix64(std::uint64_t x);

// Independent per-case seed so cases can run in any order or in parallel.
std::uint64_t case_seed(std::uint64_t suite_seed, std::uint64_t case_index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  long between(long lo, long hi);
  bool chance(unsigned num, unsigned den) { return below(den) < num; }
  // lo + (hi - lo) * k / q with q drawn from [1, max_den] and k from [0, q].
  Rational rational_in(const Rational& lo, const Rational& hi, unsigned max_den);

 private:
  std::mt19937_64 engine_;
};

// 2..max_points labelled points; off-diagonal weights in (0,1] closed under shortest paths.
SpaceHandle random_space(Rng& rng, std::size_t min_points, std::size_t max_points);

StepFunction random_step(Rng& rng, const SpaceHandle& space, std::size_t max_pieces, unsigned max_den);

// Values in [-1, 1].
TestFunctional random_functional(Rng& rng, const SpaceHandle& space, unsigned max_den);

Window random_window(Rng& rng, unsigned max_den);

FunctionalFamily random_family(Rng& rng, const SpaceHandle& space, std::size_t count, unsigned max_den);

SpaceMap random_map(Rng& rng, const SpaceHandle& domain, const SpaceHandle& codomain);

// Nonnegative weights summing to 1; with allow_zero some entries are forced to 0.
std::vector<Rational> random_simplex_weights(Rng& rng, std::size_t n, bool allow_zero);

}  // namespace hm
