#pragma once

#include "hm/stepfn.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hm {

// A window (a, b) with 0 <= a < b <= 1. The endpoints have measure zero, so (a,b) and [a,b)
// integrate identically.
class Window {
 public:
  Window(Rational a, Rational b);
  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  Rational length() const { return b_ - a_; }
  bool operator==(const Window&) const = default;

 private:
  Rational a_;
  Rational b_;
};

// phi_(a,b): alpha -> (1/(b-a)) * integral_a^b phi(alpha(t)) dt.
struct WindowedFunctional {
  TestFunctional functional;
  Window window;
};

using FunctionalFamily = std::vector<WindowedFunctional>;

Rational window_average(const WindowedFunctional& wf, const StepFunction& alpha);

// max_i |phi_i(f) - phi_i(g)|.
Rational pseudometric(std::span<const WindowedFunctional> family, const StepFunction& f,
                      const StepFunction& g);

// Finite coordinates of the product embedding.
std::vector<Rational> project(const StepFunction& alpha, std::span<const WindowedFunctional> family);

std::vector<Rational> convex_midpoint_vector(std::span<const Rational> u, std::span<const Rational> v);

// Indicator functional of every point crossed with `windows` dyadic windows chosen by the seed.
// The first window is always (0,1). Result is ordered window-major, then by point.
FunctionalFamily sample_family(const SpaceHandle& space, std::size_t windows, std::uint64_t seed);

}  // namespace hm
