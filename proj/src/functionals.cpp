#include "hm/functionals.hpp"

#include "hm/random.hpp"

#include <algorithm>

namespace hm {

Window::Window(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ < 0 || b_ > 1 || !(a_ < b_))
    throw InputError("window (" + format_rational(a_) + ", " + format_rational(b_) +
                     ") must satisfy 0 <= a < b <= 1");
}

Rational window_average(const WindowedFunctional& wf, const StepFunction& alpha) {
  require_same_space(wf.functional.space(), alpha.space(), "window average");
  const Rational& a = wf.window.a();
  const Rational& b = wf.window.b();
  Rational integral = 0;
  for (std::size_t i = 0; i < alpha.piece_count(); ++i) {
    const Rational& lo = std::max(alpha.piece_begin(i), a);
    const Rational& hi = std::min(alpha.piece_end(i), b);
    if (lo < hi) integral += wf.functional.value(alpha.values()[i]) * (hi - lo);
  }
  return integral / wf.window.length();
}

Rational pseudometric(std::span<const WindowedFunctional> family, const StepFunction& f,
                      const StepFunction& g) {
  if (family.empty()) throw InputError("pseudometric needs a nonempty functional family");
  Rational best = 0;
  for (const auto& wf : family) best = std::max(best, abs_value(window_average(wf, f) - window_average(wf, g)));
  return best;
}

std::vector<Rational> project(const StepFunction& alpha, std::span<const WindowedFunctional> family) {
  if (family.empty()) throw InputError("projection needs a nonempty functional family");
  std::vector<Rational> coords;
  coords.reserve(family.size());
  for (const auto& wf : family) coords.push_back(window_average(wf, alpha));
  return coords;
}

std::vector<Rational> convex_midpoint_vector(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) throw InputError("midpoint of vectors with different lengths");
  std::vector<Rational> mid;
  mid.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) mid.push_back((u[i] + v[i]) / 2);
  return mid;
}

FunctionalFamily sample_family(const SpaceHandle& space, std::size_t windows, std::uint64_t seed) {
  if (windows < 1) throw InputError("sample_family needs at least one window");
  Rng rng(seed);
  std::vector<Window> chosen{Window(0, 1)};
  while (chosen.size() < windows) {
    const unsigned level = 1 + static_cast<unsigned>(rng.below(4));
    const auto index = rng.below(std::uint64_t{1} << level);
    const Rational width = dyadic(level);
    chosen.emplace_back(width * Rational(static_cast<long>(index)), width * Rational(static_cast<long>(index + 1)));
  }
  FunctionalFamily family;
  family.reserve(windows * space->size());
  for (const auto& w : chosen)
    for (std::size_t p = 0; p < space->size(); ++p)
      family.push_back({TestFunctional::indicator(space, p), w});
  return family;
}

}  // namespace hm
