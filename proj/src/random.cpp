#include "hm/random.hpp"

#include <algorithm>

namespace hm {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t case_seed(std::uint64_t suite_seed, std::uint64_t case_index) {
  return splitmix64(suite_seed ^ splitmix64(case_index));
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

long Rng::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Rng::rational_in(const Rational& lo, const Rational& hi, unsigned max_den) {
  const long q = between(1, static_cast<long>(max_den));
  const long k = between(0, q);
  return lo + (hi - lo) * ratio(k, q);
}

SpaceHandle random_space(Rng& rng, std::size_t min_points, std::size_t max_points) {
  const auto n = static_cast<std::size_t>(rng.between(static_cast<long>(min_points), static_cast<long>(max_points)));
  RawSpace raw;
  for (std::size_t i = 0; i < n; ++i) raw.points.push_back("p" + std::to_string(i));
  raw.dist.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const long q = rng.between(1, 8);
      raw.dist[i][j] = raw.dist[j][i] = ratio(rng.between(1, q), q);
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (raw.dist[i][k] + raw.dist[k][j] < raw.dist[i][j]) raw.dist[i][j] = raw.dist[i][k] + raw.dist[k][j];
  return validate_space(raw);
}

StepFunction random_step(Rng& rng, const SpaceHandle& space, std::size_t max_pieces, unsigned max_den) {
  const auto pieces = static_cast<std::size_t>(rng.between(1, static_cast<long>(std::max<std::size_t>(1, max_pieces))));
  std::vector<Rational> cuts;
  for (std::size_t i = 1; i < pieces; ++i) cuts.push_back(rng.rational_in(0, 1, max_den));
  cuts.push_back(Rational(0));
  cuts.push_back(Rational(1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> values;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) values.push_back(rng.below(space->size()));
  return StepFunction::from_pieces(space, std::move(cuts), std::move(values));
}

TestFunctional random_functional(Rng& rng, const SpaceHandle& space, unsigned max_den) {
  std::vector<Rational> values;
  for (std::size_t i = 0; i < space->size(); ++i) values.push_back(rng.rational_in(-1, 1, max_den));
  return TestFunctional(space, std::move(values));
}

Window random_window(Rng& rng, unsigned max_den) {
  for (;;) {
    Rational a = rng.rational_in(0, 1, max_den);
    Rational b = rng.rational_in(0, 1, max_den);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    return Window(a, b);
  }
}

FunctionalFamily random_family(Rng& rng, const SpaceHandle& space, std::size_t count, unsigned max_den) {
  FunctionalFamily family;
  for (std::size_t i = 0; i < count; ++i) {
    auto phi = random_functional(rng, space, max_den);
    family.push_back({std::move(phi), random_window(rng, max_den)});
  }
  return family;
}

SpaceMap random_map(Rng& rng, const SpaceHandle& domain, const SpaceHandle& codomain) {
  std::vector<std::size_t> table;
  for (std::size_t i = 0; i < domain->size(); ++i) table.push_back(rng.below(codomain->size()));
  return SpaceMap(domain, codomain, std::move(table));
}

std::vector<Rational> random_simplex_weights(Rng& rng, std::size_t n, bool allow_zero) {
  std::vector<long> raw(n);
  long total = 0;
  for (auto& r : raw) {
    r = (allow_zero && rng.chance(1, 3)) ? 0 : rng.between(1, 12);
    total += r;
  }
  if (total == 0) {
    raw[rng.below(n)] = 1;
    total = 1;
  }
  std::vector<Rational> weights;
  for (long r : raw) weights.push_back(ratio(r, total));
  return weights;
}

}  // namespace hm
