#pragma once

// Independent recomputations used as test oracles. None of these call the library's
// refinement, integration or equiconnection code; they scan raw piece lists directly.

#include "hm/dugundji.hpp"
#include "hm/equiconnect.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using hm::Rational;
using hm::StepFunction;

// piece lookup by linear scan
inline std::size_t value_at(const StepFunction& f, const Rational& t) {
  const auto bps = f.breakpoints();
  for (std::size_t i = 0; i + 1 < bps.size(); ++i)
    if (bps[i] <= t && t < bps[i + 1]) return f.values()[i];
  return f.values().back();
}

inline std::vector<Rational> merged_cuts(std::initializer_list<const StepFunction*> fs, std::vector<Rational> extra = {}) {
  std::set<Rational> cuts(extra.begin(), extra.end());
  cuts.insert(0);
  cuts.insert(1);
  for (const auto* f : fs) cuts.insert(f->breakpoints().begin(), f->breakpoints().end());
  return {cuts.begin(), cuts.end()};
}

// Sum of d(f, g) over every cell of the merged breakpoints, sampled at the cell's midpoint.
inline Rational distance(const StepFunction& f, const StepFunction& g) {
  const auto cuts = merged_cuts({&f, &g});
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    total += f.space()->distance(value_at(f, mid), value_at(g, mid)) * (cuts[i + 1] - cuts[i]);
  }
  return total;
}

inline Rational average(const hm::TestFunctional& phi, const Rational& a, const Rational& b, const StepFunction& f) {
  const auto cuts = merged_cuts({&f}, {a, b});
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] < a || cuts[i + 1] > b) continue;
    total += phi.value(value_at(f, (cuts[i] + cuts[i + 1]) / 2)) * (cuts[i + 1] - cuts[i]);
  }
  return total / (b - a);
}

// Pointwise comparison on all cells of both breakpoint sets.
inline bool same_function(const StepFunction& f, const StepFunction& g) {
  const auto cuts = merged_cuts({&f, &g});
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    if (value_at(f, mid) != value_at(g, mid)) return false;
  }
  return true;
}

// n=1 vertex list up to the given level, ascending.
inline std::vector<Rational> interval_vertices(unsigned depth) {
  std::vector<Rational> v{Rational(1, 2), Rational(5, 8)};
  for (unsigned k = 2; k <= depth; ++k) {
    mpz_class den = 1;
    den <<= k;
    v.push_back(Rational(mpz_class(1), den));
    v.push_back(1 - Rational(mpz_class(1), den));
  }
  for (auto& r : v) r.canonicalize();
  std::sort(v.begin(), v.end());
  return v;
}

// Hat weights at x in (0,1) on the n=1 vertex path, as (vertex, weight) with weight > 0, ascending.
inline std::vector<std::pair<Rational, Rational>> interval_hats(const Rational& x, unsigned depth) {
  const auto v = interval_vertices(depth);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == x) return {{x, Rational(1)}};
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] < x && x < v[i + 1]) {
      const Rational w = (v[i + 1] - x) / (v[i + 1] - v[i]);
      return {{v[i], w}, {v[i + 1], 1 - w}};
    }
  }
  return {};
}

}  // namespace oracle
