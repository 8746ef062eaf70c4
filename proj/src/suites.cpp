#include "hm/suites.hpp"

#include "hm/io.hpp"
#include "hm/random.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace hm {

namespace {

using json = nlohmann::json;

struct CaseFailure {
  std::string property;
  std::string input;
};

using CaseResult = std::optional<CaseFailure>;
using CaseFn = std::function<CaseResult(Rng&, unsigned, const SuiteOptions&)>;

unsigned den_for(unsigned size) { return 2 * size + 2; }

std::string dump(const json& j) { return j.dump(); }

json steps_json(std::initializer_list<const StepFunction*> fs) {
  json out = json::array();
  for (const auto* f : fs) out.push_back(io::stepfn_to_json(*f));
  return out;
}

// Distance recomputed by evaluating both functions on every cell of the merged breakpoint set.
Rational brute_distance(const StepFunction& f, const StepFunction& g) {
  std::set<Rational> cuts(f.breakpoints().begin(), f.breakpoints().end());
  cuts.insert(g.breakpoints().begin(), g.breakpoints().end());
  const std::vector<Rational> c(cuts.begin(), cuts.end());
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    total += f.space()->distance(evaluate(f, c[i]), evaluate(g, c[i])) * (c[i + 1] - c[i]);
  return total;
}

// Window average recomputed cell by cell on the breakpoints of f and the window endpoints.
Rational brute_average(const WindowedFunctional& wf, const StepFunction& f) {
  std::set<Rational> cuts(f.breakpoints().begin(), f.breakpoints().end());
  cuts.insert(wf.window.a());
  cuts.insert(wf.window.b());
  const std::vector<Rational> c(cuts.begin(), cuts.end());
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] >= wf.window.a() && c[i + 1] <= wf.window.b())
      total += wf.functional.value(evaluate(f, c[i])) * (c[i + 1] - c[i]);
  return total / wf.window.length();
}

struct Piece {
  Rational begin, end;
  std::size_t value;
};

std::vector<Piece> pieces_on(const StepFunction& f, const Rational& lo, const Rational& hi) {
  std::vector<Piece> out;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    Rational b = std::max(f.piece_begin(i), lo), e = std::min(f.piece_end(i), hi);
    if (b < e) out.push_back({b, e, f.values()[i]});
  }
  return out;
}

StepFunction from_piece_list(const SpaceHandle& space, const std::vector<Piece>& pieces) {
  std::vector<Rational> bps{Rational(0)};
  std::vector<std::size_t> values;
  for (const auto& p : pieces) {
    bps.push_back(p.end);
    values.push_back(p.value);
  }
  return StepFunction::from_pieces(space, std::move(bps), std::move(values));
}

// f with its restriction to [a, a+h) cyclically shifted by s; every integral over [a, a+h) is kept.
StepFunction rotate_cell(const StepFunction& f, const Rational& a, const Rational& h, const Rational& s) {
  std::vector<Piece> out = pieces_on(f, 0, a);
  for (auto p : pieces_on(f, a + s, a + h)) out.push_back({p.begin - s, p.end - s, p.value});
  for (auto p : pieces_on(f, a, a + s)) out.push_back({p.begin + h - s, p.end + h - s, p.value});
  for (auto p : pieces_on(f, a + h, 1)) out.push_back(p);
  return from_piece_list(f.space(), out);
}

StepFunction overwrite(const StepFunction& f, const Rational& lo, const Rational& hi, std::size_t value) {
  std::vector<Piece> out = pieces_on(f, 0, lo);
  if (lo < hi) out.push_back({lo, hi, value});
  for (auto p : pieces_on(f, hi, 1)) out.push_back(p);
  return from_piece_list(f.space(), out);
}

// ---------------------------------------------------------------------------------------------

CaseResult metric_axioms(Rng& rng, unsigned size, const SuiteOptions& options) {
  if (options.inject_fault) {
    const auto n = static_cast<std::size_t>(rng.between(3, 5));
    RawSpace raw;
    for (std::size_t i = 0; i < n; ++i) raw.points.push_back("p" + std::to_string(i));
    raw.dist.assign(n, std::vector<Rational>(n, ratio(1, 4)));
    for (std::size_t i = 0; i < n; ++i) raw.dist[i][i] = 0;
    const auto a = rng.below(n);
    const auto b = (a + 1 + rng.below(n - 1)) % n;
    raw.dist[a][b] = raw.dist[b][a] = 1;
    try {
      validate_space(raw);
    } catch (const SpaceError& e) {
      json table = json::array();
      for (const auto& row : raw.dist) table.push_back(io::rationals_to_json(row));
      return CaseFailure{"space axiom: " + std::string(axiom_name(e.axiom())), dump({{"points", raw.points}, {"dist", table}})};
    }
    return std::nullopt;
  }

  const auto space = random_space(rng, 2, 5);
  const unsigned den = den_for(size);
  const StepFunction f = random_step(rng, space, size, den);
  StepFunction g = random_step(rng, space, size, den);
  const StepFunction h = random_step(rng, space, size, den);
  if (rng.chance(1, 5)) {
    // same function written with a redundant breakpoint
    std::vector<Rational> bps(f.breakpoints().begin(), f.breakpoints().end());
    std::vector<std::size_t> vals(f.values().begin(), f.values().end());
    const Rational extra = (bps[0] + bps[1]) / 2;
    bps.insert(bps.begin() + 1, extra);
    vals.insert(vals.begin(), vals.front());
    g = StepFunction::from_pieces(space, bps, vals);
  }
  auto fail = [&](const char* property) {
    return CaseFailure{property, dump({{"space", io::space_to_json(*space)}, {"functions", steps_json({&f, &g, &h})}})};
  };

  const Rational fg = hm_distance(f, g), gf = hm_distance(g, f);
  const Rational gh = hm_distance(g, h), fh = hm_distance(f, h);
  if (StepFunction::from_pieces(space, {f.breakpoints().begin(), f.breakpoints().end()},
                                {f.values().begin(), f.values().end()}) != f)
    return fail("canonicalize is idempotent");
  if (hm_distance(f, f) != 0) return fail("d(f,f) = 0");
  if (fg < 0 || fh < 0 || gh < 0) return fail("nonnegativity");
  if ((fg == 0) != (f == g)) return fail("d(f,g) = 0 iff f = g");
  if (fg != gf) return fail("symmetry");
  if (fh > fg + gh) return fail("triangle inequality");
  if (fg > space->diameter() || fg > 1) return fail("bounded by the diameter of X");
  if (fg != brute_distance(f, g) || gh != brute_distance(g, h)) return fail("agrees with brute-force refinement");
  const Rational delta = rng.rational_in(0, 1, den), eps = rng.rational_in(0, 1, den);
  if (delta > 0 && eps > 0 && fg < delta * eps && !neighborhood_contains(f, delta, eps, g))
    return fail("d < delta*eps implies neighbourhood membership");
  return std::nullopt;
}

CaseResult functoriality(Rng& rng, unsigned size, const SuiteOptions&) {
  const auto x = random_space(rng, 2, 5), y = random_space(rng, 2, 5), z = random_space(rng, 2, 5);
  const auto m1 = random_map(rng, x, y);
  const auto m2 = random_map(rng, y, z);
  const StepFunction alpha = random_step(rng, x, size, den_for(size));
  auto fail = [&](const char* property) {
    return CaseFailure{property, dump({{"m1", io::map_to_json(m1)}, {"m2", io::map_to_json(m2)},
                                       {"alpha", io::stepfn_to_json(alpha)}})};
  };
  if (pushforward(SpaceMap::identity(x), alpha) != alpha) return fail("identity");
  const StepFunction once = pushforward(m1, alpha);
  if (pushforward(SpaceMap::compose(m2, m1), alpha) != pushforward(m2, once)) return fail("composition");
  for (int i = 0; i < 4; ++i) {
    const Rational t = rng.rational_in(0, ratio(den_for(size) - 1, den_for(size)), den_for(size));
    if (evaluate(once, t) != m1(evaluate(alpha, t))) return fail("pointwise relabelling");
  }
  if (!std::includes(alpha.breakpoints().begin(), alpha.breakpoints().end(), once.breakpoints().begin(),
                     once.breakpoints().end()))
    return fail("breakpoints only shrink");
  return std::nullopt;
}

CaseResult pseudometrics(Rng& rng, unsigned size, const SuiteOptions&) {
  const unsigned den = den_for(size);
  const auto space = random_space(rng, 2, 5);
  const auto family = random_family(rng, space, static_cast<std::size_t>(rng.between(1, size)), den);
  const StepFunction f = random_step(rng, space, size, den);
  const StepFunction g = random_step(rng, space, size, den);
  const StepFunction h = random_step(rng, space, size, den);
  auto fail = [&](const char* property) {
    return CaseFailure{property, dump({{"family", io::family_to_json(family)}, {"functions", steps_json({&f, &g, &h})}})};
  };
  const Rational fg = pseudometric(family, f, g);
  if (pseudometric(family, f, f) != 0) return fail("rho(f,f) = 0");
  if (fg != pseudometric(family, g, f)) return fail("symmetry");
  if (pseudometric(family, f, h) > fg + pseudometric(family, g, h)) return fail("triangle inequality");

  const auto pf = project(f, family), pg = project(g, family);
  Rational gap = 0;
  for (std::size_t i = 0; i < pf.size(); ++i) gap = std::max(gap, abs_value(pf[i] - pg[i]));
  if (gap != fg) return fail("projection gap equals the pseudometric");

  const auto& wf = family.front();
  if (window_average(wf, f) != brute_average(wf, f)) return fail("agrees with brute-force integration");
  if (!functional_value_range(wf.functional).contains(window_average(wf, f))) return fail("average within [min phi, max phi]");

  const TestFunctional psi = random_functional(rng, space, den);
  const Rational c = rng.rational_in(-2, 2, den);
  std::vector<Rational> combo;
  for (std::size_t i = 0; i < space->size(); ++i) combo.push_back(wf.functional.value(i) + c * psi.value(i));
  const WindowedFunctional mixed{TestFunctional(space, combo), wf.window};
  const WindowedFunctional psi_w{psi, wf.window};
  if (window_average(mixed, f) != window_average(wf, f) + c * window_average(psi_w, f)) return fail("linearity in phi");

  const Rational t = rng.rational_in(ratio(1, den), ratio(den - 1, den), den);
  const WindowedFunctional whole{wf.functional, Window(0, 1)};
  const WindowedFunctional left{wf.functional, Window(0, t)};
  const WindowedFunctional right{wf.functional, Window(t, 1)};
  if (window_average(whole, f) != t * window_average(left, f) + (1 - t) * window_average(right, f))
    return fail("splitting identity");

  // |phi(x) - phi(y)| <= L d(x,y) pointwise, so the averages differ by at most L d_HM / (b - a).
  Rational lip = 0;
  for (std::size_t x = 0; x < space->size(); ++x)
    for (std::size_t y = x + 1; y < space->size(); ++y)
      lip = std::max(lip, Rational(abs_value(wf.functional.value(x) - wf.functional.value(y)) / space->distance(x, y)));
  if (abs_value(window_average(wf, f) - window_average(wf, g)) > lip * hm_distance(f, g) / wf.window.length())
    return fail("Lipschitz bound by d_HM");
  return std::nullopt;
}

CaseResult midpoint(Rng& rng, unsigned size, const SuiteOptions&) {
  const unsigned den = den_for(size);
  const auto space = random_space(rng, 2, 5);
  const StepFunction alpha = random_step(rng, space, size, den);
  const StepFunction beta = random_step(rng, space, size, den);
  const auto coords = random_family(rng, space, static_cast<std::size_t>(rng.between(1, size)), den);
  const StepFunction gamma = hm_midpoint(alpha, beta, coords);
  auto fail = [&](const char* property) {
    return CaseFailure{property, dump({{"family", io::family_to_json(coords)}, {"functions", steps_json({&alpha, &beta})}})};
  };
  const auto expected = convex_midpoint_vector(project(alpha, coords), project(beta, coords));
  if (project(gamma, coords) != expected) return fail("projection of the interleaving is the midpoint");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Rational independent = (brute_average(coords[i], alpha) + brute_average(coords[i], beta)) / 2;
    if (brute_average(coords[i], gamma) != independent) return fail("midpoint recomputed by brute force");
  }
  for (auto t : gamma.breakpoints()) {
    if (t == 1) break;
    const auto v = evaluate(gamma, t);
    if (v != evaluate(alpha, t) && v != evaluate(beta, t)) return fail("interleaving selects alpha or beta");
  }
  if (alpha == beta && gamma != alpha) return fail("midpoint of a point is the point");
  return std::nullopt;
}

CaseResult certificate(Rng& rng, unsigned size, const SuiteOptions&) {
  const unsigned den = den_for(size);
  const auto space = random_space(rng, 2, 4);
  const TestFunctional phi = random_functional(rng, space, 4);
  const Rational delta = ratio(rng.between(1, 16), rng.between(1, 8));
  const auto cert = make_certificate(phi, delta);

  const StepFunction alpha1 = random_step(rng, space, size, den);
  const StepFunction beta1 = random_step(rng, space, size, den);
  auto perturb = [&](StepFunction f) {
    const Rational h = ratio(1, cert.n);
    for (long i = 0; i < cert.n; ++i) {
      const Rational& a = cert.grid[static_cast<std::size_t>(i)];
      if (rng.chance(1, 2)) f = rotate_cell(f, a, h, h * rng.rational_in(0, 1, den));
      if (rng.chance(1, 2) && !cert.trivial) {
        const Rational len = std::min(h, Rational(cert.v_threshold * h / (4 * cert.norm))) * rng.rational_in(0, 1, den);
        const Rational lo = a + (h - len) * rng.rational_in(0, 1, den);
        f = overwrite(f, lo, lo + len, rng.below(space->size()));
      }
    }
    return f;
  };
  const StepFunction alpha2 = perturb(alpha1);
  const StepFunction beta2 = perturb(beta1);
  const Rational t1 = rng.rational_in(0, 1, den);
  Rational t2 = t1 + cert.e_threshold * ratio(15, 16) * rng.rational_in(-1, 1, den);
  t2 = std::clamp(t2, Rational(0), Rational(1));

  auto fail = [&](const char* property) {
    return CaseFailure{property, dump({{"certificate", io::certificate_to_json(cert)},
                                       {"functions", steps_json({&alpha1, &beta1, &alpha2, &beta2})},
                                       {"t1", format_rational(t1)},
                                       {"t2", format_rational(t2)}})};
  };
  if (!cert.trivial) {
    if (!(ratio(1, cert.n) < delta / (2 * cert.norm))) return fail("1/n < delta/(2c)");
    if (cert.n > 1 && ratio(1, cert.n - 1) < delta / (2 * cert.norm)) return fail("n is the least admissible grid");
  }
  const auto check = check_certificate(cert, alpha1, beta1, t1, alpha2, beta2, t2);
  if (!check.in_v || !check.in_e) return fail("generated inputs satisfy V and E");
  if (!check.conclusion) return fail("V and E imply the conclusion");
  return std::nullopt;
}

CaseResult e_laws(Rng& rng, unsigned size, const SuiteOptions&) {
  const unsigned den = den_for(size);
  const auto space = random_space(rng, 2, 5);
  const StepFunction alpha = random_step(rng, space, size, den);
  const StepFunction beta = random_step(rng, space, size, den);
  const Rational t = rng.rational_in(0, 1, den);
  const auto count = static_cast<std::size_t>(rng.between(1, 4));
  std::vector<StepFunction> points;
  for (std::size_t i = 0; i < count; ++i) points.push_back(random_step(rng, space, size, den));
  const auto weights = random_simplex_weights(rng, count, true);
  auto fail = [&](const char* property) {
    json pts = json::array();
    for (const auto& p : points) pts.push_back(io::stepfn_to_json(p));
    return CaseFailure{property, dump({{"alpha", io::stepfn_to_json(alpha)}, {"beta", io::stepfn_to_json(beta)},
                                       {"t", format_rational(t)}, {"points", pts},
                                       {"weights", io::rationals_to_json(weights)}})};
  };

  if (e1(alpha, beta, 1) != alpha) return fail("e1(a,b,1) = a");
  if (e1(alpha, beta, 0) != beta) return fail("e1(a,b,0) = b");
  if (e1(alpha, alpha, t) != alpha) return fail("e(a,a,t) = a");
  const StepFunction spliced = e1(alpha, beta, t);
  if (spliced.piece_count() > alpha.piece_count() + beta.piece_count() + 1) return fail("e1 piece bound");

  const auto j = rng.below(count);
  if (e_n(points, SimplexWeights::vertex(count, j)) != points[j]) return fail("vertex identity");
  const std::vector<StepFunction> diagonal(count, alpha);
  if (e_n(diagonal, SimplexWeights(weights)) != alpha) return fail("diagonal identity");

  const StepFunction image = e_n(points, SimplexWeights(weights));
  auto padded_points = points;
  auto padded_weights = weights;
  const auto at = static_cast<std::ptrdiff_t>(rng.below(count + 1));
  padded_points.insert(padded_points.begin() + at, random_step(rng, space, size, den));
  padded_weights.insert(padded_weights.begin() + at, Rational(0));
  if (e_n(padded_points, SimplexWeights(padded_weights)) != image) return fail("zero-padding invariance");

  for (auto l : image.breakpoints()) {
    if (l == 1) break;
    const auto v = evaluate(image, l);
    if (std::none_of(points.begin(), points.end(), [&](const StepFunction& p) { return evaluate(p, l) == v; }))
      return fail("pointwise selection");
  }
  if (count == 2 && weights[0] + weights[1] == 1 && e_n(points, SimplexWeights(weights)) != e1(points[0], points[1], weights[0]))
    return fail("e_2 unfolds to e1");

  const auto target = random_space(rng, 2, 4);
  const auto m = random_map(rng, space, target);
  if (pushforward(m, spliced) != e1(pushforward(m, alpha), pushforward(m, beta), t)) return fail("naturality");
  return std::nullopt;
}

CubePoint random_interior_point(Rng& rng, int n, unsigned max_level) {
  const auto k = static_cast<unsigned>(rng.between(1, max_level));
  const Rational lo = k == 1 ? dyadic(2) : dyadic(k + 1);
  const Rational hi = k == 1 ? ratio(1, 2) : dyadic(k);
  const Rational gap = rng.rational_in(lo, hi, 16);
  CubePoint x(static_cast<std::size_t>(n));
  for (auto& c : x) c = rng.rational_in(gap, 1 - gap, 32);
  x[rng.below(static_cast<std::uint64_t>(n))] = rng.chance(1, 2) ? gap : Rational(1 - gap);
  return x;
}

CaseResult dugundji_case(Rng& rng, unsigned size, int n) {
  const auto sys = DugundjiSystem::build(n);
  const auto space = random_space(rng, 2, 4);
  const unsigned den = den_for(size);
  const CubePoint x = random_interior_point(rng, n, 2 + size);
  BoundaryData f(n, space);
  for (const auto& a : required_anchors(sys, x)) f.set(a, random_step(rng, space, size, den));
  CubePoint b(static_cast<std::size_t>(n));
  for (auto& c : b) c = rng.rational_in(0, 1, den);
  b[rng.below(static_cast<std::uint64_t>(n))] = rng.chance(1, 2) ? 0 : 1;
  f.set(b, random_step(rng, space, size, den));

  auto fail = [&](const char* property) {
    return CaseFailure{property, dump({{"x", format_point(x)}, {"boundary", io::boundary_to_json(f)}})};
  };
  const auto pou = pou_eval(sys, x);
  Rational total = 0;
  for (const auto& e : pou) {
    if (e.weight <= 0) return fail("positive weights");
    total += e.weight;
    if (max_distance(x, sys.anchor(e.vertex)) > 2 * boundary_distance(x)) return fail("d(x,a_s) <= 2 d(x,boundary)");
  }
  if (total != 1) return fail("weights sum to 1");
  if (pou.size() > static_cast<std::size_t>(n + 1)) return fail("at most n+1 active cells");

  const StepFunction value = extend(sys, f, x);
  if (extend(sys, f, x) != value) return fail("extension is deterministic");
  std::vector<const StepFunction*> sources;
  for (const auto& a : required_anchors(sys, x)) sources.push_back(f.find(a));
  std::set<Rational> probes(value.breakpoints().begin(), value.breakpoints().end());
  for (int i = 0; i < 4; ++i) probes.insert(rng.rational_in(0, 1, den));
  for (const auto& l : probes) {
    if (l == 1) continue;
    const auto v = evaluate(value, l);
    if (std::none_of(sources.begin(), sources.end(), [&](const StepFunction* s) { return evaluate(*s, l) == v; }))
      return fail("range confinement");
  }
  if (extend(sys, f, b) != *f.find(b)) return fail("F agrees with f on the boundary");
  return std::nullopt;
}

Rational perimeter_parameter(const CubePoint& p) {
  if (p[1] == 0) return p[0];
  if (p[0] == 1) return 1 + p[1];
  if (p[1] == 1) return 3 - p[0];
  return 4 - p[1];
}

CaseResult boundary_continuity(Rng& rng, unsigned size, const SuiteOptions&) {
  const unsigned den = den_for(size);
  const auto space = random_space(rng, 2, 4);
  const Rational tol = ratio(1, 100);
  if (rng.chance(1, 2)) {
    const auto sys = DugundjiSystem::build(1);
    BoundaryData f(1, space);
    f.set({Rational(0)}, random_step(rng, space, size, den));
    f.set({Rational(1)}, random_step(rng, space, size, den));
    const CubePoint p{Rational(rng.chance(1, 2) ? 0 : 1)};
    const auto report = boundary_continuity_probe(sys, f, p, dyadic_path(p, 12), tol);
    if (!report.tail_below_tol() || report.distances.back() != 0)
      return CaseFailure{"n=1 extension reaches f(p) along the dyadic path",
                         dump({{"p", format_point(p)}, {"boundary", io::boundary_to_json(f)}})};
    return std::nullopt;
  }
  // Continuous boundary map p -> e1(alpha, beta, s(p)) with s piecewise linear in the perimeter.
  const auto sys = DugundjiSystem::build(2);
  const StepFunction alpha = random_step(rng, space, size, den);
  const StepFunction beta = random_step(rng, space, size, den);
  auto boundary_value = [&](const CubePoint& q) {
    const Rational s = perimeter_parameter(q);
    return e1(alpha, beta, std::min(s, Rational(4 - s)) / 2);
  };
  CubePoint p{rng.rational_in(0, 1, den), rng.rational_in(0, 1, den)};
  p[rng.below(2)] = rng.chance(1, 2) ? 0 : 1;
  BoundaryData f(2, space);
  f.set(p, boundary_value(p));
  const auto path = dyadic_path(p, 12);
  for (const auto& x : path)
    for (const auto& a : required_anchors(sys, x)) f.set(a, boundary_value(a));
  const auto report = boundary_continuity_probe(sys, f, p, path, tol);
  const Rational bound = 6 * dyadic(12);
  if (!report.tail_below_tol() || report.distances.back() > bound)
    return CaseFailure{"n=2 extension approaches f(p) along the dyadic path",
                       dump({{"p", format_point(p)}, {"alpha", io::stepfn_to_json(alpha)},
                             {"beta", io::stepfn_to_json(beta)},
                             {"distances", io::rationals_to_json(report.distances)}})};
  return std::nullopt;
}

const std::vector<std::pair<std::string, CaseFn>>& registry() {
  static const std::vector<std::pair<std::string, CaseFn>> suites = {
      {"metric-axioms", metric_axioms},
      {"functoriality", functoriality},
      {"pseudometrics", pseudometrics},
      {"midpoint", midpoint},
      {"certificate", certificate},
      {"e-n-laws", e_laws},
      {"dugundji-1", [](Rng& r, unsigned s, const SuiteOptions&) { return dugundji_case(r, s, 1); }},
      {"dugundji-2", [](Rng& r, unsigned s, const SuiteOptions&) { return dugundji_case(r, s, 2); }},
      {"boundary-continuity", boundary_continuity},
  };
  return suites;
}

CaseResult run_case(const CaseFn& fn, std::uint64_t seed, unsigned size, const SuiteOptions& options) {
  Rng rng(seed);
  try {
    return fn(rng, size, options);
  } catch (const std::exception& e) {
    return CaseFailure{std::string("exception: ") + e.what(), "{}"};
  }
}

SuiteReport run_impl(std::string_view name, std::uint64_t seed, std::size_t cases, const SuiteOptions& options,
                     bool parallel) {
  const auto& suites = registry();
  auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == name; });
  if (it == suites.end()) throw InputError("unknown suite \"" + std::string(name) + "\"");
  const CaseFn& fn = it->second;
  const unsigned size = std::max(1u, options.size);

  const auto started = std::chrono::steady_clock::now();
  std::vector<std::optional<SuiteFailure>> slots(cases);
  const auto count = static_cast<std::int64_t>(cases);

#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto index = static_cast<std::uint64_t>(i);
    const std::uint64_t s = case_seed(seed, index);
    auto failure = run_case(fn, s, size, options);
    if (!failure) continue;
    unsigned failing_size = size;
    for (unsigned smaller = 1; smaller < size; ++smaller) {
      if (auto f = run_case(fn, s, smaller, options)) {
        failure = std::move(f);
        failing_size = smaller;
        break;
      }
    }
    slots[i] = SuiteFailure{failure->property, index, s, failing_size, failure->input};
  }

  SuiteReport report{std::string(name), seed, cases, {}, 0};
  for (auto& slot : slots)
    if (slot) report.failures.push_back(std::move(*slot));
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.push_back(s.first);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed, std::size_t cases, const SuiteOptions& options) {
  return run_impl(name, seed, cases, options, true);
}

SuiteReport run_suite_serial(std::string_view name, std::uint64_t seed, std::size_t cases,
                             const SuiteOptions& options) {
  return run_impl(name, seed, cases, options, false);
}

std::string report_json(const SuiteReport& report, bool include_wall_time) {
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"property", f.property},
                        {"case", f.case_index},
                        {"seed", f.seed},
                        {"size", f.size},
                        {"minimized_input", json::parse(f.input)}});
  json out = {{"suite", report.suite}, {"seed", report.seed}, {"cases", report.cases}, {"failures", failures}};
  if (include_wall_time) out["wall_time_ms"] = report.wall_time_ms;
  return out.dump(2);
}

std::string report_summary(const SuiteReport& report) {
  std::ostringstream out;
  out << report.suite << ": " << report.cases << " cases, " << report.failures.size() << " failures ("
      << static_cast<long>(report.wall_time_ms) << " ms)";
  for (std::size_t i = 0; i < report.failures.size() && i < 20; ++i) {
    const auto& f = report.failures[i];
    out << "\n  case " << f.case_index << " [size " << f.size << "]: " << f.property;
  }
  if (report.failures.size() > 20) out << "\n  ...";
  return out.str();
}

}  // namespace hm
