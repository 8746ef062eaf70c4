#include "hm/dugundji.hpp"

#include "hm/random.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace hm {

Rational boundary_distance(const CubePoint& x) {
  Rational best = 1;
  for (const auto& c : x) best = std::min({best, c, Rational(1 - c)});
  return best;
}

Rational max_distance(const CubePoint& a, const CubePoint& b) {
  Rational best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, abs_value(a[i] - b[i]));
  return best;
}

bool in_closed_cube(const CubePoint& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c >= 0 && c <= 1; });
}

bool is_interior(const CubePoint& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c > 0 && c < 1; });
}

bool on_boundary(const CubePoint& x) { return in_closed_cube(x) && !is_interior(x); }

CubePoint parse_point(std::string_view text) {
  CubePoint p;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    p.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return p;
}

std::string format_point(const CubePoint& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += format_rational(x[i]);
  }
  return out;
}

std::vector<Rational> barycentric(const Simplex& s, const CubePoint& x) {
  if (s.vertices.size() == 2) {
    const Rational& u = s.vertices[0][0];
    const Rational& v = s.vertices[1][0];
    Rational lv = (x[0] - u) / (v - u);
    return {Rational(1 - lv), lv};
  }
  const auto& a = s.vertices[0];
  const auto& b = s.vertices[1];
  const auto& c = s.vertices[2];
  const Rational det = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
  Rational lb = ((x[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (x[1] - a[1])) / det;
  Rational lc = ((b[0] - a[0]) * (x[1] - a[1]) - (x[0] - a[0]) * (b[1] - a[1])) / det;
  return {Rational(1 - lb - lc), lb, lc};
}

namespace {

CubePoint pt(const Rational& x) { return {x}; }
CubePoint pt(const Rational& x, const Rational& y) { return {x, y}; }

// Fan triangulation from the centre of the square [x0,x0+h]x[y0,y0+h]; flagged edges are bisected.
void fan_square(const Rational& x0, const Rational& y0, const Rational& h, bool split_bottom, bool split_right,
                bool split_top, bool split_left, std::vector<Simplex>& out) {
  const Rational x1 = x0 + h, y1 = y0 + h;
  const Rational half = h / 2;
  std::vector<CubePoint> ring{pt(x0, y0)};
  if (split_bottom) ring.push_back(pt(x0 + half, y0));
  ring.push_back(pt(x1, y0));
  if (split_right) ring.push_back(pt(x1, y0 + half));
  ring.push_back(pt(x1, y1));
  if (split_top) ring.push_back(pt(x0 + half, y1));
  ring.push_back(pt(x0, y1));
  if (split_left) ring.push_back(pt(x0, y0 + half));
  const CubePoint centre = pt(x0 + half, y0 + half);
  for (std::size_t i = 0; i < ring.size(); ++i)
    out.push_back(Simplex{{centre, ring[i], ring[(i + 1) % ring.size()]}});
}

// Square (i, j) of ring k, or nothing when (i, j) is not one of its squares.
void ring_square(unsigned k, std::int64_t i, std::int64_t j, std::vector<Simplex>& out) {
  if (k == 1) {
    if (i < 2 || i > 5 || j < 2 || j > 5) return;
    const Rational h = dyadic(3);
    fan_square(h * Rational(i), h * Rational(j), h, false, false, false, false, out);
    return;
  }
  const std::int64_t m = (std::int64_t{1} << (k + 1)) - 2;
  if (i < 1 || i > m || j < 1 || j > m) return;
  if (i != 1 && i != m && j != 1 && j != m) return;
  const Rational h = dyadic(k + 1);
  fan_square(h * Rational(i), h * Rational(j), h, j == 1, i == m, j == m, i == 1, out);
}

std::int64_t squares_per_side(unsigned k) { return k == 1 ? 0 : (std::int64_t{1} << (k + 1)) - 2; }

}  // namespace

DugundjiSystem DugundjiSystem::build(int n) {
  if (n != 1 && n != 2) throw InputError("Dugundji systems are built for n = 1 or n = 2, got " + std::to_string(n));
  return DugundjiSystem(n);
}

unsigned DugundjiSystem::level_of(const CubePoint& v) const {
  const Rational d = boundary_distance(v);
  if (d <= 0) throw InputError("boundary point " + format_point(v) + " has no level");
  unsigned k = 1;
  while (!(d > dyadic(k + 1))) ++k;
  return k;
}

CubePoint DugundjiSystem::anchor(const CubePoint& vertex) const {
  if (auto it = anchor_overrides_.find(vertex); it != anchor_overrides_.end()) return it->second;
  const Rational d = boundary_distance(vertex);
  std::optional<CubePoint> best;
  for (std::size_t i = 0; i < vertex.size(); ++i) {
    for (int face = 0; face < 2; ++face) {
      const Rational gap = face == 0 ? vertex[i] : Rational(1 - vertex[i]);
      if (gap != d) continue;
      CubePoint projection = vertex;
      projection[i] = face;
      if (!best || projection < *best) best = std::move(projection);
    }
  }
  return *best;
}

DugundjiSystem DugundjiSystem::with_anchor(const CubePoint& vertex, CubePoint anchor) const {
  DugundjiSystem copy = *this;
  copy.anchor_overrides_[vertex] = std::move(anchor);
  return copy;
}

bool DugundjiSystem::precedes(const CubePoint& a, const CubePoint& b) const {
  const unsigned la = level_of(a), lb = level_of(b);
  if (la != lb) return la < lb;
  return a < b;
}

std::vector<Simplex> DugundjiSystem::ring(unsigned k) const {
  if (k < 1) throw InputError("rings are numbered from 1");
  std::vector<Simplex> out;
  if (n_ == 1) {
    auto seg = [&](Rational a, Rational b) { out.push_back(Simplex{{pt(a), pt(b)}}); };
    if (k == 1) {
      seg(ratio(1, 4), ratio(1, 2));
      seg(ratio(1, 2), ratio(5, 8));
      seg(ratio(5, 8), ratio(3, 4));
    } else {
      seg(dyadic(k + 1), dyadic(k));
      seg(1 - dyadic(k), 1 - dyadic(k + 1));
    }
    return out;
  }
  if (k == 1) {
    for (std::int64_t i = 2; i <= 5; ++i)
      for (std::int64_t j = 2; j <= 5; ++j) ring_square(1, i, j, out);
    return out;
  }
  const std::int64_t m = squares_per_side(k);
  for (std::int64_t i = 1; i <= m; ++i)
    for (std::int64_t j = 1; j <= m; ++j) ring_square(k, i, j, out);
  return out;
}

unsigned DugundjiSystem::ring_of(const CubePoint& x) const {
  const Rational d = boundary_distance(x);
  if (d <= 0) throw InputError("point " + format_point(x) + " is not interior");
  if (d >= dyadic(2)) return 1;
  unsigned k = 2;
  while (d < dyadic(k + 1)) {
    if (++k > 60) throw InputError("point " + format_point(x) + " is too close to the boundary");
  }
  return k;
}

std::vector<Simplex> DugundjiSystem::candidates(const CubePoint& x) const {
  const unsigned k = ring_of(x);
  std::vector<Simplex> out;
  for (unsigned r = k > 1 ? k - 1 : 1; r <= k + 1; ++r) {
    if (n_ == 1) {
      auto seg = ring(r);
      out.insert(out.end(), seg.begin(), seg.end());
      continue;
    }
    const unsigned shift = r == 1 ? 3 : r + 1;
    const auto i0 = floor_scaled(x[0], shift);
    const auto j0 = floor_scaled(x[1], shift);
    for (auto i = i0 - 1; i <= i0; ++i)
      for (auto j = j0 - 1; j <= j0; ++j) ring_square(r, i, j, out);
  }
  return out;
}

std::vector<PouEntry> pou_eval(const DugundjiSystem& sys, const CubePoint& x) {
  if (static_cast<int>(x.size()) != sys.dimension())
    throw InputError("point " + format_point(x) + " has the wrong dimension");
  if (!is_interior(x)) throw InputError("partition of unity is evaluated at interior points only, got " + format_point(x));
  for (const auto& s : sys.candidates(x)) {
    const auto bary = barycentric(s, x);
    if (std::any_of(bary.begin(), bary.end(), [](const Rational& b) { return b < 0; })) continue;
    std::vector<PouEntry> entries;
    for (std::size_t i = 0; i < bary.size(); ++i)
      if (bary[i] > 0) entries.push_back({s.vertices[i], bary[i]});
    std::sort(entries.begin(), entries.end(),
              [&](const PouEntry& a, const PouEntry& b) { return sys.precedes(a.vertex, b.vertex); });
    return entries;
  }
  throw InputError("no simplex contains " + format_point(x));
}

// ---------------------------------------------------------------------------------------------
// Verification

namespace {

// Buckets simplices by the integer cells of a 2^-shift grid that their bounding boxes meet.
class SimplexIndex {
 public:
  SimplexIndex(const std::vector<Simplex>& simplices, unsigned shift) : simplices_(simplices), shift_(shift) {
    for (std::size_t s = 0; s < simplices.size(); ++s) {
      const auto& vs = simplices[s].vertices;
      const std::size_t dim = vs.front().size();
      std::int64_t lo[2] = {0, 0}, hi[2] = {0, 0};
      for (std::size_t c = 0; c < dim; ++c) {
        Rational mn = vs[0][c], mx = vs[0][c];
        for (const auto& v : vs) {
          mn = std::min(mn, v[c]);
          mx = std::max(mx, v[c]);
        }
        lo[c] = floor_scaled(mn, shift);
        hi[c] = floor_scaled(mx, shift);
      }
      for (auto i = lo[0]; i <= hi[0]; ++i)
        for (auto j = lo[1]; j <= hi[1]; ++j) buckets_[key(i, j)].push_back(s);
    }
  }

  std::vector<std::size_t> containing(const CubePoint& x) const {
    const auto i = floor_scaled(x[0], shift_);
    const auto j = x.size() > 1 ? floor_scaled(x[1], shift_) : 0;
    std::vector<std::size_t> out;
    auto it = buckets_.find(key(i, j));
    if (it == buckets_.end()) return out;
    for (auto s : it->second) {
      const auto bary = barycentric(simplices_[s], x);
      if (std::all_of(bary.begin(), bary.end(), [](const Rational& b) { return b >= 0; })) out.push_back(s);
    }
    return out;
  }

 private:
  static std::uint64_t key(std::int64_t i, std::int64_t j) {
    return (static_cast<std::uint64_t>(i) << 32) ^ static_cast<std::uint64_t>(j & 0xffffffff);
  }

  const std::vector<Simplex>& simplices_;
  unsigned shift_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

std::vector<Violation> check_cell(const DugundjiSystem& sys, const CubePoint& v, const std::vector<Simplex>& all,
                                  const std::vector<std::size_t>& star) {
  std::vector<Violation> out;
  const std::string cell = format_point(v);
  const CubePoint a = sys.anchor(v);
  if (!on_boundary(a) || a.size() != v.size())
    out.push_back({"containment", cell, format_point(a), "anchor is not a boundary point"});
  if (star.empty()) out.push_back({"containment", cell, cell, "vertex has an empty star"});
  for (auto s : star) {
    for (const auto& w : all[s].vertices) {
      if (!is_interior(w)) {
        out.push_back({"containment", cell, format_point(w), "cell reaches the boundary"});
        continue;
      }
      const Rational lhs = max_distance(w, a);
      const Rational rhs = 2 * boundary_distance(w);
      if (lhs > rhs)
        out.push_back({"anchor distance", cell, format_point(w),
                       "d(x,a_s) = " + format_rational(lhs) + " > 2 d(x,boundary) = " + format_rational(rhs)});
    }
  }
  const auto peak = pou_eval(sys, v);
  if (peak.size() != 1 || peak.front().vertex != v || peak.front().weight != 1)
    out.push_back({"partition of unity", cell, cell, "hat function does not peak at its own vertex"});
  return out;
}

std::vector<Violation> check_point(const DugundjiSystem& sys, const CubePoint& x, const std::vector<Simplex>& all,
                                   const SimplexIndex& index) {
  std::vector<Violation> out;
  const std::string where = format_point(x);
  const auto containing = index.containing(x);
  if (containing.empty()) {
    out.push_back({"cover", "-", where, "point is not covered by any cell"});
    return out;
  }
  std::map<CubePoint, Rational> carrier;
  bool conforming = true;
  for (auto s : containing) {
    const auto bary = barycentric(all[s], x);
    std::map<CubePoint, Rational> local;
    for (std::size_t i = 0; i < bary.size(); ++i)
      if (bary[i] > 0) local.emplace(all[s].vertices[i], bary[i]);
    if (s == containing.front())
      carrier = std::move(local);
    else if (local != carrier)
      conforming = false;
  }
  if (!conforming) out.push_back({"cover", "-", where, "triangulation is not conforming here"});
  const auto limit = static_cast<std::size_t>(sys.dimension() + 1);
  if (carrier.size() > limit)
    out.push_back({"cover", "-", where, "point meets " + std::to_string(carrier.size()) + " cells"});

  const auto pou = pou_eval(sys, x);
  Rational total = 0;
  std::map<CubePoint, Rational> pou_map;
  for (std::size_t i = 0; i < pou.size(); ++i) {
    total += pou[i].weight;
    pou_map.emplace(pou[i].vertex, pou[i].weight);
    if (pou[i].weight <= 0) out.push_back({"partition of unity", format_point(pou[i].vertex), where, "nonpositive weight"});
    if (i > 0 && !sys.precedes(pou[i - 1].vertex, pou[i].vertex))
      out.push_back({"partition of unity", format_point(pou[i].vertex), where, "entries out of order"});
  }
  if (total != 1) out.push_back({"partition of unity", "-", where, "weights sum to " + format_rational(total)});
  if (pou.size() > limit) out.push_back({"partition of unity", "-", where, "more than n+1 active cells"});
  if (conforming && pou_map != carrier)
    out.push_back({"partition of unity", "-", where, "support differs from the cells containing the point"});
  for (const auto& e : pou) {
    const Rational lhs = max_distance(x, sys.anchor(e.vertex));
    if (lhs > 2 * boundary_distance(x))
      out.push_back({"anchor distance", format_point(e.vertex), where, "d(x,a_s) > 2 d(x,boundary)"});
  }
  return out;
}

std::vector<CubePoint> sample_points(const DugundjiSystem& sys, unsigned depth, const std::vector<Simplex>& inner,
                                     const VerifyOptions& options) {
  std::set<CubePoint> points;
  for (const auto& s : inner) {
    CubePoint centroid(s.vertices.front().size(), Rational(0));
    for (std::size_t a = 0; a < s.vertices.size(); ++a) {
      for (std::size_t c = 0; c < centroid.size(); ++c) centroid[c] += s.vertices[a][c] / Rational(s.vertices.size());
      for (std::size_t b = a + 1; b < s.vertices.size(); ++b) {
        CubePoint mid(centroid.size());
        for (std::size_t c = 0; c < mid.size(); ++c) mid[c] = (s.vertices[a][c] + s.vertices[b][c]) / 2;
        points.insert(mid);
      }
      points.insert(s.vertices[a]);
    }
    points.insert(centroid);
  }
  Rng rng(options.seed);
  const int n = sys.dimension();
  for (std::size_t i = 0; i < options.samples; ++i) {
    const auto k = static_cast<unsigned>(rng.between(1, static_cast<long>(depth)));
    const Rational lo = k == 1 ? dyadic(2) : dyadic(k + 1);
    const Rational hi = k == 1 ? ratio(1, 2) : dyadic(k);
    const Rational gap = rng.rational_in(lo, hi, 16);
    CubePoint x(static_cast<std::size_t>(n));
    for (auto& c : x) c = rng.rational_in(gap, 1 - gap, 64);
    const auto axis = rng.below(static_cast<std::uint64_t>(n));
    x[axis] = rng.chance(1, 2) ? gap : Rational(1 - gap);
    points.insert(std::move(x));
  }
  std::vector<CubePoint> kept;
  for (const auto& p : points)
    if (is_interior(p) && sys.level_of(p) <= depth) kept.push_back(p);
  return kept;
}

SystemReport verify_impl(const DugundjiSystem& sys, unsigned depth, const VerifyOptions& options, bool parallel) {
  if (depth < 1) throw InputError("verification depth must be at least 1");
  SystemReport report;
  report.n = sys.dimension();
  report.depth = depth;

  std::vector<Simplex> all;
  std::size_t inner_count = 0;
  for (unsigned k = 1; k <= depth + 1; ++k) {
    auto ring = sys.ring(k);
    all.insert(all.end(), ring.begin(), ring.end());
    if (k <= depth) inner_count = all.size();
  }
  report.simplices = all.size();

  std::map<CubePoint, std::vector<std::size_t>> stars;
  for (std::size_t s = 0; s < all.size(); ++s)
    for (const auto& v : all[s].vertices) stars[v].push_back(s);
  std::vector<CubePoint> cells;
  for (const auto& [v, star] : stars)
    if (is_interior(v) && sys.level_of(v) <= depth) cells.push_back(v);
  std::sort(cells.begin(), cells.end(), [&](const CubePoint& a, const CubePoint& b) { return sys.precedes(a, b); });
  report.cells_checked = cells.size();

  const std::vector<Simplex> inner(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(inner_count));
  const auto points = sample_points(sys, depth, inner, options);
  report.points_checked = points.size();
  const SimplexIndex index(all, depth + 2);

  std::vector<std::vector<Violation>> cell_results(cells.size());
  std::vector<std::vector<Violation>> point_results(points.size());
  const auto cell_count = static_cast<std::int64_t>(cells.size());
  const auto point_count = static_cast<std::int64_t>(points.size());

#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::int64_t c = 0; c < cell_count; ++c)
    cell_results[c] = check_cell(sys, cells[c], all, stars.at(cells[c]));

#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::int64_t p = 0; p < point_count; ++p) point_results[p] = check_point(sys, points[p], all, index);

  for (auto& r : cell_results) report.violations.insert(report.violations.end(), r.begin(), r.end());
  for (auto& r : point_results) report.violations.insert(report.violations.end(), r.begin(), r.end());
  return report;
}

}  // namespace

SystemReport verify_system(const DugundjiSystem& sys, unsigned depth, const VerifyOptions& options) {
  return verify_impl(sys, depth, options, true);
}

SystemReport verify_system_serial(const DugundjiSystem& sys, unsigned depth, const VerifyOptions& options) {
  return verify_impl(sys, depth, options, false);
}

// ---------------------------------------------------------------------------------------------
// Extension

BoundaryData::BoundaryData(int dimension, SpaceHandle space) : n_(dimension), space_(std::move(space)) {
  if (n_ != 1 && n_ != 2) throw InputError("boundary data dimension must be 1 or 2");
}

void BoundaryData::set(const CubePoint& point, StepFunction value) {
  if (static_cast<int>(point.size()) != n_ || !on_boundary(point))
    throw InputError("boundary value at " + format_point(point) + ", which is not a boundary point");
  if (!space_) space_ = value.space();
  require_same_space(space_, value.space(), "boundary data");
  values_.insert_or_assign(point, std::move(value));
}

const StepFunction* BoundaryData::find(const CubePoint& point) const {
  auto it = values_.find(point);
  return it == values_.end() ? nullptr : &it->second;
}

std::vector<CubePoint> required_anchors(const DugundjiSystem& sys, const CubePoint& x) {
  std::vector<CubePoint> anchors;
  for (const auto& e : pou_eval(sys, x)) anchors.push_back(sys.anchor(e.vertex));
  return anchors;
}

StepFunction extend(const DugundjiSystem& sys, const BoundaryData& f, const CubePoint& x) {
  if (f.dimension() != sys.dimension()) throw InputError("boundary data and system dimensions differ");
  if (static_cast<int>(x.size()) != sys.dimension() || !in_closed_cube(x))
    throw InputError("point " + format_point(x) + " is not in the cube");
  if (on_boundary(x)) {
    if (const auto* value = f.find(x)) return *value;
    throw InputError("no boundary value at " + format_point(x));
  }
  std::vector<StepFunction> points;
  std::vector<Rational> weights;
  for (const auto& e : pou_eval(sys, x)) {
    const CubePoint a = sys.anchor(e.vertex);
    const auto* value = f.find(a);
    if (!value) throw InputError("no boundary value at anchor " + format_point(a));
    points.push_back(*value);
    weights.push_back(e.weight);
  }
  while (points.size() < static_cast<std::size_t>(sys.dimension() + 1)) {
    points.push_back(points.front());
    weights.push_back(Rational(0));
  }
  return e_n(points, SimplexWeights(std::move(weights)));
}

std::vector<CubePoint> dyadic_path(const CubePoint& p, unsigned steps) {
  if (!on_boundary(p)) throw InputError("path target " + format_point(p) + " is not a boundary point");
  std::vector<CubePoint> path;
  for (unsigned m = 1; m <= steps; ++m) {
    CubePoint x = p;
    for (auto& c : x) {
      if (c == 0) c = dyadic(m);
      else if (c == 1) c = 1 - dyadic(m);
    }
    path.push_back(std::move(x));
  }
  return path;
}

BoundaryProbeReport boundary_continuity_probe(const DugundjiSystem& sys, const BoundaryData& f,
                                              const CubePoint& p, const std::vector<CubePoint>& path,
                                              const Rational& tol) {
  const auto* target = f.find(p);
  if (!target) throw InputError("no boundary value at probe target " + format_point(p));
  BoundaryProbeReport report;
  for (const auto& x : path) report.distances.push_back(hm_distance(extend(sys, f, x), *target));
  std::size_t start = report.distances.size();
  while (start > 0 && report.distances[start - 1] < tol) --start;
  if (start < report.distances.size()) report.tail_start = start;
  return report;
}

ShrinkProbeReport shrink_probe(const StepFunction& z, std::span<const WindowedFunctional> family,
                               const Rational& delta_outer, const Rational& delta_inner, std::size_t k,
                               std::uint64_t seed, std::size_t arity) {
  if (delta_inner <= 0 || delta_inner > delta_outer) throw InputError("shrink probe needs 0 < inner <= outer");
  if (arity < 1) throw InputError("shrink probe arity must be positive");
  if (family.empty()) throw InputError("shrink probe needs a nonempty functional family");
  Rng rng(seed);
  ShrinkProbeReport report;
  for (std::size_t sample = 0; sample < k; ++sample) {
    std::vector<StepFunction> points;
    for (std::size_t j = 0; j < arity; ++j) {
      if (rng.chance(1, 4)) {
        points.push_back(z);
        continue;
      }
      const StepFunction noise = random_step(rng, z.space(), 4, 16);
      const Rational start = rng.rational_in(0, 1, 16);
      Rational length = rng.rational_in(0, ratio(1, 2), 16);
      StepFunction candidate = z;
      for (int halvings = 0; halvings < 64; ++halvings) {
        const Rational end = std::min(Rational(start + length), Rational(1));
        candidate = e1(e1(z, noise, start), z, end);
        if (pseudometric(family, candidate, z) < delta_inner) break;
        candidate = z;
        length /= 2;
      }
      points.push_back(std::move(candidate));
    }
    auto weights = random_simplex_weights(rng, arity, true);
    StepFunction image = e_n(points, SimplexWeights(weights));
    Rational distance = pseudometric(family, image, z);
    report.samples = sample + 1;
    if (distance >= delta_outer) {
      report.counterexample = ShrinkCounterexample{std::move(points), std::move(weights), std::move(image), std::move(distance)};
      break;
    }
  }
  return report;
}

}  // namespace hm
