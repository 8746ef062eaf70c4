#pragma once

// Dugundji systems for the open cube (0,1)^n, n = 1, 2, and the extension operator built on e_n.
//
// Geometry uses the max-coordinate metric d∞. The open cube is exhausted by dyadic rings
//   R_1 = {d(x,∂) >= 1/4},   R_k = {2^-(k+1) <= d(x,∂) <= 2^-k}  (k >= 2)
// each triangulated conformingly with rational vertices. The cells U_s are the open vertex
// stars of the triangulation, the partition of unity is the family of barycentric hat
// functions, and the anchor of a vertex is its orthogonal projection onto the nearest face
// of the cube (ties between faces go to the lexicographically smallest projection).
//
//   n = 1: vertices 1/2, 5/8 (level 1) and 2^-k, 1 - 2^-k (level k >= 2).
//   n = 2: R_1 is the 1/8-grid on [1/4,3/4]^2; R_k (k >= 2) is the frame of squares of side
//          h = 2^-(k+1) between the squares of half-width 1/2 - h and 1/2 - 2h, with the
//          outward edges bisected to meet R_{k+1}. Every square is fanned from its centre.
//
// A vertex v has level k when 2^-(k+1) < d(v,∂) <= 2^-k; the cells are ordered by
// (level, lexicographic position).

#include "hm/equiconnect.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hm {

using CubePoint = std::vector<Rational>;

Rational boundary_distance(const CubePoint& x);
Rational max_distance(const CubePoint& a, const CubePoint& b);
bool in_closed_cube(const CubePoint& x);
bool is_interior(const CubePoint& x);
bool on_boundary(const CubePoint& x);

// "p/q" or "p/q,p/q".
CubePoint parse_point(std::string_view text);
std::string format_point(const CubePoint& x);

// n + 1 affinely independent vertices.
struct Simplex {
  std::vector<CubePoint> vertices;
};

// Barycentric coordinates of x in s (possibly negative when x lies outside).
std::vector<Rational> barycentric(const Simplex& s, const CubePoint& x);

class DugundjiSystem {
 public:
  static DugundjiSystem build(int n);

  int dimension() const noexcept { return n_; }
  unsigned level_of(const CubePoint& v) const;
  CubePoint anchor(const CubePoint& vertex) const;
  // Copy with one anchor replaced (used to exercise the verifier's negative paths).
  DugundjiSystem with_anchor(const CubePoint& vertex, CubePoint anchor) const;
  // Global order of the index set.
  bool precedes(const CubePoint& a, const CubePoint& b) const;

  // Simplices of ring k >= 1.
  std::vector<Simplex> ring(unsigned k) const;
  // A handful of simplices among which one contains the interior point x.
  std::vector<Simplex> candidates(const CubePoint& x) const;
  unsigned ring_of(const CubePoint& x) const;

 private:
  explicit DugundjiSystem(int n) : n_(n) {}

  int n_;
  std::map<CubePoint, CubePoint> anchor_overrides_;
};

struct PouEntry {
  CubePoint vertex;
  Rational weight;
  bool operator==(const PouEntry&) const = default;
};

// Nonzero hat-function values at an interior point, sorted by the global order.
std::vector<PouEntry> pou_eval(const DugundjiSystem& sys, const CubePoint& x);

struct Violation {
  std::string condition;
  std::string cell;
  std::string witness;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

struct SystemReport {
  int n = 0;
  unsigned depth = 0;
  std::size_t cells_checked = 0;
  std::size_t simplices = 0;
  std::size_t points_checked = 0;
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

struct VerifyOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
};

// Checks every cell of level <= depth:
//   containment: cell inside the open cube, anchor on the boundary;
//   anchor distance: d∞(w, a_s) <= 2 d∞(w, ∂) at every vertex w of every simplex of the star. The function
//       d∞(·, a_s) - 2 d∞(·, ∂) is convex on a simplex, so the vertex bound covers the closed star;
// and at every vertex, simplex centroid, edge midpoint and `samples` random points:
//   cover: the point meets between 1 and n + 1 cells and the triangulation is conforming there;
//   the partition of unity is positive, supported in the cells and sums to 1.
// Cells and points are checked in parallel when OpenMP is available.
SystemReport verify_system(const DugundjiSystem& sys, unsigned depth, const VerifyOptions& options = {});

// Single-threaded reference for verify_system; the reports are identical.
SystemReport verify_system_serial(const DugundjiSystem& sys, unsigned depth, const VerifyOptions& options = {});

// Values of a map ∂I^n -> HM X at finitely many boundary points.
class BoundaryData {
 public:
  explicit BoundaryData(int dimension, SpaceHandle space = nullptr);

  int dimension() const noexcept { return n_; }
  const SpaceHandle& space() const noexcept { return space_; }
  void set(const CubePoint& point, StepFunction value);
  const StepFunction* find(const CubePoint& point) const;
  const std::map<CubePoint, StepFunction>& values() const noexcept { return values_; }

 private:
  int n_;
  SpaceHandle space_;
  std::map<CubePoint, StepFunction> values_;
};

// Anchors of the cells active at interior x, in the global order.
std::vector<CubePoint> required_anchors(const DugundjiSystem& sys, const CubePoint& x);

// F(x) = f(x) on the boundary, otherwise e_{n+1} of the active anchors' values weighted by the
// partition of unity (active cells in the global order, unused slots padded with weight 0).
StepFunction extend(const DugundjiSystem& sys, const BoundaryData& f, const CubePoint& x);

// x_m → p with d∞(x_m, p) = 2^-m, m = 1..steps, moving along the coordinates where p is on a face.
std::vector<CubePoint> dyadic_path(const CubePoint& p, unsigned steps);

struct BoundaryProbeReport {
  std::vector<Rational> distances;
  // First index from which every distance is below tol.
  std::optional<std::size_t> tail_start;
  bool tail_below_tol() const noexcept { return tail_start.has_value(); }
};

BoundaryProbeReport boundary_continuity_probe(const DugundjiSystem& sys, const BoundaryData& f,
                                              const CubePoint& p, const std::vector<CubePoint>& path,
                                              const Rational& tol);

struct ShrinkCounterexample {
  std::vector<StepFunction> points;
  std::vector<Rational> weights;
  StepFunction image;
  Rational distance;
};

struct ShrinkProbeReport {
  std::size_t samples = 0;
  std::optional<ShrinkCounterexample> counterexample;
};

// Searches for tuples within pseudometric distance delta_inner of z whose e_arity image lies at
// distance >= delta_outer. A report without counterexample means none was found in k samples.
ShrinkProbeReport shrink_probe(const StepFunction& z, std::span<const WindowedFunctional> family,
                               const Rational& delta_outer, const Rational& delta_inner, std::size_t k,
                               std::uint64_t seed, std::size_t arity = 3);

}  // namespace hm
