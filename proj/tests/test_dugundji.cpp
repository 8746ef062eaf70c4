#include "fixtures.hpp"
#include "oracles.hpp"

#include "hm/dugundji.hpp"
#include "hm/random.hpp"

#include <doctest.h>

using namespace fx;
using hm::CubePoint;

namespace {

CubePoint pt(const char* text) { return hm::parse_point(text); }

bool has_condition(const hm::SystemReport& r, const std::string& c) {
  for (const auto& v : r.violations)
    if (v.condition == c) return true;
  return false;
}

}  // namespace

TEST_CASE("cube points") {
  CHECK(hm::format_point(pt("2/4,1")) == "1/2,1/1");
  CHECK_THROWS_AS(pt("1/2,"), hm::InputError);
  CHECK(hm::boundary_distance(pt("1/8,1/2")) == q("1/8"));
  CHECK(hm::max_distance(pt("1/8,1/2"), pt("0,1/4")) == q("1/4"));
  CHECK(hm::is_interior(pt("1/3")));
  CHECK(hm::on_boundary(pt("1,1/3")));
  CHECK_FALSE(hm::in_closed_cube(pt("3/2")));
  const hm::Simplex tri{{pt("0,0"), pt("1,0"), pt("0,1")}};
  CHECK(hm::barycentric(tri, pt("1/4,1/2")) == std::vector<Rational>{q("1/4"), q("1/4"), q("1/2")});
  CHECK(hm::barycentric(tri, pt("1,1"))[0] == -1);
}

TEST_CASE("interval system") {
  const auto sys = hm::DugundjiSystem::build(1);
  CHECK_THROWS_AS(hm::DugundjiSystem::build(3), hm::InputError);
  CHECK(hm::pou_eval(sys, pt("3/8")).size() == 2);
  CHECK(sys.anchor(pt("1/4")) == pt("0"));
  CHECK(sys.anchor(pt("3/4")) == pt("1"));
  CHECK(sys.anchor(pt("1/2")) == pt("0"));
  // star of 1/4 is (1/8, 1/2); x <= 2 min(x, 1 - x) at both ends
  for (const char* end : {"1/8", "1/2"}) {
    const auto x = pt(end);
    CHECK(hm::max_distance(x, sys.anchor(pt("1/4"))) <= 2 * hm::boundary_distance(x));
  }
  CHECK(sys.level_of(pt("1/2")) == 1);
  CHECK(sys.level_of(pt("1/4")) == 2);
  CHECK(sys.level_of(pt("7/8")) == 3);
  CHECK(sys.precedes(pt("1/2"), pt("1/4")));
  CHECK(sys.precedes(pt("1/4"), pt("3/4")));

  CHECK(hm::pou_eval(sys, pt("1/4")) == std::vector<hm::PouEntry>{{pt("1/4"), 1}});
  CHECK(hm::pou_eval(sys, pt("3/16")) == std::vector<hm::PouEntry>{{pt("1/4"), q("1/2")}, {pt("1/8"), q("1/2")}});
  CHECK_THROWS_AS(hm::pou_eval(sys, pt("0")), hm::InputError);
  CHECK_THROWS_AS(hm::pou_eval(sys, pt("1/2,1/2")), hm::InputError);

  hm::Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const Rational x = rng.rational_in(q("1/1024"), q("1023/1024"), 1024);
    auto expected = oracle::interval_hats(x, 10);
    auto got = hm::pou_eval(sys, {x});
    REQUIRE(got.size() == expected.size());
    Rational sum = 0;
    for (const auto& e : got) {
      sum += e.weight;
      bool matched = false;
      for (const auto& [v, w] : expected) matched = matched || (CubePoint{v} == e.vertex && w == e.weight);
      CHECK(matched);
    }
    CHECK(sum == 1);
    if (got.size() == 2) CHECK(sys.precedes(got[0].vertex, got[1].vertex));
  }
}

TEST_CASE("interval system verification") {
  const auto sys = hm::DugundjiSystem::build(1);
  CHECK(hm::verify_system(sys, 10).ok());
  const auto bad = sys.with_anchor(pt("1/4"), pt("1"));
  const auto report = hm::verify_system(bad, 10);
  CHECK(has_condition(report, "anchor distance"));
  // h(1/8) = d(1/8, 1) - 2 d(1/8, boundary) = 7/8 - 1/4 > 0
  CHECK(hm::max_distance(pt("1/8"), pt("1")) - 2 * hm::boundary_distance(pt("1/8")) == q("5/8"));
  CHECK(has_condition(hm::verify_system(sys.with_anchor(pt("1/4"), pt("1/8")), 4), "containment"));
  CHECK_THROWS_AS(hm::verify_system(sys, 0), hm::InputError);
}

TEST_CASE("square system") {
  const auto sys = hm::DugundjiSystem::build(2);
  const auto centre = hm::pou_eval(sys, pt("1/3,1/3"));
  Rational sum = 0;
  for (const auto& e : centre) sum += e.weight;
  CHECK(sum == 1);
  CHECK(centre.size() <= 3);
  CHECK(sys.anchor(pt("1/4,1/2")) == pt("0,1/2"));
  CHECK(sys.anchor(pt("1/4,1/4")) == pt("0,1/4"));
  CHECK(sys.anchor(pt("7/8,1/2")) == pt("1,1/2"));
  CHECK(sys.level_of(pt("3/8,1/2")) == 1);
  CHECK(sys.level_of(pt("1/4,1/2")) == 2);
  CHECK(sys.level_of(pt("1/8,1/2")) == 3);

  // points strictly inside a triangle lie in exactly three vertex stars
  hm::Rng rng(21);
  for (unsigned k = 1; k <= 4; ++k) {
    for (const auto& s : sys.ring(k)) {
      CubePoint c{0, 0};
      for (const auto& v : s.vertices)
        for (std::size_t d = 0; d < 2; ++d) c[d] += v[d] / 3;
      const auto entries = hm::pou_eval(sys, c);
      CHECK(entries.size() == 3);
      for (const auto& e : entries) CHECK(e.weight == q("1/3"));
    }
  }
  for (int i = 0; i < 200; ++i) {
    const CubePoint x{rng.rational_in(q("1/64"), q("63/64"), 64), rng.rational_in(q("1/64"), q("63/64"), 64)};
    const auto entries = hm::pou_eval(sys, x);
    Rational total = 0;
    for (std::size_t j = 0; j < entries.size(); ++j) {
      total += entries[j].weight;
      CHECK(entries[j].weight > 0);
      CHECK(hm::max_distance(x, sys.anchor(entries[j].vertex)) <= 2 * hm::boundary_distance(x));
      if (j > 0) CHECK(sys.precedes(entries[j - 1].vertex, entries[j].vertex));
    }
    CHECK(total == 1);
    CHECK(entries.size() <= 3);
  }
}

TEST_CASE("square system verification, parallel against serial") {
  const auto sys = hm::DugundjiSystem::build(2);
  const auto par = hm::verify_system(sys, 4, {300, 5});
  const auto ser = hm::verify_system_serial(sys, 4, {300, 5});
  CHECK(par.ok());
  CHECK(par.cells_checked == ser.cells_checked);
  CHECK(par.simplices == ser.simplices);
  CHECK(par.points_checked == ser.points_checked);
  CHECK(par.violations == ser.violations);

  const auto bad = sys.with_anchor(pt("1/4,1/2"), pt("1,1/2"));
  const auto r1 = hm::verify_system(bad, 3, {100, 1});
  const auto r2 = hm::verify_system_serial(bad, 3, {100, 1});
  CHECK(has_condition(r1, "anchor distance"));
  CHECK(r1.violations == r2.violations);
}

TEST_CASE("extension") {
  const auto s = two_point();
  const auto sys = hm::DugundjiSystem::build(1);
  hm::BoundaryData f(1, s);
  f.set(pt("0"), constant(s, "x"));
  f.set(pt("1"), constant(s, "y"));
  CHECK(hm::extend(sys, f, pt("0")) == constant(s, "x"));
  CHECK(hm::extend(sys, f, pt("1/4")) == constant(s, "x"));
  CHECK(hm::extend(sys, f, pt("3/16")) == constant(s, "x"));
  // between 1/2 (anchored at 0) and 5/8 (anchored at 1)
  CHECK(hm::extend(sys, f, pt("9/16")) == step(s, {"0", "1/2", "1"}, {"x", "y"}));
  CHECK(hm::extend(sys, f, pt("17/32")) == step(s, {"0", "3/4", "1"}, {"x", "y"}));
  CHECK(hm::extend(sys, f, pt("3/4")) == constant(s, "y"));
  CHECK_THROWS_AS(hm::extend(sys, f, pt("3/2")), hm::InputError);

  hm::BoundaryData partial(1, s);
  partial.set(pt("0"), constant(s, "x"));
  CHECK_THROWS_AS(hm::extend(sys, partial, pt("1")), hm::InputError);
  CHECK_THROWS_AS(hm::extend(sys, partial, pt("7/8")), hm::InputError);
  CHECK_THROWS_AS(partial.set(pt("1/2"), constant(s, "x")), hm::InputError);

  const auto sq = hm::DugundjiSystem::build(2);
  const auto alpha = step(s, {"0", "2/7", "1"}, {"y", "x"});
  hm::BoundaryData g(2, s);
  const CubePoint x{q("3/16"), q("5/8")};
  for (const auto& a : hm::required_anchors(sq, x)) g.set(a, alpha);
  CHECK(hm::extend(sq, g, x) == alpha);
}

TEST_CASE("boundary probe") {
  const auto s = two_point();
  const auto sys = hm::DugundjiSystem::build(1);
  hm::BoundaryData f(1, s);
  f.set(pt("0"), constant(s, "x"));
  f.set(pt("1"), constant(s, "y"));
  const auto path = hm::dyadic_path(pt("0"), 12);
  REQUIRE(path.size() == 12);
  for (std::size_t m = 0; m < path.size(); ++m) CHECK(path[m][0] == hm::dyadic(static_cast<unsigned>(m + 1)));
  const auto r = hm::boundary_continuity_probe(sys, f, pt("0"), path, q("1/100"));
  CHECK(r.tail_below_tol());
  CHECK(r.distances.back() == 0);
  CHECK(r.distances[0] == 0);  // 1/2 is a vertex anchored at 0
  const auto to_one = hm::boundary_continuity_probe(sys, f, pt("1"), hm::dyadic_path(pt("1"), 12), q("1/100"));
  CHECK(to_one.distances[0] == 1);
  CHECK(to_one.distances.back() == 0);
  CHECK(hm::dyadic_path(pt("1,1/3"), 3)[2] == pt("7/8,1/3"));
  CHECK_THROWS_AS(hm::dyadic_path(pt("1/2"), 3), hm::InputError);
}

TEST_CASE("shrink probe") {
  const auto s = three_point();
  const auto z = step(s, {"0", "1/3", "2/3", "1"}, {"x", "y", "z"});
  const auto family = hm::sample_family(s, 3, 4);
  const auto none = hm::shrink_probe(z, family, q("1/2"), q("1/2"), 50, 1, 1);
  CHECK_FALSE(none.counterexample.has_value());
  const auto r = hm::shrink_probe(z, family, q("1/100"), q("1/100"), 200, 3, 3);
  if (r.counterexample) {
    CHECK(hm::pseudometric(family, r.counterexample->image, z) >= q("1/100"));
    CHECK(hm::pseudometric(family, r.counterexample->image, z) == r.counterexample->distance);
    for (const auto& p : r.counterexample->points) CHECK(hm::pseudometric(family, p, z) < q("1/100"));
  }
  CHECK_THROWS_AS(hm::shrink_probe(z, family, q("1/4"), q("1/2"), 10, 1), hm::InputError);
  CHECK_THROWS_AS(hm::shrink_probe(z, family, q("1/4"), 0, 10, 1), hm::InputError);
}
