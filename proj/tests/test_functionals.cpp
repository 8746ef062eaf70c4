#include "fixtures.hpp"
#include "oracles.hpp"

#include "hm/random.hpp"

#include <doctest.h>

using namespace fx;

TEST_CASE("window averages") {
  const auto s = two_point();
  const auto f = step(s, {"0", "1/2", "1"}, {"x", "y"});
  const auto p = phi(s, {"0", "1"});
  CHECK(hm::window_average({p, hm::Window(q("1/5"), q("2/7"))}, constant(s, "y")) == 1);
  CHECK(hm::window_average({p, hm::Window(0, 1)}, f) == q("1/2"));
  CHECK(hm::window_average({p, hm::Window(q("1/4"), q("3/4"))}, f) == q("1/2"));
  CHECK(hm::window_average({p, hm::Window(q("1/2"), 1)}, f) == 1);
  CHECK_THROWS_AS(hm::Window(q("1/2"), q("1/2")), hm::InputError);
  CHECK_THROWS_AS(hm::Window(q("-1/2"), q("1/2")), hm::InputError);
  CHECK_THROWS_AS(hm::Window(0, q("3/2")), hm::InputError);
  CHECK_THROWS_AS(hm::window_average({phi(three_point(), {"0", "0", "0"}), hm::Window(0, 1)}, f), hm::InputError);

  hm::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto sp = hm::random_space(rng, 2, 5);
    const auto g = hm::random_step(rng, sp, 6, 12);
    const auto wf = hm::WindowedFunctional{hm::random_functional(rng, sp, 6), hm::random_window(rng, 10)};
    CHECK(hm::window_average(wf, g) == oracle::average(wf.functional, wf.window.a(), wf.window.b(), g));
  }
}

TEST_CASE("pseudometric and projection") {
  const auto s = two_point();
  const auto p = phi(s, {"0", "1"});
  const hm::FunctionalFamily one{{p, hm::Window(0, 1)}};
  const auto f = step(s, {"0", "1/2", "1"}, {"x", "y"});
  CHECK(hm::pseudometric(one, f, f) == 0);
  CHECK(hm::pseudometric(one, constant(s, "x"), constant(s, "y")) == 1);
  // one coordinate moves by 1/4, the other by 1/2
  const hm::FunctionalFamily two{{p, hm::Window(0, 1)}, {p, hm::Window(q("1/2"), 1)}};
  CHECK(hm::pseudometric(two, f, step(s, {"0", "1/4", "1"}, {"x", "y"})) == q("1/4"));
  CHECK(hm::pseudometric(two, f, constant(s, "x")) == 1);
  const hm::FunctionalFamily quarter_half{{p, hm::Window(0, 1)}, {phi(s, {"0", "1/2"}), hm::Window(0, 1)}};
  CHECK(hm::pseudometric(quarter_half, constant(s, "x"), step(s, {"0", "1/2", "1"}, {"y", "x"})) == q("1/2"));
  CHECK_THROWS_AS(hm::pseudometric({}, f, f), hm::InputError);

  CHECK(hm::project(constant(s, "y"), one) == std::vector<Rational>{1});
  const hm::FunctionalFamily halves{{p, hm::Window(0, q("1/2"))}, {p, hm::Window(q("1/2"), 1)}};
  CHECK(hm::project(f, halves) == std::vector<Rational>{0, 1});
  CHECK_THROWS_AS(hm::project(f, {}), hm::InputError);
}

TEST_CASE("convex midpoint vector") {
  const std::vector<Rational> u{0, 1}, v{1, 0};
  CHECK(hm::convex_midpoint_vector(u, u) == u);
  CHECK(hm::convex_midpoint_vector(u, v) == std::vector<Rational>{q("1/2"), q("1/2")});
  CHECK(hm::convex_midpoint_vector(std::vector<Rational>{q("1/3")}, std::vector<Rational>{q("1/2")}) ==
        std::vector<Rational>{q("5/12")});
  CHECK_THROWS_AS(hm::convex_midpoint_vector(u, std::vector<Rational>{0}), hm::InputError);
}

TEST_CASE("sample family") {
  const auto s = two_point();
  CHECK(hm::sample_family(s, 3, 9).size() == 6);
  const auto a = hm::sample_family(s, 5, 17), b = hm::sample_family(s, 5, 17);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].functional == b[i].functional);
    CHECK(a[i].window == b[i].window);
  }
  for (const auto& wf : hm::sample_family(s, 1, 3)) CHECK(wf.window == hm::Window(0, 1));
  CHECK(hm::sample_family(s, 2, 3).size() == 4);
  CHECK_THROWS_AS(hm::sample_family(s, 0, 3), hm::InputError);
}

TEST_CASE("norm-only Lipschitz bound fails on close points") {
  // |phi(x) - phi(y)| can be large while d(x,y) is small; the bound needs the Lipschitz constant of phi.
  const auto s = two_point("1/8");
  const hm::WindowedFunctional wf{phi(s, {"1", "-1"}), hm::Window(0, 1)};
  const auto f = constant(s, "x"), g = constant(s, "y");
  const Rational gap = hm::window_average(wf, f) - hm::window_average(wf, g);
  CHECK(gap > hm::functional_norm(wf.functional) * hm::hm_distance(f, g));
  CHECK(gap <= 16 * hm::hm_distance(f, g));
}
