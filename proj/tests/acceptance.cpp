// One PASS/FAIL line per acceptance criterion. Exit status 1 if any line fails.

#include "fixtures.hpp"
#include "oracles.hpp"

#include "hm/dugundji.hpp"
#include "hm/random.hpp"
#include "hm/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace fx;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  if (!ok) ++failures;
}

// suite run with its own timer; returns (ok, detail)
std::pair<bool, std::string> suite(const char* name, std::size_t cases, double budget) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = hm::run_suite(name, 20240601, cases);
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << name << " " << r.cases << " cases, " << r.failures.size() << " failures, " << s << " s";
  if (!r.ok()) d << " (first: " << r.failures.front().property << ")";
  return {r.ok() && r.cases >= cases && s < budget, d.str()};
}

}  // namespace

int main() {
  {
    auto [ok, detail] = suite("metric-axioms", 1000, 10);
    hm::SuiteOptions fault;
    fault.inject_fault = true;
    const auto neg = hm::run_suite("metric-axioms", 7, 50, fault);
    std::size_t named = 0;
    for (const auto& f : neg.failures) named += f.property == "space axiom: triangle inequality";
    ok = ok && named == 50;
    report(1, "metric axioms", ok, detail + "; corrupted tables flagged " + std::to_string(named) + "/50");
  }
  {
    const auto s = two_point();
    const auto f = step(s, {"0", "1/2", "1"}, {"x", "y"});
    const auto g = step(s, {"0", "1/3", "1"}, {"y", "x"});
    const auto lib = hm::hm_distance(f, g), brute = oracle::distance(f, g);
    report(2, "HM metric value", lib == q("5/6") && brute == lib,
           "library " + hm::format_rational(lib) + ", brute-force refinement " + hm::format_rational(brute));
  }
  {
    auto [ok, detail] = suite("midpoint", 1000, 30);
    report(3, "midpoint exactness", ok, detail);
  }
  {
    auto [ok, detail] = suite("certificate", 1000, 60);
    const auto cert = hm::make_certificate(phi(two_point(), {"0", "1"}), q("1/2"));
    const bool n5 = cert.n == 5 && cert.v_threshold == q("1/100") && cert.e_threshold == q("1/10");
    report(4, "certificate soundness", ok && n5,
           detail + "; c=1, delta=1/2 gives n=" + std::to_string(cert.n) + ", V " +
               hm::format_rational(cert.v_threshold) + ", E " + hm::format_rational(cert.e_threshold));
  }
  {
    auto [ok, detail] = suite("e-n-laws", 500, 10);
    report(5, "e-laws", ok, detail);
  }
  {
    auto [ok, detail] = suite("functoriality", 500, 60);
    report(6, "functoriality", ok, detail);
  }
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r1 = hm::verify_system(hm::DugundjiSystem::build(1), 12);
    const auto r2 = hm::verify_system(hm::DugundjiSystem::build(2), 6);
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << "n=1 depth 12: " << r1.cells_checked << " cells, " << r1.violations.size() << " violations; n=2 depth 6: "
      << r2.cells_checked << " cells, " << r2.simplices << " simplices, " << r2.points_checked << " points, "
      << r2.violations.size() << " violations; " << s << " s";
    report(7, "Dugundji conditions", r1.ok() && r2.ok() && s < 60, d.str());
  }
  {
    const auto s = three_point();
    bool constant_ok = true;
    hm::Rng rng(99);
    for (int n = 1; n <= 2; ++n) {
      const auto sys = hm::DugundjiSystem::build(n);
      const auto alpha = hm::random_step(rng, s, 5, 9);
      for (int i = 0; i < 200; ++i) {
        hm::CubePoint x(static_cast<std::size_t>(n));
        for (auto& c : x) c = rng.rational_in(q("1/256"), q("255/256"), 256);
        hm::BoundaryData f(n, s);
        for (const auto& a : hm::required_anchors(sys, x)) f.set(a, alpha);
        constant_ok = constant_ok && hm::extend(sys, f, x) == alpha;
      }
    }

    // two constants on the interval against the hand-unfolded e_2
    const auto sys = hm::DugundjiSystem::build(1);
    hm::BoundaryData f(1, s);
    f.set({Rational(0)}, constant(s, "x"));
    f.set({Rational(1)}, constant(s, "z"));
    bool unfold_ok = true;
    std::size_t mixed = 0;
    for (int i = 0; i < 400; ++i) {
      const Rational u = rng.rational_in(q("1/1024"), q("1023/1024"), 1024);
      auto hats = oracle::interval_hats(u, 10);
      const auto label = [](const Rational& v) { return v <= q("1/2") ? "x" : "z"; };
      StepFunction expected = constant(s, label(hats[0].first));
      if (hats.size() == 2) {
        // active cells in the global order
        auto first = hats[0], second = hats[1];
        if (sys.precedes({second.first}, {first.first})) std::swap(first, second);
        const std::string a = label(first.first), b = label(second.first);
        hm::RawStep raw{{0, first.second, 1}, {a, b}};
        expected = hm::canonicalize(s, raw);
        mixed += a != b;
      }
      unfold_ok = unfold_ok && hm::extend(sys, f, {u}) == expected;
    }

    bool probe_ok = true;
    for (const char* p : {"0", "1"}) {
      const auto r = hm::boundary_continuity_probe(sys, f, hm::parse_point(p), hm::dyadic_path(hm::parse_point(p), 12),
                                                   q("1/100"));
      probe_ok = probe_ok && r.tail_below_tol() && r.distances.back() == 0;
    }
    std::ostringstream d;
    d << "constant data " << (constant_ok ? "reproduced" : "NOT reproduced") << " at 400 points; two-constant e_2 oracle "
      << (unfold_ok ? "matched" : "MISMATCHED") << " at 400 points (" << mixed << " mixed); dyadic probes "
      << (probe_ok ? "reach 0" : "do NOT reach 0") << " within 12 steps";
    report(8, "extension correctness", constant_ok && unfold_ok && probe_ok, d.str());
  }
  {
    auto [ok, detail] = suite("dugundji-1", 500, 60);
    report(9, "range confinement", ok, detail);
  }
  return failures == 0 ? 0 : 1;
}
