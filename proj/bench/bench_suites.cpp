// Serial reference against the OpenMP runner for the suite kernels and the Dugundji verifier.
// usage: bench_suites [--scale K]   (K multiplies the case counts, default 10)

#include "hm/dugundji.hpp"
#include "hm/suites.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t scale = 10;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--scale") == 0) scale = std::strtoul(argv[i + 1], nullptr, 10);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d\n%-22s %10s %12s %12s %8s\n", threads, "kernel", "work", "serial ms", "parallel ms", "same");

  bool all_same = true;
  for (const auto& name : hm::suite_names()) {
    const std::size_t cases = 100 * scale;
    std::string a, b;
    const double ts = time_ms([&] { a = hm::report_json(hm::run_suite_serial(name, 1, cases), false); });
    const double tp = time_ms([&] { b = hm::report_json(hm::run_suite(name, 1, cases), false); });
    all_same = all_same && a == b;
    std::printf("%-22s %10zu %12.1f %12.1f %8s\n", name.c_str(), cases, ts, tp, a == b ? "yes" : "NO");
  }

  for (int n = 1; n <= 2; ++n) {
    const unsigned depth = n == 1 ? 12 : (scale >= 10 ? 6 : 4);
    const auto sys = hm::DugundjiSystem::build(n);
    hm::SystemReport rs, rp;
    const double ts = time_ms([&] { rs = hm::verify_system_serial(sys, depth); });
    const double tp = time_ms([&] { rp = hm::verify_system(sys, depth); });
    const bool same = rs.violations == rp.violations && rs.points_checked == rp.points_checked &&
                      rs.cells_checked == rp.cells_checked;
    all_same = all_same && same;
    char label[32];
    std::snprintf(label, sizeof label, "verify n=%d", n);
    std::printf("%-22s %10s %12.1f %12.1f %8s\n", label, ("depth " + std::to_string(depth)).c_str(), ts, tp,
                same ? "yes" : "NO");
  }
  return all_same ? 0 : 1;
}
