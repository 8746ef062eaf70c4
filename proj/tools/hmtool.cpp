// hmtool: command-line front end for the hm library.
// Exit status: 0 success, 1 property failure, 2 input or validation error.

#include "hm/io.hpp"
#include "hm/suites.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using hm::io::json;

void print(const json& j) { std::cout << j.dump(2) << '\n'; }
void print(const hm::Rational& r) { std::cout << hm::format_rational(r) << '\n'; }

hm::StepFunction load_step(const std::string& path) { return hm::io::stepfn_from_json(hm::io::load_file(path)); }
hm::FunctionalFamily load_family(const std::string& path) {
  return hm::io::family_from_json(hm::io::load_file(path));
}

// p/q strings collected by CLI11 as plain text so that parse errors map to exit code 2.
struct RationalOpt {
  std::string text;
  hm::Rational get() const { return hm::parse_rational(text); }
};

std::vector<hm::Rational> parse_list(const std::string& text) {
  std::vector<hm::Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(hm::parse_rational(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact step-function toolkit (HM X over finite metric spaces)"};
  app.require_subcommand(1);
  int status = 0;

  // --- step functions
  std::string f_path, g_path, map_path, family_path, space_path, cert_path, boundary_path;
  RationalOpt at, delta, eps, t, t1, t2, outer, inner, tol;

  auto* dist = app.add_subcommand("dist", "d_HM between two step functions");
  dist->add_option("f", f_path)->required();
  dist->add_option("g", g_path)->required();
  dist->callback([&] { print(hm::hm_distance(load_step(f_path), load_step(g_path))); });

  auto* eval = app.add_subcommand("eval", "value of a step function at t in [0,1)");
  eval->add_option("f", f_path)->required();
  eval->add_option("--at", at.text)->required();
  eval->callback([&] {
    const auto f = load_step(f_path);
    std::cout << f.space()->label(hm::evaluate(f, at.get())) << '\n';
  });

  auto* push = app.add_subcommand("push", "pushforward of a step function along a map");
  push->add_option("map", map_path)->required();
  push->add_option("f", f_path)->required();
  push->callback([&] {
    const auto f = load_step(f_path);
    print(hm::io::stepfn_to_json(hm::pushforward(hm::io::map_from_json(hm::io::load_file(map_path), f.space()), f)));
  });

  auto* nbhd = app.add_subcommand("nbhd", "is g in the (delta, eps) neighbourhood of f");
  nbhd->add_option("f", f_path)->required();
  nbhd->add_option("g", g_path)->required();
  nbhd->add_option("--delta", delta.text)->required();
  nbhd->add_option("--eps", eps.text)->required();
  nbhd->callback([&] {
    const auto f = load_step(f_path), g = load_step(g_path);
    std::cout << "bad_set_measure " << hm::format_rational(hm::bad_set_measure(f, delta.get(), g)) << '\n';
    std::cout << (hm::neighborhood_contains(f, delta.get(), eps.get(), g) ? "true" : "false") << '\n';
  });

  // --- functionals
  auto* avg = app.add_subcommand("avg", "windowed averages, one per family record");
  avg->add_option("family", family_path)->required();
  avg->add_option("f", f_path)->required();
  avg->callback([&] {
    const auto family = load_family(family_path);
    const auto f = load_step(f_path);
    for (const auto& wf : family) print(hm::window_average(wf, f));
  });

  auto* rho = app.add_subcommand("rho", "pseudometric of a functional family");
  rho->add_option("family", family_path)->required();
  rho->add_option("f", f_path)->required();
  rho->add_option("g", g_path)->required();
  rho->callback([&] { print(hm::pseudometric(load_family(family_path), load_step(f_path), load_step(g_path))); });

  auto* project = app.add_subcommand("project", "coordinates of f in the family's product");
  project->add_option("family", family_path)->required();
  project->add_option("f", f_path)->required();
  project->callback([&] { print(hm::io::rationals_to_json(hm::project(load_step(f_path), load_family(family_path)))); });

  std::uint64_t seed = 1;
  std::size_t windows = 4;
  auto* sample = app.add_subcommand("sample-family", "indicator functionals crossed with seeded windows");
  sample->add_option("space", space_path)->required();
  sample->add_option("--seed", seed);
  sample->add_option("--windows", windows);
  sample->callback([&] {
    const auto space = hm::io::space_from_json(hm::io::load_file(space_path));
    print(hm::io::family_to_json(hm::sample_family(space, windows, seed)));
  });

  // --- equiconnection
  auto* e1 = app.add_subcommand("e1", "alpha on [0,t), beta on [t,1)");
  e1->add_option("alpha", f_path)->required();
  e1->add_option("beta", g_path)->required();
  e1->add_option("--t", t.text)->required();
  e1->callback([&] { print(hm::io::stepfn_to_json(hm::e1(load_step(f_path), load_step(g_path), t.get()))); });

  std::vector<std::string> point_paths;
  std::string weights_text;
  auto* en = app.add_subcommand("en", "iterated equiconnection e_n");
  en->add_option("points", point_paths)->required();
  en->add_option("--weights", weights_text, "comma separated p/q, summing to 1")->required();
  en->callback([&] {
    std::vector<hm::StepFunction> points;
    for (const auto& p : point_paths) points.push_back(load_step(p));
    print(hm::io::stepfn_to_json(hm::e_n(points, hm::SimplexWeights(parse_list(weights_text)))));
  });

  auto* mid = app.add_subcommand("midpoint", "interleaving whose coordinates average alpha and beta");
  mid->add_option("alpha", f_path)->required();
  mid->add_option("beta", g_path)->required();
  mid->add_option("family", family_path)->required();
  mid->callback([&] {
    print(hm::io::stepfn_to_json(hm::hm_midpoint(load_step(f_path), load_step(g_path), load_family(family_path))));
  });

  std::string functional_path;
  auto* cert = app.add_subcommand("certificate", "uniform continuity certificate for e1");
  cert->add_option("functional", functional_path)->required();
  cert->add_option("--delta", delta.text)->required();
  cert->callback([&] {
    const auto phi = hm::io::functional_from_json(hm::io::load_file(functional_path));
    print(hm::io::certificate_to_json(hm::make_certificate(phi, delta.get())));
  });

  std::string a1, b1, a2, b2;
  auto* check_cert = app.add_subcommand("check-cert", "evaluate a certificate on (a1, b1, t1) and (a2, b2, t2)");
  check_cert->add_option("certificate", cert_path)->required();
  check_cert->add_option("alpha1", a1)->required();
  check_cert->add_option("beta1", b1)->required();
  check_cert->add_option("alpha2", a2)->required();
  check_cert->add_option("beta2", b2)->required();
  check_cert->add_option("--t1", t1.text)->required();
  check_cert->add_option("--t2", t2.text)->required();
  check_cert->callback([&] {
    const auto c = hm::io::certificate_from_json(hm::io::load_file(cert_path));
    const auto r = hm::check_certificate(c, load_step(a1), load_step(b1), t1.get(), load_step(a2), load_step(b2), t2.get());
    print(hm::io::certificate_check_to_json(r));
    if (r.in_v && r.in_e && !r.conclusion) status = 1;
  });

  // --- Dugundji systems
  int n = 1;
  unsigned depth = 3;
  auto* build = app.add_subcommand("build-system", "list the simplices of rings 1..depth");
  build->add_option("--n", n)->required();
  build->add_option("--depth", depth);
  build->callback([&] {
    const auto sys = hm::DugundjiSystem::build(n);
    json rings = json::array();
    for (unsigned k = 1; k <= depth; ++k) {
      json simplices = json::array();
      for (const auto& s : sys.ring(k)) {
        json verts = json::array();
        for (const auto& v : s.vertices) verts.push_back(hm::format_point(v));
        simplices.push_back(verts);
      }
      rings.push_back({{"level", k}, {"simplices", simplices}});
    }
    json cells = json::array();
    for (const auto& ring : rings)
      for (const auto& s : ring["simplices"])
        for (const auto& v : s) {
          const auto p = hm::parse_point(v.get<std::string>());
          if (sys.level_of(p) <= depth) cells.push_back(v);
        }
    std::sort(cells.begin(), cells.end(), [&](const json& a, const json& b) {
      return sys.precedes(hm::parse_point(a.get<std::string>()), hm::parse_point(b.get<std::string>()));
    });
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    json index = json::array();
    for (const auto& c : cells) {
      const auto p = hm::parse_point(c.get<std::string>());
      index.push_back({{"cell", c}, {"level", sys.level_of(p)}, {"anchor", hm::format_point(sys.anchor(p))}});
    }
    print(json{{"n", n}, {"depth", depth}, {"cells", index}, {"rings", rings}});
  });

  hm::VerifyOptions verify_options;
  bool serial = false;
  auto* verify = app.add_subcommand("verify-system", "check the Dugundji conditions up to a depth");
  verify->add_option("--n", n)->required();
  verify->add_option("--depth", depth)->required();
  verify->add_option("--samples", verify_options.samples);
  verify->add_option("--seed", verify_options.seed);
  verify->add_flag("--serial", serial, "single-threaded reference");
  verify->callback([&] {
    const auto sys = hm::DugundjiSystem::build(n);
    const auto report = serial ? hm::verify_system_serial(sys, depth, verify_options)
                               : hm::verify_system(sys, depth, verify_options);
    print(hm::io::system_report_to_json(report));
    if (!report.ok()) status = 1;
  });

  std::string at_point;
  bool with_pou = false;
  auto* ext = app.add_subcommand("extend", "evaluate the extension F at a point of the cube");
  ext->add_option("boundary", boundary_path)->required();
  ext->add_option("--at", at_point)->required();
  ext->add_flag("--pou", with_pou, "also print the partition of unity");
  ext->callback([&] {
    const auto data = hm::io::boundary_from_json(hm::io::load_file(boundary_path));
    const auto sys = hm::DugundjiSystem::build(data.dimension());
    const auto x = hm::parse_point(at_point);
    const auto value = hm::io::stepfn_to_json(hm::extend(sys, data, x));
    if (!with_pou) return print(value);
    json pou = json::array();
    if (hm::is_interior(x)) pou = hm::io::pou_to_json(hm::pou_eval(sys, x));
    print(json{{"value", value}, {"pou", pou}});
  });

  unsigned steps = 12;
  tol.text = "1/100";
  auto* probe_b = app.add_subcommand("probe-boundary", "d_HM(F(x_m), f(p)) along the dyadic path to p");
  probe_b->add_option("boundary", boundary_path)->required();
  probe_b->add_option("--at", at_point)->required();
  probe_b->add_option("--steps", steps);
  probe_b->add_option("--tol", tol.text);
  probe_b->callback([&] {
    const auto data = hm::io::boundary_from_json(hm::io::load_file(boundary_path));
    const auto sys = hm::DugundjiSystem::build(data.dimension());
    const auto p = hm::parse_point(at_point);
    const auto report = hm::boundary_continuity_probe(sys, data, p, hm::dyadic_path(p, steps), tol.get());
    print(hm::io::boundary_probe_to_json(report));
    if (!report.tail_below_tol()) status = 1;
  });

  std::size_t k = 200, arity = 3;
  auto* probe_s = app.add_subcommand("probe-shrink", "search for tuples near z whose e_n image is far from z");
  probe_s->add_option("z", f_path)->required();
  probe_s->add_option("family", family_path)->required();
  probe_s->add_option("--outer", outer.text)->required();
  probe_s->add_option("--inner", inner.text)->required();
  probe_s->add_option("--k", k);
  probe_s->add_option("--arity", arity);
  probe_s->add_option("--seed", seed);
  probe_s->callback([&] {
    const auto report = hm::shrink_probe(load_step(f_path), load_family(family_path), outer.get(), inner.get(), k,
                                         seed, arity);
    print(hm::io::shrink_probe_to_json(report));
  });

  // --- property suites
  std::string suite;
  std::size_t cases = 100;
  hm::SuiteOptions suite_options;
  bool no_time = false;
  auto* check = app.add_subcommand("check", "run a seeded property suite");
  check->add_option("suite", suite)->required()->check(CLI::IsMember(hm::suite_names()));
  check->add_option("--seed", seed);
  check->add_option("--cases", cases);
  check->add_option("--size", suite_options.size, "generator size bound");
  check->add_flag("--inject-fault", suite_options.inject_fault, "feed non-metric spaces (negative control)");
  check->add_flag("--serial", serial, "single-threaded reference runner");
  check->add_flag("--no-time", no_time, "omit wall time from the report");
  check->callback([&] {
    const auto report = serial ? hm::run_suite_serial(suite, seed, cases, suite_options)
                               : hm::run_suite(suite, seed, cases, suite_options);
    std::cout << hm::report_json(report, !no_time) << '\n';
    std::cerr << hm::report_summary(report) << '\n';
    if (!report.ok()) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hm::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    // malformed JSON and the like
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
