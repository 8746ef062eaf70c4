#include "hm/io.hpp"

#include <fstream>

namespace hm::io {

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("document lacks field \"") + name + "\"");
  return j.at(name);
}

std::string string_of(const json& j) {
  if (!j.is_string()) throw InputError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(mpz_class(j.get<long>()));
  return parse_rational(string_of(j));
}

json rational_to_json(const Rational& r) { return format_rational(r); }

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a list of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

json rationals_to_json(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(format_rational(v));
  return out;
}

RawSpace raw_space_from_json(const json& j) {
  RawSpace raw;
  for (const auto& p : field(j, "points")) raw.points.push_back(string_of(p));
  for (const auto& row : field(j, "dist")) raw.dist.push_back(rationals_from_json(row));
  return raw;
}

SpaceHandle space_from_json(const json& j) { return validate_space(raw_space_from_json(j)); }

json space_to_json(const FiniteMetricSpace& space) {
  json dist = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < space.size(); ++k) row.push_back(format_rational(space.distance(i, k)));
    dist.push_back(row);
  }
  return {{"points", space.labels()}, {"dist", dist}};
}

TestFunctional functional_from_json(const json& j) {
  auto space = space_from_json(field(j, "space"));
  std::map<std::string, Rational> table;
  for (const auto& [label, value] : field(j, "values").items()) table.emplace(label, rational_from_json(value));
  return TestFunctional::from_table(space, table);
}

json functional_to_json(const TestFunctional& phi) {
  json values = json::object();
  for (std::size_t i = 0; i < phi.space()->size(); ++i) values[phi.space()->label(i)] = format_rational(phi.value(i));
  return {{"space", space_to_json(*phi.space())}, {"values", values}};
}

SpaceMap map_from_json(const json& j, const SpaceHandle& fallback) {
  SpaceHandle domain = j.contains("domain") ? space_from_json(j.at("domain")) : fallback;
  if (!domain) throw InputError("map document has no domain");
  SpaceHandle codomain = j.contains("codomain") ? space_from_json(j.at("codomain")) : domain;
  std::map<std::string, std::string> table;
  for (const auto& [from, to] : field(j, "table").items()) table.emplace(from, string_of(to));
  return SpaceMap::from_table(domain, codomain, table);
}

json map_to_json(const SpaceMap& m) {
  json table = json::object();
  for (std::size_t i = 0; i < m.domain()->size(); ++i) table[m.domain()->label(i)] = m.codomain()->label(m(i));
  return {{"domain", space_to_json(*m.domain())}, {"codomain", space_to_json(*m.codomain())}, {"table", table}};
}

StepFunction stepfn_from_json(const json& j) {
  auto space = space_from_json(field(j, "space"));
  RawStep raw;
  raw.breakpoints = rationals_from_json(field(j, "breakpoints"));
  for (const auto& v : field(j, "values")) raw.values.push_back(string_of(v));
  return canonicalize(space, raw);
}

json stepfn_to_json(const StepFunction& f) {
  json values = json::array();
  for (auto v : f.values()) values.push_back(f.space()->label(v));
  return {{"space", space_to_json(*f.space())}, {"breakpoints", rationals_to_json(f.breakpoints())}, {"values", values}};
}

namespace {

WindowedFunctional record_from_json(const json& j) {
  auto bounds = rationals_from_json(field(j, "window"));
  if (bounds.size() != 2) throw InputError("a window is a pair [a, b]");
  return {functional_from_json(field(j, "functional")), Window(bounds[0], bounds[1])};
}

}  // namespace

FunctionalFamily family_from_json(const json& j) {
  FunctionalFamily family;
  if (j.is_array()) {
    for (const auto& r : j) family.push_back(record_from_json(r));
  } else {
    family.push_back(record_from_json(j));
  }
  if (family.empty()) throw InputError("functional family is empty");
  return family;
}

json family_to_json(std::span<const WindowedFunctional> family) {
  json out = json::array();
  for (const auto& wf : family)
    out.push_back({{"functional", functional_to_json(wf.functional)},
                   {"window", {format_rational(wf.window.a()), format_rational(wf.window.b())}}});
  return out;
}

json certificate_to_json(const ContinuityCertificate& cert) {
  return {{"functional", functional_to_json(cert.functional)},
          {"delta", format_rational(cert.delta)},
          {"c", format_rational(cert.norm)},
          {"n", format_rational(Rational(cert.n))},
          {"grid", rationals_to_json(cert.grid)},
          {"v_threshold", format_rational(cert.v_threshold)},
          {"e_threshold", format_rational(cert.e_threshold)},
          {"trivial", cert.trivial}};
}

ContinuityCertificate certificate_from_json(const json& j) {
  // Derived fields are recomputed; a document whose stored fields disagree is rejected.
  auto cert = make_certificate(functional_from_json(field(j, "functional")), rational_from_json(field(j, "delta")));
  if (j.contains("n") && rational_from_json(j.at("n")) != cert.n)
    throw InputError("certificate grid size does not match its functional and radius");
  if (j.contains("v_threshold") && rational_from_json(j.at("v_threshold")) != cert.v_threshold)
    throw InputError("certificate V threshold does not match");
  if (j.contains("e_threshold") && rational_from_json(j.at("e_threshold")) != cert.e_threshold)
    throw InputError("certificate E threshold does not match");
  return cert;
}

json certificate_check_to_json(const CertificateCheck& check) {
  return {{"in_V", check.in_v}, {"in_E", check.in_e}, {"conclusion", check.conclusion}, {"gap", format_rational(check.gap)}};
}

BoundaryData boundary_from_json(const json& j) {
  const json& system = field(j, "system");
  const int n = field(system, "n").get<int>();
  BoundaryData data(n);
  for (const auto& [key, value] : field(j, "values").items()) data.set(parse_point(key), stepfn_from_json(value));
  return data;
}

json boundary_to_json(const BoundaryData& data) {
  json values = json::object();
  for (const auto& [p, f] : data.values()) values[format_point(p)] = stepfn_to_json(f);
  return {{"system", {{"n", data.dimension()}}}, {"values", values}};
}

json system_report_to_json(const SystemReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"condition", v.condition}, {"cell", v.cell}, {"witness", v.witness}, {"detail", v.detail}});
  return {{"n", report.n},
          {"depth", report.depth},
          {"cells_checked", report.cells_checked},
          {"simplices", report.simplices},
          {"points_checked", report.points_checked},
          {"ok", report.ok()},
          {"violations", violations}};
}

json pou_to_json(std::span<const PouEntry> entries) {
  json out = json::array();
  for (const auto& e : entries) out.push_back({{"cell", format_point(e.vertex)}, {"weight", format_rational(e.weight)}});
  return out;
}

json boundary_probe_to_json(const BoundaryProbeReport& report) {
  json out = {{"distances", rationals_to_json(report.distances)}, {"tail_below_tol", report.tail_below_tol()}};
  out["tail_start"] = report.tail_start ? json(*report.tail_start) : json(nullptr);
  return out;
}

json shrink_probe_to_json(const ShrinkProbeReport& report) {
  json out = {{"samples", report.samples}};
  if (!report.counterexample) {
    out["counterexample"] = nullptr;
    out["summary"] = "no counterexample in " + std::to_string(report.samples) + " samples";
    return out;
  }
  const auto& c = *report.counterexample;
  json points = json::array();
  for (const auto& p : c.points) points.push_back(stepfn_to_json(p));
  out["counterexample"] = {{"points", points},
                           {"weights", rationals_to_json(c.weights)},
                           {"image", stepfn_to_json(c.image)},
                           {"distance", format_rational(c.distance)}};
  return out;
}

}  // namespace hm::io
