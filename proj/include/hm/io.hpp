#pragma once

// JSON documents for spaces, functionals, maps, step functions, functional families,
// certificates, boundary data and reports. Every rational is a reduced "p/q" string.

#include "hm/dugundji.hpp"
#include "hm/equiconnect.hpp"

#include <json.hpp>

#include <string>

namespace hm::io {

using json = nlohmann::json;

json load_file(const std::string& path);

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);
std::vector<Rational> rationals_from_json(const json& j);
json rationals_to_json(std::span<const Rational> values);

// {"points": [...], "dist": [[...]]}
RawSpace raw_space_from_json(const json& j);
SpaceHandle space_from_json(const json& j);
json space_to_json(const FiniteMetricSpace& space);

// {"space": <space>, "values": {label: "p/q"}}
TestFunctional functional_from_json(const json& j);
json functional_to_json(const TestFunctional& phi);

// {"table": {label: label}}, optionally with "domain" / "codomain" spaces. A missing domain
// defaults to `fallback`, a missing codomain to the domain.
SpaceMap map_from_json(const json& j, const SpaceHandle& fallback);
json map_to_json(const SpaceMap& m);

// {"space": <space>, "breakpoints": ["0/1", ...], "values": [label, ...]}
StepFunction stepfn_from_json(const json& j);
json stepfn_to_json(const StepFunction& f);

// A single {"functional": ..., "window": ["a","b"]} record or a list of them.
FunctionalFamily family_from_json(const json& j);
json family_to_json(std::span<const WindowedFunctional> family);

json certificate_to_json(const ContinuityCertificate& cert);
ContinuityCertificate certificate_from_json(const json& j);
json certificate_check_to_json(const CertificateCheck& check);

// {"system": {"n": 1}, "values": {"0/1": <stepfn>, "1/1": <stepfn>}}; keys of 2-d data are "x,y".
BoundaryData boundary_from_json(const json& j);
json boundary_to_json(const BoundaryData& data);

json system_report_to_json(const SystemReport& report);
json pou_to_json(std::span<const PouEntry> entries);
json boundary_probe_to_json(const BoundaryProbeReport& report);
json shrink_probe_to_json(const ShrinkProbeReport& report);

}  // namespace hm::io
