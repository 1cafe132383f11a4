#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mukai/fm.hpp"
#include "mukai/mirror.hpp"

namespace mukai {

using json = nlohmann::ordered_json;

FiberConfig fiber_config_from_json(const json& j);
json fiber_config_to_json(const FiberConfig& cfg);

// {"deg0":"r","deg2":{"H":"a","mu":"b",...},"deg4":"c"}; absent keys are
// zero. Canonical output carries only nonzero deg2 entries, in basis order.
GradedClass graded_from_json(const K3Model& model, const json& j);
json graded_to_json(const K3Model& model, const GradedClass& g);

// Period: array of complex-rational strings over the H^2 basis.
VecC period_from_json(const K3Model& model, const json& j);
json period_to_json(const VecC& omega);

json gram_to_json(const MatR& m);
MatR gram_from_json(const json& j);

json mirror_report_to_json(const MirrorReport& rep);

// Human rendering with basis names; the dual side uses hatted names
// (Theta, mu^, beta_i, w^).
std::string render_class(const K3Model& model, const GradedClass& g, Direction side);

json parse_json(const std::string& text);
json load_json_file(const std::string& path);

}  // namespace mukai
