#include "mukai/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace mukai {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw usage_error("malformed JSON input");
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json(text);
}

static Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw usage_error("expected a rational as integer or \"p/q\" string");
}

FiberConfig fiber_config_from_json(const json& j) {
  if (!j.is_object() || !j.contains("fibers") || !j["fibers"].is_array()) {
    throw usage_error("fiber config must be an object with a \"fibers\" array");
  }
  FiberConfig cfg;
  for (const auto& f : j["fibers"]) {
    FiberEntry e;
    std::string kind = f.value("kind", "");
    if (kind == "nodal") {
      e.n = 1;
    } else if (kind == "I") {
      if (!f.contains("n")) throw usage_error("I-type fiber entry needs \"n\"");
      e.n = f["n"].get<int>();
    } else {
      throw usage_error("unknown fiber kind '" + kind + "' (expected \"nodal\" or \"I\")");
    }
    e.count = f.value("count", 1);
    cfg.fibers.push_back(e);
  }
  if (j.contains("transcendental_gram")) cfg.transcendental_gram = gram_from_json(j["transcendental_gram"]);
  if (j.contains("allow_non_k3")) cfg.allow_non_k3 = j["allow_non_k3"].get<bool>();
  return cfg;
}

json fiber_config_to_json(const FiberConfig& cfg) {
  json j;
  j["fibers"] = json::array();
  for (const auto& f : cfg.fibers) {
    json e;
    if (f.n == 1) {
      e["kind"] = "nodal";
    } else {
      e["kind"] = "I";
      e["n"] = f.n;
    }
    e["count"] = f.count;
    j["fibers"].push_back(e);
  }
  if (cfg.transcendental_gram) j["transcendental_gram"] = gram_to_json(*cfg.transcendental_gram);
  if (cfg.allow_non_k3) j["allow_non_k3"] = true;
  return j;
}

MatR gram_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw usage_error("gram matrix must be a nonempty array of arrays");
  Eigen::Index n = static_cast<Eigen::Index>(j.size());
  MatR m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw usage_error("gram matrix must be square");
    }
    for (Eigen::Index c = 0; c < n; ++c) m(i, c) = rational_from_json(row[static_cast<size_t>(c)]);
  }
  return m;
}

json gram_to_json(const MatR& m) {
  json j = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(i, c).str());
    j.push_back(row);
  }
  return j;
}

GradedClass graded_from_json(const K3Model& model, const json& j) {
  if (!j.is_object()) throw usage_error("graded class must be a JSON object");
  GradedClass g = GradedClass::zero(model.h2_rank());
  if (j.contains("deg0")) g.deg0 = rational_from_json(j["deg0"]);
  if (j.contains("deg4")) g.deg4 = rational_from_json(j["deg4"]);
  if (j.contains("deg2")) {
    const auto& d2 = j["deg2"];
    if (!d2.is_object()) throw usage_error("deg2 must be an object keyed by basis labels");
    const auto& labels = model.h2_labels();
    for (auto it = d2.begin(); it != d2.end(); ++it) {
      auto pos = std::find(labels.begin(), labels.end(), it.key());
      if (pos == labels.end()) throw usage_error("unknown H^2 basis label '" + it.key() + "'");
      g.deg2[static_cast<Eigen::Index>(pos - labels.begin())] = rational_from_json(it.value());
    }
  }
  return g;
}

json graded_to_json(const K3Model& model, const GradedClass& g) {
  json j;
  j["deg0"] = g.deg0.str();
  json d2 = json::object();
  const auto& labels = model.h2_labels();
  for (Eigen::Index i = 0; i < g.deg2.size(); ++i) {
    if (!g.deg2[i].is_zero()) d2[labels[static_cast<size_t>(i)]] = g.deg2[i].str();
  }
  j["deg2"] = d2;
  j["deg4"] = g.deg4.str();
  return j;
}

VecC period_from_json(const K3Model& model, const json& j) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != model.h2_rank()) {
    throw usage_error("period must be an array of " + std::to_string(model.h2_rank()) + " complex-rational strings");
  }
  VecC omega(model.h2_rank());
  for (Eigen::Index i = 0; i < omega.size(); ++i) {
    const auto& e = j[static_cast<size_t>(i)];
    if (e.is_number_integer()) omega[i] = ComplexRational(Rational(e.get<long>()));
    else if (e.is_string()) omega[i] = ComplexRational::parse(e.get<std::string>());
    else throw usage_error("period entries must be strings or integers");
  }
  return omega;
}

json period_to_json(const VecC& omega) {
  json j = json::array();
  for (Eigen::Index i = 0; i < omega.size(); ++i) j.push_back(omega[i].str());
  return j;
}

json mirror_report_to_json(const MirrorReport& rep) {
  json j;
  j["seed"] = rep.seed;
  j["trials"] = rep.trials;
  j["quotient_dim"] = rep.quotient_dim;
  j["psi_omega_proportional"] = rep.psi_omega_proportional;
  j["failures"] = json::array();
  for (const auto& f : rep.failures) {
    j["failures"].push_back({{"trial", f.trial}, {"what", f.what}});
  }
  j["all_exact"] = rep.all_exact();
  return j;
}

std::string render_class(const K3Model& model, const GradedClass& g, Direction side) {
  bool hat = (side == Direction::XToXhat);
  auto name2 = [&](Eigen::Index i) -> std::string {
    if (i == model.idx_H()) return hat ? "Θ" : "H";
    if (i == model.idx_mu()) return hat ? "μ̂" : "μ";
    for (int a = 0; a < model.alpha_count(); ++a) {
      if (i == model.idx_alpha(a)) return (hat ? "β_" : "α_") + std::to_string(a + 1);
    }
    return "τ_" + std::to_string(i - model.idx_tau(0) + 1);
  };
  std::string w_name = hat ? "ŵ" : "w";

  struct Term {
    Rational coeff;
    std::string name;  // empty for the degree-0 part
  };
  std::vector<Term> terms;
  if (!g.deg0.is_zero()) terms.push_back({g.deg0, ""});
  for (Eigen::Index i = 0; i < g.deg2.size(); ++i) {
    if (!g.deg2[i].is_zero()) terms.push_back({g.deg2[i], name2(i)});
  }
  if (!g.deg4.is_zero()) terms.push_back({g.deg4, w_name});
  if (terms.empty()) return "0";

  std::string out;
  for (size_t t = 0; t < terms.size(); ++t) {
    Rational c = terms[t].coeff;
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    std::string body;
    if (terms[t].name.empty()) body = mag.str();
    else if (mag == Rational(1)) body = terms[t].name;
    else body = mag.str() + "*" + terms[t].name;
    if (t == 0) out += (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace mukai
