#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "mukai/json_io.hpp"
#include "mukai/selftest.hpp"

namespace {

using namespace mukai;

constexpr std::uint64_t kDefaultSeed = 42;

struct Options {
  std::string model_path;
  bool json_output = false;
  std::uint64_t seed = kDefaultSeed;
  bool allow_non_k3 = false;
};

K3Model load_model(const Options& opt, const std::string& explicit_path = {}) {
  std::string path = !explicit_path.empty() ? explicit_path : opt.model_path;
  if (path.empty()) {
    if (const char* env = std::getenv("MUKAI_K3_MODEL")) path = env;
  }
  FiberConfig cfg;
  if (path.empty()) {
    cfg.fibers.push_back({1, 24});  // 24 nodal fibers, default transcendental lattice
  } else {
    cfg = fiber_config_from_json(load_json_file(path));
  }
  if (opt.allow_non_k3) cfg.allow_non_k3 = true;
  return K3Model::build(cfg);
}

GradedClass parse_class_arg(const K3Model& model, const std::string& arg) {
  // Either a JSON object or a bare "r,a,b,c" quadruple.
  std::string trimmed = arg;
  if (!trimmed.empty() && trimmed[0] == '{') return graded_from_json(model, parse_json(trimmed));
  std::vector<Rational> parts;
  size_t start = 0;
  while (true) {
    size_t comma = trimmed.find(',', start);
    std::string tok = trimmed.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    parts.push_back(Rational::parse(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw usage_error("expected a JSON class or r,a,b,c quadruple");
  GradedClass g = GradedClass::zero(model.h2_rank());
  g.deg0 = parts[0];
  g.deg2[model.idx_H()] = parts[1];
  g.deg2[model.idx_mu()] = parts[2];
  g.deg4 = parts[3];
  return g;
}

VecC load_period(const K3Model& model, const std::string& period_arg) {
  if (period_arg.empty()) return default_period_vector(model);
  if (!period_arg.empty() && period_arg[0] == '[') return period_from_json(model, parse_json(period_arg));
  return period_from_json(model, load_json_file(period_arg));
}

void emit(const Options& opt, const json& machine, const std::string& human) {
  if (opt.json_output) std::cout << machine.dump(2) << "\n";
  else std::cout << human << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact cohomological Fourier-Mukai toolkit for elliptic K3 surfaces"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--model", opt.model_path, "fiber-configuration JSON (default: $MUKAI_K3_MODEL or 24 nodal fibers)");
  app.add_flag("--json", opt.json_output, "machine-readable output");
  app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_flag("--allow-non-k3", opt.allow_non_k3, "accept fiber configurations whose Euler numbers do not sum to 24");

  // validate
  auto* validate = app.add_subcommand("validate", "build a model and print its lattice summary");
  std::string validate_path;
  validate->add_option("config", validate_path, "fiber-configuration JSON file");

  // fm
  auto* fm_cmd = app.add_subcommand("fm", "apply the cohomological transform to a class");
  std::string fm_vector, fm_direction = "x-to-xhat";
  bool fm_inverse = false;
  fm_cmd->add_option("vector", fm_vector, "graded class (JSON or r,a,b,c)")->required();
  fm_cmd->add_flag("--inverse", fm_inverse, "apply f' instead of f");
  fm_cmd->add_option("--direction", fm_direction, "x-to-xhat | xhat-to-x");

  // pair
  auto* pair_cmd = app.add_subcommand("pair", "Mukai pairing of two classes");
  std::string pair_v1, pair_v2;
  bool pair_modified = false;
  pair_cmd->add_option("v1", pair_v1)->required();
  pair_cmd->add_option("v2", pair_v2)->required();
  pair_cmd->add_flag("--modified", pair_modified, "base-valued pairing p_*(v1^* cup v2)");

  // transform-ch
  auto* tch = app.add_subcommand("transform-ch", "transform of a sheaf character");
  std::string tch_class, tch_direction = "x-to-xhat";
  int tch_wit = 0;
  bool tch_table = false, tch_grr = false;
  tch->add_option("ch", tch_class, "Chern character (JSON or r,a,b,c)")->required();
  tch->add_option("--wit", tch_wit, "WIT index of the sheaf (0 or 1)")->check(CLI::Range(0, 1));
  tch->add_option("--direction", tch_direction, "x-to-xhat | xhat-to-x");
  tch->add_flag("--table", tch_table, "use only the rank-2-Picard table");
  tch->add_flag("--grr", tch_grr, "use only the general transform");

  // brane
  auto* brane = app.add_subcommand("brane", "T-duality image of an integral brane charge");
  std::string brane_charge;
  brane->add_option("charge", brane_charge, "r,a,b,c with integer entries")->required();

  // mass
  auto* mass = app.add_subcommand("mass", "BPS mass of a 2-cycle class");
  std::string mass_gamma, mass_period;
  mass->add_option("gamma", mass_gamma, "integral H^2 class (JSON)")->required();
  mass->add_option("--period", mass_period, "period file or inline JSON array (default: built-in period)");

  // mirror-check
  auto* mirror = app.add_subcommand("mirror-check", "randomized isometry check of the mirror map");
  std::string mirror_period;
  int mirror_trials = 100;
  mirror->add_option("--period", mirror_period, "period file or inline JSON array");
  mirror->add_option("--trials", mirror_trials, "number of random trials");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
  bool st_fixtures = false, st_lemma = false, st_erratum = false;
  selftest->add_flag("--fixtures", st_fixtures, "only the fixture catalog");
  selftest->add_flag("--lemma", st_lemma, "only the structural identities");
  selftest->add_flag("--erratum", st_erratum, "only the unit-image consistency report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate) {
      K3Model model = load_model(opt, validate_path);
      Signature sig = signature_of(model.gram());
      json j;
      j["h2_rank"] = model.h2_rank();
      j["signature"] = {sig.positive, sig.negative};
      j["alpha_count"] = model.alpha_count();
      j["tau_count"] = model.tau_count();
      j["even"] = is_even_integral(model.gram());
      std::string human = "rank " + std::to_string(model.h2_rank()) + ", signature (" +
                          std::to_string(sig.positive) + "," + std::to_string(sig.negative) + ")" +
                          ", r = " + std::to_string(model.alpha_count()) +
                          ", transcendental rank " + std::to_string(model.tau_count());
      if (opt.allow_non_k3) human += "  [warning: Euler-sum check overridden]";
      emit(opt, j, human);
      return 0;
    }
    if (*fm_cmd) {
      K3Model model = load_model(opt);
      FmAction fm(model);
      Direction dir = parse_direction(fm_direction);
      (void)dir;  // the identification makes both directions numerically equal
      GradedClass v = parse_class_arg(model, fm_vector);
      GradedClass img = fm_inverse ? fm.apply_prime<Rational>(v) : fm.apply<Rational>(v);
      Direction render_side = fm_inverse ? Direction::XhatToX : Direction::XToXhat;
      emit(opt, graded_to_json(model, img), render_class(model, img, render_side));
      return 0;
    }
    if (*pair_cmd) {
      K3Model model = load_model(opt);
      GradedClass v1 = parse_class_arg(model, pair_v1);
      GradedClass v2 = parse_class_arg(model, pair_v2);
      if (pair_modified) {
        BaseClass b = model.modified_pair(v1, v2);
        emit(opt, json{{"c0", b.c0.str()}, {"c1", b.c1.str()}}, b.str());
      } else {
        Rational p = model.mukai_pair<Rational>(v1, v2);
        emit(opt, json{{"value", p.str()}}, p.str());
      }
      return 0;
    }
    if (*tch) {
      K3Model model = load_model(opt);
      FmAction fm(model);
      Direction dir = parse_direction(tch_direction);
      GradedClass ch = parse_class_arg(model, tch_class);
      if (tch_table && tch_grr) throw usage_error("--table and --grr are mutually exclusive");
      Rational sign = (tch_wit == 0) ? Rational(1) : Rational(-1);
      std::optional<GradedClass> via_grr, via_table;
      if (!tch_table) via_grr = sign * fm.rr_transform(ch, dir);
      bool table_applicable = true;
      try {
        if (!tch_grr) via_table = fm.rr_table(ch, tch_wit, dir);
      } catch (const Error& e) {
        if (tch_table) throw;
        table_applicable = false;
      }
      if (via_grr && via_table && table_applicable && *via_grr != *via_table) {
        throw math_error("internal disagreement between the transform table and the general transform");
      }
      GradedClass out = via_grr ? *via_grr : *via_table;
      Direction render_side = (dir == Direction::XToXhat) ? Direction::XToXhat : Direction::XhatToX;
      json j = graded_to_json(model, out);
      j["wit"] = tch_wit;
      emit(opt, j, render_class(model, out, render_side));
      return 0;
    }
    if (*brane) {
      std::array<long, 4> q{};
      K3Model model = load_model(opt);
      GradedClass tmp = parse_class_arg(model, brane_charge);
      auto to_long = [](const Rational& r) {
        if (!r.is_integer()) throw usage_error("brane charges must be integers");
        return std::stol(r.str());
      };
      q = {to_long(tmp.deg0), to_long(tmp.deg2[model.idx_H()]), to_long(tmp.deg2[model.idx_mu()]),
           to_long(tmp.deg4)};
      BraneImage img = brane_map(q);
      GradedClass g = GradedClass::zero(model.h2_rank());
      g.deg0 = Rational(img.charge[0]);
      g.deg2[model.idx_H()] = Rational(img.charge[1]);
      g.deg2[model.idx_mu()] = Rational(img.charge[2]);
      g.deg4 = Rational(img.charge[3]);
      json j;
      j["charge"] = {img.charge[0], img.charge[1], img.charge[2], img.charge[3]};
      j["annotation"] = img.annotation;
      emit(opt, j, render_class(model, g, Direction::XToXhat) + " : " + img.annotation);
      return 0;
    }
    if (*mass) {
      K3Model model = load_model(opt);
      VecC omega = load_period(model, mass_period);
      Period period = validate_period(model, omega);
      GradedClass gamma = parse_class_arg(model, mass_gamma);
      if (!gamma.deg0.is_zero() || !gamma.deg4.is_zero()) {
        throw math_error("gamma must be a pure H^2 class");
      }
      BpsMass m = bps_mass(model, gamma.deg2, period);
      json j;
      j["mass_squared"] = m.mass_squared.str();
      j["mass_decimal"] = m.decimal;
      emit(opt, j, "M^2 = " + m.mass_squared.str() + ", M ≈ " + m.decimal);
      return 0;
    }
    if (*mirror) {
      K3Model model = load_model(opt);
      FmAction fm(model);
      VecC omega = load_period(model, mirror_period);
      Period period = validate_period(model, omega);
      MirrorReport rep = psi_isometry_report(model, fm, period, opt.seed, mirror_trials);
      json j = mirror_report_to_json(rep);
      std::string human = "seed " + std::to_string(rep.seed) + ", " + std::to_string(rep.trials) +
                          " trials, quotient dimension " + std::to_string(rep.quotient_dim) + ": " +
                          (rep.all_exact() ? "all exact" : std::to_string(rep.failures.size()) + " failures");
      emit(opt, j, human);
      return rep.all_exact() ? 0 : 3;
    }
    if (*selftest) {
      K3Model model = load_model(opt);
      FmAction fm(model);
      bool any_flag = st_fixtures || st_lemma || st_erratum;
      bool with_lemma = st_lemma || !any_flag;
      bool with_fixtures = st_fixtures || !any_flag;
      bool with_erratum = st_erratum || !any_flag;
      if (st_erratum && !st_lemma && !st_fixtures && !opt.json_output) {
        std::cout << erratum_report(model, fm);
        return 0;
      }
      json j = selftest_json(model, fm, opt.seed, with_lemma, with_fixtures, with_erratum);
      if (opt.json_output) {
        std::cout << j.dump(2) << "\n";
      } else {
        if (j.contains("lemma")) {
          for (const auto& line : j["lemma"]) {
            std::cout << (line["pass"].get<bool>() ? "PASS  " : "FAIL  ") << line["name"].get<std::string>();
            std::string note = line["note"].get<std::string>();
            if (!note.empty()) std::cout << "  [" << note << "]";
            std::cout << "\n";
          }
        }
        if (j.contains("fixtures")) {
          for (const auto& fx : j["fixtures"]) {
            std::cout << (fx["pass"].get<bool>() ? "PASS  " : "FAIL  ") << "fixture "
                      << fx["label"].get<std::string>() << "\n";
          }
        }
        const auto& mp = j["modified_pairing"];
        std::cout << "NOTE  base-valued pairing: self-pairing of 1 is "
                  << mp["modified_self_pairing_of_1"].get<std::string>() << "; of f(1) is "
                  << mp["modified_self_pairing_of_f(1)"].get<std::string>()
                  << " (global isometry not asserted)\n";
        if (j.contains("erratum")) std::cout << "\n" << j["erratum"].get<std::string>();
      }
      return j["all_pass"].get<bool>() ? 0 : 3;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
