#include "mukai/selftest.hpp"

#include <sstream>

#include "mukai/rng.hpp"

namespace mukai {

namespace {

// Project a class into H_p = {deg0 = 0, section restriction of deg2 = 0}.
GradedClass project_hp(const K3Model& model, GradedClass v) {
  v.deg0 = Rational(0);
  Rational c = model.section_degree<Rational>(v.deg2);
  v.deg2[model.idx_mu()] -= c;
  return v;
}

// The transform pipeline with the unit image optionally augmented by the
// fundamental class; used to contrast the two candidate basis actions.
GradedClass variant_transform(const K3Model& model, const FmAction& fm, const GradedClass& ch,
                              bool unit_gains_w) {
  GradedClass t = model.cup<Rational>(ch, fm.todd().sqrt_td);
  GradedClass u = fm.apply<Rational>(t);
  if (unit_gains_w) u.deg4 += t.deg0;
  return model.cup<Rational>(u, fm.todd().inv_sqrt_td);
}

struct Columns {
  // coefficients of (r, a, b, c) in each output component
  Rational rank[4], c1H[4], c1mu[4], ch2[4];
};

Columns transform_columns(const K3Model& model, const FmAction& fm, bool unit_gains_w) {
  Columns col;
  GradedClass basis[4] = {model.class_one(), model.class_H(), model.class_mu(), model.class_w()};
  for (int k = 0; k < 4; ++k) {
    GradedClass img = variant_transform(model, fm, basis[k], unit_gains_w);
    col.rank[k] = img.deg0;
    col.c1H[k] = img.deg2[model.idx_H()];
    col.c1mu[k] = img.deg2[model.idx_mu()];
    col.ch2[k] = img.deg4;
  }
  return col;
}

std::string linear_form(const Rational (&coeff)[4]) {
  static const char* vars[4] = {"r", "a", "b", "c"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (coeff[k].is_zero()) continue;
    Rational c = coeff[k];
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    std::string body = (mag == Rational(1)) ? std::string(vars[k]) : mag.str() + "*" + vars[k];
    if (out.empty()) out = (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::vector<CheckLine> lemma_checks(const K3Model& model, const FmAction& fm, std::uint64_t seed,
                                    int trials) {
  std::vector<CheckLine> out;
  RationalRng rng(seed);
  Eigen::Index n2 = model.h2_rank();
  auto add = [&](const std::string& name, bool pass, const std::string& note = {}) {
    out.push_back({name, pass, note});
  };

  // item 1: f o f' = -id and f' o f = -id
  {
    bool ok = true;
    for (int t = 0; t < trials && ok; ++t) {
      GradedClass v = rng.graded(n2);
      ok = (fm.apply<Rational>(fm.apply_prime<Rational>(v)) == -v) &&
           (fm.apply_prime<Rational>(fm.apply<Rational>(v)) == -v);
    }
    add("item 1: f of' = -id, f' of = -id (" + std::to_string(trials) + " random vectors)", ok);
  }
  // items 3-4 and the inverse anchors
  {
    bool ok = fm.apply<Rational>(model.class_mu()) == -model.class_w() &&
              fm.apply<Rational>(model.class_w()) == model.class_mu() &&
              fm.apply_prime<Rational>(model.class_mu()) == -model.class_w();
    add("item 3: f(mu) = -w^, f(w) = mu^, f'(mu^) = -w", ok);
    GradedClass expect = model.class_one() + model.class_w();
    add("item 4: f(H) = 1 + w^", fm.apply<Rational>(model.class_H()) == expect);
  }
  add("item 5: f(1)", true, "implemented with corrected value f(1) = -mu^ - Theta; see erratum report");
  // item 6: adjointness on H_p x H_p^
  {
    bool ok = true;
    for (int t = 0; t < trials && ok; ++t) {
      GradedClass alpha = project_hp(model, rng.graded(n2));
      GradedClass beta = project_hp(model, rng.graded(n2));
      Rational lhs = model.mukai_pair<Rational>(beta, fm.apply<Rational>(alpha));
      Rational rhs = -model.mukai_pair<Rational>(fm.apply_prime<Rational>(beta), alpha);
      ok = (lhs == rhs);
    }
    add("item 6: beta.f(alpha) = -f'(beta).alpha on H_p (" + std::to_string(trials) + " pairs)", ok);
  }
  // item 7: restricted isometry on H_p
  {
    bool ok = true;
    for (int t = 0; t < trials && ok; ++t) {
      GradedClass u = project_hp(model, rng.graded(n2));
      GradedClass v = project_hp(model, rng.graded(n2));
      ok = model.mukai_pair<Rational>(fm.apply<Rational>(u), fm.apply<Rational>(v)) ==
           model.mukai_pair<Rational>(u, v);
    }
    add("item 7: f isometric on H_p (" + std::to_string(trials) + " pairs)", ok);
  }
  // degree-0 law
  {
    bool ok = true;
    for (int t = 0; t < trials && ok; ++t) {
      GradedClass v = rng.graded(n2);
      ok = fm.apply<Rational>(v).deg0 == model.mukai_pair<Rational>(v, model.class_mu());
    }
    add("degree-0 law: f(v)_0 = v.mu (" + std::to_string(trials) + " vectors)", ok);
  }
  // lattice swap f(U) = V, f(V) = U
  {
    Eigen::Index n = n2 + 2;
    MatR span_u(n, 2), span_v(n, 2), img_u(n, 2), img_v(n, 2);
    auto put = [&](MatR& m, int col, const GradedClass& g) {
      VecR flat = g.flatten();
      for (Eigen::Index i = 0; i < n; ++i) m(i, col) = flat[i];
    };
    put(span_u, 0, model.class_mu());
    put(span_u, 1, model.class_H());
    put(span_v, 0, model.class_one());
    put(span_v, 1, model.class_w());
    put(img_u, 0, fm.apply<Rational>(model.class_mu()));
    put(img_u, 1, fm.apply<Rational>(model.class_H()));
    put(img_v, 0, fm.apply<Rational>(model.class_one()));
    put(img_v, 1, fm.apply<Rational>(model.class_w()));
    add("lattice swap: f(U) = V and f(V) = U",
        same_span<Rational>(img_u, span_v) && same_span<Rational>(img_v, span_u));
  }
  // f^2 = -id on U + V
  {
    bool ok = true;
    for (const GradedClass& g : {model.class_one(), model.class_H(), model.class_mu(), model.class_w()}) {
      ok = ok && fm.apply<Rational>(fm.apply<Rational>(g)) == -g;
    }
    add("f^2 = -id on U + V", ok);
  }
  // quotient isometry
  {
    auto reps = model.mu_perp_mod_mu_basis();
    MatR target = model.mu_perp_quotient_gram();
    bool ok = static_cast<Eigen::Index>(reps.size()) == n2;
    for (size_t i = 0; i < reps.size() && ok; ++i) {
      VecR fi = fm.f_tilde(reps[i]);
      for (size_t j = 0; j < reps.size() && ok; ++j) {
        VecR fj = fm.f_tilde(reps[j]);
        ok = model.inner<Rational>(fi, fj) == target(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
    ok = ok && exact_rank<Rational>(fm.f_tilde_matrix()) == n2;
    add("f~ is an exact isometry on the rank-" + std::to_string(n2) + " quotient", ok);
  }
  // Todd identities
  {
    const auto& td = fm.todd();
    GradedClass sq = model.cup<Rational>(td.sqrt_td, td.sqrt_td);
    GradedClass td_p = GradedClass::zero(n2);
    td_p.deg0 = Rational(1);
    td_p.deg2[model.idx_mu()] = Rational(-1);
    td_p.deg4 = Rational(2);
    GradedClass unit = model.class_one();
    add("Todd identities: sqrt_td^2 = 1 - mu + 2w and sqrt_td * inv_sqrt_td = 1",
        sq == td_p && model.cup<Rational>(td.sqrt_td, td.inv_sqrt_td) == unit);
  }
  return out;
}

std::vector<FixtureReport> fixture_checks(const K3Model& model, const FmAction& fm) {
  std::vector<FixtureReport> out;
  for (const auto& fx : fixture_catalog(model, fm)) out.push_back(verify_fixture(fm, fx));
  return out;
}

std::string erratum_report(const K3Model& model, const FmAction& fm) {
  Columns stated = transform_columns(model, fm, /*unit_gains_w=*/true);
  Columns used = transform_columns(model, fm, /*unit_gains_w=*/false);

  std::ostringstream os;
  os << "degree-0 image of the unit class: consistency report\n";
  os << "----------------------------------------------------\n";
  os << "transform of ch F = r + a*H + b*mu + c*w evaluated as\n";
  os << "(1/sqrt td) f((ch F) * sqrt td), sqrt td = 1 - 1/2*mu + w\n";
  os << "\n";
  os << "candidate A (stated):      f(1) = -mu^ - Theta + w^\n";
  os << "candidate B (implemented): f(1) = -mu^ - Theta\n";
  os << "\n";
  os << "induced columns, candidate A:\n";
  os << "  rank  = " << linear_form(stated.rank) << "\n";
  os << "  c1    = (" << linear_form(stated.c1H) << ")*Theta + (" << linear_form(stated.c1mu) << ")*mu^\n";
  os << "  ch2   = (" << linear_form(stated.ch2) << ")*w^\n";
  os << "induced columns, candidate B:\n";
  os << "  rank  = " << linear_form(used.rank) << "\n";
  os << "  c1    = (" << linear_form(used.c1H) << ")*Theta + (" << linear_form(used.c1mu) << ")*mu^\n";
  os << "  ch2   = (" << linear_form(used.ch2) << ")*w^\n";
  os << "\n";
  os << "the transform table requires ch2 = -b; candidate A yields ch2 = "
     << linear_form(stated.ch2) << ".\n";

  if (model.alpha_count() > 0) {
    GradedClass src = GradedClass::zero(model.h2_rank());
    src.deg0 = Rational(1);
    src.deg2[model.idx_alpha(0)] = Rational(-1);
    src.deg4 = Rational(-1);
    GradedClass a_img = -variant_transform(model, fm, src, true);
    GradedClass b_img = -variant_transform(model, fm, src, false);
    os << "cross-check on 1 - alpha_1 - w (WIT 1):\n";
    os << "  candidate A: " << render_class(model, a_img, Direction::XToXhat) << "\n";
    os << "  candidate B: " << render_class(model, b_img, Direction::XToXhat)
       << "   (the section class Theta + mu^ + beta_1)\n";
  }
  // lattice swap under candidate A: f(1) = -mu^ - Theta + w^ leaves U + V
  // only up to the w^ term.
  os << "lattice swap f(V) = U: holds for candidate B; candidate A sends 1 outside U.\n";
  os << "resolution: the basis action implements candidate B.\n";
  return os.str();
}

json modified_pairing_note(const K3Model& model, const FmAction& fm) {
  GradedClass one = model.class_one();
  GradedClass f_one = fm.apply<Rational>(one);
  BaseClass self_one = model.modified_pair(one, one);
  BaseClass self_f_one = model.modified_pair(f_one, f_one);
  json j;
  j["claim"] = "the base-valued pairing is preserved by f";
  j["status"] = "not asserted; counterexample below";
  j["modified_self_pairing_of_1"] = self_one.str();
  j["modified_self_pairing_of_f(1)"] = self_f_one.str();
  j["preserved"] = (self_one == self_f_one);
  return j;
}

json selftest_json(const K3Model& model, const FmAction& fm, std::uint64_t seed, bool with_lemma,
                   bool with_fixtures, bool with_erratum) {
  json j;
  j["seed"] = seed;
  bool all = true;
  if (with_lemma) {
    json lem = json::array();
    for (const auto& line : lemma_checks(model, fm, seed, 1000)) {
      lem.push_back({{"name", line.name}, {"pass", line.pass}, {"note", line.note}});
      all = all && line.pass;
    }
    j["lemma"] = lem;
  }
  if (with_fixtures) {
    json fx = json::array();
    for (const auto& rep : fixture_checks(model, fm)) {
      json e;
      e["label"] = rep.label;
      e["pass"] = rep.pass;
      e["expected"] = graded_to_json(model, rep.expected);
      e["computed"] = graded_to_json(model, rep.computed);
      fx.push_back(e);
      all = all && rep.pass;
    }
    j["fixtures"] = fx;
  }
  if (with_erratum) {
    j["erratum"] = erratum_report(model, fm);
  }
  j["modified_pairing"] = modified_pairing_note(model, fm);
  j["all_pass"] = all;
  return j;
}

}  // namespace mukai
