#include "mukai/fixtures.hpp"

namespace mukai {

ChernCharacter grr_pushforward_curve(const K3Model& model, CurveKind kind, long bundle_degree,
                                     int component_index) {
  GradedClass g = GradedClass::zero(model.h2_rank());
  switch (kind) {
    case CurveKind::Section:
      g.deg2[model.idx_H()] = Rational(1);
      g.deg4 = Rational(bundle_degree + 1);
      break;
    case CurveKind::Fiber:
      g.deg2[model.idx_mu()] = Rational(1);
      g.deg4 = Rational(bundle_degree);
      break;
    case CurveKind::FiberComponent:
      if (component_index < 0 || component_index >= model.alpha_count()) {
        throw validation_error("no fiber component with index " + std::to_string(component_index + 1) + " in this model");
      }
      g.deg2[model.idx_alpha(component_index)] = Rational(1);
      g.deg4 = Rational(bundle_degree + 1);
      break;
    default:
      throw validation_error("unsupported curve type");
  }
  return ChernCharacter::from_graded(g);
}

std::vector<Fixture> fixture_catalog(const K3Model& model, const FmAction& fm) {
  std::vector<Fixture> out;
  auto zero2 = [&] {
    VecR v(model.h2_rank());
    v.setConstant(Rational(0));
    return v;
  };
  (void)fm;

  // Structure sheaf of the section: GRR gives H + w; its transform is the
  // rank-one class 1 + mu^. This entry pins the degree-0 normalization.
  {
    ChernCharacter src = grr_pushforward_curve(model, CurveKind::Section, 0);
    src.wit = 0;
    src.label = "O_H";
    GradedClass exp = GradedClass::zero(model.h2_rank());
    exp.deg0 = Rational(1);
    exp.deg2[model.idx_mu()] = Rational(1);
    out.push_back(Fixture{src, ChernCharacter::from_graded(exp, 1, "T^0[O_H]"),
                          "section structure sheaf; ch by GRR pushforward from a genus-0 curve with self-intersection -2"});
  }
  // Skyscraper sheaf of a point: ch = w, transform is a fiber class.
  {
    ChernCharacter src{Rational(0), zero2(), Rational(1), 0, "kappa(x)"};
    GradedClass exp = GradedClass::zero(model.h2_rank());
    exp.deg2[model.idx_mu()] = Rational(1);
    out.push_back(Fixture{src, ChernCharacter::from_graded(exp, 1, "T^0[kappa(x)]"),
                          "skyscraper of a point; transform supported on the dual fiber through the point"});
  }
  // Rank-one degree-zero sheaf on a fiber: ch = mu, transform is a point.
  {
    ChernCharacter src = grr_pushforward_curve(model, CurveKind::Fiber, 0);
    src.wit = 1;
    src.label = "i_t* L (deg 0 on a fiber)";
    GradedClass exp = GradedClass::zero(model.h2_rank());
    exp.deg4 = Rational(1);
    out.push_back(Fixture{src, ChernCharacter::from_graded(exp, 0, "T^1[i_t* L]"),
                          "flat line bundle on a smooth fiber; transform is the skyscraper of the dual point"});
  }
  // O_X(-1) = pullback of O(-1) from the base: ch = 1 - mu.
  {
    GradedClass g = GradedClass::zero(model.h2_rank());
    g.deg0 = Rational(1);
    g.deg2[model.idx_mu()] = Rational(-1);
    ChernCharacter src = ChernCharacter::from_graded(g, 1, "O_X(-1)");
    GradedClass exp = GradedClass::zero(model.h2_rank());
    exp.deg2[model.idx_H()] = Rational(1);
    exp.deg4 = Rational(-1);
    out.push_back(Fixture{src, ChernCharacter::from_graded(exp, 0, "T^1[O_X(-1)]"),
                          "base pullback of O(-1); transform is the GRR pushforward of O(-2) from the dual section"});
  }
  // O_X(-C_i): ch = 1 - alpha_i - w; transform is a line bundle of degree
  // -1 on a section of class Theta + mu^ + beta_i.
  for (int i = 0; i < model.alpha_count(); ++i) {
    GradedClass g = GradedClass::zero(model.h2_rank());
    g.deg0 = Rational(1);
    g.deg2[model.idx_alpha(i)] = Rational(-1);
    g.deg4 = Rational(-1);
    ChernCharacter src = ChernCharacter::from_graded(g, 1, "O_X(-C_" + std::to_string(i + 1) + ")");
    GradedClass exp = GradedClass::zero(model.h2_rank());
    exp.deg2[model.idx_H()] = Rational(1);
    exp.deg2[model.idx_mu()] = Rational(1);
    exp.deg2[model.idx_alpha(i)] = Rational(1);
    out.push_back(Fixture{src, ChernCharacter::from_graded(exp, 0, "T^1[O_X(-C_" + std::to_string(i + 1) + ")]"),
                          "ideal-sheaf twist by a fiber component; transform supported on a translated section (GRR-derived)"});
  }
  return out;
}

FixtureReport verify_fixture(const FmAction& fm, const Fixture& fx) {
  FixtureReport rep;
  rep.label = fx.source.label;
  int wit = fx.source.wit.value_or(0);
  Rational sign = (wit % 2 == 0) ? Rational(1) : Rational(-1);
  rep.computed = sign * fm.rr_transform(fx.source.as_graded());
  rep.expected = fx.expected_transform.as_graded();
  rep.pass = (rep.computed == rep.expected);
  return rep;
}

}  // namespace mukai
