#include "mukai/fm.hpp"

namespace mukai {

ToddData make_todd_data(const K3Model& model) {
  // td p = td(X)/p^* td(P^1) = (1 + 2w)(1 + mu)^{-1} = 1 - mu + 2w;
  // its square root is 1 - mu/2 + w (mu cup mu = 0).
  ToddData t;
  t.sqrt_td = GradedClass::zero(model.h2_rank());
  t.sqrt_td.deg0 = Rational(1);
  t.sqrt_td.deg2[model.idx_mu()] = Rational(-1, 2);
  t.sqrt_td.deg4 = Rational(1);
  t.inv_sqrt_td = GradedClass::zero(model.h2_rank());
  t.inv_sqrt_td.deg0 = Rational(1);
  t.inv_sqrt_td.deg2[model.idx_mu()] = Rational(1, 2);
  t.inv_sqrt_td.deg4 = Rational(-1);
  return t;
}

FmAction::FmAction(const K3Model& model) : model_(&model), todd_(make_todd_data(model)) {
  Eigen::Index n2 = model.h2_rank();
  Eigen::Index n = n2 + 2;  // [deg0; H^2; deg4]
  fmat_ = MatR(n, n);
  fmat_.setConstant(Rational(0));

  auto set_col = [&](Eigen::Index col, const GradedClass& image) {
    VecR flat = image.flatten();
    for (Eigen::Index i = 0; i < n; ++i) fmat_(i, col) = flat[i];
  };

  // f(1) = -mu^ - Theta
  GradedClass f_one = GradedClass::zero(n2);
  f_one.deg2[model.idx_H()] = Rational(-1);
  f_one.deg2[model.idx_mu()] = Rational(-1);
  set_col(0, f_one);
  // f(H) = 1 + w^
  GradedClass f_H = GradedClass::zero(n2);
  f_H.deg0 = Rational(1);
  f_H.deg4 = Rational(1);
  set_col(1 + model.idx_H(), f_H);
  // f(mu) = -w^
  GradedClass f_mu = GradedClass::zero(n2);
  f_mu.deg4 = Rational(-1);
  set_col(1 + model.idx_mu(), f_mu);
  // f(alpha_i) = beta_i, f(tau_j) = tau_j
  for (int i = 0; i < model.alpha_count(); ++i)
    set_col(1 + model.idx_alpha(i), model.class_alpha(i));
  for (int j = 0; j < model.tau_count(); ++j)
    set_col(1 + model.idx_tau(j), model.class_tau(j));
  // f(w) = mu^
  set_col(n - 1, model.class_mu());

  finv_ = invert<Rational>(fmat_);

  // f~ on the quotient representatives (1, w, alpha_i, tau_j): take the
  // H^2-component of the column images.
  auto reps = model.mu_perp_mod_mu_basis();
  ftilde_ = MatR(n2, static_cast<Eigen::Index>(reps.size()));
  for (size_t c = 0; c < reps.size(); ++c) {
    GradedClass img = apply<Rational>(reps[c]);
    for (Eigen::Index i = 0; i < n2; ++i) ftilde_(i, static_cast<Eigen::Index>(c)) = img.deg2[i];
  }
  ftilde_inv_ = invert<ComplexRational>(complexify(ftilde_));
}

VecR FmAction::f_tilde(const GradedClass& v) const {
  Rational pairing = model_->mukai_pair<Rational>(v, model_->class_mu());
  if (!pairing.is_zero()) {
    throw math_error("class is not in mu-perp (Mukai pairing with the fiber class is " + pairing.str() + ")");
  }
  return apply<Rational>(v).deg2;
}

GradedClassC FmAction::psi(const VecC& beta) const {
  if (beta.size() != model_->h2_rank()) throw validation_error("H^2 vector has wrong dimension");
  VecC coords(ftilde_inv_.rows());
  for (Eigen::Index i = 0; i < ftilde_inv_.rows(); ++i) {
    ComplexRational acc(Rational(0));
    for (Eigen::Index j = 0; j < ftilde_inv_.cols(); ++j) {
      if (ftilde_inv_(i, j).is_zero() || beta[j].is_zero()) continue;
      acc += ftilde_inv_(i, j) * beta[j];
    }
    coords[i] = acc;
  }
  GradedClassC out = GradedClassC::zero(model_->h2_rank());
  out.deg0 = coords[0];
  out.deg4 = coords[1];
  for (Eigen::Index c = 2; c < coords.size(); ++c) {
    out.deg2[2 + (c - 2)] = coords[c];  // alpha then tau coordinates
  }
  return out;
}

GradedClass FmAction::rr_transform(const GradedClass& ch, Direction dir) const {
  GradedClass t = model_->cup<Rational>(ch, todd_.sqrt_td);
  GradedClass u = (dir == Direction::XToXhat) ? apply<Rational>(t) : apply_prime<Rational>(t);
  return model_->cup<Rational>(u, todd_.inv_sqrt_td);
}

GradedClassC FmAction::rr_transform(const GradedClassC& ch, Direction dir) const {
  GradedClassC sqrt_td = complexify(todd_.sqrt_td);
  GradedClassC inv_sqrt = complexify(todd_.inv_sqrt_td);
  GradedClassC t = model_->cup<ComplexRational>(ch, sqrt_td);
  GradedClassC u = (dir == Direction::XToXhat) ? apply<ComplexRational>(t) : apply_prime<ComplexRational>(t);
  return model_->cup<ComplexRational>(u, inv_sqrt);
}

GradedClass FmAction::rr_table(const GradedClass& ch, int wit, Direction dir) const {
  (void)dir;  // the table is symmetric under the identification
  if (wit != 0 && wit != 1) throw usage_error("WIT index must be 0 or 1");
  if (ch.deg2.size() != model_->h2_rank()) throw validation_error("class does not match this model");
  for (int i = 0; i < model_->alpha_count(); ++i) {
    if (!ch.deg2[model_->idx_alpha(i)].is_zero()) {
      throw math_error("rr_table requires Picard coordinates in span(H, mu); use the general transform for fiber-component classes");
    }
  }
  for (int j = 0; j < model_->tau_count(); ++j) {
    if (!ch.deg2[model_->idx_tau(j)].is_zero()) {
      throw math_error("rr_table requires Picard coordinates in span(H, mu)");
    }
  }
  Rational r = ch.deg0;
  Rational a = ch.deg2[model_->idx_H()];
  Rational b = ch.deg2[model_->idx_mu()];
  Rational c = ch.deg4;
  GradedClass out = GradedClass::zero(model_->h2_rank());
  out.deg0 = a;
  out.deg2[model_->idx_H()] = -r;
  out.deg2[model_->idx_mu()] = c;
  out.deg4 = -b;
  Rational sign = (wit == 0) ? Rational(1) : Rational(-1);
  return sign * out;
}

BraneImage brane_map(const std::array<long, 4>& v) {
  const long r = v[0], a = v[1], b = v[2], c = v[3];
  BraneImage out;
  out.charge = {a, -r, c, -b};
  const long rh = out.charge[0], th = out.charge[1], mh = out.charge[2], wh = out.charge[3];
  bool d0 = rh != 0, dth = th != 0, dmh = mh != 0, d4 = wh != 0;
  if (!d0 && !dth && !dmh && !d4) {
    out.annotation = "zero charge";
  } else if (!d0 && !dth && !d4 && dmh) {
    out.annotation = "genus-1 2-cycle (fiber)";
  } else if (!d0 && !dmh && !d4 && dth) {
    out.annotation = "genus-0 2-cycle (section)";
  } else if (!d0 && !dth && !dmh) {
    out.annotation = "0-brane";
  } else if (!dth && !dmh && !d4) {
    out.annotation = "4-brane";
  } else {
    out.annotation = "mixed brane charge";
  }
  return out;
}

}  // namespace mukai
