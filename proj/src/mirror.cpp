#include "mukai/mirror.hpp"

#include <cmath>
#include <cstdio>

#include "mukai/rng.hpp"

namespace mukai {

namespace {

VecC conj_vec(const VecC& v) {
  VecC out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i].conj();
  return out;
}

}  // namespace

Period validate_period(const K3Model& model, const VecC& omega) {
  if (omega.size() != model.h2_rank()) {
    throw validation_error("period vector must have length " + std::to_string(model.h2_rank()));
  }
  ComplexRational isotropy = model.inner<ComplexRational>(omega, omega);
  if (!isotropy.is_zero()) {
    throw math_error("period is not isotropic: Omega.Omega = " + isotropy.str());
  }
  ComplexRational positivity = model.inner<ComplexRational>(omega, conj_vec(omega));
  if (!positivity.is_real() || positivity.re.sign() <= 0) {
    throw math_error("period fails positivity: Omega.conj(Omega) = " + positivity.str());
  }
  MatR pic = model.picard_basis();
  for (Eigen::Index c = 0; c < pic.cols(); ++c) {
    VecC v = complexify(VecR(pic.col(c)));
    ComplexRational p = model.inner<ComplexRational>(omega, v);
    if (!p.is_zero()) {
      throw math_error("period is not orthogonal to the Picard lattice (pairs with " +
                       model.h2_labels()[static_cast<size_t>(c)] + " to " + p.str() + ")");
    }
  }
  return Period{omega, positivity.re};
}

VecC default_period_vector(const K3Model& model) {
  if (model.tau_count() < 4 || model.alpha_count() != 0 || model.config().transcendental_gram) {
    throw validation_error("the built-in period requires the default transcendental lattice");
  }
  VecC omega(model.h2_rank());
  for (Eigen::Index i = 0; i < omega.size(); ++i) omega[i] = ComplexRational(Rational(0));
  omega[model.idx_tau(0)] = ComplexRational(Rational(1));
  omega[model.idx_tau(1)] = ComplexRational(Rational(1));
  omega[model.idx_tau(2)] = ComplexRational(Rational(0), Rational(1));
  omega[model.idx_tau(3)] = ComplexRational(Rational(0), Rational(1));
  return omega;
}

H11Quotient h11_quotient(const K3Model& model, const Period& period) {
  int k = model.tau_count();
  // Canonical representatives are supported on the tau coordinates; the two
  // period conditions restrict to those coordinates because Omega pairs to
  // zero with the whole Picard lattice.
  VecC w1(model.h2_rank()), w2(model.h2_rank());
  MatC gram_c = complexify(model.gram());
  VecC omega_bar = conj_vec(period.omega);
  for (Eigen::Index i = 0; i < model.h2_rank(); ++i) {
    ComplexRational a1(Rational(0)), a2(Rational(0));
    for (Eigen::Index j = 0; j < model.h2_rank(); ++j) {
      if (gram_c(i, j).is_zero()) continue;
      a1 += gram_c(i, j) * period.omega[j];
      a2 += gram_c(i, j) * omega_bar[j];
    }
    w1[i] = a1;
    w2[i] = a2;
  }
  MatC conditions(2, k);
  for (int j = 0; j < k; ++j) {
    conditions(0, j) = w1[model.idx_tau(j)];
    conditions(1, j) = w2[model.idx_tau(j)];
  }
  MatC ker = kernel_basis<ComplexRational>(conditions);
  Eigen::Index expected = 18 - model.alpha_count();
  if (ker.cols() != expected) {
    throw math_error("degenerate period: quotient dimension " + std::to_string(ker.cols()) +
                     ", expected " + std::to_string(expected));
  }
  H11Quotient q;
  q.dim = ker.cols();
  q.basis = MatC(model.h2_rank(), ker.cols());
  for (Eigen::Index i = 0; i < model.h2_rank(); ++i)
    for (Eigen::Index c = 0; c < ker.cols(); ++c) q.basis(i, c) = ComplexRational(Rational(0));
  for (int j = 0; j < k; ++j)
    for (Eigen::Index c = 0; c < ker.cols(); ++c) q.basis(model.idx_tau(j), c) = ker(j, c);
  q.gram = MatC(q.dim, q.dim);
  for (Eigen::Index a = 0; a < q.dim; ++a)
    for (Eigen::Index b = 0; b < q.dim; ++b)
      q.gram(a, b) = model.inner<ComplexRational>(VecC(q.basis.col(a)), VecC(q.basis.col(b)));
  return q;
}

namespace {

// Reduce a psi image modulo Pic tensor C and the quotient bookkeeping:
// drops the H-free mu ambiguity and the alpha (Picard) coordinates.
struct ReducedImage {
  VecC h2;  // supported away from Pic except where reduction failed
  bool v_components_zero = true;
};

ReducedImage reduce_image(const K3Model& model, const GradedClassC& img) {
  ReducedImage out;
  out.v_components_zero = img.deg0.is_zero() && img.deg4.is_zero();
  out.h2 = img.deg2;
  out.h2[model.idx_H()] = ComplexRational(Rational(0));
  out.h2[model.idx_mu()] = ComplexRational(Rational(0));
  for (int i = 0; i < model.alpha_count(); ++i) out.h2[model.idx_alpha(i)] = ComplexRational(Rational(0));
  return out;
}

}  // namespace

MirrorReport psi_isometry_report(const K3Model& model, const FmAction& fm, const Period& period,
                                 std::uint64_t seed, int trials) {
  MirrorReport rep;
  rep.seed = seed;
  rep.trials = trials;
  H11Quotient q = h11_quotient(model, period);
  rep.quotient_dim = q.dim;

  VecC omega_bar = conj_vec(period.omega);
  auto in_quotient = [&](const VecC& v) {
    return model.inner<ComplexRational>(v, period.omega).is_zero() &&
           model.inner<ComplexRational>(v, omega_bar).is_zero();
  };

  // psi(Omega) proportional to Omega.
  {
    GradedClassC img = fm.psi(period.omega);
    auto red = reduce_image(model, img);
    ComplexRational lambda(Rational(0));
    bool proportional = red.v_components_zero;
    for (Eigen::Index i = 0; i < model.h2_rank() && proportional; ++i) {
      const ComplexRational& a = red.h2[i];
      const ComplexRational& b = period.omega[i];
      if (b.is_zero()) {
        if (!a.is_zero()) proportional = false;
        continue;
      }
      ComplexRational ratio = a / b;
      if (lambda.is_zero()) lambda = ratio;
      else if (ratio != lambda) proportional = false;
    }
    rep.psi_omega_proportional = proportional && !lambda.is_zero();
  }

  RationalRng rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto draw = [&] {
      VecC v(model.h2_rank());
      for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = ComplexRational(Rational(0));
      for (Eigen::Index c = 0; c < q.dim; ++c) {
        ComplexRational coeff(rng.rational(20, 8));
        for (Eigen::Index i = 0; i < v.size(); ++i) v[i] += coeff * q.basis(i, c);
      }
      return v;
    };
    VecC v = draw();
    VecC vp = draw();
    GradedClassC iv = fm.psi(v);
    GradedClassC ivp = fm.psi(vp);
    auto rv = reduce_image(model, iv);
    auto rvp = reduce_image(model, ivp);
    if (!rv.v_components_zero || !rvp.v_components_zero) {
      rep.failures.push_back({t, "psi image has components outside H^2 after reduction"});
      continue;
    }
    if (!in_quotient(rv.h2) || !in_quotient(rvp.h2)) {
      rep.failures.push_back({t, "psi image leaves the algebraic-deformation subspace"});
      continue;
    }
    ComplexRational lhs = model.inner<ComplexRational>(v, vp);
    ComplexRational rhs = model.inner<ComplexRational>(rv.h2, rvp.h2);
    if (lhs != rhs) {
      rep.failures.push_back({t, "pairing not preserved: " + lhs.str() + " vs " + rhs.str()});
    }
  }
  return rep;
}

std::string format_significant(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.14e", x);
  std::string s(buf);
  auto epos = s.find('e');
  std::string mantissa = s.substr(0, epos);
  int exp10 = std::stoi(s.substr(epos + 1));
  if (exp10 < -4 || exp10 > 14) return s;
  // Re-render in fixed point with 15 significant digits.
  int frac_digits = 14 - exp10;
  if (frac_digits < 0) frac_digits = 0;
  std::snprintf(buf, sizeof(buf), "%.*f", frac_digits, x);
  return std::string(buf);
}

BpsMass bps_mass(const K3Model& model, const VecR& gamma, const Period& period) {
  if (gamma.size() != model.h2_rank()) {
    throw validation_error("gamma must be an H^2 vector of length " + std::to_string(model.h2_rank()));
  }
  for (Eigen::Index i = 0; i < gamma.size(); ++i) {
    if (!gamma[i].is_integer()) throw math_error("gamma must be an integral class");
  }
  ComplexRational pairing = model.inner<ComplexRational>(complexify(gamma), period.omega);
  BpsMass out;
  out.mass_squared = pairing.norm() / period.omega_omega_bar;
  out.decimal = format_significant(std::sqrt(out.mass_squared.to_double()));
  return out;
}

}  // namespace mukai
