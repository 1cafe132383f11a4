#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mukai/graded.hpp"
#include "mukai/linalg.hpp"

namespace mukai {

// Singular fiber entry: n == 1 is a nodal elliptic curve (I_1); n >= 3 is a
// cycle of n rational curves (I_n). I_2 is not admitted.
struct FiberEntry {
  int n = 1;
  int count = 1;
};

struct FiberConfig {
  std::vector<FiberEntry> fibers;
  std::optional<MatR> transcendental_gram;
  bool allow_non_k3 = false;
};

// Standard gram blocks.
MatR gram_hyperbolic_U();      // [[0,1],[1,0]]
MatR gram_E8_minus();          // negated E8 Cartan matrix
MatR gram_A_chain_minus(int len);  // -2 diagonal, +1 adjacent
MatR default_transcendental_gram();  // U + U + E8(-1) + E8(-1), rank 20

// Cohomology model of an elliptic K3 with section. H^2 basis order:
//   [H, mu, alpha_1..alpha_r, tau_1..tau_k],  k = 20 - r.
// H is the section class, mu the fiber class, alpha_i the I_n fiber
// components missing the section, tau_j a basis of the transcendental
// lattice. Immutable after build.
class K3Model {
 public:
  static K3Model build(const FiberConfig& cfg);

  int alpha_count() const { return r_; }
  int tau_count() const { return k_; }
  Eigen::Index h2_rank() const { return 2 + r_ + k_; }
  const MatR& gram() const { return gram_; }
  const FiberConfig& config() const { return cfg_; }

  Eigen::Index idx_H() const { return 0; }
  Eigen::Index idx_mu() const { return 1; }
  Eigen::Index idx_alpha(int i) const { return 2 + i; }            // 0-based
  Eigen::Index idx_tau(int j) const { return 2 + r_ + j; }         // 0-based
  const std::vector<std::string>& h2_labels() const { return labels_; }

  VecR e2(Eigen::Index i) const {  // H^2 unit coordinate vector
    VecR v(h2_rank());
    v.setConstant(Rational(0));
    v[i] = Rational(1);
    return v;
  }
  GradedClass class_one() const { return {Rational(1), zero2(), Rational(0)}; }
  GradedClass class_w() const { return {Rational(0), zero2(), Rational(1)}; }
  GradedClass class_H() const { return {Rational(0), e2(idx_H()), Rational(0)}; }
  GradedClass class_mu() const { return {Rational(0), e2(idx_mu()), Rational(0)}; }
  GradedClass class_alpha(int i) const { return {Rational(0), e2(idx_alpha(i)), Rational(0)}; }
  GradedClass class_tau(int j) const { return {Rational(0), e2(idx_tau(j)), Rational(0)}; }

  // Columns: H, mu, alpha_i as H^2 coordinate vectors.
  MatR picard_basis() const;
  // Columns: tau_j.
  MatR transcendental_basis() const;

  template <class S>
  S inner(const Vec<S>& x, const Vec<S>& y) const {
    if (x.size() != h2_rank() || y.size() != h2_rank())
      throw validation_error("H^2 vector has wrong dimension");
    S acc(0);
    for (Eigen::Index i = 0; i < gram_.rows(); ++i) {
      if (x[i].is_zero()) continue;
      for (Eigen::Index j = 0; j < gram_.cols(); ++j) {
        if (gram_(i, j).is_zero() || y[j].is_zero()) continue;
        acc += x[i] * S(gram_(i, j)) * y[j];
      }
    }
    return acc;
  }

  // Cup product truncated above degree 4.
  template <class S>
  Graded<S> cup(const Graded<S>& x, const Graded<S>& y) const {
    check_dim(x); check_dim(y);
    Graded<S> out = Graded<S>::zero(h2_rank());
    out.deg0 = x.deg0 * y.deg0;
    out.deg2 = (x.deg2 * y.deg0 + y.deg2 * x.deg0).eval();
    out.deg4 = x.deg0 * y.deg4 + y.deg0 * x.deg4 + inner<S>(x.deg2, y.deg2);
    return out;
  }

  // (a,b,c).(a',b',c') = b.b' - a c' - a' c
  template <class S>
  S mukai_pair(const Graded<S>& x, const Graded<S>& y) const {
    check_dim(x); check_dim(y);
    return inner<S>(x.deg2, y.deg2) - x.deg0 * y.deg4 - y.deg0 * x.deg4;
  }

  // Restriction to the section: e^*(x2) = <x2, H> [pt].
  template <class S>
  S section_degree(const Vec<S>& x2) const {
    Vec<S> h(h2_rank());
    for (Eigen::Index i = 0; i < h2_rank(); ++i) h[i] = S(i == idx_H() ? 1 : 0);
    return inner<S>(x2, h);
  }

  // x = pullback + phi, pullback in span(1, mu), e^*(phi) = 0.
  template <class S>
  std::pair<Graded<S>, Graded<S>> decompose_fiberwise(const Graded<S>& x) const {
    check_dim(x);
    S c = section_degree<S>(x.deg2);
    Graded<S> pullback = Graded<S>::zero(h2_rank());
    pullback.deg0 = x.deg0;
    pullback.deg2[idx_mu()] = c;
    Graded<S> phi = Graded<S>::zero(h2_rank());
    phi.deg2 = (x.deg2 - pullback.deg2).eval();
    phi.deg4 = x.deg4;
    return {pullback, phi};
  }

  // The involution: pullback classes fixed, H^{2i}_phi scaled by (-1)^i.
  template <class S>
  Graded<S> star(const Graded<S>& x) const {
    auto [pullback, phi] = decompose_fiberwise<S>(x);
    Graded<S> out = pullback;
    out.deg2 = (pullback.deg2 - phi.deg2).eval();
    out.deg4 = x.deg4;  // H^4 = H^4_phi, sign (+1)^2
    return out;
  }

  // p_*: deg4 -> [pt], deg2 -> fiber-intersection degree, deg0 -> 0.
  template <class S>
  std::pair<S, S> pushforward_base(const Graded<S>& x) const {
    check_dim(x);
    Vec<S> mu(h2_rank());
    for (Eigen::Index i = 0; i < h2_rank(); ++i) mu[i] = S(i == idx_mu() ? 1 : 0);
    return {inner<S>(x.deg2, mu), x.deg4};
  }

  BaseClass pushforward(const GradedClass& x) const {
    auto [c0, c1] = pushforward_base<Rational>(x);
    return BaseClass(c0, c1);
  }

  // a . a' = p_*(a^* cup a'), valued in the base cohomology.
  BaseClass modified_pair(const GradedClass& x, const GradedClass& y) const {
    auto [c0, c1] = pushforward_base<Rational>(cup<Rational>(star<Rational>(x), y));
    return BaseClass(c0, c1);
  }

  // 22 representatives of mu-perp / Q mu: classes of 1, w, alpha_i, tau_j.
  // (mu-perp is cut out by vanishing H-coefficient; mu itself represents 0.)
  std::vector<GradedClass> mu_perp_mod_mu_basis() const;

  // Quotient Mukai gram of the representatives above.
  MatR mu_perp_quotient_gram() const;

 private:
  K3Model() = default;
  VecR zero2() const {
    VecR v(h2_rank());
    v.setConstant(Rational(0));
    return v;
  }
  template <class S>
  void check_dim(const Graded<S>& x) const {
    if (x.deg2.size() != h2_rank()) throw validation_error("class does not match this model (H^2 dimension)");
  }

  int r_ = 0;
  int k_ = 20;
  MatR gram_;
  std::vector<std::string> labels_;
  FiberConfig cfg_;
};

}  // namespace mukai
