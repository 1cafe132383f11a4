#include "mukai/k3_model.hpp"

#include <numeric>

namespace mukai {

MatR gram_hyperbolic_U() {
  MatR u(2, 2);
  u << Rational(0), Rational(1), Rational(1), Rational(0);
  return u;
}

MatR gram_E8_minus() {
  // Negated E8 Cartan matrix: chain 1..7, node 8 attached to node 5.
  MatR g(8, 8);
  g.setConstant(Rational(0));
  for (int i = 0; i < 8; ++i) g(i, i) = Rational(-2);
  for (int i = 0; i + 1 < 7; ++i) {
    g(i, i + 1) = Rational(1);
    g(i + 1, i) = Rational(1);
  }
  g(7, 4) = Rational(1);
  g(4, 7) = Rational(1);
  return g;
}

MatR gram_A_chain_minus(int len) {
  MatR g(len, len);
  g.setConstant(Rational(0));
  for (int i = 0; i < len; ++i) g(i, i) = Rational(-2);
  for (int i = 0; i + 1 < len; ++i) {
    g(i, i + 1) = Rational(1);
    g(i + 1, i) = Rational(1);
  }
  return g;
}

MatR default_transcendental_gram() {
  MatR g(20, 20);
  g.setConstant(Rational(0));
  g.block(0, 0, 2, 2) = gram_hyperbolic_U();
  g.block(2, 2, 2, 2) = gram_hyperbolic_U();
  g.block(4, 4, 8, 8) = gram_E8_minus();
  g.block(12, 12, 8, 8) = gram_E8_minus();
  return g;
}

K3Model K3Model::build(const FiberConfig& cfg) {
  long euler = 0;
  int r = 0;
  for (const auto& f : cfg.fibers) {
    if (f.count <= 0) throw validation_error("fiber count must be positive");
    if (f.n != 1 && f.n < 3) throw validation_error("fiber type I_" + std::to_string(f.n) + " is not admitted (only nodal or I_n, n >= 3)");
    euler += static_cast<long>(f.n) * f.count;
    if (f.n >= 3) r += (f.n - 1) * f.count;
  }
  if (euler != 24 && !cfg.allow_non_k3) {
    throw validation_error("Euler numbers of the fibers sum to " + std::to_string(euler) + ", expected 24 (pass allow_non_k3 to override)");
  }
  if (r > 18) throw validation_error("too many fiber components: r = " + std::to_string(r) + " > 18");

  int k = 20 - r;
  MatR t_gram;
  if (cfg.transcendental_gram) {
    t_gram = *cfg.transcendental_gram;
    if (t_gram.rows() != k || t_gram.cols() != k) {
      throw validation_error("transcendental gram must have rank " + std::to_string(k));
    }
  } else {
    if (r != 0) throw validation_error("a transcendental gram of rank " + std::to_string(k) + " is required when r > 0");
    t_gram = default_transcendental_gram();
  }
  for (Eigen::Index i = 0; i < t_gram.rows(); ++i)
    for (Eigen::Index j = i + 1; j < t_gram.cols(); ++j)
      if (t_gram(i, j) != t_gram(j, i)) throw validation_error("transcendental gram must be symmetric");
  if (!is_even_integral(t_gram)) throw validation_error("transcendental gram must be even and integral");
  Signature t_sig = signature_of(t_gram);
  if (t_sig.positive != 2 || t_sig.negative != 18 - r || t_sig.zero != 0) {
    throw validation_error("transcendental gram must have signature (2, " + std::to_string(18 - r) + ")");
  }

  K3Model m;
  m.r_ = r;
  m.k_ = k;
  m.cfg_ = cfg;

  Eigen::Index n = 2 + r + k;
  m.gram_ = MatR(n, n);
  m.gram_.setConstant(Rational(0));
  m.gram_(0, 0) = Rational(-2);  // H.H
  m.gram_(0, 1) = Rational(1);   // H.mu
  m.gram_(1, 0) = Rational(1);
  // alpha block: one A_{n-1} chain per I_n fiber, zero across fibers.
  int pos = 2;
  for (const auto& f : cfg.fibers) {
    if (f.n < 3) continue;
    for (int c = 0; c < f.count; ++c) {
      int len = f.n - 1;
      m.gram_.block(pos, pos, len, len) = gram_A_chain_minus(len);
      pos += len;
    }
  }
  m.gram_.block(2 + r, 2 + r, k, k) = t_gram;

  m.labels_.clear();
  m.labels_.emplace_back("H");
  m.labels_.emplace_back("mu");
  for (int i = 0; i < r; ++i) m.labels_.push_back("alpha_" + std::to_string(i + 1));
  for (int j = 0; j < k; ++j) m.labels_.push_back("tau_" + std::to_string(j + 1));
  return m;
}

MatR K3Model::picard_basis() const {
  MatR b(h2_rank(), 2 + r_);
  b.setConstant(Rational(0));
  for (int i = 0; i < 2 + r_; ++i) b(i, i) = Rational(1);
  return b;
}

MatR K3Model::transcendental_basis() const {
  MatR b(h2_rank(), k_);
  b.setConstant(Rational(0));
  for (int j = 0; j < k_; ++j) b(idx_tau(j), j) = Rational(1);
  return b;
}

std::vector<GradedClass> K3Model::mu_perp_mod_mu_basis() const {
  std::vector<GradedClass> basis;
  basis.reserve(static_cast<size_t>(h2_rank()));
  basis.push_back(class_one());
  basis.push_back(class_w());
  for (int i = 0; i < r_; ++i) basis.push_back(class_alpha(i));
  for (int j = 0; j < k_; ++j) basis.push_back(class_tau(j));
  return basis;
}

MatR K3Model::mu_perp_quotient_gram() const {
  auto basis = mu_perp_mod_mu_basis();
  Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  MatR g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = mukai_pair<Rational>(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
  return g;
}

}  // namespace mukai
