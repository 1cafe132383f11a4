#pragma once

#include <array>
#include <string>

#include "mukai/k3_model.hpp"

namespace mukai {

enum class Direction { XToXhat, XhatToX };

inline Direction parse_direction(const std::string& s) {
  if (s == "x-to-xhat") return Direction::XToXhat;
  if (s == "xhat-to-x") return Direction::XhatToX;
  throw usage_error("unknown direction '" + s + "' (expected x-to-xhat or xhat-to-x)");
}

// Square roots of the relative Todd classes. The two fibrations give the
// same values under the identification of X with its dual.
struct ToddData {
  GradedClass sqrt_td;      // 1 - mu/2 + w
  GradedClass inv_sqrt_td;  // 1 + mu/2 - w
};

ToddData make_todd_data(const K3Model& model);

// The cohomological Fourier-Mukai action, realized through its values on
// the basis (1, H, mu, w, alpha_i, tau_j):
//   f(1) = -mu^ - Theta,  f(H) = 1 + w^,  f(mu) = -w^,  f(w) = mu^,
//   f(alpha_i) = beta_i,  f(tau_j) = tau_j,
// with the dual model identified with the source (H <-> Theta, mu <-> mu^,
// w <-> w^, alpha_i <-> beta_i). All matrices are computed once; the
// object is immutable and safe to share.
class FmAction {
 public:
  explicit FmAction(const K3Model& model);

  const K3Model& model() const { return *model_; }
  const ToddData& todd() const { return todd_; }

  // f, linearly extended.
  template <class S>
  Graded<S> apply(const Graded<S>& v) const {
    return apply_matrix<S>(fmat_, v);
  }
  // f' = -f^{-1}.
  template <class S>
  Graded<S> apply_prime(const Graded<S>& v) const {
    return -apply_matrix<S>(finv_, v);
  }

  // H^2-component of f on mu-perp; well defined modulo Q mu.
  // Throws if v does not pair to zero with the fiber class.
  VecR f_tilde(const GradedClass& v) const;

  // Matrix of f~ from the mu-perp/Qmu representative basis
  // (1, w, alpha_i, tau_j) to H^2 coordinates.
  const MatR& f_tilde_matrix() const { return ftilde_; }

  // Complexified inverse of f~: takes an H^2 class on the dual side to its
  // canonical representative in (mu-perp/Qmu) tensor C.
  GradedClassC psi(const VecC& beta) const;

  // ch T(F) = (1/sqrt td) f((ch F) sqrt td); the reverse direction uses f'
  // in place of f and reproduces the dual-side transform tables exactly.
  GradedClass rr_transform(const GradedClass& ch, Direction dir = Direction::XToXhat) const;
  GradedClassC rr_transform(const GradedClassC& ch, Direction dir = Direction::XToXhat) const;

  // Rank-2-Picard transform table: ch = r + aH + b mu + c w with WIT index
  // supplied by the caller. Rejects classes with alpha or tau components.
  GradedClass rr_table(const GradedClass& ch, int wit, Direction dir = Direction::XToXhat) const;

 private:
  template <class S>
  Graded<S> apply_matrix(const MatR& m, const Graded<S>& v) const {
    Vec<S> x = v.flatten();
    if (x.size() != m.cols()) throw validation_error("class does not match this model");
    Vec<S> y(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      S acc(0);
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (m(i, j).is_zero() || x[j].is_zero()) continue;
        acc += S(m(i, j)) * x[j];
      }
      y[i] = acc;
    }
    return Graded<S>::unflatten(y);
  }

  const K3Model* model_;
  ToddData todd_;
  MatR fmat_;        // full-cohomology matrix of f, flat layout
  MatR finv_;        // f^{-1}
  MatR ftilde_;      // 22x22, rep basis -> H^2
  MatC ftilde_inv_;  // complexified inverse
};

// The integral brane correspondence r + aH + b mu + c w -> a - r Theta
// + c mu^ - b w^, with a human-readable annotation of the image.
struct BraneImage {
  std::array<long, 4> charge;  // (r^, Theta-coeff, mu^-coeff, w^-coeff)
  std::string annotation;
};

BraneImage brane_map(const std::array<long, 4>& v);

}  // namespace mukai
