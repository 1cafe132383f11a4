#include "mukai/linalg.hpp"

namespace mukai {

Signature signature_of(MatR g) {
  if (g.rows() != g.cols()) throw validation_error("signature: matrix must be square");
  Eigen::Index n = g.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (g(i, j) != g(j, i)) throw validation_error("signature: matrix must be symmetric");

  Signature sig;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (g(k, k).is_zero()) {
      // find a row below with nonzero diagonal, else create one from an
      // off-diagonal entry: adding row/col j to row/col k gives diagonal
      // 2*g(k,j).
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (!g(i, i).is_zero()) { swap = i; break; }
      }
      if (swap >= 0) {
        g.row(k).swap(g.row(swap));
        g.col(k).swap(g.col(swap));
      } else {
        Eigen::Index j = -1;
        for (Eigen::Index i = k + 1; i < n; ++i) {
          if (!g(k, i).is_zero()) { j = i; break; }
        }
        if (j < 0) { sig.zero++; continue; }
        g.row(k) += g.row(j);
        g.col(k) += g.col(j);
      }
    }
    Rational d = g(k, k);
    if (d.sign() > 0) sig.positive++; else sig.negative++;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (g(i, k).is_zero()) continue;
      Rational factor = g(i, k) / d;
      for (Eigen::Index j = 0; j < n; ++j) g(i, j) -= factor * g(k, j);
      for (Eigen::Index j = 0; j < n; ++j) g(j, i) -= factor * g(j, k);
    }
  }
  return sig;
}

bool is_even_integral(const MatR& g) {
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (!g(i, j).is_integer()) return false;
    }
    if (i < g.cols() && !(g(i, i) / Rational(2)).is_integer()) return false;
  }
  return true;
}

MatR orthogonal_complement(const MatR& g, const MatR& span) {
  if (g.rows() != span.rows()) throw validation_error("orthogonal_complement: dimension mismatch");
  MatR conditions = span.transpose() * g;
  return kernel_basis<Rational>(conditions);
}

}  // namespace mukai
