#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "mukai/error.hpp"
#include "mukai/rational.hpp"

namespace mukai {

// Exact dense linear algebra over a field scalar (Rational or
// ComplexRational). Plain Gaussian elimination, first-nonzero pivoting;
// there is no stability concern with exact arithmetic.

namespace detail {

// Reduces m to row echelon form in place; returns pivot column indices.
template <class S>
std::vector<Eigen::Index> row_echelon(Mat<S>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i) {
      if (!m(i, col).is_zero()) { p = i; break; }
    }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    S inv_pivot = S(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv_pivot;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      S factor = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class S>
Eigen::Index exact_rank(Mat<S> m) {
  return static_cast<Eigen::Index>(detail::row_echelon(m).size());
}

// Columns span the nullspace {x : m x = 0}.
template <class S>
Mat<S> kernel_basis(Mat<S> m) {
  Eigen::Index n = m.cols();
  auto pivots = detail::row_echelon(m);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (auto c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  Mat<S> ker(n, n - static_cast<Eigen::Index>(pivots.size()));
  ker.setConstant(S(0));
  Eigen::Index k = 0;
  for (Eigen::Index freecol = 0; freecol < n; ++freecol) {
    if (is_pivot[static_cast<size_t>(freecol)]) continue;
    ker(freecol, k) = S(1);
    for (size_t r = 0; r < pivots.size(); ++r) {
      ker(pivots[r], k) = -m(static_cast<Eigen::Index>(r), freecol);
    }
    ++k;
  }
  return ker;
}

template <class S>
std::optional<Mat<S>> try_invert(const Mat<S>& m) {
  if (m.rows() != m.cols()) throw validation_error("cannot invert non-square matrix");
  Eigen::Index n = m.rows();
  Mat<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n).setConstant(S(0));
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = S(1);
  auto pivots = detail::row_echelon(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[static_cast<size_t>(n - 1)] != n - 1) {
    return std::nullopt;
  }
  return Mat<S>(aug.rightCols(n));
}

template <class S>
Mat<S> invert(const Mat<S>& m) {
  auto inv = try_invert(m);
  if (!inv) throw math_error("matrix is singular");
  return *inv;
}

// true iff the column spans of a and b coincide.
template <class S>
bool same_span(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows()) return false;
  Mat<S> joint(a.rows(), a.cols() + b.cols());
  joint << a, b;
  Eigen::Index ra = exact_rank<S>(a), rb = exact_rank<S>(b);
  return ra == rb && exact_rank<S>(joint) == ra;
}

// true iff every column of a lies in the column span of b.
template <class S>
bool in_span(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows()) return false;
  Mat<S> joint(a.rows(), a.cols() + b.cols());
  joint << a, b;
  return exact_rank<S>(joint) == exact_rank<S>(b);
}

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Exact signature of a symmetric rational matrix by congruence
// diagonalization (symmetric row+column operations).
Signature signature_of(MatR g);

// Integral entries and even diagonal.
bool is_even_integral(const MatR& g);

// Basis (columns) of {x : span^T g x = 0}, the g-orthogonal complement of
// the column span of `span`.
MatR orthogonal_complement(const MatR& g, const MatR& span);

}  // namespace mukai
