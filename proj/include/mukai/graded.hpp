#pragma once

#include <Eigen/Core>

#include "mukai/complex_rational.hpp"
#include "mukai/error.hpp"
#include "mukai/rational.hpp"

namespace mukai {

// An element of H^0 + H^2 + H^4 over a fixed H^2 basis. The scalar is
// Rational for lattice classes and ComplexRational for periods and the
// complexified maps.
template <class S>
struct Graded {
  S deg0;
  Vec<S> deg2;
  S deg4;

  Graded() : deg0(0), deg4(0) {}
  Graded(S d0, Vec<S> d2, S d4) : deg0(std::move(d0)), deg2(std::move(d2)), deg4(std::move(d4)) {}

  static Graded zero(Eigen::Index h2_rank) {
    Graded g;
    g.deg2 = Vec<S>(h2_rank);
    g.deg2.setConstant(S(0));
    return g;
  }

  Eigen::Index h2_rank() const { return deg2.size(); }
  bool is_zero() const {
    if (!deg0.is_zero() || !deg4.is_zero()) return false;
    for (Eigen::Index i = 0; i < deg2.size(); ++i)
      if (!deg2[i].is_zero()) return false;
    return true;
  }

  // Flat coordinates [deg0; deg2; deg4], the layout used by the transform
  // matrices.
  Vec<S> flatten() const {
    Vec<S> v(deg2.size() + 2);
    v[0] = deg0;
    for (Eigen::Index i = 0; i < deg2.size(); ++i) v[i + 1] = deg2[i];
    v[deg2.size() + 1] = deg4;
    return v;
  }
  static Graded unflatten(const Vec<S>& v) {
    Graded g;
    g.deg0 = v[0];
    g.deg2 = v.segment(1, v.size() - 2);
    g.deg4 = v[v.size() - 1];
    return g;
  }

  friend Graded operator+(const Graded& a, const Graded& b) {
    if (a.deg2.size() != b.deg2.size()) throw validation_error("graded class dimension mismatch");
    return Graded(a.deg0 + b.deg0, a.deg2 + b.deg2, a.deg4 + b.deg4);
  }
  friend Graded operator-(const Graded& a, const Graded& b) {
    if (a.deg2.size() != b.deg2.size()) throw validation_error("graded class dimension mismatch");
    return Graded(a.deg0 - b.deg0, a.deg2 - b.deg2, a.deg4 - b.deg4);
  }
  friend Graded operator*(const S& c, const Graded& a) {
    return Graded(c * a.deg0, (a.deg2 * c).eval(), c * a.deg4);
  }
  Graded operator-() const { return Graded(-deg0, (-deg2).eval(), -deg4); }

  friend bool operator==(const Graded& a, const Graded& b) {
    if (a.deg2.size() != b.deg2.size()) return false;
    if (a.deg0 != b.deg0 || a.deg4 != b.deg4) return false;
    for (Eigen::Index i = 0; i < a.deg2.size(); ++i)
      if (a.deg2[i] != b.deg2[i]) return false;
    return true;
  }
  friend bool operator!=(const Graded& a, const Graded& b) { return !(a == b); }
};

using GradedClass = Graded<Rational>;
using GradedClassC = Graded<ComplexRational>;

inline GradedClassC complexify(const GradedClass& g) {
  return GradedClassC(ComplexRational(g.deg0), complexify(g.deg2), ComplexRational(g.deg4));
}

// Value of the base-valued pairing: c0 * 1 + c1 * [pt] in the cohomology of
// the base curve.
struct BaseClass {
  Rational c0;
  Rational c1;

  BaseClass() : c0(0), c1(0) {}
  BaseClass(Rational a, Rational b) : c0(std::move(a)), c1(std::move(b)) {}

  friend bool operator==(const BaseClass& a, const BaseClass& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }
  friend bool operator!=(const BaseClass& a, const BaseClass& b) { return !(a == b); }

  std::string str() const { return c0.str() + " + " + c1.str() + "*[pt]"; }
};

}  // namespace mukai
