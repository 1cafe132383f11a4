#pragma once

#include <Eigen/Core>
#include <ostream>
#include <string>
#include <string_view>

#include "mukai/rational.hpp"

namespace mukai {

// Exact Gaussian rational a + b*i.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
  ComplexRational(int r) : re(r) {}                  // NOLINT
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  // Parses "p/q", "p/q+r/s*i", "p/q-r/s*i", "r/s*i", "i", "-i".
  static ComplexRational parse(std::string_view s);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  ComplexRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }  // |z|^2

  std::string str() const {
    if (im.is_zero()) return re.str();
    std::string istr = im.str();
    std::string tail = (istr[0] == '-' ? "-" + istr.substr(1) : "+" + istr) + "*i";
    if (re.is_zero() && im.sign() > 0) return istr + "*i";
    if (re.is_zero()) return "-" + istr.substr(1) + "*i";
    return re.str() + tail;
  }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    Rational n = b.norm();
    if (n.is_zero()) throw math_error("division by zero");
    ComplexRational p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  ComplexRational operator-() const { return {-re, -im}; }
  ComplexRational& operator+=(const ComplexRational& o) { re += o.re; im += o.im; return *this; }
  ComplexRational& operator-=(const ComplexRational& o) { re -= o.re; im -= o.im; return *this; }
  ComplexRational& operator*=(const ComplexRational& o) { *this = *this * o; return *this; }
  ComplexRational& operator/=(const ComplexRational& o) { *this = *this / o; return *this; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const ComplexRational& z) { return os << z.str(); }
};

inline ComplexRational conj(const ComplexRational& z) { return z.conj(); }
inline const Rational& real(const ComplexRational& z) { return z.re; }
inline const Rational& imag(const ComplexRational& z) { return z.im; }
inline Rational abs2(const ComplexRational& z) { return z.norm(); }

inline ComplexRational ComplexRational::parse(std::string_view s) {
  auto bad = [&] { return usage_error("malformed complex literal: '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  std::string str(s);
  // Split at the last top-level '+'/'-' (position > 0, not after '/').
  auto strip_i = [&](std::string part) -> Rational {
    if (part == "i") return Rational(1);
    if (part == "-i") return Rational(-1);
    if (part == "+i") return Rational(1);
    auto star = part.rfind("*i");
    if (star == std::string::npos || star + 2 != part.size()) throw bad();
    std::string coeff = part.substr(0, star);
    if (!coeff.empty() && coeff[0] == '+') coeff.erase(0, 1);
    return Rational::parse(coeff);
  };
  bool has_i = str.size() >= 1 && str.back() == 'i';
  if (!has_i) return ComplexRational(Rational::parse(str));
  // find split point: a sign not at index 0
  size_t split = std::string::npos;
  for (size_t k = str.size(); k-- > 1;) {
    if ((str[k] == '+' || str[k] == '-') && str[k - 1] != '/' && str[k - 1] != '*') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {Rational(0), strip_i(str)};
  std::string head = str.substr(0, split);
  std::string tail = str.substr(split);  // includes sign
  return {Rational::parse(head), strip_i(tail)};
}

}  // namespace mukai

namespace Eigen {
template <>
struct NumTraits<mukai::ComplexRational> {
  using Real = mukai::Rational;
  using NonInteger = mukai::ComplexRational;
  using Nested = mukai::ComplexRational;
  using Literal = mukai::ComplexRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 160,
  };
  static inline Real epsilon() { return mukai::Rational(0); }
  static inline Real dummy_precision() { return mukai::Rational(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace mukai {

using VecC = Vec<ComplexRational>;
using MatC = Mat<ComplexRational>;

inline VecC complexify(const VecR& v) {
  VecC out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = ComplexRational(v[i]);
  return out;
}

inline MatC complexify(const MatR& m) {
  MatC out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = ComplexRational(m(i, j));
  return out;
}

}  // namespace mukai
