#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "mukai/error.hpp"

namespace mukai {

// Exact rational scalar. Wraps mpq_class so that every operator returns a
// plain value (GMP expression templates do not mix well with Eigen).
// Always canonical: lowest terms, denominator > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(long n, long d) {
    if (d == 0) throw math_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Parses "p/q" or "p"; minus sign on the numerator only.
  static Rational parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw math_error("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rational Rational::parse(std::string_view s) {
  auto bad = [&] { return usage_error("malformed rational literal: '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  std::string str(s);
  auto slash = str.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(str);
      return Rational(n);
    }
    std::string num = str.substr(0, slash);
    std::string den = str.substr(slash + 1);
    if (num.empty() || den.empty() || den[0] == '-' || den[0] == '+') throw bad();
    mpz_class n(num), d(den);
    if (d == 0) throw math_error("rational with zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

}  // namespace mukai

namespace Eigen {
template <>
struct NumTraits<mukai::Rational> {
  using Real = mukai::Rational;
  using NonInteger = mukai::Rational;
  using Nested = mukai::Rational;
  using Literal = mukai::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 20,
    MulCost = 40,
  };
  static inline Real epsilon() { return mukai::Rational(0); }
  static inline Real dummy_precision() { return mukai::Rational(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace mukai {

template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using VecR = Vec<Rational>;
using MatR = Mat<Rational>;

}  // namespace mukai
