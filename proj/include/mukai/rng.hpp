#pragma once

#include <cstdint>
#include <random>

#include "mukai/graded.hpp"

namespace mukai {

// Deterministic, seed-reproducible rational generator (mt19937_64 is
// bit-stable across platforms).
class RationalRng {
 public:
  explicit RationalRng(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(engine_);
  }

  Rational rational(long max_num = 50, long max_den = 12) {
    long n = integer(-max_num, max_num);
    long d = integer(1, max_den);
    return Rational(n, d);
  }

  VecR vector(Eigen::Index n, long max_num = 50, long max_den = 12) {
    VecR v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = rational(max_num, max_den);
    return v;
  }

  GradedClass graded(Eigen::Index h2_rank, long max_num = 50, long max_den = 12) {
    return GradedClass(rational(max_num, max_den), vector(h2_rank, max_num, max_den),
                       rational(max_num, max_den));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mukai
