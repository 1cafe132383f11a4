#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mukai/fm.hpp"

namespace mukai {

// A validated period vector: isotropic, positive against its conjugate,
// orthogonal to the Picard lattice.
struct Period {
  VecC omega;
  Rational omega_omega_bar;  // cached <Omega, conj Omega>, a positive Rational
};

Period validate_period(const K3Model& model, const VecC& omega);

// For the default rank-20 transcendental lattice: Omega = (tau1 + tau2)
// + i (tau3 + tau4), the sum of the two hyperbolic-plane vectors.
VecC default_period_vector(const K3Model& model);

// The algebraic-deformation tangent space: {a : a.Omega = 0, a.conj(Omega)
// = 0} modulo Pic tensor C, with canonical representatives supported on the
// transcendental coordinates.
struct H11Quotient {
  MatC basis;    // h2_rank x dim, canonical representatives
  MatC gram;     // induced pairing on the basis
  Eigen::Index dim = 0;
};

H11Quotient h11_quotient(const K3Model& model, const Period& period);

struct MirrorFailure {
  int trial = -1;
  std::string what;
};

struct MirrorReport {
  std::uint64_t seed = 0;
  int trials = 0;
  Eigen::Index quotient_dim = 0;
  bool psi_omega_proportional = false;
  std::vector<MirrorFailure> failures;
  bool all_exact() const { return psi_omega_proportional && failures.empty(); }
};

// Draws random rational-coefficient vectors in the dual-side quotient,
// pushes them through psi, and checks membership and exact preservation of
// the pairing; also checks psi(Omega) is proportional to Omega.
MirrorReport psi_isometry_report(const K3Model& model, const FmAction& fm, const Period& period,
                                 std::uint64_t seed, int trials);

struct BpsMass {
  Rational mass_squared;  // |gamma.Omega|^2 / (Omega.conj Omega), exact
  std::string decimal;    // M to 15 significant digits
};

// gamma must be an integral H^2 class.
BpsMass bps_mass(const K3Model& model, const VecR& gamma, const Period& period);

// Renders a nonnegative double with 15 significant digits.
std::string format_significant(double x);

}  // namespace mukai
