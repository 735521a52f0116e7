#ifndef SEET_STATE_ALGEBRA_HPP
#define SEET_STATE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

#include "seet/errors.hpp"

namespace seet {

/// Two-qubit state supported on span{|Phi+>, |Phi->}, parametrized by
/// (zeta, chi, upsilon) with zeta^2 + chi^2 + upsilon^2 <= 1.
struct SingleErrorState {
  double zeta = 0.0;
  double chi = 0.0;
  double upsilon = 0.0;
};

/// Canonical form gamma(z, x): populations (1 +/- x)/2 on |00>/|11>,
/// real coherence z/2, with z, x >= 0 and z^2 + x^2 <= 1.
struct StandardFormState {
  double z = 0.0;
  double x = 0.0;
};

/// 4x4 density matrix in the computational basis |00>,|01>,|10>,|11>.
using TwoQubitDensityMatrix = Eigen::Matrix4cd;

/// Record of the local unitary mapping a general single-error-type state
/// onto its standard form: rho -> U rho U^dag with
/// U = (X(x)X)^{xx_flip} (Z_A)^{z_flip} exp(-i theta Z_A / 2).
struct LocalCorrection {
  double z_rotation_angle = 0.0;
  bool xx_flip = false;
  bool z_flip = false;
};

/// Validates (and, for sub-1e-12 rounding overshoot, renormalizes) the
/// parameter vector. Throws InvalidState beyond tolerance.
SingleErrorState make_single_error_state(double zeta, double chi, double upsilon);

StandardFormState make_standard_form_state(double z, double x);

std::pair<StandardFormState, LocalCorrection> to_standard_form(const SingleErrorState& s);

TwoQubitDensityMatrix density_of(const SingleErrorState& s);
TwoQubitDensityMatrix density_of(const StandardFormState& s);

/// Explicit 4x4 unitary for a LocalCorrection record.
Eigen::Matrix4cd correction_unitary(const LocalCorrection& c);

/// Inverse of density_of. Throws NotSingleErrorType if the |01>/|10>
/// populations exceed tol.
SingleErrorState classify(const TwoQubitDensityMatrix& rho, double tol);

double singlet_fraction(const StandardFormState& s);

/// Phase-flip channel Lambda_v on qubit A: z -> v z.
StandardFormState apply_phase_flip(const StandardFormState& s, double v);

/// XX-mixing channel E_v: x -> v x.
StandardFormState apply_xx_mix(const StandardFormState& s, double v);

SingleErrorState mix(std::span<const std::pair<double, SingleErrorState>> terms);

}  // namespace seet

#endif
