#include "seet/state_algebra.hpp"

#include <cmath>
#include <complex>

namespace seet {

namespace {

constexpr double kNormTol = 1e-12;

using cd = std::complex<double>;

double norm_sq(const SingleErrorState& s) {
  return s.zeta * s.zeta + s.chi * s.chi + s.upsilon * s.upsilon;
}

}  // namespace

SingleErrorState make_single_error_state(double zeta, double chi, double upsilon) {
  SingleErrorState s{zeta, chi, upsilon};
  const double n2 = norm_sq(s);
  if (n2 > 1.0 + kNormTol) {
    throw InvalidState("single-error state norm constraint violated: zeta^2+chi^2+upsilon^2 = " +
                       std::to_string(n2));
  }
  if (n2 > 1.0) {
    const double n = std::sqrt(n2);
    s.zeta /= n;
    s.chi /= n;
    s.upsilon /= n;
  }
  return s;
}

StandardFormState make_standard_form_state(double z, double x) {
  if (z < 0.0 || x < 0.0) {
    throw InvalidState("standard form requires z, x >= 0");
  }
  const double n2 = z * z + x * x;
  if (n2 > 1.0 + kNormTol) {
    throw InvalidState("standard form norm constraint violated: z^2+x^2 = " + std::to_string(n2));
  }
  StandardFormState s{z, x};
  if (n2 > 1.0) {
    const double n = std::sqrt(n2);
    s.z /= n;
    s.x /= n;
  }
  return s;
}

std::pair<StandardFormState, LocalCorrection> to_standard_form(const SingleErrorState& s0) {
  const SingleErrorState s = make_single_error_state(s0.zeta, s0.chi, s0.upsilon);
  const double z = std::hypot(s.zeta, s.upsilon);
  const double x = std::abs(s.chi);

  LocalCorrection corr;
  // exp(-i theta Z_A / 2) multiplies <00|rho|11> by e^{-i theta}; choose
  // theta = arg(zeta + i upsilon) to make the coherence real nonnegative.
  corr.z_rotation_angle = (z > 0.0) ? std::atan2(s.upsilon, s.zeta) : 0.0;
  // X(x)X swaps the |00>/|11> populations, fixing the sign of chi.
  corr.xx_flip = s.chi < 0.0;
  corr.z_flip = false;
  return {make_standard_form_state(z, x), corr};
}

TwoQubitDensityMatrix density_of(const SingleErrorState& s0) {
  const SingleErrorState s = make_single_error_state(s0.zeta, s0.chi, s0.upsilon);
  TwoQubitDensityMatrix rho = TwoQubitDensityMatrix::Zero();
  rho(0, 0) = cd((1.0 + s.chi) / 2.0, 0.0);
  rho(3, 3) = cd((1.0 - s.chi) / 2.0, 0.0);
  rho(0, 3) = cd(s.zeta / 2.0, s.upsilon / 2.0);
  rho(3, 0) = std::conj(rho(0, 3));
  return rho;
}

TwoQubitDensityMatrix density_of(const StandardFormState& s) {
  return density_of(SingleErrorState{s.z, s.x, 0.0});
}

Eigen::Matrix4cd correction_unitary(const LocalCorrection& c) {
  const cd i(0.0, 1.0);
  // exp(-i theta Z_A / 2), diagonal in the computational basis.
  Eigen::Vector4cd rot;
  const double th = c.z_rotation_angle;
  rot << std::exp(-i * th / 2.0), std::exp(-i * th / 2.0), std::exp(i * th / 2.0),
      std::exp(i * th / 2.0);
  Eigen::Matrix4cd u = rot.asDiagonal();

  if (c.z_flip) {
    Eigen::Vector4cd zdiag;
    zdiag << 1.0, 1.0, -1.0, -1.0;
    u = Eigen::Matrix4cd(zdiag.asDiagonal()) * u;
  }
  if (c.xx_flip) {
    Eigen::Matrix4cd xx = Eigen::Matrix4cd::Zero();
    xx(0, 3) = xx(3, 0) = xx(1, 2) = xx(2, 1) = 1.0;
    u = xx * u;
  }
  return u;
}

SingleErrorState classify(const TwoQubitDensityMatrix& rho, double tol) {
  const double off_support = std::abs(rho(1, 1)) + std::abs(rho(2, 2));
  if (off_support > tol) {
    throw NotSingleErrorType("population outside span{|00>,|11>}: " + std::to_string(off_support));
  }
  const double tr = std::real(rho(0, 0) + rho(3, 3));
  if (std::abs(tr - 1.0) > std::max(tol, 1e-10)) {
    throw InvalidState("density matrix trace " + std::to_string(tr));
  }
  const double chi = std::real(rho(0, 0) - rho(3, 3));
  const cd coh = rho(0, 3);
  return make_single_error_state(2.0 * std::real(coh), chi, 2.0 * std::imag(coh));
}

double singlet_fraction(const StandardFormState& s) { return (1.0 + s.z) / 2.0; }

StandardFormState apply_phase_flip(const StandardFormState& s, double v) {
  if (v < 0.0 || v > 1.0) {
    throw InvalidParameter("phase-flip parameter v must lie in [0,1]");
  }
  return make_standard_form_state(v * s.z, s.x);
}

StandardFormState apply_xx_mix(const StandardFormState& s, double v) {
  if (v < 0.0 || v > 1.0) {
    throw InvalidParameter("xx-mixing parameter v must lie in [0,1]");
  }
  return make_standard_form_state(s.z, v * s.x);
}

SingleErrorState mix(std::span<const std::pair<double, SingleErrorState>> terms) {
  double wsum = 0.0;
  SingleErrorState out{0.0, 0.0, 0.0};
  for (const auto& [w, s] : terms) {
    if (w < 0.0) {
      throw InvalidWeights("negative mixture weight");
    }
    wsum += w;
    out.zeta += w * s.zeta;
    out.chi += w * s.chi;
    out.upsilon += w * s.upsilon;
  }
  if (std::abs(wsum - 1.0) > kNormTol) {
    throw InvalidWeights("mixture weights sum to " + std::to_string(wsum));
  }
  return make_single_error_state(out.zeta, out.chi, out.upsilon);
}

}  // namespace seet
