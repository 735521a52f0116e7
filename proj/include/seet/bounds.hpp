#ifndef SEET_BOUNDS_HPP
#define SEET_BOUNDS_HPP

#include <span>
#include <string>
#include <vector>

#include "seet/errors.hpp"
#include "seet/yield.hpp"

namespace seet {

/// Lossy-channel configuration: a direct Alice->Bob link, or two links
/// meeting at a middle measuring station.
struct ChannelSpec {
  enum class Kind { PointToPoint, ThreeParty };
  Kind kind = Kind::PointToPoint;
  double t = 0.5;        // PointToPoint transmittance
  double ta = 0.5, tb = 0.5;  // ThreeParty arm transmittances

  static ChannelSpec point_to_point(double t);
  static ChannelSpec three_party(double ta, double tb);
};

/// Exponent gamma such that the optimal protocol reaches
/// F = (1 + u^gamma)/2: (1-T)/T, or summed over both arms.
struct LossExponent {
  double gamma = 1.0;
};

LossExponent loss_exponent(const ChannelSpec& c);

/// Objective Y(u^gamma, 0) (1 - u) whose maximum over u is both the
/// separable-operation upper bound and the achievable yield.
double objective(const YieldFunction& y, LossExponent g, double u);

struct OptimizationResult {
  double u_star = 0.0;
  double value = 0.0;
  int evaluations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 1.0;
};

/// Deterministic maximization: 2048-point uniform grid bracket, then
/// golden-section refinement to |du| <= 1e-10. Ties break to smallest u.
OptimizationResult optimum(const YieldFunction& y, LossExponent g);

struct RnpmPoint {
  double fidelity = 0.0;
  double success = 0.0;
};

/// (F, Ps) = ((1 + u^gamma)/2, 1 - u) of the optimal protocol at overlap u.
RnpmPoint rnpm_point(double u, LossExponent g);

/// Inverts F = (1 + u^gamma)/2; returns Ps = 1 - (2F-1)^{1/gamma}.
double success_at_fidelity(double f_target, LossExponent g);

/// Best distillable-entanglement yield per channel use.
double ed_max(const ChannelSpec& c);

/// Two-way quantum/private capacity: -log2(1-T) point-to-point, or
/// -log2(1-sqrt(T)) for the symmetric three-party network (Ta = Tb).
double capacity(const ChannelSpec& c);

/// Received-state overlap u = exp(-T alpha^2 (1 - cos theta)) of the
/// phase-encoded coherent pulse pair after transmission.
double overlap_from_pulse(double alpha, double theta, double t);

enum class Figure { Fig3, Fig6 };

struct CurveRow {
  double t = 0.0;
  std::string curve;
  double value = 0.0;
};

/// Fig3 curves: (a) capacity, (b) ed_max, (c) Ps at F=0.994,
/// (d) Ps at F=0.998. Fig6 adds (e) direct-channel capacity; the
/// three-party quantities use Ta = Tb = sqrt(T). Rows sorted by
/// (curve, T); identical output for any jobs count.
std::vector<CurveRow> figure_curves(Figure which, std::span<const double> t_grid, int jobs = 1);

/// Default 200 log-spaced transmittance points in [0.01, 0.99].
std::vector<double> default_t_grid(int points = 200, double t_min = 0.01, double t_max = 0.99);

}  // namespace seet

#endif
