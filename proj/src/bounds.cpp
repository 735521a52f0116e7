#include "seet/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <tuple>

namespace seet {

namespace {

constexpr double kUClampLo = 1e-12;
constexpr double kUClampHi = 1.0 - 1e-12;
constexpr int kGridPoints = 2048;

double clamp_u(double u) { return std::clamp(u, kUClampLo, kUClampHi); }

void require_transmittance(double t, const char* name) {
  if (!(t > 0.0 && t < 1.0)) {
    throw InvalidParameter(std::string(name) + " must lie strictly inside (0,1)");
  }
}

}  // namespace

ChannelSpec ChannelSpec::point_to_point(double t) {
  require_transmittance(t, "transmittance");
  ChannelSpec c;
  c.kind = Kind::PointToPoint;
  c.t = t;
  return c;
}

ChannelSpec ChannelSpec::three_party(double ta, double tb) {
  require_transmittance(ta, "ta");
  require_transmittance(tb, "tb");
  ChannelSpec c;
  c.kind = Kind::ThreeParty;
  c.ta = ta;
  c.tb = tb;
  return c;
}

LossExponent loss_exponent(const ChannelSpec& c) {
  if (c.kind == ChannelSpec::Kind::PointToPoint) {
    return LossExponent{(1.0 - c.t) / c.t};
  }
  return LossExponent{(1.0 - c.ta) / c.ta + (1.0 - c.tb) / c.tb};
}

double objective(const YieldFunction& y, LossExponent g, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw InvalidParameter("objective argument u must lie in (0,1)");
  }
  const double uc = clamp_u(u);
  return y(std::pow(uc, g.gamma), 0.0) * (1.0 - uc);
}

OptimizationResult optimum(const YieldFunction& y, LossExponent g) {
  int evals = 0;
  auto f = [&](double u) {
    ++evals;
    const double uc = clamp_u(u);
    return y(std::pow(uc, g.gamma), 0.0) * (1.0 - uc);
  };

  // Dense grid bracket; ties resolve to the smallest u.
  int best_i = 1;
  double best_v = -1.0;
  for (int i = 1; i < kGridPoints; ++i) {
    const double u = static_cast<double>(i) / kGridPoints;
    const double v = f(u);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  double a = clamp_u(static_cast<double>(best_i - 1) / kGridPoints);
  double b = clamp_u(static_cast<double>(best_i + 1) / kGridPoints);
  const double bracket_lo = a, bracket_hi = b;

  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-10) {
    if (fc >= fd) {  // keep the left interval on ties: smallest maximizer
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  const double u_star = (fc >= fd) ? c : d;
  OptimizationResult res;
  res.u_star = u_star;
  res.value = f(u_star);
  res.evaluations = evals;
  res.bracket_lo = bracket_lo;
  res.bracket_hi = bracket_hi;
  return res;
}

RnpmPoint rnpm_point(double u, LossExponent g) {
  if (!(u > 0.0 && u < 1.0)) {
    throw InvalidParameter("rnpm_point argument u must lie in (0,1)");
  }
  return RnpmPoint{(1.0 + std::pow(u, g.gamma)) / 2.0, 1.0 - u};
}

double success_at_fidelity(double f_target, LossExponent g) {
  if (!(f_target > 0.5 && f_target < 1.0)) {
    throw InvalidParameter("target fidelity must lie in (0.5, 1)");
  }
  const double u = std::pow(2.0 * f_target - 1.0, 1.0 / g.gamma);
  return 1.0 - u;
}

double ed_max(const ChannelSpec& c) { return optimum(ed_yield(), loss_exponent(c)).value; }

double capacity(const ChannelSpec& c) {
  if (c.kind == ChannelSpec::Kind::PointToPoint) {
    return -std::log2(1.0 - c.t);
  }
  if (std::abs(c.ta - c.tb) > 1e-12) {
    throw InvalidParameter("three-party capacity requires Ta = Tb");
  }
  // Ta = Tb = sqrt(T), so -log2(1 - sqrt(T)) = -log2(1 - Ta).
  return -std::log2(1.0 - c.ta);
}

double overlap_from_pulse(double alpha, double theta, double t) {
  if (alpha < 0.0) throw InvalidParameter("pulse amplitude alpha must be >= 0");
  if (!(t > 0.0 && t <= 1.0)) throw InvalidParameter("transmittance must lie in (0,1]");
  return std::exp(-t * alpha * alpha * (1.0 - std::cos(theta)));
}

std::vector<double> default_t_grid(int points, double t_min, double t_max) {
  if (points < 1 || !(t_min > 0.0 && t_min < t_max && t_max < 1.0)) {
    throw InvalidParameter("invalid transmittance grid spec");
  }
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = t_min;
    return grid;
  }
  const double l0 = std::log(t_min), l1 = std::log(t_max);
  for (int i = 0; i < points; ++i) {
    grid[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
  }
  return grid;
}

std::vector<CurveRow> figure_curves(Figure which, std::span<const double> t_grid, int jobs) {
  for (double t : t_grid) require_transmittance(t, "grid transmittance");
  if (jobs < 1) throw InvalidParameter("jobs must be >= 1");

  const std::size_t n = t_grid.size();
  const std::size_t curves = (which == Figure::Fig3) ? 4u : 5u;
  std::vector<CurveRow> rows(n * curves);

  auto fill_point = [&](std::size_t i) {
    const double t = t_grid[i];
    ChannelSpec spec = (which == Figure::Fig3)
                           ? ChannelSpec::point_to_point(t)
                           : ChannelSpec::three_party(std::sqrt(t), std::sqrt(t));
    const LossExponent g = loss_exponent(spec);
    rows[0 * n + i] = {t, "a", capacity(spec)};
    rows[1 * n + i] = {t, "b", ed_max(spec)};
    rows[2 * n + i] = {t, "c", success_at_fidelity(0.994, g)};
    rows[3 * n + i] = {t, "d", success_at_fidelity(0.998, g)};
    if (which == Figure::Fig6) {
      rows[4 * n + i] = {t, "e", -std::log2(1.0 - t)};
    }
  };

  if (jobs == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fill_point(i);
  } else {
    std::vector<std::thread> workers;
    const int w = std::min<std::size_t>(jobs, n);
    std::atomic<std::size_t> next{0};
    for (int k = 0; k < w; ++k) {
      workers.emplace_back([&]() {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
          fill_point(i);
        }
      });
    }
    for (auto& th : workers) th.join();
  }
  std::sort(rows.begin(), rows.end(), [](const CurveRow& a, const CurveRow& b) {
    return std::tie(a.curve, a.t) < std::tie(b.curve, b.t);
  });
  return rows;
}

}  // namespace seet
