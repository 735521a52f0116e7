#include "seet/yield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace seet {

namespace {

constexpr double kContractTol = 1e-9;

// p log2 p with the p -> 0 limit handled explicitly.
double plog2p(double p) {
  if (p <= 0.0) return 0.0;
  return p * std::log2(p);
}

}  // namespace

double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) {
    throw InvalidParameter("binary_entropy argument outside [0,1]");
  }
  return -plog2p(p) - plog2p(1.0 - p);
}

double ed_eval(double z, double x) {
  if (z < 0.0 || x < 0.0 || z * z + x * x > 1.0 + 1e-12) {
    throw InvalidParameter("ed_eval arguments outside the quarter disc");
  }
  const double r = std::min(1.0, std::sqrt(z * z + x * x));
  return binary_entropy((1.0 + x) / 2.0) - binary_entropy((1.0 + r) / 2.0);
}

ConvexScalar ConvexScalar::linear(double c) {
  ConvexScalar g;
  g.kind = Kind::Linear;
  g.c = c;
  return g;
}

ConvexScalar ConvexScalar::power(double k) {
  ConvexScalar g;
  g.kind = Kind::Power;
  g.k = k;
  return g;
}

ConvexScalar ConvexScalar::piecewise_linear(std::vector<std::pair<double, double>> knots) {
  ConvexScalar g;
  g.kind = Kind::PiecewiseLinear;
  g.knots = std::move(knots);
  return g;
}

double sf_eval(const ConvexScalar& g, double z) {
  switch (g.kind) {
    case ConvexScalar::Kind::Linear:
      return g.c * z;
    case ConvexScalar::Kind::Power:
      if (g.k < 1.0) {
        throw NonConvexSpec("power exponent below 1 is not convex with g(0)=0");
      }
      return std::pow(z, g.k);
    case ConvexScalar::Kind::PiecewiseLinear: {
      const auto& kn = g.knots;
      if (kn.size() < 2) {
        throw NonConvexSpec("piecewise-linear spec needs at least two knots");
      }
      double prev_slope = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i + 1 < kn.size(); ++i) {
        if (kn[i + 1].first <= kn[i].first) {
          throw NonConvexSpec("piecewise-linear knots must have increasing abscissae");
        }
        const double slope = (kn[i + 1].second - kn[i].second) / (kn[i + 1].first - kn[i].first);
        if (slope < prev_slope - 1e-12) {
          throw NonConvexSpec("piecewise-linear slopes decrease: not convex");
        }
        prev_slope = slope;
      }
      if (std::abs(kn.front().second) > 1e-12 || kn.front().first > 1e-12) {
        throw NonConvexSpec("piecewise-linear spec must start at g(0)=0");
      }
      // Linear interpolation, clamped extrapolation with the last slope.
      auto it = std::upper_bound(kn.begin(), kn.end(), z,
                                 [](double v, const auto& p) { return v < p.first; });
      std::size_t hi = std::min<std::size_t>(kn.size() - 1,
                                             static_cast<std::size_t>(it - kn.begin()));
      if (hi == 0) hi = 1;
      const auto& [z0, g0] = kn[hi - 1];
      const auto& [z1, g1] = kn[hi];
      return g0 + (g1 - g0) * (z - z0) / (z1 - z0);
    }
  }
  throw InvalidParameter("unknown ConvexScalar kind");
}

YieldFunction ed_yield() {
  return YieldFunction{"ed", [](double z, double x) { return ed_eval(z, x); }};
}

YieldFunction linear_yield(double c) {
  return YieldFunction{"linear:" + std::to_string(c), [c](double z, double) { return c * z; }};
}

YieldFunction power_yield(double k) {
  ConvexScalar g = ConvexScalar::power(k);
  return YieldFunction{"power:" + std::to_string(k),
                       [g](double z, double) { return sf_eval(g, z); }};
}

YieldFunction scalar_yield(const ConvexScalar& g) {
  sf_eval(g, 0.0);  // validate the spec up front
  return YieldFunction{"scalar", [g](double z, double) { return sf_eval(g, z); }};
}

ContractReport verify_yield_contract(const YieldFunction& y, int grid_n, int segment_samples,
                                     std::uint64_t seed) {
  if (grid_n < 8) throw InvalidParameter("grid_n must be >= 8");
  if (segment_samples < 100) throw InvalidParameter("segment_samples must be >= 100");

  ContractReport rep;
  auto note = [&rep](bool& flag, const std::string& check, double z0, double x0, double z1,
                     double x1, double viol) {
    if (viol > kContractTol) {
      flag = false;
      if (viol > rep.worst_violation) {
        rep.worst_violation = viol;
      }
      rep.witnesses.push_back(ContractWitness{check, z0, x0, z1, x1, viol});
    }
  };

  auto in_domain = [](double z, double x) { return z * z + x * x <= 1.0; };
  const double step = 1.0 / (grid_n - 1);

  // Separable-zero edge and grid monotonicity.
  for (int j = 0; j < grid_n; ++j) {
    const double x = j * step;
    note(rep.separable_zero_ok, "separable_zero", 0.0, x, 0.0, x, std::abs(y(0.0, x)));
    for (int i = 0; i + 1 < grid_n; ++i) {
      const double z0 = i * step, z1 = (i + 1) * step;
      if (in_domain(z1, x)) {
        note(rep.monotone_z_ok, "monotone_z", z0, x, z1, x, y(z0, x) - y(z1, x));
      }
    }
  }
  for (int i = 0; i < grid_n; ++i) {
    const double z = i * step;
    for (int j = 0; j + 1 < grid_n; ++j) {
      const double x0 = j * step, x1 = (j + 1) * step;
      if (in_domain(z, x1)) {
        note(rep.monotone_x_ok, "monotone_x", z, x0, z, x1, y(z, x0) - y(z, x1));
      }
    }
  }

  // Midpoint joint convexity on seeded random segments.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto draw_point = [&]() {
    for (;;) {
      const double z = unif(rng), x = unif(rng);
      if (in_domain(z, x)) return std::pair<double, double>{z, x};
    }
  };
  for (int n = 0; n < segment_samples; ++n) {
    const auto [za, xa] = draw_point();
    const auto [zb, xb] = draw_point();
    const double zm = (za + zb) / 2.0, xm = (xa + xb) / 2.0;
    const double viol = y(zm, xm) - (y(za, xa) + y(zb, xb)) / 2.0;
    note(rep.joint_convex_ok, "joint_convexity", za, xa, zb, xb, viol);
  }

  // Key inequality Y(v z, sqrt(1-z^2)) <= z Y(v, 0) on a (v, z) grid.
  for (int i = 0; i < grid_n; ++i) {
    const double v = i * step;
    for (int j = 0; j < grid_n; ++j) {
      const double z = j * step;
      const double lhs = y(v * z, std::sqrt(std::max(0.0, 1.0 - z * z)));
      const double rhs = z * y(v, 0.0);
      note(rep.key_inequality_ok, "key_inequality", v, z, v, z, lhs - rhs);
    }
  }

  return rep;
}

}  // namespace seet
