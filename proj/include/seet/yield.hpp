#ifndef SEET_YIELD_HPP
#define SEET_YIELD_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "seet/errors.hpp"

namespace seet {

/// Yield Y(z, x) of a downstream protocol fed one standard-form state.
/// The contract (separable-zero, monotonicity, joint convexity, key
/// inequality) is checked by verify_yield_contract, not assumed here.
struct YieldFunction {
  std::string name;
  std::function<double(double, double)> eval;

  double operator()(double z, double x) const { return eval(z, x); }
};

/// Binary entropy h(p) = -p log2 p - (1-p) log2(1-p), h(0) = h(1) = 0.
double binary_entropy(double p);

/// Distillable entanglement of gamma(z, x):
/// h((1+x)/2) - h((1+sqrt(z^2+x^2))/2).
double ed_eval(double z, double x);

/// Convex scalar function g with g(0) = 0, supplied in one of three
/// named forms so convexity can be checked structurally.
struct ConvexScalar {
  enum class Kind { Linear, Power, PiecewiseLinear };
  Kind kind = Kind::Linear;
  double c = 1.0;  // Linear: g(z) = c z
  double k = 1.0;  // Power: g(z) = z^k, k >= 1
  std::vector<std::pair<double, double>> knots;  // PiecewiseLinear, (z, g(z))

  static ConvexScalar linear(double c);
  static ConvexScalar power(double k);
  static ConvexScalar piecewise_linear(std::vector<std::pair<double, double>> knots);
};

/// Evaluates g(z), ignoring x. Throws NonConvexSpec for a piecewise-linear
/// spec whose slopes decrease.
double sf_eval(const ConvexScalar& g, double z);

YieldFunction ed_yield();
YieldFunction linear_yield(double c = 1.0);
YieldFunction power_yield(double k);
/// Wraps a ConvexScalar as a singlet-fraction-only yield.
YieldFunction scalar_yield(const ConvexScalar& g);

struct ContractWitness {
  std::string check;
  double z0 = 0.0, x0 = 0.0;
  double z1 = 0.0, x1 = 0.0;
  double violation = 0.0;
};

struct ContractReport {
  bool separable_zero_ok = true;
  bool monotone_z_ok = true;
  bool monotone_x_ok = true;
  bool joint_convex_ok = true;
  bool key_inequality_ok = true;
  double worst_violation = 0.0;
  std::vector<ContractWitness> witnesses;

  bool all_ok() const {
    return separable_zero_ok && monotone_z_ok && monotone_x_ok && joint_convex_ok &&
           key_inequality_ok;
  }
};

/// Grid plus seeded-random-segment check of the yield contract. Failures
/// are reported with witnesses, never thrown.
ContractReport verify_yield_contract(const YieldFunction& y, int grid_n, int segment_samples,
                                     std::uint64_t seed);

}  // namespace seet

#endif
