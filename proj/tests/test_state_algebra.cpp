#include <cmath>

#include "doctest.h"
#include "seet/state_algebra.hpp"

using namespace seet;

TEST_CASE("parameter validation and renormalization") {
  CHECK_NOTHROW(make_single_error_state(0.6, 0.8, 0.0));
  CHECK_THROWS_AS(make_single_error_state(0.9, 0.9, 0.0), InvalidState);
  // sub-tolerance overshoot is renormalized, not rejected
  const auto s = make_single_error_state(1.0 + 4e-13, 0.0, 0.0);
  CHECK(s.zeta <= 1.0);
  CHECK_THROWS_AS(make_standard_form_state(-0.1, 0.0), InvalidState);
}

TEST_CASE("standard form reduction") {
  const auto [sf, corr] = to_standard_form(SingleErrorState{0.3, -0.4, 0.4});
  CHECK(sf.z == doctest::Approx(std::hypot(0.3, 0.4)).epsilon(1e-12));
  CHECK(sf.x == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(corr.xx_flip);
  CHECK(corr.z_rotation_angle == doctest::Approx(std::atan2(0.4, 0.3)));

  // the recorded correction actually maps the density matrix onto the
  // standard-form density matrix
  const Eigen::Matrix4cd u = correction_unitary(corr);
  const TwoQubitDensityMatrix rho = density_of(SingleErrorState{0.3, -0.4, 0.4});
  const TwoQubitDensityMatrix mapped = u * rho * u.adjoint();
  CHECK((mapped - density_of(sf)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("density matrix round trip through classify") {
  const SingleErrorState in{0.5, 0.2, -0.3};
  const SingleErrorState out = classify(density_of(in), 1e-10);
  CHECK(out.zeta == doctest::Approx(in.zeta).epsilon(1e-12));
  CHECK(out.chi == doctest::Approx(in.chi).epsilon(1e-12));
  CHECK(out.upsilon == doctest::Approx(in.upsilon).epsilon(1e-12));
}

TEST_CASE("classify rejects support outside the single-error span") {
  TwoQubitDensityMatrix rho = TwoQubitDensityMatrix::Zero();
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.5;
  CHECK_THROWS_AS(classify(rho, 1e-10), NotSingleErrorType);
}

TEST_CASE("channels scale the right coordinate") {
  const StandardFormState s{0.6, 0.5};
  CHECK(apply_phase_flip(s, 0.5).z == doctest::Approx(0.3));
  CHECK(apply_phase_flip(s, 0.5).x == doctest::Approx(0.5));
  CHECK(apply_xx_mix(s, 0.5).x == doctest::Approx(0.25));
  CHECK(singlet_fraction(s) == doctest::Approx(0.8));
  CHECK_THROWS_AS(apply_phase_flip(s, 1.5), InvalidParameter);
}

TEST_CASE("mixing is affine in the parameter vector") {
  const std::vector<std::pair<double, SingleErrorState>> terms = {
      {0.25, SingleErrorState{0.8, 0.0, 0.0}}, {0.75, SingleErrorState{0.0, 0.4, 0.0}}};
  const SingleErrorState m = mix(terms);
  CHECK(m.zeta == doctest::Approx(0.2));
  CHECK(m.chi == doctest::Approx(0.3));

  const std::vector<std::pair<double, SingleErrorState>> bad = {
      {0.5, SingleErrorState{}}, {0.6, SingleErrorState{}}};
  CHECK_THROWS_AS(mix(bad), InvalidWeights);
}
