#include <cmath>
#include <complex>

#include "doctest.h"
#include "seet/bounds.hpp"
#include "seet/fock.hpp"

using namespace seet;
using cd = std::complex<double>;

namespace {

// Pulse amplitude giving received overlap u at transmittance t, theta = pi.
double alpha_for(double u, double t) { return std::sqrt(-std::log(u) / (2.0 * t)); }

}  // namespace

TEST_CASE("coherent state construction") {
  const FockVector vac = coherent(0.0, 20);
  CHECK(std::abs(vac(0) - 1.0) < 1e-15);
  const FockVector one = coherent(1.0, 40);
  CHECK(std::real(one(0)) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
  CHECK(one.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(coherent(1.0, 10), TruncationTooSmall);

  // |<a e^{i pi/4} | a e^{-i pi/4}>| = exp(-|a|^2 (1 - cos(pi/2)))
  const FockVector p = coherent(std::polar(1.0, M_PI / 4.0), 40);
  const FockVector m = coherent(std::polar(1.0, -M_PI / 4.0), 40);
  CHECK(std::abs(m.dot(p)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
}

TEST_CASE("conditional rotation") {
  const FockOperator id = conditional_rotation(0.0, 16);
  CHECK((id - FockOperator::Identity(32, 32)).cwiseAbs().maxCoeff() < 1e-15);

  // theta = 2 pi puts R(pi) on the j = 0 branch: |a> -> |-a>
  const int d = 40;
  const FockOperator v = conditional_rotation(2.0 * M_PI, d);
  Eigen::VectorXcd in = Eigen::VectorXcd::Zero(2 * d);
  in.segment(0, d) = coherent(1.0, d);
  const Eigen::VectorXcd out = v * in;
  CHECK((out.segment(0, d) - coherent(-1.0, d)).norm() < 1e-10);

  // branch overlap identity
  const FockOperator w = conditional_rotation(0.7, d);
  Eigen::VectorXcd b0 = Eigen::VectorXcd::Zero(2 * d), b1 = b0;
  b0.segment(0, d) = coherent(1.0, d);
  b1.segment(d, d) = coherent(1.0, d);
  const Eigen::VectorXcd o0 = w * b0, o1 = w * b1;
  CHECK(std::abs(o1.segment(d, d).dot(o0.segment(0, d))) ==
        doctest::Approx(std::exp(-(1.0 - std::cos(0.7)))).epsilon(1e-10));
}

TEST_CASE("loss channel splits coherent states") {
  const int d = 40;
  JointState in({{"b", d}}, coherent(1.0, d));
  const JointState out = apply_loss(in, "b", "E", 0.64, d, d);
  CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));
  // compare against the product |0.8> x |0.6> directly
  Eigen::VectorXcd prod(d * d);
  const FockVector t8 = coherent(0.8, d), t6 = coherent(0.6, d);
  for (int i = 0; i < d; ++i) prod.segment(i * d, d) = t8(i) * t6;
  CHECK((out.amplitudes() - prod).norm() < 1e-10);

  // vacuum stays vacuum
  const JointState vac = apply_loss(JointState({{"b", 20}}, coherent(0.0, 20)), "b", "E", 0.3, 20, 20);
  CHECK(std::abs(vac.amplitudes()(0) - 1.0) < 1e-12);
}

TEST_CASE("transmitted and environment overlaps obey the exponent relation") {
  const P2pParams p{0.5, {0.0, 0.0}, 1.1, 0.9, 0.37};
  const double u = overlap_from_pulse(p.alpha, p.theta, p.t);
  const double v = overlap_from_pulse(p.alpha, p.theta, 1.0 - p.t);
  CHECK(std::pow(u, 1.0 - p.t) == doctest::Approx(std::pow(v, p.t)).epsilon(1e-9));
}

TEST_CASE("p2p state: norm, branch overlap, product limit") {
  const P2pParams p{0.5, {0.0, 0.3}, 1.2, 0.8, 0.5};
  const JointState psi = build_p2p_state(p);
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-10));

  const P2pParams flat{0.5, {0.0, 0.4}, 0.0, 0.8, 0.5};
  const JointState prod = build_p2p_state(flat);
  // qubit (|0> + e^{i 0.4}|1>)/sqrt(2) x vacuum x vacuum
  const auto& amps = prod.amplitudes();
  CHECK(std::abs(amps(0) - std::sqrt(0.5)) < 1e-12);
  CHECK(std::abs(amps(prod.dim_of("b") * prod.dim_of("E")) -
                 std::sqrt(0.5) * std::exp(cd(0.0, 0.4))) < 1e-12);
}

TEST_CASE("dephasing equivalence of the traced state") {
  CHECK(dephasing_equivalence_check(P2pParams{0.5, {0.0, 0.0}, 1.0, M_PI / 2.0, 0.5}) <= 1e-9);
  CHECK(dephasing_equivalence_check(P2pParams{0.3, {0.2, -0.1}, 0.8, 1.3, 0.6}) <= 1e-9);
  CHECK(dephasing_equivalence_check(P2pParams{0.5, {0.0, 0.0}, 0.0, 1.0, 0.5}) <= 1e-12);
  CHECK(dephasing_equivalence_check(P2pParams{0.5, {0.0, 0.0}, 0.7, 1.0, 1.0 - 1e-9}) <= 1e-9);
}

TEST_CASE("dual pair inverts the Gram matrix") {
  const int d = 40;
  const FockVector u0 = coherent(std::polar(0.9, 0.4), d);
  const FockVector u1 = coherent(std::polar(0.9, -0.4), d);
  const auto [d0, d1] = dual_pair(u0, u1);
  CHECK(std::abs(d0.dot(u0) - 1.0) < 1e-10);
  CHECK(std::abs(d0.dot(u1)) < 1e-10);
  CHECK(std::abs(d1.dot(u0)) < 1e-10);
  CHECK(std::abs(d1.dot(u1) - 1.0) < 1e-10);
  CHECK_THROWS_AS(dual_pair(u0, u0), IllConditioned);
}

TEST_CASE("p2p measurement saturates completeness") {
  const int d = 40;
  const FockVector u0 = coherent(std::polar(1.0, 0.5), d);
  const FockVector u1 = coherent(std::polar(1.0, -0.5), d);
  const double s = std::abs(u1.dot(u0));
  const MeasurementSet ms = build_p2p_measurement(u0, u1);
  CHECK(ms.completeness_max_eigenvalue() == doctest::Approx(1.0).epsilon(1e-9));

  // N^dag N spectrum {1, (1-s)/(1+s)} on the span
  const Eigen::MatrixXcd& n = ms.outcomes.front().op;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(n * n.adjoint());
  CHECK(es.eigenvalues()(1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(es.eigenvalues()(0) == doctest::Approx((1.0 - s) / (1.0 + s)).epsilon(1e-9));
}

TEST_CASE("p2p simulation reproduces the achievability formulas") {
  // u = 0.5 at T = 0.5: Ps = 0.5, F = 0.75
  const P2pParams a{0.5, {0.0, 0.0}, alpha_for(0.5, 0.5), M_PI, 0.5};
  const SimulationReport ra = simulate_p2p(a);
  CHECK(ra.total_success == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(ra.avg_fidelity == doctest::Approx(0.75).epsilon(1e-8));
  CHECK(ra.delta_ps <= 1e-8);
  CHECK(ra.delta_f <= 1e-8);
  CHECK(ra.outcomes.front().z_prime == doctest::Approx(1.0).epsilon(1e-8));

  // u = 0.25 at T = 0.5: Ps = 0.75, F = 0.625
  const P2pParams b{0.5, {0.0, 0.0}, alpha_for(0.25, 0.5), M_PI, 0.5};
  const SimulationReport rb = simulate_p2p(b);
  CHECK(rb.total_success == doctest::Approx(0.75).epsilon(1e-8));
  CHECK(rb.avg_fidelity == doctest::Approx(0.625).epsilon(1e-8));

  // skewed prior: Ps unchanged, z' = 2 sqrt(q0 q1)
  const P2pParams c{0.3, {0.0, 0.0}, alpha_for(0.5, 0.5), M_PI, 0.5};
  const SimulationReport rc = simulate_p2p(c);
  CHECK(rc.total_success == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(rc.outcomes.front().z_prime == doctest::Approx(2.0 * std::sqrt(0.21)).epsilon(1e-8));
}

TEST_CASE("report coordinates satisfy the dephasing relations") {
  const P2pParams p{0.4, {0.0, 0.0}, 1.0, 1.1, 0.45};
  const SimulationReport rep = simulate_p2p(p);
  for (const auto& o : rep.outcomes) {
    CHECK(o.z == doctest::Approx(rep.v_dephasing * o.z_prime).epsilon(1e-8));
    CHECK(o.x == doctest::Approx(std::sqrt(1.0 - o.z_prime * o.z_prime)).epsilon(1e-8));
  }
}

TEST_CASE("simulated yield never beats the analytic bound") {
  const YieldFunction y = ed_yield();
  for (double q0 : {0.5, 0.35}) {
    const P2pParams p{q0, {0.0, 0.0}, alpha_for(0.6, 0.5), M_PI, 0.5};
    const SimulationReport rep = simulate_p2p(p);
    double simulated = 0.0;
    for (const auto& o : rep.outcomes) simulated += o.p * y(o.z, o.x);
    const double bound =
        y(std::pow(rep.u_received, (1.0 - p.t) / p.t), 0.0) * (1.0 - rep.u_received);
    CHECK(simulated <= bound + 1e-8);
    if (q0 == 0.5) CHECK(simulated == doctest::Approx(bound).epsilon(1e-8));
  }
}

TEST_CASE("dephasing commutes with the mode measurement") {
  const double w = 0.6;
  const P2pParams p0{0.5, {0.0, 0.0}, 1.0, 1.2, 0.5};
  P2pParams pz = p0;
  pz.theta_phases[1] = M_PI;  // Z on A before the channel/measurement
  const SimulationReport r0 = simulate_p2p(p0);
  const SimulationReport rz = simulate_p2p(pz);
  CHECK(rz.total_success == doctest::Approx(r0.total_success).epsilon(1e-10));

  // mixing the two runs with weights (1 +/- w)/2 equals dephasing the
  // undisturbed outcome by w
  const SingleErrorState& s0 = r0.outcomes.front().state;
  const SingleErrorState& sz = rz.outcomes.front().state;
  CHECK(sz.zeta == doctest::Approx(-s0.zeta).epsilon(1e-8));
  CHECK(sz.upsilon == doctest::Approx(-s0.upsilon).epsilon(1e-8));
  const std::vector<std::pair<double, SingleErrorState>> terms = {{(1.0 + w) / 2.0, s0},
                                                                  {(1.0 - w) / 2.0, sz}};
  const SingleErrorState mixed = mix(terms);
  CHECK(mixed.zeta == doctest::Approx(w * s0.zeta).epsilon(1e-8));
  CHECK(mixed.chi == doctest::Approx(s0.chi).epsilon(1e-8));
}

TEST_CASE("three-party state and Claire measurement") {
  const ArmParams a{0.5, {0.0, 0.0}, alpha_for(0.5, 0.5), M_PI, 0.5};
  const ThreePartyState st = build_three_party_state(a, a);
  CHECK(st.norm() == doctest::Approx(1.0).epsilon(1e-10));

  const int d = 40;
  const FockVector u0 = coherent(std::polar(0.8, 0.6), d), u1 = coherent(std::polar(0.8, -0.6), d);
  const double s = std::abs(u1.dot(u0));
  const MeasurementSet ms = build_claire_measurement(u0, u1, u0, u1);
  REQUIRE(ms.outcomes.size() == 4);
  CHECK(ms.completeness_max_eigenvalue() == doctest::Approx(1.0).epsilon(1e-9));
  // scale split: (1-s)^2/2 on the "+" combinations, (1-s^2)/2 on "-",
  // read off through |O_k |u_0 u_0>| = c_k
  Eigen::VectorXcd u00(d * d);
  for (int i = 0; i < d; ++i) u00.segment(i * d, d) = u0(i) * u0;
  CHECK(std::abs((ms.outcomes[0].op * u00)(0)) ==
        doctest::Approx(std::sqrt((1.0 - s) * (1.0 - s) / 2.0)).epsilon(1e-9));
  CHECK(std::abs((ms.outcomes[1].op * u00)(0)) ==
        doctest::Approx(std::sqrt((1.0 - s * s) / 2.0)).epsilon(1e-9));
  CHECK(ms.outcomes[2].flip);
  CHECK(ms.outcomes[3].flip);
}

TEST_CASE("Claire completeness with unequal arm overlaps") {
  const int d = 40;
  const FockVector u0a = coherent(std::polar(0.5, 1.0), d), u1a = coherent(std::polar(0.5, -1.0), d);
  const FockVector u0b = coherent(std::polar(0.9, 0.7), d), u1b = coherent(std::polar(0.9, -0.7), d);
  const MeasurementSet ms = build_claire_measurement(u0a, u1a, u0b, u1b);
  const double lam = ms.completeness_max_eigenvalue();
  CHECK(lam <= 1.0 + 1e-9);
  CHECK(lam == doctest::Approx(1.0).epsilon(1e-6));  // bisection saturates
}

TEST_CASE("three-party simulation reproduces the achievability formulas") {
  // u = 0.5, Ta = Tb = 0.5: Ps = 0.5, F = (1 + 0.25)/2
  const ArmParams a{0.5, {0.0, 0.0}, alpha_for(0.5, 0.5), M_PI, 0.5};
  const SimulationReport r = simulate_three_party(a, a);
  CHECK(r.total_success == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(r.avg_fidelity == doctest::Approx(0.625).epsilon(1e-8));
  const double s = r.u_received;
  CHECK(r.outcomes[0].p == doctest::Approx((1.0 - s) * (1.0 - s) / 4.0).epsilon(1e-8));
  CHECK(r.outcomes[1].p == doctest::Approx((1.0 - s * s) / 4.0).epsilon(1e-8));
  for (const auto& o : r.outcomes) CHECK(o.z_prime == doctest::Approx(1.0).epsilon(1e-8));

  // u = 0.25: Ps = 0.75, F = (1 + 0.25^2)/2
  const ArmParams b{0.5, {0.0, 0.0}, alpha_for(0.25, 0.5), M_PI, 0.5};
  const SimulationReport r2 = simulate_three_party(b, b);
  CHECK(r2.total_success == doctest::Approx(0.75).epsilon(1e-8));
  CHECK(r2.avg_fidelity == doctest::Approx(0.53125).epsilon(1e-8));

  // complex-overlap geometry still saturates
  const ArmParams c{0.5, {0.0, 0.0}, 0.9, 1.3, 0.5};
  const SimulationReport r3 = simulate_three_party(c, c);
  CHECK(r3.delta_ps <= 1e-8);
  CHECK(r3.delta_f <= 1e-8);
}

TEST_CASE("truncation stability spot check") {
  const double alpha = alpha_for(0.4, 0.5);
  const int d0 = coherent_dim(alpha);
  const P2pParams p{0.5, {0.0, 0.0}, alpha, M_PI, 0.5};
  const SimulationReport a = simulate_p2p(p, d0);
  const SimulationReport b = simulate_p2p(p, 2 * d0);
  CHECK(std::abs(a.total_success - b.total_success) <= 1e-9);
  CHECK(std::abs(a.avg_fidelity - b.avg_fidelity) <= 1e-9);
}
