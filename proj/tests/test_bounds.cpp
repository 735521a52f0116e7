#include <cmath>

#include "doctest.h"
#include "seet/bounds.hpp"

using namespace seet;

TEST_CASE("loss exponents") {
  CHECK(loss_exponent(ChannelSpec::point_to_point(0.5)).gamma == doctest::Approx(1.0));
  CHECK(loss_exponent(ChannelSpec::point_to_point(0.25)).gamma == doctest::Approx(3.0));
  CHECK(loss_exponent(ChannelSpec::three_party(0.5, 0.5)).gamma == doctest::Approx(2.0));
  CHECK_THROWS_AS(ChannelSpec::point_to_point(1.0), InvalidParameter);
}

TEST_CASE("objective oracle value") {
  // frozen: ed(0.5, 0) * 0.5 at gamma = 1
  CHECK(objective(ed_yield(), LossExponent{1.0}, 0.5) ==
        doctest::Approx(0.094360937770434).epsilon(1e-12));
  CHECK_THROWS_AS(objective(ed_yield(), LossExponent{1.0}, 0.0), InvalidParameter);
}

TEST_CASE("optimum against closed-form maximizers") {
  // linear yield, gamma = 1: max u(1-u) at u = 1/2
  const auto lin = optimum(linear_yield(1.0), LossExponent{1.0});
  CHECK(lin.u_star == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(lin.value == doctest::Approx(0.25).epsilon(1e-12));
  // power-2 yield: max u^2(1-u) at u = 2/3, value 4/27
  const auto pw = optimum(power_yield(2.0), LossExponent{1.0});
  CHECK(pw.u_star == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
  CHECK(pw.value == doctest::Approx(4.0 / 27.0).epsilon(1e-12));
}

TEST_CASE("ed_max frozen oracle at T = 0.5") {
  // frozen from a 10^6-point high-precision grid refinement
  CHECK(ed_max(ChannelSpec::point_to_point(0.5)) ==
        doctest::Approx(0.117114740033202).epsilon(1e-10));
  const auto res = optimum(ed_yield(), LossExponent{1.0});
  CHECK(res.u_star == doctest::Approx(0.690908).epsilon(1e-5));
}

TEST_CASE("rnpm points and fidelity inversion") {
  const RnpmPoint pt = rnpm_point(0.5, LossExponent{1.0});
  CHECK(pt.fidelity == doctest::Approx(0.75));
  CHECK(pt.success == doctest::Approx(0.5));
  // frozen: 1 - 0.988^(1/2)
  CHECK(success_at_fidelity(0.994, LossExponent{2.0}) ==
        doctest::Approx(0.006018108816866).epsilon(1e-12));
  // round trip within 1e-12
  for (double u : {0.1, 0.37, 0.8}) {
    const auto p = rnpm_point(u, LossExponent{2.5});
    CHECK(success_at_fidelity(p.fidelity, LossExponent{2.5}) == doctest::Approx(1.0 - u).epsilon(1e-12));
  }
  CHECK_THROWS_AS(success_at_fidelity(0.4, LossExponent{1.0}), InvalidParameter);
}

TEST_CASE("capacities") {
  CHECK(capacity(ChannelSpec::point_to_point(0.5)) == 1.0);
  CHECK(capacity(ChannelSpec::point_to_point(0.75)) == 2.0);
  // frozen: -log2(0.75)
  CHECK(capacity(ChannelSpec::point_to_point(0.25)) ==
        doctest::Approx(0.415037499278844).epsilon(1e-13));
  CHECK(capacity(ChannelSpec::three_party(0.5, 0.5)) == 1.0);
  CHECK_THROWS_AS(capacity(ChannelSpec::three_party(0.5, 0.6)), InvalidParameter);
}

TEST_CASE("pulse overlap") {
  CHECK(overlap_from_pulse(1.0, M_PI / 2.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(overlap_from_pulse(0.0, 1.0, 0.5) == 1.0);
  CHECK_THROWS_AS(overlap_from_pulse(-1.0, 1.0, 0.5), InvalidParameter);
}

TEST_CASE("figure curves are jobs-independent and ordered") {
  const auto grid = default_t_grid(16);
  REQUIRE(grid.size() == 16);
  const auto a = figure_curves(Figure::Fig3, grid, 1);
  const auto b = figure_curves(Figure::Fig3, grid, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].t == b[i].t);
    CHECK(a[i].curve == b[i].curve);
    CHECK(a[i].value == b[i].value);  // bit-identical
  }
  const auto f6 = figure_curves(Figure::Fig6, grid, 2);
  CHECK(f6.size() == 5 * grid.size());
  // fig6 three-party capacity at T = 0.25: -log2(1 - 0.5) = 1
  for (const auto& row : figure_curves(Figure::Fig6, std::vector<double>{0.25}, 1)) {
    if (row.curve == "a") CHECK(row.value == doctest::Approx(1.0).epsilon(1e-12));
  }
}
