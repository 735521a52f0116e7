#include "seet/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace seet {

namespace {

constexpr double kFeasTol = 1e-12;

struct ConstraintSums {
  double a00 = 0.0, a01 = 0.0, a10 = 0.0, a11 = 0.0;
};

ConstraintSums sums_of(const std::vector<SeparableOutcome>& outcomes) {
  ConstraintSums s;
  for (const auto& o : outcomes) {
    s.a00 += (o.m0 * o.n0) * (o.m0 * o.n0);
    s.a01 += (o.m0 * o.n1) * (o.m0 * o.n1);
    s.a10 += (o.m1 * o.n0) * (o.m1 * o.n0);
    s.a11 += (o.m1 * o.n1) * (o.m1 * o.n1);
  }
  return s;
}

// Margin of the two product-form constraints at n -> t n; negative means
// infeasible. Decreasing in t.
double margin_at(const ConstraintSums& s, double s_overlap, double t) {
  const double t2 = t * t;
  const double b00 = 1.0 - t2 * s.a00, b01 = 1.0 - t2 * s.a01;
  const double b10 = 1.0 - t2 * s.a10, b11 = 1.0 - t2 * s.a11;
  if (b00 < 0.0 || b01 < 0.0 || b10 < 0.0 || b11 < 0.0) return -1.0;
  return std::min(std::sqrt(b00) * std::sqrt(b01), std::sqrt(b10) * std::sqrt(b11)) - s_overlap;
}

// Scales every n magnitude onto the feasibility boundary (binary search).
void repair(SeparableProtocol& proto) {
  const ConstraintSums s = sums_of(proto.outcomes);
  const double amax = std::max({s.a00, s.a01, s.a10, s.a11});
  if (amax <= 0.0) return;
  double lo = 0.0, hi = 1.0 / std::sqrt(amax);
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (margin_at(s, proto.s, mid) >= 0.0 ? lo : hi) = mid;
  }
  for (auto& o : proto.outcomes) {
    o.n0 *= lo;
    o.n1 *= lo;
  }
}

SeparableProtocol saturating_start(int k, double s, double v) {
  SeparableProtocol proto;
  proto.q0 = 0.5;
  proto.s = s;
  proto.v = v;
  const double n = std::sqrt((1.0 - s) / k);
  proto.outcomes.assign(k, SeparableOutcome{1.0, 1.0, n, n, false});
  return proto;
}

}  // namespace

OutcomeStats outcome_stats(double q0, const SeparableOutcome& o) {
  if (!(q0 > 0.0 && q0 < 1.0)) throw InvalidParameter("prior q0 must lie in (0,1)");
  OutcomeStats st;
  st.p = q0 * (o.m0 * o.n0) * (o.m0 * o.n0) + (1.0 - q0) * (o.m1 * o.n1) * (o.m1 * o.n1);
  if (st.p <= 0.0) throw DegenerateOutcome("outcome has zero success probability");
  st.z_prime = 2.0 * std::sqrt(q0 * (1.0 - q0)) * o.m0 * o.m1 * o.n0 * o.n1 / st.p;
  st.z_prime = std::min(1.0, st.z_prime);  // AM-GM guarantees <= 1; clip rounding
  st.x = std::sqrt(std::max(0.0, 1.0 - st.z_prime * st.z_prime));
  return st;
}

bool feasible(const SeparableProtocol& proto) {
  const ConstraintSums s = sums_of(proto.outcomes);
  if (std::max({s.a00, s.a01, s.a10, s.a11}) > 1.0 + kFeasTol) return false;
  return margin_at(s, proto.s, 1.0) >= -kFeasTol;
}

double protocol_yield(const SeparableProtocol& proto, const YieldFunction& y) {
  if (!feasible(proto)) throw InfeasibleProtocol("protocol violates the completeness constraint");
  double total = 0.0;
  for (const auto& o : proto.outcomes) {
    const OutcomeStats st = outcome_stats(proto.q0, o);
    total += st.p * y(proto.v * st.z_prime, st.x);
  }
  return total;
}

SearchResult search(const YieldFunction& y, double s, double v, const SearchConfig& cfg) {
  if (!(s > 0.0 && s < 1.0) || !(v > 0.0 && v <= 1.0)) {
    throw InvalidParameter("search requires s in (0,1) and v in (0,1]");
  }
  if (cfg.outcomes < 1 || cfg.restarts < 1 || cfg.iterations < 0) {
    throw InvalidParameter("search config out of range");
  }

  SearchResult res;
  res.bound = y(v, 0.0) * (1.0 - s);
  res.restart_bests.reserve(cfg.restarts);

  for (int r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(r));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    SeparableProtocol proto;
    if (r == 0) {
      // Deterministic saturating warm start; the remaining restarts probe
      // the landscape at random.
      proto = saturating_start(cfg.outcomes, s, v);
    } else {
      proto.q0 = 0.1 + 0.8 * unif(rng);
      proto.s = s;
      proto.v = v;
      proto.outcomes.resize(cfg.outcomes);
      for (auto& o : proto.outcomes) {
        o.m0 = 0.05 + 0.95 * unif(rng);
        o.m1 = 0.05 + 0.95 * unif(rng);
        o.n0 = 0.05 + 0.95 * unif(rng);
        o.n1 = 0.05 + 0.95 * unif(rng);
      }
      repair(proto);
    }
    double best = protocol_yield(proto, y);

    double step = cfg.step;
    for (int it = 0; it < cfg.iterations; ++it) {
      if (cfg.decay_every > 0 && it > 0 && it % cfg.decay_every == 0) step *= cfg.step_decay;

      SeparableProtocol trial = proto;
      const int coord = static_cast<int>(unif(rng) * (1 + 4 * cfg.outcomes));
      if (coord == 0) {
        trial.q0 = std::clamp(trial.q0 + step * gauss(rng), 1e-3, 1.0 - 1e-3);
      } else {
        auto& o = trial.outcomes[(coord - 1) / 4];
        double* fields[4] = {&o.m0, &o.m1, &o.n0, &o.n1};
        double& f = *fields[(coord - 1) % 4];
        f = std::max(1e-6, f + step * gauss(rng));
      }
      repair(trial);
      const double trial_yield = protocol_yield(trial, y);
      if (trial_yield > best) {
        best = trial_yield;
        proto = std::move(trial);
      }
    }

    res.restart_bests.push_back(best);
    if (best > res.best_yield || res.best_restart < 0) {
      res.best_yield = best;
      res.best = proto;
      res.best_restart = r;
    }
  }

  res.gap = res.bound - res.best_yield;
  if (res.best_yield > res.bound + 1e-9) {
    throw BoundViolated("search yield " + std::to_string(res.best_yield) + " exceeds bound " +
                        std::to_string(res.bound));
  }
  return res;
}

}  // namespace seet
