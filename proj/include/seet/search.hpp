#ifndef SEET_SEARCH_HPP
#define SEET_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "seet/errors.hpp"
#include "seet/yield.hpp"

namespace seet {

/// One success outcome of a separable protocol, magnitudes only (phases
/// drop out of every statistic).
struct SeparableOutcome {
  double m0 = 1.0, m1 = 1.0;
  double n0 = 1.0, n1 = 1.0;
  bool flip = false;
};

struct SeparableProtocol {
  double q0 = 0.5;
  std::vector<SeparableOutcome> outcomes;
  double s = 0.5;  // |<u1|u0>|
  double v = 1.0;  // |<v1|v0>|
};

struct OutcomeStats {
  double p = 0.0;
  double z_prime = 0.0;
  double x = 0.0;
};

/// p = q0 (m0 n0)^2 + (1-q0)(m1 n1)^2, z' = 2 sqrt(q0 q1) m0 m1 n0 n1 / p.
OutcomeStats outcome_stats(double q0, const SeparableOutcome& o);

/// Completeness feasibility: sqrt(1 - Sum (m0 n0)^2) sqrt(1 - Sum (m0 n1)^2)
/// >= s and the m1 analog, each inner sum <= 1.
bool feasible(const SeparableProtocol& proto);

/// Sum_k p_k Y(v z'_k, sqrt(1 - z'_k^2)). Throws InfeasibleProtocol.
double protocol_yield(const SeparableProtocol& proto, const YieldFunction& y);

struct SearchConfig {
  int outcomes = 4;
  int restarts = 64;
  int iterations = 2000;
  std::uint64_t seed = 0;
  double step = 0.1;
  double step_decay = 0.5;
  int decay_every = 400;
};

struct SearchResult {
  SeparableProtocol best;
  double best_yield = 0.0;
  double bound = 0.0;
  double gap = 0.0;
  int best_restart = -1;
  std::vector<double> restart_bests;
};

/// Random-restart sampling plus coordinate refinement; infeasible
/// proposals are repaired by scaling the n magnitudes onto the
/// feasibility boundary. Deterministic given cfg.seed (per-restart seed
/// is cfg.seed + restart index). Throws BoundViolated if the best yield
/// exceeds the analytic bound Y(v,0)(1-s) beyond 1e-9.
SearchResult search(const YieldFunction& y, double s, double v, const SearchConfig& cfg);

}  // namespace seet

#endif
