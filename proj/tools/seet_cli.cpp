#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "seet/bounds.hpp"
#include "seet/fock.hpp"
#include "seet/search.hpp"
#include "seet/yield.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string fmt12(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, ptr);
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(const std::string& data) {
  std::ostringstream os;
  os << std::hex << fnv1a(data);
  return os.str();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output path " + out_path);
  f << content;
}

seet::YieldFunction parse_yield(const std::string& spec) {
  if (spec == "ed") return seet::ed_yield();
  if (spec.rfind("linear:", 0) == 0) return seet::linear_yield(std::stod(spec.substr(7)));
  if (spec == "linear") return seet::linear_yield();
  if (spec.rfind("power:", 0) == 0) return seet::power_yield(std::stod(spec.substr(6)));
  throw CLI::ValidationError("--yield", "expected ed, linear[:C], or power:K, got " + spec);
}

std::string json_artifact(const std::string& command, ordered_json params, ordered_json results) {
  ordered_json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["params"] = std::move(params);
  j["results"] = std::move(results);
  j["hash"] = hash_hex(j.dump());
  return j.dump(2) + "\n";
}

ordered_json outcome_json(const seet::OutcomeReport& o) {
  ordered_json j;
  j["label"] = o.label;
  j["p"] = o.p;
  j["zPrime"] = o.z_prime;
  j["z"] = o.z;
  j["x"] = o.x;
  j["fidelity"] = o.fidelity;
  return j;
}

ordered_json report_json(const seet::SimulationReport& rep) {
  ordered_json r;
  r["outcomes"] = ordered_json::array();
  for (const auto& o : rep.outcomes) r["outcomes"].push_back(outcome_json(o));
  r["totalSuccess"] = rep.total_success;
  r["avgFidelity"] = rep.avg_fidelity;
  r["uReceived"] = rep.u_received;
  r["vDephasing"] = rep.v_dephasing;
  r["deltaPs"] = rep.delta_ps;
  r["deltaF"] = rep.delta_f;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-error-type entanglement toolkit"};
  app.require_subcommand(1);

  // curves
  auto* curves = app.add_subcommand("curves", "emit figure curve tables as CSV");
  std::string fig = "fig3", out_path;
  double t_single = -1.0, t_min = 0.01, t_max = 0.99;
  int t_points = 200, jobs = 1;
  curves->add_option("--figure", fig)->check(CLI::IsMember({"fig3", "fig6"}));
  curves->add_option("--t", t_single);
  curves->add_option("--t-min", t_min);
  curves->add_option("--t-max", t_max);
  curves->add_option("--t-points", t_points);
  curves->add_option("--out", out_path);
  curves->add_option("--jobs", jobs);

  // optimize
  auto* optimize = app.add_subcommand("optimize", "maximize Y(u^gamma,0)(1-u) over u");
  std::string yield_spec = "ed";
  double ot = -1.0, ota = -1.0, otb = -1.0;
  optimize->add_option("--yield", yield_spec);
  optimize->add_option("--transmittance", ot);
  optimize->add_option("--ta", ota);
  optimize->add_option("--tb", otb);
  optimize->add_option("--out", out_path);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Fock-space protocol simulation");
  std::string protocol = "p2p";
  double alpha = 1.0, beta = -1.0, theta = M_PI, st = -1.0, sta = -1.0, stb = -1.0, q0 = 0.5;
  int dim = 0;
  simulate->add_option("--protocol", protocol)->check(CLI::IsMember({"p2p", "three-party"}));
  simulate->add_option("--alpha", alpha);
  simulate->add_option("--beta", beta);
  simulate->add_option("--theta", theta);
  simulate->add_option("--transmittance", st);
  simulate->add_option("--ta", sta);
  simulate->add_option("--tb", stb);
  simulate->add_option("--q0", q0);
  simulate->add_option("--dim", dim);
  simulate->add_option("--out", out_path);

  // verify-bound
  auto* verify = app.add_subcommand("verify-bound", "separable search against the yield bound");
  double overlap = 0.5, dephase = 0.5;
  int outcomes_k = 4, restarts = 64, iterations = 2000;
  std::uint64_t seed = 0;
  verify->add_option("--yield", yield_spec);
  verify->add_option("--overlap", overlap);
  verify->add_option("--dephase", dephase);
  verify->add_option("--outcomes", outcomes_k);
  verify->add_option("--restarts", restarts);
  verify->add_option("--iterations", iterations);
  verify->add_option("--seed", seed);
  verify->add_option("--out", out_path);

  // check-yield
  auto* check = app.add_subcommand("check-yield", "yield-function contract verification");
  int grid_n = 16, segments = 200;
  check->add_option("--yield", yield_spec);
  check->add_option("--grid", grid_n);
  check->add_option("--segments", segments);
  check->add_option("--seed", seed);
  check->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (curves->parsed()) {
      if (jobs < 1) throw seet::InvalidParameter("--jobs must be >= 1");
      std::vector<double> grid;
      if (t_single > 0.0) {
        grid = {t_single};
      } else {
        grid = seet::default_t_grid(t_points, t_min, t_max);
      }
      const seet::Figure which = (fig == "fig3") ? seet::Figure::Fig3 : seet::Figure::Fig6;
      const auto rows = seet::figure_curves(which, grid, jobs);

      std::ostringstream body;
      body << "T,curve,value\n";
      for (const auto& r : rows) body << fmt12(r.t) << "," << r.curve << "," << fmt12(r.value) << "\n";
      std::ostringstream full;
      full << "# seet " << kVersion << " curves figure=" << fig << " points=" << grid.size()
           << " jobs-independent=true\n";
      full << body.str();
      full << "# hash=" << hash_hex(body.str()) << "\n";
      emit(out_path, full.str());
      return 0;
    }

    if (optimize->parsed()) {
      seet::ChannelSpec spec = (ot > 0.0) ? seet::ChannelSpec::point_to_point(ot)
                                          : seet::ChannelSpec::three_party(ota, otb);
      const seet::YieldFunction y = parse_yield(yield_spec);
      const seet::LossExponent g = seet::loss_exponent(spec);
      const seet::OptimizationResult res = seet::optimum(y, g);

      ordered_json params{{"yield", yield_spec}};
      if (ot > 0.0) {
        params["transmittance"] = ot;
      } else {
        params["ta"] = ota;
        params["tb"] = otb;
      }
      ordered_json results;
      results["gamma"] = g.gamma;
      results["uStar"] = res.u_star;
      results["value"] = res.value;
      results["evaluations"] = res.evaluations;
      results["bracket"] = {res.bracket_lo, res.bracket_hi};
      emit(out_path, json_artifact("optimize", params, results));
      return 0;
    }

    if (simulate->parsed()) {
      ordered_json params{{"protocol", protocol}, {"alpha", alpha},
                          {"theta", theta},       {"q0", q0},
                          {"dim", dim}};
      seet::SimulationReport rep;
      if (protocol == "p2p") {
        if (!(st > 0.0)) throw seet::InvalidParameter("--transmittance required for p2p");
        params["transmittance"] = st;
        rep = seet::simulate_p2p(seet::P2pParams{q0, {0.0, 0.0}, alpha, theta, st}, dim);
      } else {
        if (!(sta > 0.0 && stb > 0.0)) {
          throw seet::InvalidParameter("--ta and --tb required for three-party");
        }
        const double b = (beta > 0.0) ? beta : alpha;
        params["beta"] = b;
        params["ta"] = sta;
        params["tb"] = stb;
        rep = seet::simulate_three_party(seet::ArmParams{q0, {0.0, 0.0}, alpha, theta, sta},
                                         seet::ArmParams{q0, {0.0, 0.0}, b, theta, stb}, dim);
      }
      emit(out_path, json_artifact("simulate", params, report_json(rep)));
      return 0;
    }

    if (verify->parsed()) {
      const seet::YieldFunction y = parse_yield(yield_spec);
      seet::SearchConfig cfg;
      cfg.outcomes = outcomes_k;
      cfg.restarts = restarts;
      cfg.iterations = iterations;
      cfg.seed = seed;
      const seet::SearchResult res = seet::search(y, overlap, dephase, cfg);

      ordered_json params{{"yield", yield_spec},   {"overlap", overlap},
                          {"dephase", dephase},    {"outcomes", outcomes_k},
                          {"restarts", restarts},  {"iterations", iterations},
                          {"seed", seed}};
      ordered_json results;
      results["bestYield"] = res.best_yield;
      results["bound"] = res.bound;
      results["gap"] = res.gap;
      results["bestRestart"] = res.best_restart;
      results["bestQ0"] = res.best.q0;
      emit(out_path, json_artifact("verify-bound", params, results));
      return 0;
    }

    if (check->parsed()) {
      const seet::YieldFunction y = parse_yield(yield_spec);
      const seet::ContractReport rep = seet::verify_yield_contract(y, grid_n, segments, seed);
      ordered_json params{
          {"yield", yield_spec}, {"grid", grid_n}, {"segments", segments}, {"seed", seed}};
      ordered_json results;
      results["separableZero"] = rep.separable_zero_ok;
      results["monotoneZ"] = rep.monotone_z_ok;
      results["monotoneX"] = rep.monotone_x_ok;
      results["jointConvex"] = rep.joint_convex_ok;
      results["keyInequality"] = rep.key_inequality_ok;
      results["allOk"] = rep.all_ok();
      results["worstViolation"] = rep.worst_violation;
      results["witnessCount"] = rep.witnesses.size();
      emit(out_path, json_artifact("check-yield", params, results));
      return 0;
    }
  } catch (const seet::BoundViolated& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const seet::InvalidParameter& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const seet::NonConvexSpec& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
