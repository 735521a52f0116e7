#ifndef SEET_FOCK_HPP
#define SEET_FOCK_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>
#include <vector>

#include "seet/errors.hpp"
#include "seet/state_algebra.hpp"

namespace seet {

using FockVector = Eigen::VectorXcd;
using FockOperator = Eigen::MatrixXcd;

/// Smallest truncation dimension accepted for a coherent state of the
/// given amplitude magnitude: ceil(|a|^2 + 10 |a| + 20).
int coherent_dim(double abs_alpha);

/// Truncated coherent state e^{-|a|^2/2} a^n / sqrt(n!). Throws
/// TruncationTooSmall if the tail mass beyond dim exceeds 1e-12.
FockVector coherent(std::complex<double> alpha, int dim);

/// Qubit-controlled phase-space rotation on qubit (x) mode:
/// |0><0| (x) R(theta/2) + |1><1| (x) R(-theta/2), R(phi) = exp(i phi n).
FockOperator conditional_rotation(double theta, int dim);

/// Beamsplitter isometry with vacuum ancilla restricted to the input
/// mode: |n> -> sum_k sqrt(C(n,k)) (sqrt(T))^{n-k} (sqrt(1-T))^k |n-k,k>.
/// Maps dim_in to dim_out (x) dim_env (row index n_out * dim_env + n_env).
FockOperator loss_isometry(int dim_in, int dim_out, int dim_env, double t);

/// Pure multipartite state over labelled subsystems, amplitudes stored
/// row-major in subsystem order.
class JointState {
 public:
  struct Subsystem {
    std::string label;
    int dim = 0;
  };

  JointState() = default;
  JointState(std::vector<Subsystem> subsystems, Eigen::VectorXcd amplitudes);

  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  int index_of(const std::string& label) const;
  int dim_of(const std::string& label) const;
  double norm() const { return amplitudes_.norm(); }

  /// Applies a (rows x dim) matrix to one subsystem; the subsystem keeps
  /// its label with the new dimension (rows). Not renormalized.
  JointState apply(const std::string& label, const Eigen::MatrixXcd& op) const;

  /// Contracts one subsystem against <bra|, removing it. Not renormalized.
  JointState project(const std::string& label, const FockVector& bra) const;

  /// Replaces subsystem `label` by two subsystems (same label, then
  /// env_label) via an isometry dim -> dim_out (x) dim_env.
  JointState split(const std::string& label, const std::string& env_label,
                   const Eigen::MatrixXcd& isometry, int dim_out, int dim_env) const;

  /// Reduced density matrix of the listed subsystems (in the listed order).
  Eigen::MatrixXcd reduced_density(const std::vector<std::string>& keep) const;

  static JointState product(const JointState& a, const JointState& b);

 private:
  std::vector<Subsystem> subsystems_;
  Eigen::VectorXcd amplitudes_;
};

/// Pure-loss channel on one mode of a joint state: appends environment
/// subsystem env_label directly after the mode.
JointState apply_loss(const JointState& state, const std::string& mode_label,
                      const std::string& env_label, double t, int dim_out, int dim_env);

struct P2pParams {
  double q0 = 0.5;
  std::array<double, 2> theta_phases = {0.0, 0.0};  // Theta_0, Theta_1
  double alpha = 1.0;
  double theta = M_PI;
  double t = 0.5;
};

/// Joint state sum_j sqrt(q_j) e^{i Theta_j} |j>_A |sqrt(T) a_j>_b
/// |sqrt(1-T) a_j>_E with a_j = alpha e^{(-1)^j i theta / 2}, assembled
/// by conditional rotation followed by the loss channel. dim == 0 picks
/// per-mode truncations automatically.
JointState build_p2p_state(const P2pParams& p, int dim = 0);

/// Trace distance between Tr_E |psi><psi| and the dephased-pure-state
/// representation Lambda_{|<v1|v0>|}(|psi'><psi'|).
double dephasing_equivalence_check(const P2pParams& p, int dim = 0);

/// Dual basis in span{u0, u1}: <dual_i | u_j> = delta_ij, from the 2x2
/// Gram inverse. Throws IllConditioned when |<u1|u0>| > 1 - 1e-6.
std::pair<FockVector, FockVector> dual_pair(const FockVector& u0, const FockVector& u1);

struct MeasurementOutcome {
  std::string label;
  /// Success operator: rows index the output qubit space (2 rows for a
  /// mode->qubit map) or a single row for a scalar functional.
  Eigen::MatrixXcd op;
  /// Odd-parity outcomes need an X relabel on qubit B before the output
  /// is single-error-type.
  bool flip = false;
  /// Dual-basis expansion (coeff, i, j) for arm-by-arm application of a
  /// two-mode functional; empty for single-mode operators.
  std::vector<std::tuple<std::complex<double>, int, int>> terms;
};

struct MeasurementSet {
  std::vector<MeasurementOutcome> outcomes;
  bool has_failure_complement = true;

  /// Largest eigenvalue of sum_k op_k^dag op_k, computed on the small
  /// side (Gram trick), for the completeness bound <= 1 + 1e-9.
  double completeness_max_eigenvalue() const;
};

/// Single success operator sqrt(1-s) (|0><dual_0| + |1><dual_1|) with
/// s = |<u1|u0>|; saturates the completeness bound.
MeasurementSet build_p2p_measurement(const FockVector& u0, const FockVector& u1);

struct OutcomeReport {
  std::string label;
  double p = 0.0;
  SingleErrorState state;
  double z_prime = 0.0;
  double z = 0.0;
  double x = 0.0;
  double fidelity = 0.0;
};

struct SimulationReport {
  std::vector<OutcomeReport> outcomes;
  double total_success = 0.0;
  double avg_fidelity = 0.0;   // success-weighted singlet fraction
  double u_received = 0.0;     // |<u1|u0>| of the states reaching the measurement
  double v_dephasing = 0.0;    // |<v1|v0>| accumulated by the environment(s)
  double delta_ps = 0.0;       // |Ps - (1-u)|
  double delta_f = 0.0;        // |F - (1+u^gamma)/2| at the analytic exponent
};

SimulationReport simulate_p2p(const P2pParams& p, int dim = 0);

struct ArmParams {
  double q0 = 0.5;
  std::array<double, 2> theta_phases = {0.0, 0.0};
  double alpha = 1.0;
  double theta = M_PI;
  double t = 0.5;
};

/// Factored |xi>_{A c_a E_a} (x) |zeta>_{B c_b E_b}; kept in product form
/// so the full six-subsystem tensor is never materialized.
struct ThreePartyState {
  JointState arm_a;  // subsystems A, c_a, E_a
  JointState arm_b;  // subsystems B, c_b, E_b
  double norm() const { return arm_a.norm() * arm_b.norm(); }
};

ThreePartyState build_three_party_state(const ArmParams& a, const ArmParams& b, int dim = 0);

/// Four scalar functionals on c_a (x) c_b built from the per-arm dual
/// bases: even-parity (dual_00 +/- dual_11) scaled by c_e and odd-parity
/// (dual_01 +/- dual_10) scaled by c_o, with the scales saturating the
/// completeness bound.
MeasurementSet build_claire_measurement(const FockVector& u0a, const FockVector& u1a,
                                        const FockVector& u0b, const FockVector& u1b);

SimulationReport simulate_three_party(const ArmParams& a, const ArmParams& b, int dim = 0);

}  // namespace seet

#endif
