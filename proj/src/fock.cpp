#include "seet/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace seet {

namespace {

using cd = std::complex<double>;
constexpr cd kI(0.0, 1.0);

double sqrt_binomial(int n, int k) {
  return std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

Eigen::VectorXcd kron_vec(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::VectorXcd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

Eigen::Matrix4cd kron22(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace

int coherent_dim(double abs_alpha) {
  return static_cast<int>(std::ceil(abs_alpha * abs_alpha + 10.0 * abs_alpha + 20.0));
}

FockVector coherent(std::complex<double> alpha, int dim) {
  if (dim < 1) throw InvalidParameter("coherent truncation dimension must be >= 1");
  if (dim < coherent_dim(std::abs(alpha))) {
    throw TruncationTooSmall("coherent dim " + std::to_string(dim) + " below |a|^2+10|a|+20");
  }
  FockVector v(dim);
  v(0) = std::exp(-std::norm(alpha) / 2.0);
  for (int n = 1; n < dim; ++n) v(n) = v(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  const double tail = 1.0 - v.squaredNorm();
  if (tail > 1e-12) {
    throw TruncationTooSmall("coherent tail mass " + std::to_string(tail));
  }
  return v;
}

FockOperator conditional_rotation(double theta, int dim) {
  if (dim < 1) throw InvalidParameter("conditional_rotation dimension must be >= 1");
  FockOperator op = FockOperator::Zero(2 * dim, 2 * dim);
  for (int n = 0; n < dim; ++n) {
    op(n, n) = std::exp(kI * (theta / 2.0) * static_cast<double>(n));
    op(dim + n, dim + n) = std::exp(-kI * (theta / 2.0) * static_cast<double>(n));
  }
  return op;
}

FockOperator loss_isometry(int dim_in, int dim_out, int dim_env, double t) {
  if (!(t > 0.0 && t < 1.0)) throw InvalidParameter("transmittance must lie in (0,1)");
  if (dim_in < 1 || dim_out < 1 || dim_env < 1) {
    throw InvalidParameter("loss_isometry dimensions must be >= 1");
  }
  FockOperator iso = FockOperator::Zero(dim_out * dim_env, dim_in);
  const double lt = 0.5 * std::log(t), lr = 0.5 * std::log(1.0 - t);
  for (int n = 0; n < dim_in; ++n) {
    for (int k = 0; k <= n; ++k) {
      const int n_out = n - k;
      if (n_out >= dim_out || k >= dim_env) continue;
      iso(n_out * dim_env + k, n) = sqrt_binomial(n, k) * std::exp(n_out * lt + k * lr);
    }
  }
  return iso;
}

JointState::JointState(std::vector<Subsystem> subsystems, Eigen::VectorXcd amplitudes)
    : subsystems_(std::move(subsystems)), amplitudes_(std::move(amplitudes)) {
  Eigen::Index total = 1;
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].dim < 1) throw InvalidState("subsystem dimension must be >= 1");
    for (std::size_t j = i + 1; j < subsystems_.size(); ++j) {
      if (subsystems_[i].label == subsystems_[j].label) {
        throw InvalidState("duplicate subsystem label " + subsystems_[i].label);
      }
    }
    total *= subsystems_[i].dim;
  }
  if (total != amplitudes_.size()) {
    throw InvalidState("amplitude vector size does not match subsystem dimensions");
  }
}

int JointState::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].label == label) return static_cast<int>(i);
  }
  throw InvalidParameter("unknown subsystem label " + label);
}

int JointState::dim_of(const std::string& label) const {
  return subsystems_[index_of(label)].dim;
}

JointState JointState::apply(const std::string& label, const Eigen::MatrixXcd& op) const {
  const int i = index_of(label);
  const int d = subsystems_[i].dim;
  if (op.cols() != d) throw InvalidParameter("operator column count does not match " + label);
  const int rows = static_cast<int>(op.rows());

  Eigen::Index inner = 1, outer = 1;
  for (std::size_t j = i + 1; j < subsystems_.size(); ++j) inner *= subsystems_[j].dim;
  for (int j = 0; j < i; ++j) outer *= subsystems_[j].dim;

  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(outer * rows * inner);
  Eigen::VectorXcd vin(d);
  for (Eigen::Index o = 0; o < outer; ++o) {
    for (Eigen::Index in = 0; in < inner; ++in) {
      for (int c = 0; c < d; ++c) vin(c) = amplitudes_((o * d + c) * inner + in);
      const Eigen::VectorXcd vout = op * vin;
      for (int r = 0; r < rows; ++r) out((o * rows + r) * inner + in) = vout(r);
    }
  }
  std::vector<Subsystem> subs = subsystems_;
  subs[i].dim = rows;
  return JointState(std::move(subs), std::move(out));
}

JointState JointState::project(const std::string& label, const FockVector& bra) const {
  const int i = index_of(label);
  const int d = subsystems_[i].dim;
  if (bra.size() != d) throw InvalidParameter("bra size does not match " + label);

  Eigen::Index inner = 1, outer = 1;
  for (std::size_t j = i + 1; j < subsystems_.size(); ++j) inner *= subsystems_[j].dim;
  for (int j = 0; j < i; ++j) outer *= subsystems_[j].dim;

  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(outer * inner);
  for (Eigen::Index o = 0; o < outer; ++o) {
    for (Eigen::Index in = 0; in < inner; ++in) {
      cd acc = 0.0;
      for (int c = 0; c < d; ++c) acc += std::conj(bra(c)) * amplitudes_((o * d + c) * inner + in);
      out(o * inner + in) = acc;
    }
  }
  std::vector<Subsystem> subs;
  for (std::size_t j = 0; j < subsystems_.size(); ++j) {
    if (static_cast<int>(j) != i) subs.push_back(subsystems_[j]);
  }
  return JointState(std::move(subs), std::move(out));
}

JointState JointState::split(const std::string& label, const std::string& env_label,
                             const Eigen::MatrixXcd& isometry, int dim_out, int dim_env) const {
  if (isometry.rows() != static_cast<Eigen::Index>(dim_out) * dim_env) {
    throw InvalidParameter("isometry rows do not factor as dim_out * dim_env");
  }
  JointState widened = apply(label, isometry);
  // Reinterpret the widened index r = n_out * dim_env + n_env as two
  // subsystems; the row-major layout already matches.
  const int i = widened.index_of(label);
  std::vector<Subsystem> subs = widened.subsystems_;
  subs[i].dim = dim_out;
  subs.insert(subs.begin() + i + 1, Subsystem{env_label, dim_env});
  return JointState(std::move(subs), std::move(widened.amplitudes_));
}

Eigen::MatrixXcd JointState::reduced_density(const std::vector<std::string>& keep) const {
  std::vector<int> keep_pos;
  keep_pos.reserve(keep.size());
  for (const auto& l : keep) keep_pos.push_back(index_of(l));

  const std::size_t m = subsystems_.size();
  std::vector<Eigen::Index> stride(m, 1);
  for (std::size_t j = m; j-- > 1;) stride[j - 1] = stride[j] * subsystems_[j].dim;

  Eigen::Index dim_keep = 1;
  for (int p : keep_pos) dim_keep *= subsystems_[p].dim;
  Eigen::Index dim_rest = amplitudes_.size() / dim_keep;

  std::vector<bool> kept(m, false);
  for (int p : keep_pos) kept[p] = true;

  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim_keep, dim_rest);
  std::vector<int> digits(m);
  for (Eigen::Index g = 0; g < amplitudes_.size(); ++g) {
    Eigen::Index rem = g;
    for (std::size_t j = 0; j < m; ++j) {
      digits[j] = static_cast<int>(rem / stride[j]);
      rem %= stride[j];
    }
    Eigen::Index ki = 0;
    for (int p : keep_pos) ki = ki * subsystems_[p].dim + digits[p];
    Eigen::Index ri = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (!kept[j]) ri = ri * subsystems_[j].dim + digits[j];
    }
    mat(ki, ri) = amplitudes_(g);
  }
  return mat * mat.adjoint();
}

JointState JointState::product(const JointState& a, const JointState& b) {
  std::vector<Subsystem> subs = a.subsystems_;
  subs.insert(subs.end(), b.subsystems_.begin(), b.subsystems_.end());
  return JointState(std::move(subs), kron_vec(a.amplitudes_, b.amplitudes_));
}

JointState apply_loss(const JointState& state, const std::string& mode_label,
                      const std::string& env_label, double t, int dim_out, int dim_env) {
  const int d = state.dim_of(mode_label);
  return state.split(mode_label, env_label, loss_isometry(d, dim_out, dim_env, t), dim_out,
                     dim_env);
}

namespace {

// One sender arm: qubit entangled with the transmitted mode and its loss
// environment, plus the branch coherent vectors needed downstream.
struct ArmBuild {
  JointState state;
  FockVector u0, u1;  // transmitted-mode branches, at the mode dimension
  FockVector v0, v1;  // environment branches
  double u = 0.0;     // |<u1|u0>|
  double v = 0.0;     // |<v1|v0>|
};

ArmBuild build_arm(double q0, const std::array<double, 2>& phases, double alpha, double theta,
                   double t, int dim, const std::string& qubit_label,
                   const std::string& mode_label, const std::string& env_label) {
  if (!(q0 > 0.0 && q0 < 1.0)) throw InvalidParameter("prior q0 must lie in (0,1)");
  if (alpha < 0.0) throw InvalidParameter("pulse amplitude alpha must be >= 0");
  if (!(t > 0.0 && t < 1.0)) throw InvalidParameter("transmittance must lie in (0,1)");

  const double st = std::sqrt(t), sr = std::sqrt(1.0 - t);
  const int dim_in = (dim > 0) ? dim : coherent_dim(alpha);
  const int dim_out = (dim > 0) ? dim : coherent_dim(st * alpha);
  const int dim_env = (dim > 0) ? dim : coherent_dim(sr * alpha);

  Eigen::VectorXcd qubit(2);
  qubit << std::sqrt(q0) * std::exp(kI * phases[0]),
      std::sqrt(1.0 - q0) * std::exp(kI * phases[1]);
  Eigen::VectorXcd joint = kron_vec(qubit, coherent(alpha, dim_in));
  joint = conditional_rotation(theta, dim_in) * joint;

  JointState st_joint({{qubit_label, 2}, {mode_label, dim_in}}, std::move(joint));
  JointState lossy = apply_loss(st_joint, mode_label, env_label, t, dim_out, dim_env);

  const cd a0 = alpha * std::exp(kI * theta / 2.0);
  const cd a1 = alpha * std::exp(-kI * theta / 2.0);
  ArmBuild out{std::move(lossy),
               coherent(st * a0, dim_out),
               coherent(st * a1, dim_out),
               coherent(sr * a0, dim_env),
               coherent(sr * a1, dim_env),
               0.0,
               0.0};
  out.u = std::abs(out.u1.dot(out.u0));
  out.v = std::abs(out.v1.dot(out.v0));
  return out;
}

}  // namespace

JointState build_p2p_state(const P2pParams& p, int dim) {
  return build_arm(p.q0, p.theta_phases, p.alpha, p.theta, p.t, dim, "A", "b", "E").state;
}

double dephasing_equivalence_check(const P2pParams& p, int dim) {
  ArmBuild arm = build_arm(p.q0, p.theta_phases, p.alpha, p.theta, p.t, dim, "A", "b", "E");
  const Eigen::MatrixXcd rho = arm.state.reduced_density({"A", "b"});

  // |psi'> with the residual environment phase 2 phi = arg<v1|v0> folded
  // into the qubit branches.
  const cd sigma_v = arm.v1.dot(arm.v0);
  const double phi = std::arg(sigma_v) / 2.0;
  const double v = std::abs(sigma_v);
  Eigen::VectorXcd qubit(2);
  qubit << std::sqrt(p.q0) * std::exp(kI * (p.theta_phases[0] + phi)),
      std::sqrt(1.0 - p.q0) * std::exp(kI * (p.theta_phases[1] - phi));
  const Eigen::Index d = arm.u0.size();
  Eigen::VectorXcd psi_p(2 * d);
  psi_p.segment(0, d) = qubit(0) * arm.u0;
  psi_p.segment(d, d) = qubit(1) * arm.u1;

  Eigen::MatrixXcd pure = psi_p * psi_p.adjoint();
  Eigen::VectorXcd zdiag(2 * d);
  zdiag.segment(0, d).setConstant(1.0);
  zdiag.segment(d, d).setConstant(-1.0);
  const Eigen::MatrixXcd flipped = zdiag.asDiagonal() * pure * zdiag.asDiagonal();
  const Eigen::MatrixXcd dephased = 0.5 * (1.0 + v) * pure + 0.5 * (1.0 - v) * flipped;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho - dephased);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

std::pair<FockVector, FockVector> dual_pair(const FockVector& u0, const FockVector& u1) {
  if (u0.size() != u1.size()) throw InvalidParameter("dual_pair inputs must share a dimension");
  const cd g01 = u0.dot(u1);  // <u0|u1>
  if (std::abs(g01) > 1.0 - 1e-6) {
    throw IllConditioned("overlap " + std::to_string(std::abs(g01)) + " too close to 1");
  }
  Eigen::Matrix2cd gram;
  gram << u0.dot(u0), g01, u1.dot(u0), u1.dot(u1);
  const Eigen::Matrix2cd ginv = gram.inverse();
  // dual_i = sum_j conj(Ginv_ij) u_j gives <dual_i|u_k> = delta_ik.
  FockVector d0 = std::conj(ginv(0, 0)) * u0 + std::conj(ginv(0, 1)) * u1;
  FockVector d1 = std::conj(ginv(1, 0)) * u0 + std::conj(ginv(1, 1)) * u1;
  return {std::move(d0), std::move(d1)};
}

double MeasurementSet::completeness_max_eigenvalue() const {
  if (outcomes.empty()) return 0.0;
  Eigen::Index rows = 0;
  const Eigen::Index cols = outcomes.front().op.cols();
  for (const auto& o : outcomes) {
    if (o.op.cols() != cols) throw InvalidParameter("measurement operators on different spaces");
    rows += o.op.rows();
  }
  Eigen::MatrixXcd stacked(rows, cols);
  Eigen::Index at = 0;
  for (const auto& o : outcomes) {
    stacked.middleRows(at, o.op.rows()) = o.op;
    at += o.op.rows();
  }
  // Nonzero spectrum of sum op^dag op equals that of the row Gram matrix.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(stacked * stacked.adjoint());
  return es.eigenvalues().maxCoeff();
}

MeasurementSet build_p2p_measurement(const FockVector& u0, const FockVector& u1) {
  auto [d0, d1] = dual_pair(u0, u1);
  const double s = std::abs(u1.dot(u0));
  Eigen::MatrixXcd n(2, u0.size());
  n.row(0) = std::sqrt(1.0 - s) * d0.adjoint();
  n.row(1) = std::sqrt(1.0 - s) * d1.adjoint();
  MeasurementSet ms;
  ms.outcomes.push_back(MeasurementOutcome{"N", std::move(n), false, {}});
  return ms;
}

SimulationReport simulate_p2p(const P2pParams& p, int dim) {
  ArmBuild arm = build_arm(p.q0, p.theta_phases, p.alpha, p.theta, p.t, dim, "A", "b", "E");
  MeasurementSet ms = build_p2p_measurement(arm.u0, arm.u1);

  SimulationReport rep;
  rep.u_received = arm.u;
  rep.v_dephasing = arm.v;

  const JointState post = arm.state.apply("b", ms.outcomes.front().op);
  const double prob = post.norm() * post.norm();
  Eigen::MatrixXcd rho = post.reduced_density({"A", "b"});
  rho /= prob;

  OutcomeReport out;
  out.label = ms.outcomes.front().label;
  out.p = prob;
  out.state = classify(rho, 1e-8);
  const auto [std_form, corr] = to_standard_form(out.state);
  out.z = std_form.z;
  out.x = std_form.x;
  out.z_prime = std::sqrt(std::max(0.0, 1.0 - out.x * out.x));
  out.fidelity = singlet_fraction(std_form);
  rep.outcomes.push_back(out);

  rep.total_success = prob;
  rep.avg_fidelity = out.fidelity;
  const double gamma = (1.0 - p.t) / p.t;
  rep.delta_ps = std::abs(rep.total_success - (1.0 - rep.u_received));
  rep.delta_f = std::abs(rep.avg_fidelity - (1.0 + std::pow(rep.u_received, gamma)) / 2.0);
  return rep;
}

ThreePartyState build_three_party_state(const ArmParams& a, const ArmParams& b, int dim) {
  ThreePartyState st{
      build_arm(a.q0, a.theta_phases, a.alpha, a.theta, a.t, dim, "A", "c_a", "E_a").state,
      build_arm(b.q0, b.theta_phases, b.alpha, b.theta, b.t, dim, "B", "c_b", "E_b").state};
  return st;
}

MeasurementSet build_claire_measurement(const FockVector& u0a, const FockVector& u1a,
                                        const FockVector& u0b, const FockVector& u1b) {
  auto [da0, da1] = dual_pair(u0a, u1a);
  auto [db0, db1] = dual_pair(u0b, u1b);
  const cd sigma_a = u1a.dot(u0a), sigma_b = u1b.dot(u0b);
  const double sa = std::abs(sigma_a), sb = std::abs(sigma_b);
  const double s = std::sqrt(sa * sb);
  // Complex overlap phases fold into the dual combinations exactly like the
  // cat-state phases 2 phi = arg<u1|u0>.
  const double pa = std::arg(sigma_a) / 2.0, pb = std::arg(sigma_b) / 2.0;
  const cd fe = std::exp(-kI * (pa + pb));  // even-parity fold
  const cd fo = std::exp(-kI * (pa - pb));  // odd-parity fold

  // The "+" combinations carry (1-s)^2/2 and the "-" combinations
  // (1-s^2)/2; this assignment is what saturates the completeness bound.
  const double cp = std::sqrt((1.0 - s) * (1.0 - s) / 2.0);
  const double cm = std::sqrt((1.0 - s * s) / 2.0);

  const FockVector* da[2] = {&da0, &da1};
  const FockVector* db[2] = {&db0, &db1};
  auto make = [&](const std::string& label, double scale, cd fold, int i0, int j0, int i1, int j1,
                  double sign, bool flip) {
    MeasurementOutcome o;
    o.label = label;
    o.flip = flip;
    o.terms = {{scale * fold, i0, j0}, {scale * sign * std::conj(fold), i1, j1}};
    Eigen::VectorXcd row = scale * fold * kron_vec(*da[i0], *db[j0]) +
                           scale * sign * std::conj(fold) * kron_vec(*da[i1], *db[j1]);
    o.op = row.adjoint();
    return o;
  };

  MeasurementSet ms;
  ms.outcomes.push_back(make("O1", cp, fe, 0, 0, 1, 1, +1.0, false));
  ms.outcomes.push_back(make("O2", cm, fe, 0, 0, 1, 1, -1.0, false));
  ms.outcomes.push_back(make("O3", cp, fo, 0, 1, 1, 0, +1.0, true));
  ms.outcomes.push_back(make("O4", cm, fo, 0, 1, 1, 0, -1.0, true));

  if (std::abs(sa - sb) > 1e-9) {
    // Unequal overlaps: the closed forms no longer saturate; bisect a
    // common rescale of all four outcomes onto the completeness boundary.
    const double lam = ms.completeness_max_eigenvalue();
    double lo = 0.0, hi = 2.0 / std::sqrt(lam);
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      (mid * mid * lam <= 1.0 ? lo : hi) = mid;
    }
    for (auto& o : ms.outcomes) {
      o.op *= lo;
      for (auto& t : o.terms) std::get<0>(t) *= lo;
    }
  }
  return ms;
}

SimulationReport simulate_three_party(const ArmParams& a, const ArmParams& b, int dim) {
  ArmBuild arm_a = build_arm(a.q0, a.theta_phases, a.alpha, a.theta, a.t, dim, "A", "c_a", "E_a");
  ArmBuild arm_b = build_arm(b.q0, b.theta_phases, b.alpha, b.theta, b.t, dim, "B", "c_b", "E_b");
  MeasurementSet ms = build_claire_measurement(arm_a.u0, arm_a.u1, arm_b.u0, arm_b.u1);

  auto [da0, da1] = dual_pair(arm_a.u0, arm_a.u1);
  auto [db0, db1] = dual_pair(arm_b.u0, arm_b.u1);
  const FockVector* da[2] = {&da0, &da1};
  const FockVector* db[2] = {&db0, &db1};

  // Projected arm remainders, reshaped qubit x environment.
  auto arm_matrix = [](const JointState& st, const std::string& mode, const FockVector& bra,
                       const std::string& env) {
    const JointState proj = st.project(mode, bra);
    const int de = proj.dim_of(env);
    Eigen::MatrixXcd m(2, de);
    for (int j = 0; j < 2; ++j)
      for (int e = 0; e < de; ++e) m(j, e) = proj.amplitudes()(j * de + e);
    return m;
  };
  Eigen::MatrixXcd ma[2], mb[2];
  for (int i = 0; i < 2; ++i) {
    ma[i] = arm_matrix(arm_a.state, "c_a", *da[i], "E_a");
    mb[i] = arm_matrix(arm_b.state, "c_b", *db[i], "E_b");
  }

  Eigen::Matrix2cd x_gate;
  x_gate << 0, 1, 1, 0;

  SimulationReport rep;
  rep.u_received = std::sqrt(arm_a.u * arm_b.u);
  rep.v_dephasing = arm_a.v * arm_b.v;

  for (const auto& oc : ms.outcomes) {
    // rho_AB = Tr_{Ea Eb} O |xi x zeta><xi x zeta| O^dag assembled from
    // the per-arm environment cross-Gram blocks.
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (const auto& [ct, it, jt] : oc.terms) {
      for (const auto& [cs, is, js] : oc.terms) {
        const Eigen::Matrix2cd ca = ma[it] * ma[is].adjoint();
        const Eigen::Matrix2cd cb = mb[jt] * mb[js].adjoint();
        rho += ct * std::conj(cs) * kron22(ca, cb);
      }
    }
    const double p = rho.trace().real();
    OutcomeReport out;
    out.label = oc.label;
    out.p = p;
    if (p > 1e-14) {
      rho /= p;
      if (oc.flip) {
        const Eigen::Matrix4cd ix = kron22(Eigen::Matrix2cd::Identity(), x_gate);
        rho = ix * rho * ix;
      }
      out.state = classify(rho, 1e-8);
      const auto [std_form, corr] = to_standard_form(out.state);
      out.z = std_form.z;
      out.x = std_form.x;
      out.z_prime = std::sqrt(std::max(0.0, 1.0 - out.x * out.x));
      out.fidelity = singlet_fraction(std_form);
    }
    rep.outcomes.push_back(out);
    rep.total_success += p;
    rep.avg_fidelity += p * out.fidelity;
  }
  if (rep.total_success > 0.0) rep.avg_fidelity /= rep.total_success;

  const double gamma = (1.0 - a.t) / a.t + (1.0 - b.t) / b.t;
  rep.delta_ps = std::abs(rep.total_success - (1.0 - rep.u_received));
  rep.delta_f = std::abs(rep.avg_fidelity - (1.0 + std::pow(rep.u_received, gamma)) / 2.0);
  return rep;
}

}  // namespace seet
