#include "gaussclone/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gaussclone/errors.hpp"
#include "off_surface.hpp"
#include "gaussclone/network.hpp"

namespace gaussclone {

namespace {

void require_cloner_surface(const NoiseProfile& profile, double tol) {
  if (profile.excess() == 0) throw PreconditionError("M = N: the identity needs no amplifier");
  if (!on_surface(profile, tol)) {
    throw PreconditionError(detail::off_surface_message(profile));
  }
  if (!(profile.total_noise() > 0.0)) throw PreconditionError("total noise must be positive when M > N");
}

Vector sqrt_noises(const NoiseProfile& profile) {
  Vector f(profile.m_out());
  for (int j = 0; j < profile.m_out(); ++j) f(j) = std::sqrt(profile.noise(j));
  return f;
}

Matrix block_diag2(const Matrix& b) {
  const auto m = b.rows();
  Matrix out = Matrix::Zero(2 * m, 2 * m);
  out.topLeftCorner(m, m) = b;
  out.bottomRightCorner(m, m) = b;
  return out;
}

// Orthogonalise `v` against the accepted columns twice (classical Gram-Schmidt
// with re-orthogonalisation).
// sqrt(1 - r^2) without cancellation near r = 1.
double transmission(double r) { return std::sqrt(std::max(0.0, (1.0 - r) * (1.0 + r))); }

Vector orthogonalize(Vector v, const std::vector<Vector>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vector& q : basis) v -= q.dot(v) * q;
  }
  return v;
}

}  // namespace

GainTransmittance gain_and_transmittance(const NoiseProfile& profile, double tol) {
  require_cloner_surface(profile, tol);
  const double n_tot = profile.total_noise();
  GainTransmittance out;
  out.gain = std::sqrt(1.0 + n_tot);
  out.transmittance = std::min(1.0, std::sqrt(profile.excess() / (n_tot * profile.n_in())));
  return out;
}

Matrix commutator_matrix(const NoiseProfile& profile) {
  const int m = profile.m_out();
  const Vector f = sqrt_noises(profile);
  return Matrix::Identity(m, m) - Matrix::Constant(m, m, 1.0 / profile.n_in()) + f * f.transpose();
}

Matrix canonical_kappa(const NoiseProfile& profile) {
  const int m = profile.m_out();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(commutator_matrix(profile));
  // Ascending order: drop index 0 (the null direction), read the rest backwards.
  Matrix kappa(m, m - 1);
  for (int c = 0; c < m - 1; ++c) {
    const int idx = m - 1 - c;
    Vector col = solver.eigenvectors().col(idx) * std::sqrt(std::max(0.0, solver.eigenvalues()(idx)));
    Eigen::Index arg = 0;
    const double peak = col.cwiseAbs().maxCoeff();
    for (Eigen::Index r = 0; r < col.size(); ++r) {
      if (std::abs(col(r)) >= peak - 1e-12 * std::max(1.0, peak)) {
        arg = r;
        break;
      }
    }
    if (col(arg) < 0.0) col = -col;
    kappa.col(c) = col;
  }
  return kappa;
}

AmplifierCircuit build_interferometer(const NoiseProfile& profile, double tol) {
  const auto [g, t_eq] = gain_and_transmittance(profile, tol);
  const int m = profile.m_out();
  const double n_tot = profile.total_noise();
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(profile.n_in()));

  // Column M carries the amplifier output so that the idler noise lands as
  // sqrt(n_j) in clone j.
  const Vector v_last = sqrt_noises(profile) / std::sqrt(n_tot);

  // Column 1 carries the reflected signal: v_j1 r sqrt(N) + v_jM g t sqrt(N) = 1.
  Vector w = Vector::Constant(m, inv_sqrt_n) - g * t_eq * v_last;
  w -= v_last.dot(w) * v_last;
  const double r = w.norm();

  AmplifierCircuit circ;
  circ.g = g;
  std::vector<Vector> basis{v_last};
  Matrix V = Matrix::Zero(m, m);
  V.col(m - 1) = v_last;
  int next_slot = 0;
  if (r > 1e-12) {
    circ.t = transmission(r);
    V.col(0) = w / r;
    basis.push_back(V.col(0));
    next_slot = 1;
  } else {
    // Symmetric point t = 1: b_1 carries no signal and is a plain vacuum port.
    circ.t = 1.0;
  }

  for (int e = 0; e < m && next_slot < m - 1; ++e) {
    Vector cand = orthogonalize(Vector::Unit(m, e), basis);
    const double norm = cand.norm();
    if (norm < 1e-8) continue;
    cand /= norm;
    V.col(next_slot++) = cand;
    basis.push_back(cand);
  }
  if (next_slot != m - 1) throw SolverError("unitary completion failed: canonical basis exhausted");

  const double unitarity = max_abs(Matrix(V.transpose() * V - Matrix::Identity(m, m)));
  if (unitarity > 1e-10) {
    throw SolverError("interferometer is not unitary (max |V^T V - I| = " + std::to_string(unitarity) +
                      "); the profile is inconsistent with the noise trade-off");
  }
  circ.V = std::move(V);
  circ.kappa = canonical_kappa(profile);
  return circ;
}

Matrix clone_map(int n_in, int m_out) {
  Matrix S = Matrix::Zero(2 * m_out, 2);
  const double v = 1.0 / std::sqrt(static_cast<double>(n_in));
  S.block(0, 0, m_out, 1).setConstant(v);
  S.block(m_out, 1, m_out, 1).setConstant(v);
  return S;
}

Matrix optimal_noise_matrix(const NoiseProfile& profile) {
  const int m = profile.m_out();
  const Vector f = sqrt_noises(profile);
  const Matrix block = Matrix::Identity(m, m) + 2.0 * f * f.transpose() -
                       Matrix::Constant(m, m, 1.0 / profile.n_in());
  return block_diag2(block);
}

Matrix optimal_clone_covariance(const NoiseProfile& profile) {
  const int m = profile.m_out();
  const Vector f = sqrt_noises(profile);
  return block_diag2(Matrix::Identity(m, m) + 2.0 * f * f.transpose());
}

GaussianChannel optimal_channel(const NoiseProfile& profile) {
  return {1, profile.m_out(), clone_map(profile.n_in(), profile.m_out()), optimal_noise_matrix(profile)};
}

namespace {

// Inputs: 0 = signal a, 1..M-1 = vacua b_k, M = amplifier idler c.
// Returns the network and the clone mode indices.
std::pair<LinearNetwork, std::vector<int>> amplifier_network(const AmplifierCircuit& circuit, int m) {
  if (circuit.V.rows() != m || circuit.V.cols() != m) throw PreconditionError("V does not match the clone count");
  LinearNetwork net(m + 1);
  const double r = transmission(circuit.t);
  net.beam_splitter(0, 1, circuit.t, r);
  net.amplifier(0, m, circuit.g);
  std::vector<int> ports;
  for (int k = 1; k < m; ++k) ports.push_back(k);
  ports.push_back(0);
  net.interferometer(ports, circuit.V.cast<Complex>());
  return {std::move(net), ports};
}

}  // namespace

GaussianChannel channel_from_amplifier(const AmplifierCircuit& circuit, const NoiseProfile& profile) {
  const auto [net, clones] = amplifier_network(circuit, profile.m_out());
  return net.channel(clones, {0});
}

Matrix propagated_kappa(const AmplifierCircuit& circuit, const NoiseProfile& profile) {
  const int m = profile.m_out();
  const auto [net, clones] = amplifier_network(circuit, m);
  Matrix kappa(m, m - 1);
  for (int j = 0; j < m; ++j) {
    const ModeOperator& op = net.mode(clones[static_cast<std::size_t>(j)]);
    for (int k = 1; k < m; ++k) kappa(j, k - 1) = op.annihilation[static_cast<std::size_t>(k)].real();
  }
  return kappa;
}

GaussianChannel signal_collector(int n_in) {
  if (n_in < 1) throw PreconditionError("signal collector needs N >= 1");
  LinearNetwork net(n_in);
  // After step k mode 0 holds sqrt(k+1) alpha for identical inputs.
  for (int k = 1; k < n_in; ++k) {
    const double t = std::sqrt(static_cast<double>(k) / (k + 1));
    const double r = std::sqrt(1.0 / (k + 1));
    net.beam_splitter(k, 0, t, r);
  }
  std::vector<int> signal(static_cast<std::size_t>(n_in));
  std::iota(signal.begin(), signal.end(), 0);
  return net.channel({0}, signal);
}

GaussianChannel cloner_channel(const AmplifierCircuit& circuit, const NoiseProfile& profile) {
  return compose(channel_from_amplifier(circuit, profile), signal_collector(profile.n_in()));
}

const char* to_string(PhaseConvention c) {
  return c == PhaseConvention::Direct ? "direct" : "conjugate";
}

PhaseConvention phase_convention_from_string(const std::string& s) {
  if (s == "direct") return PhaseConvention::Direct;
  if (s == "conjugate") return PhaseConvention::Conjugate;
  throw PreconditionError("unknown phase convention '" + s + "'");
}

FeedforwardCircuit feedforward_params(const NoiseProfile& profile, PhaseConvention phase, double tol) {
  if (!on_surface(profile, tol)) {
    throw PreconditionError(detail::off_surface_message(profile));
  }
  const int m = profile.m_out();
  const int n = profile.n_in();
  const double d = profile.excess();
  const double n_tot = profile.total_noise();
  const double denom = (2.0 + n_tot) * n - m;
  if (!(denom > 0.0)) throw PreconditionError("(2 + n_tot) N - M must be positive");

  FeedforwardCircuit circ;
  circ.phase = phase;
  circ.r_tap = std::sqrt(d / ((1.0 + n_tot) * n));
  for (double nj : profile.noises()) circ.gains.push_back(std::sqrt(nj));

  // tau_j = r_j prod_{k<j} t_k is the amplitude reaching clone j. Each r_j is
  // taken as tau_j over the norm of the remaining tail so that a splitter that
  // passes nothing on gets r = 1 exactly.
  const double root_denom = std::sqrt(denom);
  std::vector<double> tau(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double v = (std::sqrt(1.0 + n_tot) - std::sqrt(d * profile.noise(j))) / root_denom;
    if (v < -tol) {
      throw PreconditionError("splitter amplitude for clone " + std::to_string(j + 1) +
                              " is negative; the profile is not on the optimal branch");
    }
    tau[static_cast<std::size_t>(j)] = std::max(0.0, v);
  }
  std::vector<double> tail(static_cast<std::size_t>(m) + 1, 0.0);
  for (int j = m - 1; j >= 0; --j) {
    const auto k = static_cast<std::size_t>(j);
    tail[k] = std::hypot(tail[k + 1], tau[k]);
  }
  for (int j = 0; j + 1 < m; ++j) {
    const auto k = static_cast<std::size_t>(j);
    circ.reflectances.push_back(tail[k] > 0.0 ? std::min(1.0, tau[k] / tail[k]) : 0.0);
  }
  return circ;
}

std::vector<double> splitter_amplitudes(std::span<const double> reflectances) {
  std::vector<double> tau;
  tau.reserve(reflectances.size() + 1);
  double remaining = 1.0;
  for (double r : reflectances) {
    tau.push_back(remaining * r);
    remaining *= transmission(r);
  }
  tau.push_back(remaining);
  return tau;
}

namespace {

// Inputs: 0 = signal a, 1 = tap vacuum b, 2 = heterodyne vacuum c,
// 3..M+1 = splitter vacua e_1..e_{M-1}.
std::pair<LinearNetwork, std::vector<int>> feedforward_network(const FeedforwardCircuit& circuit, int m) {
  if (static_cast<int>(circuit.gains.size()) != m || static_cast<int>(circuit.reflectances.size()) != m - 1) {
    throw PreconditionError("feedforward parameters do not match the clone count");
  }
  LinearNetwork net(m + 2);
  const double r_tap = circuit.r_tap;
  const double t_tap = transmission(r_tap);
  net.beam_splitter(0, 1, t_tap, r_tap);
  ModeOperator o = net.mode(1) + net.mode(2).dagger();
  if (circuit.phase == PhaseConvention::Conjugate) o = o.dagger();

  std::vector<int> clones;
  for (int k = 0; k + 1 < m; ++k) {
    const double r = circuit.reflectances[static_cast<std::size_t>(k)];
    const int port = 3 + k;
    net.beam_splitter(0, port, transmission(r), r);
    clones.push_back(port);
  }
  clones.push_back(0);

  for (int j = 0; j < m; ++j) {
    const int port = clones[static_cast<std::size_t>(j)];
    net.set_mode(port, net.mode(port) + Complex(circuit.gains[static_cast<std::size_t>(j)]) * o);
  }
  return {std::move(net), clones};
}

}  // namespace

GaussianChannel channel_from_feedforward(const FeedforwardCircuit& circuit, const NoiseProfile& profile) {
  const auto [net, clones] = feedforward_network(circuit, profile.m_out());
  return net.channel(clones, {0});
}

std::vector<Complex> feedforward_clone_means(const FeedforwardCircuit& circuit, const NoiseProfile& profile,
                                             Complex alpha) {
  const int m = profile.m_out();
  const double r_tap = circuit.r_tap;
  const double t_tap = transmission(r_tap);
  const Complex signal = std::sqrt(static_cast<double>(profile.n_in())) * alpha;
  Complex o = r_tap * signal;
  if (circuit.phase == PhaseConvention::Conjugate) o = std::conj(o);
  const std::vector<double> tau = splitter_amplitudes(circuit.reflectances);
  std::vector<Complex> means(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const auto k = static_cast<std::size_t>(j);
    means[k] = tau[k] * t_tap * signal + circuit.gains[k] * o;
  }
  return means;
}

double EquivalenceReport::max_discrepancy() const {
  return std::max({mean_discrepancy, cov_discrepancy, channel_discrepancy});
}

EquivalenceReport scheme_equivalence_check(const NoiseProfile& profile, PhaseConvention phase, Complex probe) {
  const AmplifierCircuit amp = build_interferometer(profile);
  const FeedforwardCircuit ff = feedforward_params(profile, phase);
  const GaussianChannel ch_amp = channel_from_amplifier(amp, profile);
  const GaussianChannel ch_ff = channel_from_feedforward(ff, profile);

  const GaussianState input = GaussianState::coherent(std::sqrt(static_cast<double>(profile.n_in())) * probe);
  const GaussianState out_amp = apply_channel(ch_amp, input);
  const GaussianState out_ff = apply_channel(ch_ff, input);

  EquivalenceReport rep;
  rep.mean_discrepancy = (out_amp.mean() - out_ff.mean()).cwiseAbs().maxCoeff();
  rep.cov_discrepancy = max_abs(Matrix(out_amp.cov() - out_ff.cov()));
  rep.channel_discrepancy =
      std::max(max_abs(Matrix(ch_amp.S() - ch_ff.S())), max_abs(Matrix(ch_amp.G() - ch_ff.G())));
  return rep;
}

}  // namespace gaussclone
