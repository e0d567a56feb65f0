#include "gaussclone/network.hpp"

#include <algorithm>
#include <cmath>

#include "gaussclone/errors.hpp"

namespace gaussclone {

ModeOperator ModeOperator::input(int index, int num_inputs) {
  ModeOperator op = zero(num_inputs);
  op.annihilation.at(static_cast<std::size_t>(index)) = 1.0;
  return op;
}

ModeOperator ModeOperator::zero(int num_inputs) {
  const auto n = static_cast<std::size_t>(num_inputs);
  return {std::vector<Complex>(n), std::vector<Complex>(n)};
}

ModeOperator ModeOperator::dagger() const {
  ModeOperator out = zero(num_inputs());
  for (std::size_t k = 0; k < annihilation.size(); ++k) {
    out.annihilation[k] = std::conj(creation[k]);
    out.creation[k] = std::conj(annihilation[k]);
  }
  return out;
}

ModeOperator& ModeOperator::operator+=(const ModeOperator& other) {
  if (other.num_inputs() != num_inputs()) throw PreconditionError("mode operators act on different input sets");
  for (std::size_t k = 0; k < annihilation.size(); ++k) {
    annihilation[k] += other.annihilation[k];
    creation[k] += other.creation[k];
  }
  return *this;
}

ModeOperator operator*(Complex c, ModeOperator a) {
  for (auto& v : a.annihilation) v *= c;
  for (auto& v : a.creation) v *= c;
  return a;
}

LinearNetwork::LinearNetwork(int num_inputs) : num_inputs_(num_inputs) {
  if (num_inputs < 1) throw PreconditionError("network needs at least one input");
  modes_.reserve(static_cast<std::size_t>(num_inputs));
  for (int k = 0; k < num_inputs; ++k) modes_.push_back(ModeOperator::input(k, num_inputs));
}

void LinearNetwork::beam_splitter(int i, int j, double t, double r) {
  const ModeOperator ai = mode(i);
  const ModeOperator aj = mode(j);
  set_mode(i, Complex(t) * ai + Complex(-r) * aj);
  set_mode(j, Complex(r) * ai + Complex(t) * aj);
}

void LinearNetwork::amplifier(int signal, int idler, double gain) {
  if (!(gain >= 1.0)) throw PreconditionError("amplifier gain must be >= 1");
  const double h = std::sqrt(gain * gain - 1.0);
  const ModeOperator as = mode(signal);
  const ModeOperator ai = mode(idler);
  set_mode(signal, Complex(gain) * as + Complex(h) * ai.dagger());
  set_mode(idler, Complex(gain) * ai + Complex(h) * as.dagger());
}

void LinearNetwork::interferometer(const std::vector<int>& modes, const ComplexMatrix& u) {
  const auto m = static_cast<Eigen::Index>(modes.size());
  if (u.rows() != m || u.cols() != m) throw PreconditionError("interferometer matrix does not match mode list");
  std::vector<ModeOperator> in;
  in.reserve(modes.size());
  for (int k : modes) in.push_back(mode(k));
  for (Eigen::Index j = 0; j < m; ++j) {
    ModeOperator out = ModeOperator::zero(num_inputs_);
    for (Eigen::Index k = 0; k < m; ++k) out += u(j, k) * in[static_cast<std::size_t>(k)];
    set_mode(modes[static_cast<std::size_t>(j)], std::move(out));
  }
}

Matrix quadrature_rows(const ModeOperator& op) {
  // a_out = sum (mu a + nu a^dag) = sum [A x + B p] / sqrt2 with A = mu + nu,
  // B = i (mu - nu); hence x_out = Re A x + Re B p, p_out = Im A x + Im B p.
  const int n = op.num_inputs();
  Matrix rows = Matrix::Zero(2, 2 * n);
  for (int k = 0; k < n; ++k) {
    const Complex mu = op.annihilation[static_cast<std::size_t>(k)];
    const Complex nu = op.creation[static_cast<std::size_t>(k)];
    const Complex A = mu + nu;
    const Complex B = Complex(0, 1) * (mu - nu);
    rows(0, k) = A.real();
    rows(0, n + k) = B.real();
    rows(1, k) = A.imag();
    rows(1, n + k) = B.imag();
  }
  return rows;
}

Matrix LinearNetwork::quadrature_map(const std::vector<int>& outputs) const {
  const auto m = static_cast<Eigen::Index>(outputs.size());
  Matrix T(2 * m, 2 * num_inputs_);
  for (Eigen::Index j = 0; j < m; ++j) {
    const Matrix rows = quadrature_rows(mode(outputs[static_cast<std::size_t>(j)]));
    T.row(j) = rows.row(0);
    T.row(m + j) = rows.row(1);
  }
  return T;
}

GaussianChannel LinearNetwork::channel(const std::vector<int>& outputs, const std::vector<int>& signal) const {
  const Matrix T = quadrature_map(outputs);
  const auto m_out = static_cast<Eigen::Index>(outputs.size());
  const auto m_in = static_cast<Eigen::Index>(signal.size());
  const int n = num_inputs_;

  std::vector<int> ancilla;
  for (int k = 0; k < n; ++k) {
    if (std::find(signal.begin(), signal.end(), k) == signal.end()) ancilla.push_back(k);
  }
  const auto m_anc = static_cast<Eigen::Index>(ancilla.size());

  Matrix S(2 * m_out, 2 * m_in);
  for (Eigen::Index k = 0; k < m_in; ++k) {
    S.col(k) = T.col(signal[static_cast<std::size_t>(k)]);
    S.col(m_in + k) = T.col(n + signal[static_cast<std::size_t>(k)]);
  }
  Matrix A(2 * m_out, 2 * m_anc);
  for (Eigen::Index k = 0; k < m_anc; ++k) {
    A.col(k) = T.col(ancilla[static_cast<std::size_t>(k)]);
    A.col(m_anc + k) = T.col(n + ancilla[static_cast<std::size_t>(k)]);
  }
  // Vacuum ancillas have identity covariance.
  Matrix G = A * A.transpose();
  return {static_cast<int>(m_in), static_cast<int>(m_out), std::move(S), std::move(G)};
}

}  // namespace gaussclone
