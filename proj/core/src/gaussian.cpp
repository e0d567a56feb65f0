#include "gaussclone/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gaussclone/errors.hpp"

namespace gaussclone {

Matrix symplectic_form(int modes) {
  Matrix J = Matrix::Zero(2 * modes, 2 * modes);
  J.topRightCorner(modes, modes) = Matrix::Identity(modes, modes);
  J.bottomLeftCorner(modes, modes) = -Matrix::Identity(modes, modes);
  return J;
}

Vector coherent_mean(std::span<const Complex> alphas) {
  const auto m = static_cast<Eigen::Index>(alphas.size());
  Vector mean(2 * m);
  for (Eigen::Index j = 0; j < m; ++j) {
    mean(j) = std::numbers::sqrt2 * alphas[j].real();
    mean(m + j) = std::numbers::sqrt2 * alphas[j].imag();
  }
  return mean;
}

Complex amplitude_from_quadratures(double x, double p) {
  return Complex(x, p) / std::numbers::sqrt2;
}

double min_hermitian_eigenvalue(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double min_symmetric_eigenvalue(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }
double max_abs(const ComplexMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

namespace {

void require_symmetric(const Matrix& m, const char* what) {
  const double scale = std::max(1.0, max_abs(m));
  if (max_abs(Matrix(m - m.transpose())) > kAlgebraicTol * scale) {
    throw PreconditionError(std::string(what) + " is not symmetric");
  }
}

}  // namespace

GaussianState::GaussianState(Vector mean, Matrix cov) : mean_(std::move(mean)), cov_(std::move(cov)) {
  if (mean_.size() % 2 != 0 || mean_.size() == 0) {
    throw PreconditionError("mean vector must have even, non-zero length");
  }
  if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
    throw PreconditionError("covariance dimension " + std::to_string(cov_.rows()) + "x" +
                            std::to_string(cov_.cols()) + " does not match mean length " +
                            std::to_string(mean_.size()));
  }
  require_symmetric(cov_, "covariance matrix");
}

GaussianState GaussianState::vacuum(int modes) {
  if (modes < 1) throw PreconditionError("vacuum needs at least one mode");
  return {Vector::Zero(2 * modes), Matrix::Identity(2 * modes, 2 * modes)};
}

GaussianState GaussianState::coherent(std::span<const Complex> alphas) {
  if (alphas.empty()) throw PreconditionError("coherent state needs at least one mode");
  const auto dim = static_cast<Eigen::Index>(2 * alphas.size());
  return {coherent_mean(alphas), Matrix::Identity(dim, dim)};
}

double GaussianState::physicality_min_eigenvalue() const {
  const ComplexMatrix a = cov_.cast<Complex>() + Complex(0, 1) * symplectic_form(num_modes()).cast<Complex>();
  return min_hermitian_eigenvalue(a);
}

Complex GaussianState::amplitude(int j) const {
  if (j < 0 || j >= num_modes()) throw PreconditionError("mode index out of range");
  return amplitude_from_quadratures(mean_(j), mean_(num_modes() + j));
}

GaussianChannel::GaussianChannel(int m_in, int m_out, Matrix S, Matrix G)
    : m_in_(m_in), m_out_(m_out), S_(std::move(S)), G_(std::move(G)) {
  if (m_in_ < 1 || m_out_ < 1) throw PreconditionError("channel needs at least one input and output mode");
  if (S_.rows() != 2 * m_out_ || S_.cols() != 2 * m_in_) {
    throw PreconditionError("S must be 2*m_out x 2*m_in");
  }
  if (G_.rows() != 2 * m_out_ || G_.cols() != 2 * m_out_) {
    throw PreconditionError("G must be 2*m_out x 2*m_out");
  }
  require_symmetric(G_, "noise matrix G");
}

GaussianChannel GaussianChannel::identity(int modes) {
  return {modes, modes, Matrix::Identity(2 * modes, 2 * modes), Matrix::Zero(2 * modes, 2 * modes)};
}

Matrix GaussianChannel::K() const {
  return symplectic_form(m_out_) - S_ * symplectic_form(m_in_) * S_.transpose();
}

ComplexMatrix GaussianChannel::cp_matrix() const {
  return G_.cast<Complex>() + Complex(0, 1) * K().cast<Complex>();
}

GaussianState apply_channel(const GaussianChannel& ch, const GaussianState& st) {
  if (st.num_modes() != ch.m_in()) {
    throw PreconditionError("channel expects " + std::to_string(ch.m_in()) + " input modes, state has " +
                            std::to_string(st.num_modes()));
  }
  Matrix cov = ch.S() * st.cov() * ch.S().transpose() + ch.G();
  cov = 0.5 * (cov + cov.transpose()).eval();
  return {ch.S() * st.mean(), std::move(cov)};
}

GaussianChannel compose(const GaussianChannel& second, const GaussianChannel& first) {
  if (second.m_in() != first.m_out()) {
    throw PreconditionError("cannot compose: output modes of the first channel do not match the second");
  }
  Matrix G = second.S() * first.G() * second.S().transpose() + second.G();
  G = 0.5 * (G + G.transpose()).eval();
  return {first.m_in(), second.m_out(), second.S() * first.S(), std::move(G)};
}

double cp_min_eigenvalue(const GaussianChannel& ch) { return min_hermitian_eigenvalue(ch.cp_matrix()); }

CloneMarginal clone_marginal(const GaussianState& st, int j, double tol) {
  const int m = st.num_modes();
  if (j < 0 || j >= m) throw PreconditionError("clone index out of range");
  const double vx = st.cov()(j, j);
  const double vp = st.cov()(m + j, m + j);
  const double cross = st.cov()(j, m + j);
  const double scale = std::max(1.0, std::abs(vx));
  if (std::abs(vx - vp) > tol * scale || std::abs(cross) > tol * scale) {
    throw PreconditionError("mode " + std::to_string(j) +
                            " is not isotropic; the circuit is not phase covariant");
  }
  CloneMarginal out;
  out.coherent_amplitude = st.amplitude(j);
  out.thermal_noise = (0.5 * (vx + vp) - 1.0) / 2.0;
  out.fidelity = fidelity_from_noise(out.thermal_noise);
  return out;
}

double husimi_q(const CloneMarginal& marginal, Complex beta) {
  const double width = marginal.thermal_noise + 1.0;
  return std::exp(-std::norm(marginal.coherent_amplitude - beta) / width) / (std::numbers::pi * width);
}

}  // namespace gaussclone
