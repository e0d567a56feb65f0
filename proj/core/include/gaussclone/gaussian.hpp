#pragma once

// Gaussian states and Gaussian completely positive maps.
//
// Conventions used throughout the library:
//   * quadratures are ordered (x_1..x_m, p_1..p_m) with [x_j, p_k] = i delta_jk;
//   * covariance entries are gamma_jk = <dr_j dr_k + dr_k dr_j>, so the vacuum
//     has gamma = I and one shot-noise unit corresponds to a variance of 1/2;
//   * a coherent state |alpha> has mean (x, p) = (sqrt2 Re alpha, sqrt2 Im alpha).

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace gaussclone {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Default tolerance for algebraic identities.
inline constexpr double kAlgebraicTol = 1e-10;
/// A matrix counts as positive semidefinite when its smallest eigenvalue is
/// at least -kPsdTol.
inline constexpr double kPsdTol = 1e-9;

/// Symplectic form J = [[0, I], [-I, 0]] for `modes` modes.
Matrix symplectic_form(int modes);

/// Mean quadrature vector of the product coherent state |alpha_1, ..., alpha_m>.
Vector coherent_mean(std::span<const Complex> alphas);

/// Complex amplitude <a> carried by quadrature means (x, p).
Complex amplitude_from_quadratures(double x, double p);

/// Smallest eigenvalue of a Hermitian matrix (only the lower triangle is read).
double min_hermitian_eigenvalue(const ComplexMatrix& a);

/// Smallest eigenvalue of a real symmetric matrix.
double min_symmetric_eigenvalue(const Matrix& a);

/// Largest absolute entry.
double max_abs(const Matrix& a);
double max_abs(const ComplexMatrix& a);

/// Mean vector and covariance matrix of an m-mode Gaussian state.
///
/// Construction checks dimensions and symmetry; physicality (gamma + iJ >= 0)
/// is a property of the state and is queried with is_physical(), since
/// intermediate results of non-CP maps are legitimately unphysical.
class GaussianState {
 public:
  GaussianState(Vector mean, Matrix cov);

  static GaussianState vacuum(int modes);
  static GaussianState coherent(std::span<const Complex> alphas);
  static GaussianState coherent(Complex alpha) { return coherent(std::span<const Complex>(&alpha, 1)); }

  int num_modes() const { return static_cast<int>(mean_.size() / 2); }
  const Vector& mean() const { return mean_; }
  const Matrix& cov() const { return cov_; }

  /// Smallest eigenvalue of cov + iJ.
  double physicality_min_eigenvalue() const;
  bool is_physical(double tol = kPsdTol) const { return physicality_min_eigenvalue() >= -tol; }

  /// Complex amplitude of mode j.
  Complex amplitude(int j) const;

 private:
  Vector mean_;
  Matrix cov_;
};

/// Gaussian CP map gamma -> S gamma S^T + G, r -> S r.
class GaussianChannel {
 public:
  GaussianChannel(int m_in, int m_out, Matrix S, Matrix G);

  static GaussianChannel identity(int modes);

  int m_in() const { return m_in_; }
  int m_out() const { return m_out_; }
  const Matrix& S() const { return S_; }
  const Matrix& G() const { return G_; }

  /// K = J_out - S J_in S^T, the imaginary part of the CP test matrix.
  Matrix K() const;
  /// A = G + iK; the map is completely positive iff A >= 0.
  ComplexMatrix cp_matrix() const;

 private:
  int m_in_;
  int m_out_;
  Matrix S_;
  Matrix G_;
};

GaussianState apply_channel(const GaussianChannel& ch, const GaussianState& st);

/// The channel obtained by applying `first` and then `second`.
GaussianChannel compose(const GaussianChannel& second, const GaussianChannel& first);

/// Smallest eigenvalue of G + iK. The channel is CP iff this is >= -tol.
double cp_min_eigenvalue(const GaussianChannel& ch);

/// Single-clone figures of merit read off an isotropic mode marginal.
struct CloneMarginal {
  Complex coherent_amplitude;
  double thermal_noise = 0.0;
  double fidelity = 1.0;
};

inline double fidelity_from_noise(double n) { return 1.0 / (1.0 + n); }

/// Thermal noise and fidelity of mode j. Throws PreconditionError when the
/// mode's 2x2 block is not isotropic within `tol`.
CloneMarginal clone_marginal(const GaussianState& st, int j, double tol = kAlgebraicTol);

/// Husimi Q-function of a displaced thermal state, evaluated at beta.
double husimi_q(const CloneMarginal& marginal, Complex beta);

}  // namespace gaussclone
