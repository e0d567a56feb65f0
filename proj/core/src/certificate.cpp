#include "gaussclone/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>

#include "gaussclone/circuit.hpp"
#include "gaussclone/errors.hpp"
#include "off_surface.hpp"

namespace gaussclone {

namespace {

constexpr Complex kI(0.0, 1.0);

CertifiedProblem assemble(const NoiseProfile& profile, const CostWeights& weights) {
  const int m = profile.m_out();
  Vector f(m);
  for (int j = 0; j < m; ++j) f(j) = std::sqrt(profile.noise(j));
  const Vector h = Vector::Ones(m);
  const Matrix F = f * f.transpose();
  const Matrix H = h * h.transpose();
  const Matrix G_opt = optimal_noise_matrix(profile);
  const GaussianChannel ch(1, m, clone_map(profile.n_in(), m), G_opt);
  const Matrix K = ch.K();
  ComplexMatrix A = G_opt.cast<Complex>() + kI * K.cast<Complex>();
  return {profile, weights, f, h, F, H, G_opt, K, std::move(A)};
}

}  // namespace

CertifiedProblem build_problem(const NoiseProfile& profile, const CostWeights& weights) {
  if (profile.excess() == 0) throw PreconditionError("certificate needs M > N");
  if (!on_surface(profile, 1e-9)) {
    throw PreconditionError(detail::off_surface_message(profile));
  }
  if (weights.size() != static_cast<std::size_t>(profile.m_out())) {
    throw PreconditionError("weight count does not match clone count");
  }

  CostWeights solved = weights;
  if (!weights.lagrange()) {
    const WeightedDesign design = design_from_weights(weights, profile.n_in(), profile.m_out());
    double mismatch = 0.0;
    for (int j = 0; j < profile.m_out(); ++j) {
      mismatch = std::max(mismatch, std::abs(design.profile.noise(j) - profile.noise(j)));
    }
    if (mismatch > 1e-8 * std::max(1.0, profile.total_noise())) {
      throw PreconditionError("weights do not select this profile (max noise mismatch " + std::to_string(mismatch) +
                              ")");
    }
    solved = design.weights;
  }
  const double lambda = *solved.lagrange();
  const double x_max = *std::max_element(solved.values().begin(), solved.values().end());
  const double scale = x_max * std::max(1.0, profile.sqrt_sum());
  if (lagrange_residual(profile, solved, lambda) > 1e-8 * scale) {
    throw PreconditionError("weights and multiplier violate the stationarity conditions for this profile");
  }
  return assemble(profile, solved);
}

CertifiedProblem build_problem(const NoiseProfile& profile) {
  return build_problem(profile, weights_from_profile(profile));
}

ComplexMatrix block_unitary(int m) {
  const ComplexMatrix I = ComplexMatrix::Identity(m, m);
  ComplexMatrix U(2 * m, 2 * m);
  U << I, kI * I, kI * I, I;
  return U / std::numbers::sqrt2;
}

DualCertificate build_certificate(const CertifiedProblem& problem) {
  const double lambda = problem.weights.lagrange().value_or(0.0);
  if (!(lambda < 0.0)) throw PreconditionError("Lagrange multiplier must be negative");
  const int m = problem.profile.m_out();
  const double eta = 1.0 / (lambda * problem.profile.excess());

  DualCertificate cert;
  cert.lambda = lambda;
  cert.eta = eta;
  cert.X = Matrix::Zero(m, m);
  for (int j = 0; j < m; ++j) cert.X(j, j) = problem.weights[static_cast<std::size_t>(j)];
  cert.Y = -cert.X - 2.0 * eta * cert.X * problem.F * cert.X;

  const ComplexMatrix Xc = cert.X.cast<Complex>();
  const ComplexMatrix Yc = cert.Y.cast<Complex>();
  cert.Z.resize(2 * m, 2 * m);
  cert.Z << Xc, kI * Yc, -kI * Yc, Xc;

  // -i Tr[Z K]; the trace is purely imaginary for Hermitian Z and real
  // antisymmetric K.
  const Complex tr = (cert.Z * problem.K.cast<Complex>()).trace();
  cert.dual_bound = (-kI * tr).real();
  return cert;
}

double sdp_cost(const CertifiedProblem& problem, const Matrix& G) {
  const int m = problem.profile.m_out();
  double c = 0.0;
  for (int j = 0; j < m; ++j) c += problem.weights[static_cast<std::size_t>(j)] * (G(j, j) + G(m + j, m + j));
  return c;
}

CostConversion cost_conversion(const CertifiedProblem& problem) {
  double x_sum = 0.0;
  for (double x : problem.weights.values()) x_sum += x;
  return {4.0, (2.0 - 2.0 / problem.profile.n_in()) * x_sum};
}

bool CertificateReport::pass(double tol) const {
  return trace_identity_error < tol && complementarity < tol && z_min_eigenvalue >= -tol && duality_gap < tol &&
         normalization_error < tol && a_min_eigenvalue >= -tol;
}

CertificateReport verify_certificate(const CertifiedProblem& problem, const DualCertificate& cert) {
  const int m = problem.profile.m_out();
  const int n = problem.profile.n_in();
  const double d = problem.profile.excess();
  const Matrix I = Matrix::Identity(m, m);
  const Matrix& X = cert.X;
  const Matrix& Y = cert.Y;
  const Matrix& F = problem.F;
  const Matrix& H = problem.H;

  CertificateReport rep;
  rep.primal_cost = sdp_cost(problem, problem.G_opt);
  rep.dual_bound = cert.dual_bound;
  rep.duality_gap = std::abs(rep.primal_cost - rep.dual_bound);
  rep.trace_identity_error = std::abs((cert.Z * problem.G_opt.cast<Complex>()).trace() - Complex(rep.primal_cost));

  const ComplexMatrix ZA = cert.Z * problem.A_opt;
  rep.complementarity_abs = max_abs(ZA);
  rep.complementarity = rep.complementarity_abs / (max_abs(cert.Z) * max_abs(problem.A_opt));
  rep.z_min_eigenvalue = min_hermitian_eigenvalue(cert.Z);
  rep.a_min_eigenvalue = min_hermitian_eigenvalue(problem.A_opt);

  const Vector x_sqrt = X.diagonal().cwiseSqrt();
  const Matrix XhFXh = x_sqrt.asDiagonal() * F * x_sqrt.asDiagonal();
  rep.normalization_error = std::abs(cert.eta * XhFXh.trace() + 1.0);
  rep.y_asymmetry = max_abs(Matrix(Y - Y.transpose()));

  const Matrix Q = I - H / n;
  const double y_first = max_abs(Matrix(Y * Q + X * (I + 2.0 * F - H / n)));
  const double y_second = max_abs(Matrix(X * F - Y * F));
  rep.y_constraint_error = std::max(y_first, y_second);
  rep.stationarity_identity_error = max_abs(Matrix(X * F * (I - H / d) - cert.eta * X * F * X));

  const Matrix Phi = -cert.eta * XhFXh;
  rep.projector_error = max_abs(Matrix(Phi * Phi - Phi));

  ComplexMatrix Vx = ComplexMatrix::Zero(2 * m, 2 * m);
  const Vector x_isqrt = x_sqrt.cwiseInverse();
  Vx.topLeftCorner(m, m) = x_isqrt.asDiagonal().toDenseMatrix().cast<Complex>();
  Vx.bottomRightCorner(m, m) = x_isqrt.asDiagonal().toDenseMatrix().cast<Complex>();
  const ComplexMatrix Zt = Vx * cert.Z * Vx.adjoint();
  const ComplexMatrix U = block_unitary(m);
  const ComplexMatrix blocks = U * Zt * U.adjoint();
  ComplexMatrix expected = ComplexMatrix::Zero(2 * m, 2 * m);
  expected.topLeftCorner(m, m) = (2.0 * Phi).cast<Complex>();
  expected.bottomRightCorner(m, m) = (2.0 * I - 2.0 * Phi).cast<Complex>();
  rep.block_diagonal_error = max_abs(ComplexMatrix(blocks - expected));
  rep.block_min_eigenvalue = std::min(min_symmetric_eigenvalue(2.0 * Phi), min_symmetric_eigenvalue(2.0 * I - 2.0 * Phi));

  rep.noise_cost = weighted_cost(problem.profile, problem.weights);
  rep.conversion = cost_conversion(problem);
  rep.conversion_error = std::abs(rep.primal_cost - (rep.conversion.slope * rep.noise_cost + rep.conversion.offset));
  return rep;
}

bool CostScanReport::pass(double tol) const {
  return bound_violations == 0 && min_cost >= dual_bound - tol && min_dual_slack >= -tol &&
         (!included_optimum || optimum_cost_error < tol);
}

CostScanReport random_feasible_cost_scan(const CertifiedProblem& problem, const DualCertificate& cert, int trials,
                                         std::uint64_t seed, bool include_optimum) {
  if (trials < 1) throw PreconditionError("cost scan needs at least one trial");
  const int m = problem.profile.m_out();
  const int dim = 2 * m;
  boost::random::mt19937_64 rng(seed);
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  boost::random::uniform_01<double> uniform;

  const ComplexMatrix iK = kI * problem.K.cast<Complex>();
  auto random_symmetric = [&](double sigma) {
    Matrix B(dim, dim);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) B(r, c) = sigma * normal(rng);
    }
    return Matrix(0.5 * (B + B.transpose()));
  };
  auto random_psd = [&](double sigma) {
    Matrix B(dim, dim);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) B(r, c) = sigma * normal(rng);
    }
    return Matrix(B * B.transpose());
  };
  // Smallest shift t >= 0 with G + tI + iK >= 0, plus a random margin.
  auto lift = [&](const Matrix& G, double margin) {
    const double lo = min_hermitian_eigenvalue(G.cast<Complex>() + iK);
    const double t = std::max(0.0, -lo) + margin;
    return Matrix(G + t * Matrix::Identity(dim, dim));
  };

  CostScanReport rep;
  rep.trials = trials;
  rep.dual_bound = cert.dual_bound;
  rep.min_cost = std::numeric_limits<double>::infinity();
  rep.min_dual_slack = std::numeric_limits<double>::infinity();

  auto record = [&](const Matrix& G) {
    const double cost = sdp_cost(problem, G);
    const Complex tr_zg = (cert.Z * G.cast<Complex>()).trace();
    const double slack = (cert.Z * (G.cast<Complex>() + iK)).trace().real();
    rep.max_trace_identity_error = std::max(rep.max_trace_identity_error, std::abs(tr_zg - Complex(cost)));
    rep.min_cost = std::min(rep.min_cost, cost);
    rep.min_dual_slack = std::min(rep.min_dual_slack, slack);
    if (cost < cert.dual_bound - 1e-9) ++rep.bound_violations;
  };

  if (include_optimum) {
    rep.included_optimum = true;
    rep.optimum_cost_error = std::abs(sdp_cost(problem, problem.G_opt) - cert.dual_bound);
    record(problem.G_opt);
  }

  for (int k = 0; k < trials; ++k) {
    const double sigma = std::pow(10.0, -3.0 + 3.0 * uniform(rng));
    const double margin = 1e-9 + sigma * uniform(rng);
    Matrix G;
    switch (k % 3) {
      case 0:  // optimum plus positive noise
        G = problem.G_opt + random_psd(sigma);
        break;
      case 1:  // arbitrary symmetric matrix lifted into the feasible set
        G = lift(problem.G_opt + random_symmetric(10.0 * sigma), margin);
        break;
      default: {  // convex mixture close to the optimum
        const double s = std::pow(10.0, -4.0 * uniform(rng));
        G = (1.0 - s) * problem.G_opt + s * lift(random_symmetric(1.0), margin);
        break;
      }
    }
    G = 0.5 * (G + G.transpose()).eval();
    record(G);
  }
  return rep;
}

}  // namespace gaussclone
