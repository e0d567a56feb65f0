#pragma once

// Dual certificate for the weighted-noise semidefinite program.
//
// Minimising sum_j x_j n_j over Gaussian CP maps with the cloner's fixed
// first-moment map is the linear SDP
//
//     minimise  C(G) = sum_j x_j (G_jj + G_{M+j,M+j})   s.t.  G + iK >= 0.
//
// Any Z >= 0 with Tr[Z G] = C(G) gives the bound C(G) >= -i Tr[Z K] for every
// feasible G; Z A_opt = 0 shows the bound is attained by the optimal cloner.

#include <cstdint>
#include <vector>

#include "gaussclone/design.hpp"
#include "gaussclone/gaussian.hpp"

namespace gaussclone {

struct CertifiedProblem {
  NoiseProfile profile;
  CostWeights weights;  // lagrange() is always set
  Vector f;             // f_j = sqrt(n_j)
  Vector h;             // all ones
  Matrix F;             // f f^T
  Matrix H;             // h h^T
  Matrix G_opt;
  Matrix K;
  ComplexMatrix A_opt;  // G_opt + iK
};

/// Assembles the problem. If `weights` carries no multiplier it is solved
/// with design_from_weights and the resulting profile must match `profile`
/// within 1e-8; otherwise the stationarity conditions are checked directly.
/// Throws PreconditionError for off-surface profiles or mismatched weights.
CertifiedProblem build_problem(const NoiseProfile& profile, const CostWeights& weights);

/// The problem for `profile` with the weights that make it optimal
/// (weights_from_profile).
CertifiedProblem build_problem(const NoiseProfile& profile);

/// U = (1/sqrt2) [[I, iI], [iI, I]] of size 2m.
ComplexMatrix block_unitary(int m);

struct DualCertificate {
  Matrix X;
  Matrix Y;
  ComplexMatrix Z;
  double lambda = 0.0;
  double eta = 0.0;
  double dual_bound = 0.0;
};

/// X = diag(x), Y = -X - 2 eta X F X with eta = 1/(lambda (M-N)),
/// Z = [[X, iY], [-iY, X]]. Throws PreconditionError if lambda >= 0.
DualCertificate build_certificate(const CertifiedProblem& problem);

/// C(G) = sum_j x_j (G_jj + G_{M+j,M+j}).
double sdp_cost(const CertifiedProblem& problem, const Matrix& G);

/// C(G) = slope * sum_j x_j n_j + offset on the cloner's affine slice
/// n_j = (G_jj + G_{M+j,M+j} + 2/N - 2) / 4.
struct CostConversion {
  double slope = 4.0;
  double offset = 0.0;
};
CostConversion cost_conversion(const CertifiedProblem& problem);

struct CertificateReport {
  double trace_identity_error = 0.0;   // |Tr[Z G_opt] - C(G_opt)|
  double complementarity = 0.0;        // max|Z A_opt| / (max|Z| max|A_opt|)
  double complementarity_abs = 0.0;    // max|Z A_opt|
  double z_min_eigenvalue = 0.0;
  double a_min_eigenvalue = 0.0;
  double primal_cost = 0.0;            // C(G_opt)
  double dual_bound = 0.0;
  double duality_gap = 0.0;
  double normalization_error = 0.0;    // |eta Tr[X^1/2 F X^1/2] + 1|
  double y_asymmetry = 0.0;
  double y_constraint_error = 0.0;     // first and second Y conditions
  double stationarity_identity_error = 0.0;  // X F (I - H/(M-N)) vs eta X F X
  double projector_error = 0.0;        // |Phi^2 - Phi|
  double block_diagonal_error = 0.0;   // U Z~ U^dag vs diag(2 Phi, 2I - 2 Phi)
  double block_min_eigenvalue = 0.0;
  double noise_cost = 0.0;             // sum x_j n_j
  CostConversion conversion;
  double conversion_error = 0.0;       // |C(G_opt) - (slope*noise_cost + offset)|

  bool pass(double tol = 1e-9) const;
};

CertificateReport verify_certificate(const CertifiedProblem& problem, const DualCertificate& cert);

struct CostScanReport {
  int trials = 0;
  double min_cost = 0.0;
  double dual_bound = 0.0;
  double min_dual_slack = 0.0;   // min Tr[Z (G + iK)] over samples
  double max_trace_identity_error = 0.0;
  int bound_violations = 0;
  bool included_optimum = false;
  double optimum_cost_error = 0.0;  // |C(G_opt) - dual_bound| when included

  bool pass(double tol = 1e-9) const;
};

/// Samples random feasible noise matrices G (G + iK >= 0) and records the
/// smallest cost found. The stream is fully determined by `seed`.
/// Throws PreconditionError for trials < 1.
CostScanReport random_feasible_cost_scan(const CertifiedProblem& problem, const DualCertificate& cert, int trials,
                                         std::uint64_t seed, bool include_optimum = true);

}  // namespace gaussclone
