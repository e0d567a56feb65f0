#pragma once

// Physical realisations of an optimal cloner.
//
// Amplifier scheme: the collected signal |sqrt(N) alpha> is split on a beam
// splitter (t, r); the transmitted part is amplified with gain g and mixed with
// the reflected part and M-2 vacuum modes in an M-port interferometer V.
//
// Feedforward scheme: a tap of reflectance r_tap feeds a heterodyne detector
// with outcome o; the rest is divided by a chain of M-1 beam splitters and each
// output is displaced by g_j o.

#include <span>
#include <string>
#include <vector>

#include "gaussclone/design.hpp"
#include "gaussclone/gaussian.hpp"

namespace gaussclone {

struct GainTransmittance {
  double gain = 1.0;
  double transmittance = 1.0;
};

/// g = sqrt(1 + n_tot), t = sqrt((M - N) / (n_tot N)).
GainTransmittance gain_and_transmittance(const NoiseProfile& profile, double tol = kAlgebraicTol);

struct AmplifierCircuit {
  double t = 1.0;
  double g = 1.0;
  /// Real orthogonal M x M interferometer. Column 0 acts on the reflected
  /// signal b_1, columns 1..M-2 on vacuum ancillas, column M-1 on the
  /// amplifier output.
  Matrix V;
  /// M x (M-1) vacuum coupling in canonical form; kappa kappa^T = I - H/N + F.
  Matrix kappa;
};

/// Throws PreconditionError for M = N or off-surface profiles and SolverError
/// if the completed V is not orthogonal.
AmplifierCircuit build_interferometer(const NoiseProfile& profile, double tol = kAlgebraicTol);

/// P = I - H/N + F with H the all-ones matrix and F_jk = sqrt(n_j n_k).
Matrix commutator_matrix(const NoiseProfile& profile);

/// Eigen-decomposition square root of P with the null direction dropped:
/// columns ordered by descending eigenvalue, largest-magnitude entry positive.
Matrix canonical_kappa(const NoiseProfile& profile);

/// First-moment map of the cloner acting on the collected signal mode:
/// every clone gets (x, p) / sqrt(N).
Matrix clone_map(int n_in, int m_out);

/// blockdiag(I + 2F - H/N, I + 2F - H/N).
Matrix optimal_noise_matrix(const NoiseProfile& profile);

/// blockdiag(I + 2F, I + 2F), the clones' covariance for coherent inputs.
Matrix optimal_clone_covariance(const NoiseProfile& profile);

/// (clone_map, optimal_noise_matrix) as a 1 -> M channel.
GaussianChannel optimal_channel(const NoiseProfile& profile);

/// Channel of the amplifier circuit acting on the collected signal mode,
/// obtained by propagating the circuit's mode operators.
GaussianChannel channel_from_amplifier(const AmplifierCircuit& circuit, const NoiseProfile& profile);

/// Coupling of each clone to the vacuum modes b_1..b_{M-1} in the propagated
/// amplifier circuit.
Matrix propagated_kappa(const AmplifierCircuit& circuit, const NoiseProfile& profile);

/// N -> 1 beam-splitter array that gathers N identical signals into one mode.
GaussianChannel signal_collector(int n_in);

/// Full N -> M cloner: signal_collector followed by channel_from_amplifier.
GaussianChannel cloner_channel(const AmplifierCircuit& circuit, const NoiseProfile& profile);

/// Whether a clone is displaced by g_j o or by g_j conj(o).
enum class PhaseConvention { Direct, Conjugate };

const char* to_string(PhaseConvention c);
PhaseConvention phase_convention_from_string(const std::string& s);

struct FeedforwardCircuit {
  double r_tap = 0.0;
  std::vector<double> gains;
  std::vector<double> reflectances;
  PhaseConvention phase = PhaseConvention::Direct;
};

/// Tap reflectance, electronic gains g_j = sqrt(n_j) and the splitter chain
/// r_1..r_{M-1}. Throws PreconditionError for off-surface profiles or when a
/// reflectance leaves [0, 1].
FeedforwardCircuit feedforward_params(const NoiseProfile& profile, PhaseConvention phase = PhaseConvention::Direct,
                                      double tol = kAlgebraicTol);

/// Amplitude fraction tau_j of the transmitted beam reaching clone j through
/// the splitter chain.
std::vector<double> splitter_amplitudes(std::span<const double> reflectances);

/// Channel of the feedforward circuit on the collected signal mode; the
/// heterodyne outcome is carried as the commuting operator
/// o = r_tap a + t_tap b + c^dagger.
GaussianChannel channel_from_feedforward(const FeedforwardCircuit& circuit, const NoiseProfile& profile);

/// Clone amplitudes of the feedforward circuit for input alpha (means only).
std::vector<Complex> feedforward_clone_means(const FeedforwardCircuit& circuit, const NoiseProfile& profile,
                                             Complex alpha);

struct EquivalenceReport {
  double mean_discrepancy = 0.0;
  double cov_discrepancy = 0.0;
  double channel_discrepancy = 0.0;
  double max_discrepancy() const;
  bool pass(double tol = 1e-9) const { return max_discrepancy() < tol; }
};

/// Builds both circuits and compares the output Gaussian states for the input
/// |alpha>^N (and the channels themselves).
EquivalenceReport scheme_equivalence_check(const NoiseProfile& profile,
                                           PhaseConvention phase = PhaseConvention::Direct,
                                           Complex probe = Complex(0.6, -0.8));

}  // namespace gaussclone
