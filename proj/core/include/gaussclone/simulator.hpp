#pragma once

// Shot-level Monte Carlo of the measurement + feedforward cloner.
//
// Per shot the heterodyne outcome o is a complex Gaussian with mean
// r_tap sqrt(N) alpha and variance 1/2 per real component (the Q-function of
// the tapped coherent state). Clone j is the coherent state
// tau_j t_tap sqrt(N) alpha, sampled as its quadratures plus vacuum noise of
// variance 1/2, displaced by g_j o. Because every clone shares the same o the
// sample covariance converges to blockdiag(I + 2F, I + 2F), including the
// clone-clone correlations.
//
// Results depend on (seed, shots, shards) only: shard s draws from a
// generator seeded by mixing (seed, s), and shard sums are reduced in shard
// order.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "gaussclone/circuit.hpp"
#include "gaussclone/design.hpp"
#include "gaussclone/gaussian.hpp"

namespace gaussclone {

/// Picks the displacement convention under which every clone mean equals
/// `probe`; Direct wins ties (e.g. real or zero amplitudes). Throws
/// SolverError if neither convention reproduces the input.
PhaseConvention calibrate_phase_convention(const NoiseProfile& profile, Complex probe = Complex(0.6, 0.8),
                                           double tol = kAlgebraicTol);

struct SimConfig {
  NoiseProfile profile;
  Complex alpha;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  int shards = 1;
  /// Worker threads; 0 uses std::thread::hardware_concurrency(). Never
  /// affects the result.
  int threads = 0;
};

struct SimResult {
  std::vector<Complex> clone_means;
  Matrix clone_cov;       // unbiased, in the gamma convention (2x raw moments)
  Vector mean_quadratures;
  Vector mean_standard_errors;  // per quadrature mean
  Matrix cov_standard_errors;   // per covariance entry, gamma convention
  std::int64_t shots_used = 0;
};

/// Seed of shard `shard`'s generator.
std::uint64_t shard_seed(std::uint64_t seed, int shard);

/// Runs the simulation with circuit parameters synthesised from the profile
/// (calibrated phase convention).
SimResult run(const SimConfig& config);

/// Runs the simulation for an explicit feedforward circuit.
SimResult run(const SimConfig& config, const FeedforwardCircuit& circuit);

/// Streams raw samples as CSV rows (shot, clone, x, p, o_re, o_im), one row per
/// clone per shot, in shot order. Uses the same streams as run().
void write_samples_csv(const SimConfig& config, const FeedforwardCircuit& circuit, std::ostream& out);

}  // namespace gaussclone
