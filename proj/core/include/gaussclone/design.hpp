#pragma once

// Noise trade-off of optimal N -> M asymmetric Gaussian cloners.
//
// A cloner is described by the thermal noise n_j added to each clone. The
// optimal machines are exactly the profiles on the surface
//
//     (sum_k sqrt n_k)^2 = (M - N) (sum_j n_j + 1).

#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace gaussclone {

/// Input count N, output count M and the per-clone thermal noises.
class NoiseProfile {
 public:
  /// Throws PreconditionError unless M >= N >= 1, noises.size() == M and every
  /// noise is finite and non-negative.
  NoiseProfile(int n_in, int m_out, std::vector<double> noises);

  int n_in() const { return n_in_; }
  int m_out() const { return m_out_; }
  /// M - N.
  int excess() const { return m_out_ - n_in_; }
  std::span<const double> noises() const { return noises_; }
  double noise(int j) const { return noises_.at(static_cast<std::size_t>(j)); }
  double total_noise() const { return total_; }
  /// sum_j sqrt(n_j).
  double sqrt_sum() const;
  std::vector<double> fidelities() const;

  friend bool operator==(const NoiseProfile&, const NoiseProfile&) = default;

 private:
  int n_in_;
  int m_out_;
  std::vector<double> noises_;
  double total_;
};

/// (sum sqrt n_k)^2 - (M - N)(n_tot + 1). Zero exactly on the optimal surface.
double residual(const NoiseProfile& profile);

/// True when |residual| is within `tol` relative to the size of its terms.
bool on_surface(const NoiseProfile& profile, double tol = 1e-10);

/// True when no single clone can lower its noise while the others stay
/// fixed, i.e. (M - N) sqrt(n_j) <= sum_k sqrt(n_k) for every j. Profiles from
/// design_from_weights always satisfy this.
bool on_optimal_branch(const NoiseProfile& profile, double tol = 1e-10);

/// Both roots for the last clone's noise given the other M - 1 noises.
struct LastNoiseSolution {
  /// Smallest non-negative noise (maximum fidelity of the last clone).
  double optimal = 0.0;
  /// The other non-negative root, when it exists.
  std::optional<double> alternate;
};

/// Throws InfeasibleError when no non-negative noise exists and
/// PreconditionError on bad arguments.
LastNoiseSolution solve_last_noise(std::span<const double> partial, int n_in, int m_out);

/// All n_j = (M - N) / (M N).
NoiseProfile symmetric_profile(int n_in, int m_out);

/// Positive weights x_j of the linear cost sum_j x_j n_j.
class CostWeights {
 public:
  explicit CostWeights(std::vector<double> weights, std::optional<double> lagrange = std::nullopt);

  std::span<const double> values() const { return weights_; }
  double operator[](std::size_t j) const { return weights_[j]; }
  std::size_t size() const { return weights_.size(); }
  /// Lagrange multiplier of the constrained minimisation (negative), once solved.
  std::optional<double> lagrange() const { return lagrange_; }

  CostWeights with_lagrange(double lambda) const { return CostWeights(weights_, lambda); }

 private:
  std::vector<double> weights_;
  std::optional<double> lagrange_;
};

double weighted_cost(const NoiseProfile& profile, const CostWeights& weights);

/// max_j |x_j sqrt n_j - lambda (M - N) sqrt n_j + lambda sum_k sqrt n_k|, the
/// violation of the stationarity conditions of the Lagrangian.
double lagrange_residual(const NoiseProfile& profile, const CostWeights& weights, double lambda);

struct WeightedDesign {
  NoiseProfile profile;
  /// The input weights with the solved multiplier attached.
  CostWeights weights;
  int bisection_steps = 0;
};

/// Profile on the optimal surface that minimises sum_j x_j n_j.
///
/// The stationarity conditions give sqrt n_j = c_j S with
/// c_j = lambda / (lambda (M - N) - x_j); summing them yields the scalar
/// equation sum_j c_j(lambda) = 1, which is monotone in lambda < 0 and is
/// solved by a log-grid bracket followed by bisection. S is then fixed by the
/// surface equation.
///
/// Throws PreconditionError for M <= N or non-positive weights, SolverError if
/// no bracket is found.
WeightedDesign design_from_weights(const CostWeights& weights, int n_in, int m_out);

/// Weights (with lambda = -scale) for which `profile` is the optimal design.
/// Requires an on-surface profile on the optimal branch with every n_j > 0.
CostWeights weights_from_profile(const NoiseProfile& profile, double scale = 1.0);

/// One point of the quantum-copy / classical-estimate trade-off.
struct EstimationTradeoffPoint {
  double n_copy = 0.0;     // n_F
  double n_estimate = 0.0; // n_G
  double fidelity_copy = 0.0;
  double fidelity_estimate = 0.0;
};

/// n_G = (n_F + 1)^2 / (4 n_F). For n_F = 0 the estimate is infinitely noisy:
/// n_G = +inf and its fidelity is 0.
EstimationTradeoffPoint estimation_tradeoff(double n_copy);

/// Fidelity of the classical estimate as a function of the copy fidelity.
double estimate_fidelity_from_copy(double fidelity_copy);

/// Drops one zero-noise clone, turning an N -> M profile into N-1 -> M-1 with
/// the same residual. Throws PreconditionError if no clone has zero noise or
/// N = 1.
NoiseProfile reduce_perfect_clone(const NoiseProfile& profile, double tol = 1e-12);

}  // namespace gaussclone
