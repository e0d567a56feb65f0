#include "gaussclone/design.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "gaussclone/errors.hpp"

namespace gaussclone {

namespace {

double sum_of(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

double sqrt_sum_of(std::span<const double> v) {
  double s = 0.0;
  for (double n : v) s += std::sqrt(n);
  return s;
}

// (sum sqrt n_k)^2.
double squared_sqrt_sum(std::span<const double> v) {
  const double s = sqrt_sum_of(v);
  return s * s;
}

void require_counts(int n_in, int m_out) {
  if (n_in < 1) throw PreconditionError("input count N must be >= 1");
  if (m_out < n_in) {
    throw PreconditionError("output count M=" + std::to_string(m_out) + " is smaller than N=" + std::to_string(n_in));
  }
}

void require_noises(std::span<const double> noises) {
  for (double n : noises) {
    if (!std::isfinite(n) || n < 0.0) {
      std::ostringstream msg;
      msg << "noise values must be finite and non-negative, got " << n;
      throw PreconditionError(msg.str());
    }
  }
}

double surface_scale(const NoiseProfile& p) {
  return std::max({1.0, squared_sqrt_sum(p.noises()), p.excess() * (p.total_noise() + 1.0)});
}

}  // namespace

NoiseProfile::NoiseProfile(int n_in, int m_out, std::vector<double> noises)
    : n_in_(n_in), m_out_(m_out), noises_(std::move(noises)) {
  require_counts(n_in_, m_out_);
  if (noises_.size() != static_cast<std::size_t>(m_out_)) {
    throw PreconditionError("expected " + std::to_string(m_out_) + " noise values, got " +
                            std::to_string(noises_.size()));
  }
  require_noises(noises_);
  total_ = sum_of(noises_);
}

double NoiseProfile::sqrt_sum() const { return sqrt_sum_of(noises_); }

std::vector<double> NoiseProfile::fidelities() const {
  std::vector<double> f;
  f.reserve(noises_.size());
  for (double n : noises_) f.push_back(1.0 / (1.0 + n));
  return f;
}

double residual(const NoiseProfile& profile) {
  return squared_sqrt_sum(profile.noises()) - profile.excess() * (profile.total_noise() + 1.0);
}

bool on_surface(const NoiseProfile& profile, double tol) {
  return std::abs(residual(profile)) <= tol * surface_scale(profile);
}

bool on_optimal_branch(const NoiseProfile& profile, double tol) {
  const double s = profile.sqrt_sum();
  const int d = profile.excess();
  return std::all_of(profile.noises().begin(), profile.noises().end(),
                     [&](double n) { return d * std::sqrt(n) <= s + tol * std::max(1.0, s); });
}

LastNoiseSolution solve_last_noise(std::span<const double> partial, int n_in, int m_out) {
  require_counts(n_in, m_out);
  if (m_out == n_in) throw PreconditionError("solve_last_noise needs M > N");
  if (partial.size() != static_cast<std::size_t>(m_out - 1)) {
    throw PreconditionError("expected " + std::to_string(m_out - 1) + " noise values for the first M-1 clones, got " +
                            std::to_string(partial.size()));
  }
  require_noises(partial);

  // With u = sqrt(n_M): (d-1) u^2 - 2 s u + [d (T+1) - s^2] = 0.
  const double d = m_out - n_in;
  const double s = sqrt_sum_of(partial);
  const double s2 = squared_sqrt_sum(partial);
  const double T = sum_of(partial);
  const double c = d * (T + 1.0) - s2;

  if (m_out - n_in == 1) {
    if (s <= 0.0) {
      throw PreconditionError("for M - N = 1 at least one of the given clones must carry noise");
    }
    const double u = c / (2.0 * s);
    if (u < 0.0) {
      throw InfeasibleError("infeasible: the requested fidelities of the first M-1 clones are too high");
    }
    return {u * u, std::nullopt};
  }

  const double a = d - 1.0;
  // Quarter discriminant s^2 - a c, rearranged to d [s^2 - (d-1)(T+1)].
  double disc = d * (s2 - a * (T + 1.0));
  const double scale = std::max({1.0, s2, d * (T + 1.0)});
  // Below this the sign of the discriminant is rounding noise: double root.
  const double noise_floor = 16.0 * std::numeric_limits<double>::epsilon() * d * scale;
  if (disc < -noise_floor) {
    throw InfeasibleError("infeasible: the requested fidelities of the first M-1 clones are too high");
  }
  if (disc <= noise_floor) {
    // Double root u = s / a; not reported twice.
    const double u = s / a;
    return {u * u, std::nullopt};
  }
  const double root = std::sqrt(disc);
  const double u_large = (s + root) / a;
  // Vieta: u_small * u_large = c / a; avoids cancellation in s - root.
  const double u_small = (s + root) > 0.0 ? c / (s + root) : 0.0;

  if (u_small >= 0.0) {
    LastNoiseSolution out{u_small * u_small, std::nullopt};
    if (u_large > u_small) out.alternate = u_large * u_large;
    return out;
  }
  if (u_large >= 0.0) return {u_large * u_large, std::nullopt};
  throw InfeasibleError("infeasible: no non-negative noise satisfies the trade-off");
}

NoiseProfile symmetric_profile(int n_in, int m_out) {
  require_counts(n_in, m_out);
  const double n = static_cast<double>(m_out - n_in) / (static_cast<double>(m_out) * n_in);
  return {n_in, m_out, std::vector<double>(static_cast<std::size_t>(m_out), n)};
}

CostWeights::CostWeights(std::vector<double> weights, std::optional<double> lagrange)
    : weights_(std::move(weights)), lagrange_(lagrange) {
  if (weights_.empty()) throw PreconditionError("at least one weight is required");
  for (double x : weights_) {
    if (!std::isfinite(x) || x <= 0.0) {
      std::ostringstream msg;
      msg << "weights must be strictly positive, got " << x;
      throw PreconditionError(msg.str());
    }
  }
}

double weighted_cost(const NoiseProfile& profile, const CostWeights& weights) {
  if (weights.size() != profile.noises().size()) throw PreconditionError("weight count does not match clone count");
  double c = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) c += weights[j] * profile.noises()[j];
  return c;
}

double lagrange_residual(const NoiseProfile& profile, const CostWeights& weights, double lambda) {
  if (weights.size() != profile.noises().size()) throw PreconditionError("weight count does not match clone count");
  const double s = profile.sqrt_sum();
  const double d = profile.excess();
  double worst = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const double r = std::sqrt(profile.noises()[j]);
    worst = std::max(worst, std::abs(weights[j] * r - lambda * d * r + lambda * s));
  }
  return worst;
}

WeightedDesign design_from_weights(const CostWeights& weights, int n_in, int m_out) {
  require_counts(n_in, m_out);
  if (m_out == n_in) throw PreconditionError("design_from_weights needs M > N");
  if (weights.size() != static_cast<std::size_t>(m_out)) {
    throw PreconditionError("expected " + std::to_string(m_out) + " weights, got " + std::to_string(weights.size()));
  }

  // The problem is invariant under x -> c x with lambda -> c lambda, so solve
  // with weights scaled to max 1 and rescale the multiplier afterwards.
  const double x_max = *std::max_element(weights.values().begin(), weights.values().end());
  std::vector<double> x(weights.values().begin(), weights.values().end());
  for (double& v : x) v /= x_max;
  const double d = m_out - n_in;

  // With mu = -lambda > 0: phi(mu) = sum_j mu / (x_j + mu d) - 1, increasing
  // from -1 to M/d - 1 > 0.
  auto phi = [&](double mu) {
    double acc = 0.0;
    for (double xj : x) acc += mu / (xj + mu * d);
    return acc - 1.0;
  };

  constexpr double kMuMin = 1e-6;
  constexpr double kMuMax = 1e3;
  constexpr int kGrid = 181;
  double lo = 0.0;
  double hi = 0.0;
  bool bracketed = false;
  double prev_mu = kMuMin;
  double prev_val = phi(kMuMin);
  if (prev_val == 0.0) {
    lo = hi = kMuMin;
    bracketed = true;
  }
  for (int k = 1; k < kGrid && !bracketed; ++k) {
    const double mu = kMuMin * std::pow(kMuMax / kMuMin, static_cast<double>(k) / (kGrid - 1));
    const double val = phi(mu);
    if ((prev_val < 0.0) != (val < 0.0) || val == 0.0) {
      lo = prev_mu;
      hi = mu;
      bracketed = true;
    }
    prev_mu = mu;
    prev_val = val;
  }
  if (!bracketed) {
    std::ostringstream msg;
    msg << "no bracketing root for the Lagrange multiplier in lambda in [-" << kMuMax * x_max << ", -"
        << kMuMin * x_max << "]: phi(min)=" << phi(kMuMin) << ", phi(max)=" << phi(kMuMax);
    throw SolverError(msg.str());
  }

  int steps = 0;
  while (hi - lo > 1e-12 * std::max(1.0, hi) && steps < 200) {
    const double mid = 0.5 * (lo + hi);
    if (phi(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++steps;
  }
  const double mu = 0.5 * (lo + hi);

  std::vector<double> c(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) c[j] = mu / (x[j] + mu * d);
  const double c_sum = sum_of(c);
  double c2 = 0.0;
  for (double& cj : c) {
    cj /= c_sum;
    c2 += cj * cj;
  }
  const double denom = 1.0 - d * c2;
  if (denom <= 0.0) throw SolverError("degenerate multiplier: 1 - (M-N) sum c_j^2 <= 0");
  const double s2 = d / denom;

  std::vector<double> noises(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) noises[j] = c[j] * c[j] * s2;

  return {NoiseProfile(n_in, m_out, std::move(noises)), weights.with_lagrange(-mu * x_max), steps};
}

CostWeights weights_from_profile(const NoiseProfile& profile, double scale) {
  if (profile.excess() == 0) throw PreconditionError("weights are undefined for the identity profile M = N");
  if (!on_surface(profile, 1e-9)) throw PreconditionError("profile is off the optimal surface");
  if (!(scale > 0.0)) throw PreconditionError("weight scale must be positive");
  const double s = profile.sqrt_sum();
  const double d = profile.excess();
  std::vector<double> x;
  x.reserve(profile.noises().size());
  for (double n : profile.noises()) {
    if (n <= 0.0) throw PreconditionError("a clone with zero noise has no finite cost weight");
    const double xj = scale * (s / std::sqrt(n) - d);
    if (!(xj > 0.0)) throw PreconditionError("profile is not on the optimal branch; no positive weights exist");
    x.push_back(xj);
  }
  return CostWeights(std::move(x), -scale);
}

EstimationTradeoffPoint estimation_tradeoff(double n_copy) {
  if (!(n_copy >= 0.0) || !std::isfinite(n_copy)) throw PreconditionError("copy noise n_F must be non-negative");
  EstimationTradeoffPoint p;
  p.n_copy = n_copy;
  p.fidelity_copy = 1.0 / (1.0 + n_copy);
  if (n_copy == 0.0) {
    p.n_estimate = std::numeric_limits<double>::infinity();
    p.fidelity_estimate = 0.0;
    return p;
  }
  p.n_estimate = (n_copy + 1.0) * (n_copy + 1.0) / (4.0 * n_copy);
  p.fidelity_estimate = 1.0 / (1.0 + p.n_estimate);
  return p;
}

double estimate_fidelity_from_copy(double fidelity_copy) {
  const double q = 4.0 * fidelity_copy * (1.0 - fidelity_copy);
  return q / (q + 1.0);
}

NoiseProfile reduce_perfect_clone(const NoiseProfile& profile, double tol) {
  if (profile.n_in() < 2) {
    throw PreconditionError("cannot redirect a perfect clone: N - 1 would leave no input replicas");
  }
  const auto noises = profile.noises();
  const auto it = std::find_if(noises.begin(), noises.end(), [&](double n) { return n <= tol; });
  if (it == noises.end()) throw PreconditionError("profile has no zero-noise clone");
  std::vector<double> reduced;
  reduced.reserve(noises.size() - 1);
  for (auto k = noises.begin(); k != noises.end(); ++k) {
    if (k != it) reduced.push_back(*k);
  }
  return {profile.n_in() - 1, profile.m_out() - 1, std::move(reduced)};
}

}  // namespace gaussclone
