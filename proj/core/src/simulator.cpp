#include "gaussclone/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <thread>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>

#include "gaussclone/errors.hpp"
#include "off_surface.hpp"

namespace gaussclone {

PhaseConvention calibrate_phase_convention(const NoiseProfile& profile, Complex probe, double tol) {
  auto reproduces = [&](PhaseConvention c) {
    const FeedforwardCircuit circ = feedforward_params(profile, c, tol);
    const auto means = feedforward_clone_means(circ, profile, probe);
    return std::all_of(means.begin(), means.end(), [&](Complex a) {
      return std::abs(a - probe) <= tol * std::max(1.0, std::abs(probe));
    });
  };
  if (reproduces(PhaseConvention::Direct)) return PhaseConvention::Direct;
  if (reproduces(PhaseConvention::Conjugate)) return PhaseConvention::Conjugate;
  throw SolverError("no displacement convention reproduces the input amplitude; feedforward parameters are wrong");
}

std::uint64_t shard_seed(std::uint64_t seed, int shard) {
  // splitmix64 finaliser over (seed, shard).
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(shard) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

struct ShotModel {
  int m = 0;
  Complex o_mean;
  std::vector<Complex> coherent;  // tau_j t_tap sqrt(N) alpha
  std::vector<double> gains;
  bool conjugate = false;
};

ShotModel make_model(const SimConfig& config, const FeedforwardCircuit& circuit) {
  const NoiseProfile& p = config.profile;
  const int m = p.m_out();
  if (static_cast<int>(circuit.gains.size()) != m || static_cast<int>(circuit.reflectances.size()) != m - 1) {
    throw PreconditionError("feedforward circuit does not match the profile's clone count");
  }
  const Complex signal = std::sqrt(static_cast<double>(p.n_in())) * config.alpha;
  const double t_tap = std::sqrt(std::max(0.0, (1.0 - circuit.r_tap) * (1.0 + circuit.r_tap)));
  const std::vector<double> tau = splitter_amplitudes(circuit.reflectances);
  ShotModel model;
  model.m = m;
  model.o_mean = circuit.r_tap * signal;
  model.gains = circuit.gains;
  model.conjugate = circuit.phase == PhaseConvention::Conjugate;
  for (int j = 0; j < m; ++j) model.coherent.push_back(tau[static_cast<std::size_t>(j)] * t_tap * signal);
  return model;
}

// One shard's stream. Each shot draws 2 normals for o then 2 per clone.
class ShotStream {
 public:
  ShotStream(const ShotModel& model, std::uint64_t seed) : model_(model), rng_(seed), normal_(0.0, 1.0) {}

  // Fills q with (x_1..x_M, p_1..p_M) and returns the outcome o.
  Complex next(Vector& q) {
    constexpr double kHalf = std::numbers::sqrt2 / 2.0;  // std dev for variance 1/2
    const double o_re = model_.o_mean.real() + kHalf * normal_(rng_);
    const double o_im = model_.o_mean.imag() + kHalf * normal_(rng_);
    const Complex o(o_re, o_im);
    const Complex kick = model_.conjugate ? std::conj(o) : o;
    const int m = model_.m;
    for (int j = 0; j < m; ++j) {
      const auto k = static_cast<std::size_t>(j);
      const Complex amp = model_.coherent[k] + model_.gains[k] * kick;
      q(j) = std::numbers::sqrt2 * amp.real() + kHalf * normal_(rng_);
      q(m + j) = std::numbers::sqrt2 * amp.imag() + kHalf * normal_(rng_);
    }
    return o;
  }

 private:
  const ShotModel& model_;
  boost::random::mt19937_64 rng_;
  boost::random::normal_distribution<double> normal_;
};

std::int64_t shard_begin(std::int64_t shots, int shards, int s) {
  return shots * s / shards;
}

struct FirstPass {
  Vector sum;
};

struct SecondPass {
  Matrix products;   // sum of centred outer products
  Matrix fourth;     // sum of squared centred products
};

template <typename Fn>
void for_each_shard(int shards, int threads, Fn&& fn) {
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(shards));
  if (workers <= 1) {
    for (int s = 0; s < shards; ++s) fn(s);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int s = static_cast<int>(w); s < shards; s += static_cast<int>(workers)) fn(s);
    });
  }
}

void check_config(const SimConfig& config) {
  if (config.shots < 1) throw PreconditionError("shots must be >= 1");
  if (config.shards < 1) throw PreconditionError("shards must be >= 1");
  if (!on_surface(config.profile, 1e-9)) {
    throw PreconditionError(detail::off_surface_message(config.profile));
  }
}

}  // namespace

SimResult run(const SimConfig& config) {
  check_config(config);
  const PhaseConvention phase = calibrate_phase_convention(config.profile);
  return run(config, feedforward_params(config.profile, phase));
}

SimResult run(const SimConfig& config, const FeedforwardCircuit& circuit) {
  check_config(config);
  const ShotModel model = make_model(config, circuit);
  const int dim = 2 * model.m;
  const int shards = config.shards;

  std::vector<FirstPass> first(static_cast<std::size_t>(shards));
  for_each_shard(shards, config.threads, [&](int s) {
    ShotStream stream(model, shard_seed(config.seed, s));
    Vector q(dim);
    Vector sum = Vector::Zero(dim);
    const std::int64_t begin = shard_begin(config.shots, shards, s);
    const std::int64_t end = shard_begin(config.shots, shards, s + 1);
    for (std::int64_t k = begin; k < end; ++k) {
      stream.next(q);
      sum += q;
    }
    first[static_cast<std::size_t>(s)].sum = std::move(sum);
  });
  Vector total = Vector::Zero(dim);
  for (const FirstPass& f : first) total += f.sum;
  const double n = static_cast<double>(config.shots);
  const Vector mean = total / n;

  std::vector<SecondPass> second(static_cast<std::size_t>(shards));
  for_each_shard(shards, config.threads, [&](int s) {
    ShotStream stream(model, shard_seed(config.seed, s));
    Vector q(dim);
    Matrix products = Matrix::Zero(dim, dim);
    Matrix fourth = Matrix::Zero(dim, dim);
    const std::int64_t begin = shard_begin(config.shots, shards, s);
    const std::int64_t end = shard_begin(config.shots, shards, s + 1);
    for (std::int64_t k = begin; k < end; ++k) {
      stream.next(q);
      const Vector c = q - mean;
      for (int a = 0; a < dim; ++a) {
        for (int b = a; b < dim; ++b) {
          const double prod = c(a) * c(b);
          products(a, b) += prod;
          fourth(a, b) += prod * prod;
        }
      }
    }
    second[static_cast<std::size_t>(s)] = {std::move(products), std::move(fourth)};
  });
  Matrix products = Matrix::Zero(dim, dim);
  Matrix fourth = Matrix::Zero(dim, dim);
  for (const SecondPass& p : second) {
    products += p.products;
    fourth += p.fourth;
  }

  SimResult res;
  res.shots_used = config.shots;
  res.mean_quadratures = mean;
  res.clone_cov = Matrix::Zero(dim, dim);
  res.cov_standard_errors = Matrix::Zero(dim, dim);
  const double denom = std::max(1.0, n - 1.0);
  for (int a = 0; a < dim; ++a) {
    for (int b = a; b < dim; ++b) {
      const double raw = products(a, b) / denom;
      // Var of the sample mean of the centred products.
      const double m2 = products(a, b) / n;
      const double var_prod = std::max(0.0, fourth(a, b) / n - m2 * m2);
      const double se = 2.0 * std::sqrt(var_prod / n);
      res.clone_cov(a, b) = res.clone_cov(b, a) = 2.0 * raw;
      res.cov_standard_errors(a, b) = res.cov_standard_errors(b, a) = se;
    }
  }
  res.mean_standard_errors.resize(dim);
  for (int a = 0; a < dim; ++a) res.mean_standard_errors(a) = std::sqrt(products(a, a) / denom / n);
  for (int j = 0; j < model.m; ++j) res.clone_means.push_back(amplitude_from_quadratures(mean(j), mean(model.m + j)));
  return res;
}

void write_samples_csv(const SimConfig& config, const FeedforwardCircuit& circuit, std::ostream& out) {
  check_config(config);
  const ShotModel model = make_model(config, circuit);
  const int m = model.m;
  Vector q(2 * m);
  char buf[256];
  out << "shot,clone,x,p,o_re,o_im\n";
  for (int s = 0; s < config.shards; ++s) {
    ShotStream stream(model, shard_seed(config.seed, s));
    const std::int64_t begin = shard_begin(config.shots, config.shards, s);
    const std::int64_t end = shard_begin(config.shots, config.shards, s + 1);
    for (std::int64_t k = begin; k < end; ++k) {
      const Complex o = stream.next(q);
      for (int j = 0; j < m; ++j) {
        std::snprintf(buf, sizeof buf, "%lld,%d,%.17g,%.17g,%.17g,%.17g\n", static_cast<long long>(k), j + 1, q(j),
                      q(m + j), o.real(), o.imag());
        out << buf;
      }
    }
  }
}

}  // namespace gaussclone
