// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit status if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gaussclone/gaussclone.hpp"
#include "test_support.hpp"

using namespace gaussclone;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// 100 random design points from weights and 100 from the surface generator.
std::vector<NoiseProfile> optimal_profiles() {
  std::mt19937_64 rng(20240611);
  std::vector<NoiseProfile> out;
  for (int k = 0; k < 100; ++k) {
    std::uniform_int_distribution<int> pick_m(2, 8);
    const int m = pick_m(rng);
    std::uniform_int_distribution<int> pick_n(1, m - 1);
    const int n = pick_n(rng);
    out.push_back(design_from_weights(CostWeights(testing_support::random_weights(rng, m)), n, m).profile);
    out.push_back(testing_support::random_surface_profile(rng, 8));
  }
  return out;
}

Matrix reference_s(int n, int m) {
  Matrix s = Matrix::Zero(2 * m, 2);
  for (int j = 0; j < m; ++j) {
    s(j, 0) = 1.0 / std::sqrt(double(n));
    s(m + j, 1) = 1.0 / std::sqrt(double(n));
  }
  return s;
}

Matrix reference_g(const NoiseProfile& p) {
  const int m = p.m_out();
  Matrix g = Matrix::Zero(2 * m, 2 * m);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      const double v = (j == k ? 1.0 : 0.0) + 2.0 * std::sqrt(p.noise(j) * p.noise(k)) - 1.0 / p.n_in();
      g(j, k) = g(m + j, m + k) = v;
    }
  }
  return g;
}

Outcome criterion1() {
  Outcome o;
  const std::vector<double> half{0.5};
  const double n2 = solve_last_noise(half, 1, 2).optimal;
  double worst = std::abs(n2 - 0.5);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unif(0.0, 10.0);
  for (int k = 0; k < 10; ++k) {
    double n1 = 0.0;
    while (n1 == 0.0) n1 = unif(rng);
    const std::vector<double> partial{n1};
    worst = std::max(worst, std::abs(n1 * solve_last_noise(partial, 1, 2).optimal - 0.25));
  }
  o.pass = worst <= 1e-12;
  o.detail = "n_2(0.5) = " + fmt("%.15g", n2) + ", max |n_1 n_2 - 1/4| = " + fmt("%.2e", worst);
  return o;
}

Outcome criterion2() {
  const std::vector<double> halves{0.5, 0.5};
  const double n3 = solve_last_noise(halves, 1, 3).optimal;
  return {std::abs(n3 - 2.0) <= 1e-12, "n_3 = " + fmt("%.15g", n3)};
}

Outcome criterion3() {
  Outcome o;
  const double f = symmetric_profile(1, 2).fidelities()[0];
  double worst_noise = 0.0, worst_res = 0.0;
  for (int m = 2; m <= 10; ++m) {
    for (int n = 1; n < m; ++n) {
      const NoiseProfile p = symmetric_profile(n, m);
      worst_res = std::max(worst_res, std::abs(residual(p)));
      for (double v : p.noises()) worst_noise = std::max(worst_noise, std::abs(v - double(m - n) / (m * n)));
    }
  }
  o.pass = std::abs(f - 2.0 / 3.0) <= 1e-12 && worst_noise <= 1e-12 && worst_res < 1e-12;
  o.detail = "F(1->2) = " + fmt("%.15g", f) + ", max noise error " + fmt("%.1e", worst_noise) + ", max |residual| " +
             fmt("%.1e", worst_res);
  return o;
}

Outcome criterion4() {
  Outcome o;
  double worst_ng = 0.0, worst_g = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double nf = std::pow(10.0, -3.0 + 6.0 * i / 99.0);
    const auto pt = estimation_tradeoff(nf);
    worst_ng = std::max(worst_ng, std::abs(pt.n_estimate - (nf + 1) * (nf + 1) / (4 * nf)) / pt.n_estimate);
    const double F = pt.fidelity_copy;
    worst_g = std::max(worst_g, std::abs(pt.fidelity_estimate - 4 * F * (1 - F) / (4 * F * (1 - F) + 1)));
  }
  const auto one = estimation_tradeoff(1.0);
  const bool unit_point = one.n_estimate == 1.0 && one.fidelity_copy == 0.5 && one.fidelity_estimate == 0.5;

  // Finite-M check: n_1 = n_F and the remaining M-1 clones share the noise n_G
  // that solve_last_noise returns for them (fixed point by bisection).
  const int m = 10000;
  double worst_limit = 0.0;
  for (double nf : {0.05, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    auto gap = [&](double ng) {
      std::vector<double> partial(static_cast<std::size_t>(m - 1), ng);
      partial[0] = nf;
      try {
        return solve_last_noise(partial, 1, m).optimal - ng;
      } catch (const InfeasibleError&) {
        return std::numeric_limits<double>::infinity();
      }
    };
    const double expected = estimation_tradeoff(nf).n_estimate;
    double lo = 0.5 * expected, hi = 2.0 * expected;
    if (!(gap(lo) > 0.0 && gap(hi) < 0.0)) {
      worst_limit = std::numeric_limits<double>::infinity();
      continue;
    }
    for (int i = 0; i < 100; ++i) {
      const double mid = 0.5 * (lo + hi);
      (gap(mid) > 0.0 ? lo : hi) = mid;
    }
    worst_limit = std::max(worst_limit, std::abs(0.5 * (lo + hi) - expected));
  }
  o.pass = worst_ng <= 1e-12 && worst_g <= 1e-12 && unit_point && worst_limit <= 1e-3;
  o.detail = "n_G(n_F) rel err " + fmt("%.1e", worst_ng) + ", G(F) err " + fmt("%.1e", worst_g) +
             ", (1,1) on curve: " + (unit_point ? "yes" : "no") + ", M=1e4 limit err " + fmt("%.1e", worst_limit);
  return o;
}

Outcome criterion5(const std::vector<NoiseProfile>& profiles) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unif(-3.0, 3.0);
  double err_s = 0.0, err_g = 0.0, err_v = 0.0, err_mean = 0.0;
  for (const NoiseProfile& p : profiles) {
    const AmplifierCircuit c = build_interferometer(p);
    const int m = p.m_out();
    err_v = std::max(err_v, max_abs(Matrix(c.V.transpose() * c.V - Matrix::Identity(m, m))));
    const GaussianChannel ch = channel_from_amplifier(c, p);
    err_s = std::max(err_s, max_abs(Matrix(ch.S() - reference_s(p.n_in(), m))));
    err_g = std::max(err_g, max_abs(Matrix(ch.G() - reference_g(p))));
    const GaussianChannel full = cloner_channel(c, p);
    for (int a = 0; a < 20; ++a) {
      const Complex alpha(unif(rng), unif(rng));
      const std::vector<Complex> in(static_cast<std::size_t>(p.n_in()), alpha);
      const GaussianState out = apply_channel(full, GaussianState::coherent(in));
      for (int j = 0; j < m; ++j) err_mean = std::max(err_mean, std::abs(out.amplitude(j) - alpha));
    }
  }
  Outcome o;
  o.pass = err_s <= 1e-10 && err_g <= 1e-10 && err_v <= 1e-10 && err_mean <= 1e-10;
  o.detail = std::to_string(profiles.size()) + " profiles: max |S - S_ref| " + fmt("%.1e", err_s) +
             ", |G - G_opt| " + fmt("%.1e", err_g) + ", |V^T V - I| " + fmt("%.1e", err_v) + ", |mean - alpha| " +
             fmt("%.1e", err_mean);
  return o;
}

Outcome criterion6(const std::vector<NoiseProfile>& profiles) {
  double worst = 0.0;
  for (const NoiseProfile& p : profiles) {
    worst = std::max(worst, scheme_equivalence_check(p, calibrate_phase_convention(p)).max_discrepancy());
  }
  return {worst < 1e-9, "max discrepancy " + fmt("%.1e", worst) + " over " + std::to_string(profiles.size()) +
                            " profiles"};
}

Outcome criterion7(const std::vector<NoiseProfile>& profiles) {
  double worst_on = std::numeric_limits<double>::infinity();
  double worst_off = -std::numeric_limits<double>::infinity();
  double worst_feasible_side = std::numeric_limits<double>::infinity();
  for (const NoiseProfile& p : profiles) {
    worst_on = std::min(worst_on, cp_min_eigenvalue(optimal_channel(p)));
    // Scale the noises so the residual moves by -0.05 (infeasible side) or
    // +0.05, and rebuild the candidate channel from the perturbed profile.
    const double slope = p.sqrt_sum() * p.sqrt_sum() - p.excess() * p.total_noise();
    for (double delta : {-0.05, 0.05}) {
      std::vector<double> n(p.noises().begin(), p.noises().end());
      for (double& v : n) v *= 1.0 + delta / slope;
      const NoiseProfile q(p.n_in(), p.m_out(), n);
      const double ev = cp_min_eigenvalue(optimal_channel(q));
      if (delta < 0) {
        worst_off = std::max(worst_off, ev);
      } else {
        worst_feasible_side = std::min(worst_feasible_side, ev);
      }
    }
  }
  Outcome o;
  o.pass = worst_on >= -1e-10 && worst_off < -1e-4;
  o.detail = "min eig on surface " + fmt("%.1e", worst_on) + ", largest min eig at residual -0.05 " +
             fmt("%.2e", worst_off) + " (at +0.05: " + fmt("%.1e", worst_feasible_side) + ")";
  return o;
}

Outcome criterion8() {
  std::mt19937_64 rng(8);
  double worst_z = std::numeric_limits<double>::infinity(), worst_comp = 0.0, worst_gap = 0.0, worst_norm = 0.0;
  int violations = 0, failures = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 100; ++k) {
    std::uniform_int_distribution<int> pick_m(2, 6);
    const int m = pick_m(rng);
    std::uniform_int_distribution<int> pick_n(1, m - 1);
    const int n = pick_n(rng);
    const CostWeights x(testing_support::random_weights(rng, m));
    const WeightedDesign d = design_from_weights(x, n, m);
    const CertifiedProblem pr = build_problem(d.profile, x);
    const DualCertificate c = build_certificate(pr);
    const CertificateReport rep = verify_certificate(pr, c);
    worst_z = std::min(worst_z, rep.z_min_eigenvalue);
    worst_comp = std::max(worst_comp, rep.complementarity);
    worst_gap = std::max(worst_gap, rep.duality_gap);
    worst_norm = std::max(worst_norm, rep.normalization_error);
    if (!rep.pass(1e-9)) ++failures;
    const CostScanReport scan = random_feasible_cost_scan(pr, c, 1000, 1000 + k);
    violations += scan.bound_violations;
    worst_slack = std::min(worst_slack, scan.min_dual_slack);
    if (!scan.pass(1e-9)) ++failures;
  }
  Outcome o;
  o.pass = failures == 0 && worst_z >= -1e-9 && worst_comp < 1e-9 && worst_gap < 1e-9 && worst_norm <= 1e-9 &&
           violations == 0;
  o.detail = "100 instances: min eig Z " + fmt("%.1e", worst_z) + ", |ZA|/(|Z||A|) " + fmt("%.1e", worst_comp) +
             ", gap " + fmt("%.1e", worst_gap) + ", normalisation " + fmt("%.1e", worst_norm) +
             ", scan undercuts " + std::to_string(violations) + ", min slack " + fmt("%.1e", worst_slack);
  return o;
}

Outcome criterion9() {
  const NoiseProfile p = symmetric_profile(1, 2);
  const Complex alpha(1.0, 0.0);
  const SimConfig cfg{p, alpha, 1000000, 42, 8, 0};
  const SimResult r = run(cfg);
  const SimResult again = run(cfg);
  const Matrix ref = optimal_clone_covariance(p);
  double worst_cov = 0.0, worst_mean = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      worst_cov = std::max(worst_cov, std::abs(r.clone_cov(a, b) - ref(a, b)) / r.cov_standard_errors(a, b));
    }
  }
  const double target[4] = {std::numbers::sqrt2, std::numbers::sqrt2, 0.0, 0.0};
  for (int a = 0; a < 4; ++a) {
    worst_mean = std::max(worst_mean, std::abs(r.mean_quadratures(a) - target[a]) / r.mean_standard_errors(a));
  }
  const bool deterministic = r.clone_cov == again.clone_cov && r.mean_quadratures == again.mean_quadratures;
  Outcome o;
  o.pass = worst_cov <= 5.0 && worst_mean <= 5.0 && deterministic;
  o.detail = "1e6 shots: max |cov - ref|/SE " + fmt("%.2f", worst_cov) + ", max |mean - alpha|/SE " +
             fmt("%.2f", worst_mean) + ", cross cov " + fmt("%.4f", r.clone_cov(0, 1)) +
             ", repeat identical: " + (deterministic ? "yes" : "no");
  return o;
}

Outcome criterion10() {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> bump(0.02, 0.5);
  int mismatches = 0, on = 0, off = 0;
  for (int k = 0; k < 1000; ++k) {
    NoiseProfile p = testing_support::random_surface_profile(rng, 8);
    if (k % 2) {
      std::vector<double> n(p.noises().begin(), p.noises().end());
      const double f = k % 4 == 1 ? 1.0 + bump(rng) : 1.0 - bump(rng);
      for (double& v : n) v *= f;
      p = NoiseProfile(p.n_in(), p.m_out(), n);
    }
    const bool surface = on_surface(p, 1e-10);
    const double min_abs_eig =
        Eigen::SelfAdjointEigenSolver<Matrix>(commutator_matrix(p)).eigenvalues().cwiseAbs().minCoeff();
    const bool singular = min_abs_eig < 1e-9;
    (surface ? on : off)++;
    if (surface != singular) ++mismatches;
  }
  return {mismatches == 0 && on == 500 && off == 500,
          std::to_string(on) + " on-surface, " + std::to_string(off) + " off-surface, " + std::to_string(mismatches) +
              " mismatches"};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* title, double budget_s, const std::function<Outcome()>& fn) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = budget_s <= 0.0 || secs < budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("criterion %2d %s  %s: %s [%.2f s%s]\n", id, pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs,
                in_time ? "" : ", over budget");
    std::fflush(stdout);
  };

  const std::vector<NoiseProfile> profiles = optimal_profiles();
  report(1, "1->2 trade-off", 1.0, criterion1);
  report(2, "third-clone noise", 1.0, criterion2);
  report(3, "symmetric fidelity", 0.0, criterion3);
  report(4, "partial estimation", 0.0, criterion4);
  report(5, "circuit correctness", 10.0, [&] { return criterion5(profiles); });
  report(6, "scheme equivalence", 0.0, [&] { return criterion6(profiles); });
  report(7, "complete positivity", 0.0, [&] { return criterion7(profiles); });
  report(8, "certificate suite", 60.0, criterion8);
  report(9, "Monte Carlo", 60.0, criterion9);
  report(10, "surface <=> singular", 0.0, criterion10);
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
