#include "gaussclone/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaussclone/certificate.hpp"
#include "gaussclone/circuit.hpp"
#include "gaussclone/design.hpp"
#include "gaussclone/documents.hpp"
#include "gaussclone/errors.hpp"
#include "gaussclone/simulator.hpp"

namespace gaussclone::cli {

using nlohmann::json;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num_list(std::span<const double> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += num(v[i]);
  }
  return s + "]";
}

double tolerance_from_env() {
  const char* raw = std::getenv("GAUSSCLONE_TOL");
  if (raw == nullptr || *raw == '\0') return kAlgebraicTol;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(raw, &end);
  if (errno != 0 || end == raw || *end != '\0' || !std::isfinite(v) || v <= 0.0) {
    throw PreconditionError(std::string("GAUSSCLONE_TOL must be a positive number, got '") + raw + "'");
  }
  return v;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

// One named numeric check: passes when value <= threshold.
struct Check {
  std::string name;
  double value;
  double threshold;
  bool pass() const { return value <= threshold; }
};

json checks_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"pass", c.pass()}});
  }
  return arr;
}

void print_checks(std::ostream& out, const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    out << (c.pass() ? "  PASS  " : "  FAIL  ") << c.name << " = " << num(c.value) << " (<= " << num(c.threshold)
        << ")\n";
  }
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

const std::vector<Complex>& probe_amplitudes() {
  static const std::vector<Complex> probes{{0.6, 0.8}, {1.0, -0.5}, {-2.0, 0.25}};
  return probes;
}

// Channel-level checks shared by both schemes.
void channel_checks(const GaussianChannel& ch, const NoiseProfile& profile, double tol, std::vector<Check>& checks) {
  const Matrix S_ref = clone_map(profile.n_in(), profile.m_out());
  const Matrix G_ref = optimal_noise_matrix(profile);
  const double scale = 1.0 + max_abs(G_ref);
  checks.push_back({"channel_S_error", max_abs(Matrix(ch.S() - S_ref)), tol});
  checks.push_back({"channel_G_error", max_abs(Matrix(ch.G() - G_ref)), tol * scale});
  checks.push_back({"cp_violation", std::max(0.0, -cp_min_eigenvalue(ch)), tol * scale});
}

std::vector<Check> verify_amplifier(const AmplifierCircuit& c, const NoiseProfile& profile, double tol) {
  std::vector<Check> checks;
  const int m = profile.m_out();
  const GainTransmittance gt = gain_and_transmittance(profile, tol);
  checks.push_back({"gain_formula_error", std::abs(c.g - gt.gain), tol * gt.gain});
  checks.push_back({"transmittance_formula_error", std::abs(c.t - gt.transmittance), tol});
  checks.push_back({"unitarity_error", max_abs(Matrix(c.V.transpose() * c.V - Matrix::Identity(m, m))), tol});
  const Matrix P = commutator_matrix(profile);
  checks.push_back({"kappa_kappaT_error", max_abs(Matrix(c.kappa * c.kappa.transpose() - P)), tol * (1 + max_abs(P))});
  channel_checks(channel_from_amplifier(c, profile), profile, tol, checks);
  const GaussianChannel full = cloner_channel(c, profile);
  double mean_err = 0.0;
  for (Complex alpha : probe_amplitudes()) {
    const std::vector<Complex> inputs(static_cast<std::size_t>(profile.n_in()), alpha);
    const GaussianState out = apply_channel(full, GaussianState::coherent(inputs));
    for (int j = 0; j < m; ++j) mean_err = std::max(mean_err, std::abs(out.amplitude(j) - alpha));
  }
  checks.push_back({"clone_mean_error", mean_err, tol});
  return checks;
}

std::vector<Check> verify_feedforward(const FeedforwardCircuit& c, const NoiseProfile& profile, double tol) {
  std::vector<Check> checks;
  const int n = profile.n_in();
  const int m = profile.m_out();
  const double r_tap = std::sqrt(static_cast<double>(m - n) / ((1.0 + profile.total_noise()) * n));
  checks.push_back({"r_tap_formula_error", std::abs(c.r_tap - r_tap), tol});
  double gain_err = 0.0;
  for (int j = 0; j < m; ++j) gain_err = std::max(gain_err, std::abs(c.gains[j] - std::sqrt(profile.noise(j))));
  checks.push_back({"gain_formula_error", gain_err, tol});
  const FeedforwardCircuit ref = feedforward_params(profile, c.phase, tol);
  double refl_err = 0.0;
  for (std::size_t k = 0; k < c.reflectances.size(); ++k) {
    refl_err = std::max(refl_err, std::abs(c.reflectances[k] - ref.reflectances[k]));
  }
  checks.push_back({"reflectance_recursion_error", refl_err, tol});
  double mean_err = 0.0;
  for (Complex alpha : probe_amplitudes()) {
    for (Complex z : feedforward_clone_means(c, profile, alpha)) mean_err = std::max(mean_err, std::abs(z - alpha));
  }
  checks.push_back({"clone_mean_error", mean_err, tol});
  channel_checks(channel_from_feedforward(c, profile), profile, tol, checks);
  return checks;
}

struct DesignArgs {
  std::vector<double> weights;
  bool symmetric = false;
  int n_in = 0;
  int m_out = 0;
  std::string out;
};

int cmd_design(const DesignArgs& a, std::ostream& out) {
  DesignDocument doc = [&] {
    if (a.symmetric) {
      DesignDocument d = DesignDocument::from_profile(symmetric_profile(a.n_in, a.m_out));
      if (a.m_out > a.n_in) {
        const CostWeights w = weights_from_profile(d.profile);
        d.weights = std::vector<double>(w.values().begin(), w.values().end());
        d.lambda = w.lagrange();
      }
      return d;
    }
    for (double w : a.weights) {
      if (!(w > 0.0) || !std::isfinite(w)) throw PreconditionError("weights must be positive, got " + num(w));
    }
    if (static_cast<int>(a.weights.size()) != a.m_out) {
      throw PreconditionError("expected " + std::to_string(a.m_out) + " weights (one per clone), got " +
                              std::to_string(a.weights.size()));
    }
    const WeightedDesign wd = design_from_weights(CostWeights(a.weights), a.n_in, a.m_out);
    DesignDocument d = DesignDocument::from_profile(wd.profile);
    d.weights = a.weights;
    d.lambda = wd.weights.lagrange();
    return d;
  }();
  out << "noises: " << num_list(doc.profile.noises()) << "\n";
  out << "fidelities: " << num_list(doc.fidelities) << "\n";
  out << "residual: " << num(doc.residual) << "\n";
  out << "lambda: " << (doc.lambda ? num(*doc.lambda) : std::string("none")) << "\n";
  if (!a.out.empty()) write_text_file(a.out, pretty(doc.to_json()));
  return kExitOk;
}

struct SolveArgs {
  std::vector<double> noises;
  int n_in = 0;
  int m_out = 0;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const LastNoiseSolution s = solve_last_noise(a.noises, a.n_in, a.m_out);
    out << "n_" << a.m_out << " = " << num(s.optimal) << " (optimal)\n";
    if (s.alternate) out << "n_" << a.m_out << " = " << num(*s.alternate) << " (alternate root)\n";
    return kExitOk;
  } catch (const InfeasibleError& e) {
    out << "infeasible\n";
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

struct SynthArgs {
  std::string design;
  std::string scheme;
  std::string out;
};

int cmd_synth(const SynthArgs& a, double tol, std::ostream& out) {
  const json dj = read_json_file(a.design);
  const DesignDocument design = DesignDocument::from_json(dj);
  const NoiseProfile& p = design.profile;
  if (!on_surface(p, tol)) {
    throw PreconditionError("design residual " + num(design.residual) + " is not zero: profile is off the optimal surface");
  }
  CircuitDocument doc{FeedforwardCircuit{}, p, document_hash(dj)};
  std::vector<Check> checks;
  if (a.scheme == "amplifier") {
    const AmplifierCircuit c = build_interferometer(p, tol);
    const int m = p.m_out();
    const Matrix P = commutator_matrix(p);
    checks.push_back({"unitarity_error", max_abs(Matrix(c.V.transpose() * c.V - Matrix::Identity(m, m))), tol});
    checks.push_back({"kappa_kappaT_error", max_abs(Matrix(c.kappa * c.kappa.transpose() - P)), tol * (1 + max_abs(P))});
    out << "scheme: amplifier\n";
    out << "g: " << num(c.g) << "\nt: " << num(c.t) << "\n";
    doc.circuit = c;
  } else {
    const FeedforwardCircuit c = feedforward_params(p, calibrate_phase_convention(p, Complex(0.6, 0.8), tol), tol);
    const auto [rmin, rmax] = c.reflectances.empty()
                                  ? std::pair{0.0, 0.0}
                                  : std::pair{*std::min_element(c.reflectances.begin(), c.reflectances.end()),
                                              *std::max_element(c.reflectances.begin(), c.reflectances.end())};
    checks.push_back({"reflectance_below_zero", std::max(0.0, -rmin), 0.0});
    checks.push_back({"reflectance_above_one", std::max(0.0, rmax - 1.0), 0.0});
    out << "scheme: feedforward\n";
    out << "r_tap: " << num(c.r_tap) << "\n";
    out << "gains: " << num_list(c.gains) << "\n";
    out << "reflectances: " << num_list(c.reflectances) << "\n";
    out << "phase_convention: " << to_string(c.phase) << "\n";
    doc.circuit = c;
  }
  print_checks(out, checks);
  for (const auto& c : checks) {
    if (!c.pass()) throw PreconditionError("circuit invariant '" + c.name + "' violated: " + num(c.value));
  }
  write_text_file(a.out, pretty(doc.to_json()));
  return kExitOk;
}

struct VerifyArgs {
  std::string circuit;
  std::string out;
};

int cmd_verify(const VerifyArgs& a, double tol, std::ostream& out) {
  const CircuitDocument doc = CircuitDocument::from_json(read_json_file(a.circuit));
  const std::vector<Check> checks = std::holds_alternative<AmplifierCircuit>(doc.circuit)
                                        ? verify_amplifier(std::get<AmplifierCircuit>(doc.circuit), doc.profile, tol)
                                        : verify_feedforward(std::get<FeedforwardCircuit>(doc.circuit), doc.profile, tol);
  const bool pass = all_pass(checks);
  out << "scheme: " << doc.scheme() << "\n";
  print_checks(out, checks);
  out << "verify: " << (pass ? "PASS" : "FAIL") << "\n";
  if (!a.out.empty()) {
    const json report{{"schema_version", kSchemaVersion},
                      {"kind", "verify_report"},
                      {"scheme", doc.scheme()},
                      {"design_hash", doc.design_hash},
                      {"checks", checks_json(checks)},
                      {"pass", pass}};
    write_text_file(a.out, pretty(report));
  }
  return pass ? kExitOk : kExitVerification;
}

struct CertifyArgs {
  std::string design;
  int trials = 1000;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_certify(const CertifyArgs& a, double tol, std::ostream& out) {
  // Eigenvalues of matrix products: one decade looser than the algebraic tolerance.
  const double cert_tol = 10.0 * tol;
  const DesignDocument design = DesignDocument::from_json(read_json_file(a.design));
  const NoiseProfile& p = design.profile;
  if (p.m_out() == p.n_in()) throw PreconditionError("certify requires M > N (the N = M cloner is the identity)");
  const CertifiedProblem pr = design.weights ? build_problem(p, CostWeights(*design.weights, design.lambda))
                                             : build_problem(p);
  const DualCertificate cert = build_certificate(pr);
  const CertificateReport rep = verify_certificate(pr, cert);
  const CostScanReport scan = random_feasible_cost_scan(pr, cert, a.trials, a.seed);
  const bool pass = rep.pass(cert_tol) && scan.pass(cert_tol);

  out << "lambda: " << num(cert.lambda) << "\n";
  out << "primal_cost: " << num(rep.primal_cost) << "\n";
  out << "dual_bound: " << num(rep.dual_bound) << "\n";
  out << "duality_gap: " << num(rep.duality_gap) << "\n";
  out << "z_min_eigenvalue: " << num(rep.z_min_eigenvalue) << "\n";
  out << "complementarity: " << num(rep.complementarity) << "\n";
  out << "normalization_error: " << num(rep.normalization_error) << "\n";
  out << "scan: " << scan.trials << " trials, min cost " << num(scan.min_cost) << ", " << scan.bound_violations
      << " violations\n";
  out << "certificate: " << (pass ? "PASS" : "FAIL") << "\n";

  if (!a.out.empty()) {
    const json certificate{{"lambda", cert.lambda},
                           {"eta", cert.eta},
                           {"dual_bound", cert.dual_bound},
                           {"X_diagonal", std::vector<double>(cert.X.diagonal().data(),
                                                              cert.X.diagonal().data() + cert.X.rows())},
                           {"Y", matrix_to_json(cert.Y)}};
    const json report{{"trace_identity_error", rep.trace_identity_error},
                      {"complementarity", rep.complementarity},
                      {"complementarity_abs", rep.complementarity_abs},
                      {"z_min_eigenvalue", rep.z_min_eigenvalue},
                      {"a_min_eigenvalue", rep.a_min_eigenvalue},
                      {"primal_cost", rep.primal_cost},
                      {"dual_bound", rep.dual_bound},
                      {"duality_gap", rep.duality_gap},
                      {"normalization_error", rep.normalization_error},
                      {"y_asymmetry", rep.y_asymmetry},
                      {"y_constraint_error", rep.y_constraint_error},
                      {"stationarity_identity_error", rep.stationarity_identity_error},
                      {"projector_error", rep.projector_error},
                      {"block_diagonal_error", rep.block_diagonal_error},
                      {"block_min_eigenvalue", rep.block_min_eigenvalue},
                      {"noise_cost", rep.noise_cost},
                      {"conversion_slope", rep.conversion.slope},
                      {"conversion_offset", rep.conversion.offset},
                      {"conversion_error", rep.conversion_error},
                      {"pass", rep.pass(cert_tol)}};
    const json scan_json{{"trials", scan.trials},
                         {"seed", a.seed},
                         {"min_cost", scan.min_cost},
                         {"dual_bound", scan.dual_bound},
                         {"min_dual_slack", scan.min_dual_slack},
                         {"max_trace_identity_error", scan.max_trace_identity_error},
                         {"bound_violations", scan.bound_violations},
                         {"included_optimum", scan.included_optimum},
                         {"optimum_cost_error", scan.optimum_cost_error},
                         {"pass", scan.pass(cert_tol)}};
    const json doc{{"schema_version", kSchemaVersion}, {"kind", "certificate_report"},
                   {"tolerance", cert_tol},           {"certificate", certificate},
                   {"checks", report},                {"scan", scan_json},
                   {"pass", pass}};
    write_text_file(a.out, pretty(doc));
  }
  return pass ? kExitOk : kExitVerification;
}

struct SimulateArgs {
  std::string circuit;
  std::vector<double> alpha{0.0, 0.0};
  std::int64_t shots = 100000;
  std::uint64_t seed = 1;
  int shards = 1;
  int threads = 0;
  std::string out;
};

double z_score(double diff, double se) {
  if (se > 0.0) return std::abs(diff) / se;
  return std::abs(diff) <= 1e-12 ? 0.0 : std::numeric_limits<double>::max();
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const CircuitDocument doc = CircuitDocument::from_json(read_json_file(a.circuit));
  const auto* ff = std::get_if<FeedforwardCircuit>(&doc.circuit);
  if (ff == nullptr) throw PreconditionError("simulate needs a feedforward circuit (got scheme 'amplifier')");
  if (a.alpha.size() != 2) throw PreconditionError("--alpha takes two numbers: re,im");
  if (a.shots < 1) throw PreconditionError("--shots must be at least 1");
  if (a.shards < 1) throw PreconditionError("--shards must be at least 1");
  if (a.threads < 0) throw PreconditionError("--threads must be non-negative");
  const Complex alpha(a.alpha[0], a.alpha[1]);
  const SimConfig cfg{doc.profile, alpha, a.shots, a.seed, a.shards, a.threads};
  const SimResult r = run(cfg, *ff);

  const int m = doc.profile.m_out();
  const Matrix expected_cov = optimal_clone_covariance(doc.profile);
  double max_mean_z = 0.0;
  for (int j = 0; j < m; ++j) {
    max_mean_z = std::max(max_mean_z, z_score(r.mean_quadratures(j) - std::numbers::sqrt2 * alpha.real(),
                                              r.mean_standard_errors(j)));
    max_mean_z = std::max(max_mean_z, z_score(r.mean_quadratures(m + j) - std::numbers::sqrt2 * alpha.imag(),
                                              r.mean_standard_errors(m + j)));
  }
  double max_cov_z = 0.0;
  for (int i = 0; i < 2 * m; ++i)
    for (int k = 0; k < 2 * m; ++k)
      max_cov_z = std::max(max_cov_z, z_score(r.clone_cov(i, k) - expected_cov(i, k), r.cov_standard_errors(i, k)));

  json means = json::array();
  for (Complex z : r.clone_means) means.push_back({z.real(), z.imag()});
  const json summary{{"schema_version", kSchemaVersion},
                     {"kind", "simulation_summary"},
                     {"shots", r.shots_used},
                     {"seed", a.seed},
                     {"shards", a.shards},
                     {"alpha", {alpha.real(), alpha.imag()}},
                     {"clone_means", means},
                     {"clone_cov", matrix_to_json(r.clone_cov)},
                     {"expected_cov", matrix_to_json(expected_cov)},
                     {"max_mean_z", max_mean_z},
                     {"max_cov_z", max_cov_z},
                     {"within_5_se", max_mean_z <= 5.0 && max_cov_z <= 5.0}};
  out << pretty(summary);
  if (!a.out.empty()) {
    std::ostringstream csv;
    write_samples_csv(cfg, *ff, csv);
    write_text_file(a.out, csv.str());
  }
  return kExitOk;
}

struct TradeoffArgs {
  int points = 101;
  std::string out;
};

int cmd_tradeoff(const TradeoffArgs& a, std::ostream& out) {
  if (a.points < 2) throw PreconditionError("--points must be at least 2");
  std::string csv = "n_F,n_G,F,G\n";
  for (int i = 0; i < a.points; ++i) {
    const double n_f = std::pow(10.0, -3.0 + 6.0 * i / (a.points - 1));
    const EstimationTradeoffPoint pt = estimation_tradeoff(n_f);
    csv += num(pt.n_copy) + "," + num(pt.n_estimate) + "," + num(pt.fidelity_copy) + "," +
           num(pt.fidelity_estimate) + "\n";
  }
  if (a.out.empty()) {
    out << csv;
  } else {
    write_text_file(a.out, csv);
    out << "wrote " << a.points << " points to " << a.out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Design, synthesize, certify and simulate optimal Gaussian cloners of coherent states"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 2 input or precondition error, 3 verification failure.\n"
             "GAUSSCLONE_TOL overrides the algebraic tolerance (default 1e-10).");

  DesignArgs design;
  auto* design_cmd = app.add_subcommand("design", "Optimal noise profile for given cost weights");
  auto* w_opt = design_cmd->add_option("--weights", design.weights, "Positive weights w1,..,wM")->delimiter(',');
  auto* sym_opt = design_cmd->add_flag("--symmetric", design.symmetric, "Symmetric cloner");
  w_opt->excludes(sym_opt);
  design_cmd->add_option("--n-in", design.n_in, "Number of input copies N")->required();
  design_cmd->add_option("--m-out", design.m_out, "Number of clones M")->required();
  design_cmd->add_option("--out", design.out, "Write the design document here");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Noise of the last clone given the others");
  solve_cmd->add_option("--noises", solve.noises, "Noises n1,..,n(M-1)")->delimiter(',')->required();
  solve_cmd->add_option("--n-in", solve.n_in, "Number of input copies N")->required();
  solve_cmd->add_option("--m-out", solve.m_out, "Number of clones M")->required();

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Synthesize a circuit from a design document");
  synth_cmd->add_option("--design", synth.design, "Design document")->required();
  synth_cmd->add_option("--scheme", synth.scheme, "amplifier or feedforward")
      ->required()
      ->check(CLI::IsMember({"amplifier", "feedforward"}));
  synth_cmd->add_option("--out", synth.out, "Write the circuit document here")->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a circuit document against the cloner invariants");
  verify_cmd->add_option("--circuit", verify.circuit, "Circuit document")->required();
  verify_cmd->add_option("--out", verify.out, "Write the JSON report here");

  CertifyArgs certify;
  auto* certify_cmd = app.add_subcommand("certify", "Build and check the dual optimality certificate");
  certify_cmd->add_option("--design", certify.design, "Design document")->required();
  certify_cmd->add_option("--trials", certify.trials, "Random feasible-cost samples")->capture_default_str();
  certify_cmd->add_option("--seed", certify.seed, "Seed of the cost scan")->capture_default_str();
  certify_cmd->add_option("--out", certify.out, "Write the JSON report here");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo run of a feedforward circuit");
  sim_cmd->add_option("--circuit", sim.circuit, "Feedforward circuit document")->required();
  sim_cmd->add_option("--alpha", sim.alpha, "Input amplitude re,im")->delimiter(',')->expected(2);
  sim_cmd->add_option("--shots", sim.shots, "Number of shots")->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
  sim_cmd->add_option("--shards", sim.shards, "Independent random streams")->capture_default_str();
  sim_cmd->add_option("--threads", sim.threads, "Worker threads (0 = all cores); never changes results")
      ->capture_default_str();
  sim_cmd->add_option("--out", sim.out, "Stream raw samples to this CSV");

  TradeoffArgs tradeoff;
  auto* tradeoff_cmd = app.add_subcommand("tradeoff", "Copy / estimate fidelity trade-off curve");
  tradeoff_cmd->add_option("--points", tradeoff.points, "Log-spaced points in [1e-3, 1e3]")->capture_default_str();
  tradeoff_cmd->add_option("--out", tradeoff.out, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const double tol = tolerance_from_env();
    if (*design_cmd) {
      if (!design.symmetric && w_opt->count() == 0) throw PreconditionError("design needs --weights or --symmetric");
      return cmd_design(design, out);
    }
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*synth_cmd) return cmd_synth(synth, tol, out);
    if (*verify_cmd) return cmd_verify(verify, tol, out);
    if (*certify_cmd) return cmd_certify(certify, tol, out);
    if (*sim_cmd) return cmd_simulate(sim, out);
    if (*tradeoff_cmd) return cmd_tradeoff(tradeoff, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace gaussclone::cli
