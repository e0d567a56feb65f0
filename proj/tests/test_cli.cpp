#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "gaussclone/cli.hpp"
#include "gaussclone/documents.hpp"
#include "gaussclone/errors.hpp"
#include "test_support.hpp"

using namespace gaussclone;
using namespace gaussclone::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "gaussclone");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Number printed after `key` on its line of command output.
double value_after(const std::string& text, const std::string& key) {
  const auto pos = text.find(key);
  if (pos == std::string::npos) throw std::runtime_error("missing '" + key + "' in:\n" + text);
  return std::stod(text.substr(pos + key.size()));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gaussclone_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    unsetenv("GAUSSCLONE_TOL");
  }
  void TearDown() override {
    unsetenv("GAUSSCLONE_TOL");
    fs::remove_all(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_design(const NoiseProfile& p, const std::string& name) {
    const std::string f = path(name);
    write_text_file(f, DesignDocument::from_profile(p).to_json().dump(2));
    return f;
  }
  std::string symmetric_design(const std::string& name = "design.json") {
    const std::string f = path(name);
    EXPECT_EQ(run({"design", "--symmetric", "--n-in", "1", "--m-out", "2", "--out", f}).code, kExitOk);
    return f;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, HelpAndUsage) {
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({}).code, kExitInput);
  EXPECT_EQ(run({"bogus"}).code, kExitInput);
  EXPECT_EQ(run({"design", "--n-in", "1"}).code, kExitInput);
}

TEST_F(CliTest, DesignSymmetricOneToTwo) {
  const std::string f = path("d.json");
  const Outcome o = run({"design", "--symmetric", "--n-in", "1", "--m-out", "2", "--out", f});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("noises: [0.5, 0.5]"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("lambda:"), std::string::npos);
  const json j = read_json_file(f);
  EXPECT_EQ(j.at("schema_version").get<int>(), 1);
  for (double fid : j.at("fidelities").get<std::vector<double>>()) EXPECT_NEAR(fid, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(j.at("lambda").get<double>(), -1.0, 1e-12);
}

TEST_F(CliTest, DesignUnitWeightsOneToThree) {
  const std::string f = path("d.json");
  ASSERT_EQ(run({"design", "--weights", "1,1,1", "--n-in", "1", "--m-out", "3", "--out", f}).code, kExitOk);
  for (double n : read_json_file(f).at("noises").get<std::vector<double>>()) EXPECT_NEAR(n, 2.0 / 3.0, 1e-12);
}

TEST_F(CliTest, DesignRejectsInvalidInput) {
  const Outcome neg = run({"design", "--weights", "1,-1", "--n-in", "1", "--m-out", "2"});
  EXPECT_EQ(neg.code, kExitInput);
  EXPECT_NE(neg.err.find("positive"), std::string::npos) << neg.err;
  EXPECT_EQ(run({"design", "--weights", "1,1", "--n-in", "1", "--m-out", "3"}).code, kExitInput);
  EXPECT_EQ(run({"design", "--weights", "1,1", "--n-in", "2", "--m-out", "2"}).code, kExitInput);
  EXPECT_EQ(run({"design", "--n-in", "1", "--m-out", "2"}).code, kExitInput);
  EXPECT_EQ(run({"design", "--symmetric", "--weights", "1,1", "--n-in", "1", "--m-out", "2"}).code, kExitInput);
  EXPECT_EQ(run({"design", "--symmetric", "--n-in", "3", "--m-out", "2"}).code, kExitInput);
}

TEST_F(CliTest, DesignFileRoundTrip) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + trial % 5;
    const int n = 1 + trial % (m - 1);
    const auto w = testing_support::random_weights(rng, m);
    std::string list;
    for (double x : w) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      list += (list.empty() ? "" : ",") + std::string(buf);
    }
    const std::string f = path("d.json");
    ASSERT_EQ(run({"design", "--weights", list, "--n-in", std::to_string(n), "--m-out", std::to_string(m), "--out", f})
                  .code,
              kExitOk);
    const json j = read_json_file(f);
    const DesignDocument doc = DesignDocument::from_json(j);
    EXPECT_NEAR(doc.residual, j.at("residual").get<double>(), 1e-12);
    EXPECT_EQ(doc.profile.noises().size(), static_cast<std::size_t>(m));
    EXPECT_EQ(DesignDocument::from_json(doc.to_json()).to_json(), doc.to_json());
  }
}

TEST_F(CliTest, DesignDocumentLoadRejectsTampering) {
  json j = read_json_file(symmetric_design());
  json bad = j;
  bad["residual"] = 0.01;
  EXPECT_THROW(DesignDocument::from_json(bad), PreconditionError);
  bad = j;
  bad["schema_version"] = 7;
  EXPECT_THROW(DesignDocument::from_json(bad), PreconditionError);
  bad = j;
  bad.erase("noises");
  EXPECT_THROW(DesignDocument::from_json(bad), PreconditionError);
  bad = j;
  bad["noises"] = "many";
  EXPECT_THROW(DesignDocument::from_json(bad), PreconditionError);

  j["residual"] = 1.0;
  const std::string f = path("tampered.json");
  write_text_file(f, j.dump());
  EXPECT_EQ(run({"certify", "--design", f}).code, kExitInput);
  EXPECT_EQ(run({"synth", "--design", f, "--scheme", "amplifier", "--out", path("c.json")}).code, kExitInput);
}

TEST_F(CliTest, SolveExamples) {
  const Outcome third = run({"solve", "--noises", "0.5,0.5", "--n-in", "1", "--m-out", "3"});
  ASSERT_EQ(third.code, kExitOk) << third.err;
  EXPECT_NEAR(value_after(third.out, "n_3 = "), 2.0, 1e-12);
  EXPECT_EQ(third.out.find("alternate"), std::string::npos) << "double root reported twice";

  const Outcome pair = run({"solve", "--noises", "0.5", "--n-in", "1", "--m-out", "2"});
  ASSERT_EQ(pair.code, kExitOk);
  EXPECT_NEAR(value_after(pair.out, "n_2 = "), 0.5, 1e-12);

  const Outcome bad = run({"solve", "--noises", "0.1667,0.1667", "--n-in", "1", "--m-out", "3"});
  EXPECT_EQ(bad.code, kExitInput);
  EXPECT_NE(bad.out.find("infeasible"), std::string::npos);
}

TEST_F(CliTest, SolvePrintsBothRootsAndMarksOptimal) {
  // d = 3, s = 3, T = 3: u = (3 -+ sqrt 3) / 2.
  const Outcome o = run({"solve", "--noises", "1,1,1", "--n-in", "1", "--m-out", "4"});
  ASSERT_EQ(o.code, kExitOk);
  const double small = (3 - std::sqrt(3.0)) / 2, large = (3 + std::sqrt(3.0)) / 2;
  EXPECT_NEAR(value_after(o.out, "n_4 = "), small * small, 1e-12);
  const auto alt = o.out.find("(alternate root)");
  ASSERT_NE(alt, std::string::npos);
  EXPECT_NEAR(value_after(o.out.substr(o.out.find('\n') + 1), "n_4 = "), large * large, 1e-12);
  EXPECT_NE(o.out.find("(optimal)"), std::string::npos);
}

TEST_F(CliTest, SolvePreconditions) {
  EXPECT_EQ(run({"solve", "--noises", "0.5", "--n-in", "1", "--m-out", "3"}).code, kExitInput);
  EXPECT_EQ(run({"solve", "--noises", "0.5,-0.1", "--n-in", "1", "--m-out", "3"}).code, kExitInput);
  EXPECT_EQ(run({"solve", "--noises", "0.5", "--n-in", "2", "--m-out", "2"}).code, kExitInput);
}

TEST_F(CliTest, TradeoffCurve) {
  const Outcome three = run({"tradeoff", "--points", "3"});
  ASSERT_EQ(three.code, kExitOk);
  EXPECT_NE(three.out.find("\n1,1,0.5,0.5\n"), std::string::npos) << three.out;
  EXPECT_EQ(three.out.rfind("n_F,n_G,F,G\n", 0), 0u);

  const std::string f = path("curve.csv");
  ASSERT_EQ(run({"tradeoff", "--points", "100", "--out", f}).code, kExitOk);
  std::istringstream csv(slurp(f));
  std::string line;
  std::getline(csv, line);
  int rows = 0;
  double prev_nf = 0.0;
  while (std::getline(csv, line)) {
    double nf, ng, F, G;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &nf, &ng, &F, &G), 4);
    EXPECT_GT(nf, prev_nf);
    prev_nf = nf;
    EXPECT_NEAR(ng, (nf + 1) * (nf + 1) / (4 * nf), 1e-12 * ng);
    EXPECT_NEAR(F, 1 / (1 + nf), 1e-12);
    EXPECT_NEAR(G, 1 / (1 + ng), 1e-12);
    ++rows;
  }
  EXPECT_EQ(rows, 100);
  EXPECT_NEAR(std::stod(slurp(f).substr(12)), 1e-3, 1e-18);
  EXPECT_EQ(run({"tradeoff", "--points", "1"}).code, kExitInput);
}

TEST_F(CliTest, SynthAmplifierExamples) {
  struct Case {
    NoiseProfile profile;
    double g, t;
  };
  const std::vector<Case> cases{{symmetric_profile(1, 2), std::sqrt(2.0), 1.0},
                                {symmetric_profile(1, 3), std::sqrt(3.0), 1.0},
                                {NoiseProfile(1, 2, {0.25, 1.0}), 1.5, std::sqrt(0.8)}};
  for (const auto& c : cases) {
    const std::string d = write_design(c.profile, "d.json");
    const std::string f = path("amp.json");
    const Outcome o = run({"synth", "--design", d, "--scheme", "amplifier", "--out", f});
    ASSERT_EQ(o.code, kExitOk) << o.err;
    EXPECT_NE(o.out.find("PASS  unitarity_error"), std::string::npos);
    EXPECT_NE(o.out.find("PASS  kappa_kappaT_error"), std::string::npos);
    const json j = read_json_file(f);
    EXPECT_EQ(j.at("scheme"), "amplifier");
    EXPECT_NEAR(j.at("parameters").at("g").get<double>(), c.g, 1e-12);
    EXPECT_NEAR(j.at("parameters").at("t").get<double>(), c.t, 1e-12);
    EXPECT_EQ(j.at("provenance").at("design_hash"), document_hash(read_json_file(d)));
    EXPECT_EQ(run({"verify", "--circuit", f}).code, kExitOk);
  }
}

TEST_F(CliTest, SynthFeedforwardSymmetric) {
  const std::string f = path("ff.json");
  const Outcome o = run({"synth", "--design", symmetric_design(), "--scheme", "feedforward", "--out", f});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const json p = read_json_file(f).at("parameters");
  EXPECT_NEAR(p.at("r_tap").get<double>(), std::sqrt(0.5), 1e-12);
  for (double g : p.at("gains").get<std::vector<double>>()) EXPECT_NEAR(g, std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(p.at("reflectances").at(0).get<double>(), std::sqrt(0.5), 1e-12);
  EXPECT_EQ(run({"verify", "--circuit", f}).code, kExitOk);
}

TEST_F(CliTest, SynthRandomProfilesVerify) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    const NoiseProfile p = testing_support::random_surface_profile(rng, 6);
    const std::string d = write_design(p, "d.json");
    for (const char* scheme : {"amplifier", "feedforward"}) {
      const std::string f = path("c.json");
      ASSERT_EQ(run({"synth", "--design", d, "--scheme", scheme, "--out", f}).code, kExitOk);
      const Outcome v = run({"verify", "--circuit", f});
      EXPECT_EQ(v.code, kExitOk) << scheme << "\n" << v.out;
    }
  }
}

TEST_F(CliTest, SynthRejectsOffSurfaceAndBadInput) {
  const std::string off = write_design(NoiseProfile(1, 2, {0.3, 0.3}), "off.json");
  const Outcome o = run({"synth", "--design", off, "--scheme", "amplifier", "--out", path("c.json")});
  EXPECT_EQ(o.code, kExitInput);
  EXPECT_NE(o.err.find("residual"), std::string::npos) << o.err;
  EXPECT_FALSE(fs::exists(path("c.json")));
  EXPECT_EQ(run({"synth", "--design", symmetric_design(), "--scheme", "laser", "--out", path("c.json")}).code,
            kExitInput);
  EXPECT_EQ(run({"synth", "--design", path("missing.json"), "--scheme", "amplifier", "--out", path("c.json")}).code,
            kExitInput);
  // M = N has no amplifier circuit.
  const std::string ident = write_design(NoiseProfile(2, 2, {0.0, 0.0}), "ident.json");
  EXPECT_EQ(run({"synth", "--design", ident, "--scheme", "amplifier", "--out", path("c.json")}).code, kExitInput);
  EXPECT_EQ(run({"synth", "--design", ident, "--scheme", "feedforward", "--out", path("c.json")}).code, kExitOk);
}

TEST_F(CliTest, VerifyDetectsTamperedCircuits) {
  const std::string d = symmetric_design();
  const std::string amp = path("amp.json"), ff = path("ff.json");
  ASSERT_EQ(run({"synth", "--design", d, "--scheme", "amplifier", "--out", amp}).code, kExitOk);
  ASSERT_EQ(run({"synth", "--design", d, "--scheme", "feedforward", "--out", ff}).code, kExitOk);

  json j = read_json_file(amp);
  j["parameters"]["V"]["data"][0] = j["parameters"]["V"]["data"][0].get<double>() + 1e-6;
  write_text_file(path("amp_bad.json"), j.dump());
  const std::string report = path("report.json");
  const Outcome o = run({"verify", "--circuit", path("amp_bad.json"), "--out", report});
  EXPECT_EQ(o.code, kExitVerification);
  EXPECT_NE(o.out.find("FAIL  unitarity_error"), std::string::npos) << o.out;
  ASSERT_TRUE(fs::exists(report));
  EXPECT_FALSE(read_json_file(report).at("pass").get<bool>());

  j = read_json_file(ff);
  j["parameters"]["gains"][1] = 0.8;
  write_text_file(path("ff_bad.json"), j.dump());
  EXPECT_EQ(run({"verify", "--circuit", path("ff_bad.json")}).code, kExitVerification);

  // Flipping the displacement convention breaks the clone means.
  j = read_json_file(ff);
  j["parameters"]["phase_convention"] = "conjugate";
  write_text_file(path("ff_phase.json"), j.dump());
  const Outcome ph = run({"verify", "--circuit", path("ff_phase.json")});
  EXPECT_EQ(ph.code, kExitVerification);
  EXPECT_NE(ph.out.find("FAIL  clone_mean_error"), std::string::npos) << ph.out;
}

TEST_F(CliTest, VerifyRejectsMalformedCircuits) {
  const std::string ff = path("ff.json");
  ASSERT_EQ(run({"synth", "--design", symmetric_design(), "--scheme", "feedforward", "--out", ff}).code, kExitOk);
  const json good = read_json_file(ff);
  auto expect_input_error = [&](json bad) {
    write_text_file(path("bad.json"), bad.dump());
    EXPECT_EQ(run({"verify", "--circuit", path("bad.json")}).code, kExitInput) << bad.dump();
  };
  json bad = good;
  bad["parameters"]["r_tap"] = 1.5;
  expect_input_error(bad);
  bad = good;
  bad["parameters"]["reflectances"] = json::array();
  expect_input_error(bad);
  bad = good;
  bad["scheme"] = "teleporter";
  expect_input_error(bad);
  bad = good;
  bad["kind"] = "design";
  expect_input_error(bad);
  bad = good;
  bad["parameters"]["phase_convention"] = "sideways";
  expect_input_error(bad);
  write_text_file(path("bad.json"), "{ not json");
  EXPECT_EQ(run({"verify", "--circuit", path("bad.json")}).code, kExitInput);
}

TEST_F(CliTest, CertifySymmetric) {
  const std::string report = path("cert.json");
  const Outcome o = run({"certify", "--design", symmetric_design(), "--out", report});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("certificate: PASS"), std::string::npos);
  const json j = read_json_file(report);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_LT(std::abs(j.at("checks").at("duality_gap").get<double>()), 1e-10);
  EXPECT_EQ(j.at("scan").at("trials").get<int>(), 1000);
  EXPECT_EQ(j.at("scan").at("bound_violations").get<int>(), 0);
}

TEST_F(CliTest, CertifyWithoutStoredWeights) {
  const std::string d = write_design(design_from_weights(CostWeights({1.0, 2.0, 5.0}), 1, 3).profile, "d.json");
  EXPECT_EQ(run({"certify", "--design", d, "--trials", "200"}).code, kExitOk);
}

TEST_F(CliTest, CertifyFailureAndPreconditions) {
  const std::string d = symmetric_design();
  // An absurdly tight tolerance turns rounding noise into a failed check.
  setenv("GAUSSCLONE_TOL", "1e-300", 1);
  const std::string report = path("cert.json");
  const Outcome o = run({"certify", "--design", d, "--out", report});
  EXPECT_EQ(o.code, kExitVerification);
  EXPECT_NE(o.out.find("certificate: FAIL"), std::string::npos);
  ASSERT_TRUE(fs::exists(report));
  EXPECT_FALSE(read_json_file(report).at("pass").get<bool>());
  unsetenv("GAUSSCLONE_TOL");

  EXPECT_EQ(run({"certify", "--design", d, "--trials", "0"}).code, kExitInput);
  const std::string ident = write_design(NoiseProfile(2, 2, {0.0, 0.0}), "ident.json");
  EXPECT_EQ(run({"certify", "--design", ident}).code, kExitInput);
  json j = read_json_file(d);
  j["weights"] = {1.0, 3.0};
  write_text_file(path("wrong_weights.json"), j.dump());
  EXPECT_EQ(run({"certify", "--design", path("wrong_weights.json")}).code, kExitInput);
}

TEST_F(CliTest, ToleranceEnvironmentVariable) {
  setenv("GAUSSCLONE_TOL", "abc", 1);
  EXPECT_EQ(run({"tradeoff", "--points", "3"}).code, kExitInput);
  setenv("GAUSSCLONE_TOL", "-1e-10", 1);
  EXPECT_EQ(run({"tradeoff", "--points", "3"}).code, kExitInput);
  setenv("GAUSSCLONE_TOL", "1e-8", 1);
  EXPECT_EQ(run({"tradeoff", "--points", "3"}).code, kExitOk);
  // A loose tolerance accepts a slightly off-surface design.
  const std::string near = write_design(NoiseProfile(1, 2, {0.5, 0.5 + 1e-9}), "near.json");
  EXPECT_EQ(run({"synth", "--design", near, "--scheme", "feedforward", "--out", path("c.json")}).code, kExitOk);
  unsetenv("GAUSSCLONE_TOL");
  EXPECT_EQ(run({"synth", "--design", near, "--scheme", "feedforward", "--out", path("c.json")}).code, kExitInput);
}

TEST_F(CliTest, SimulateSymmetricMillionShots) {
  const std::string ff = path("ff.json");
  ASSERT_EQ(run({"synth", "--design", symmetric_design(), "--scheme", "feedforward", "--out", ff}).code, kExitOk);
  const Outcome o = run({"simulate", "--circuit", ff, "--alpha", "1,0", "--shots", "1000000", "--seed", "42",
                         "--shards", "4"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const json s = json::parse(o.out);
  EXPECT_EQ(s.at("shots").get<long long>(), 1000000);
  EXPECT_TRUE(s.at("within_5_se").get<bool>());
  EXPECT_LE(s.at("max_mean_z").get<double>(), 5.0);
  EXPECT_LE(s.at("max_cov_z").get<double>(), 5.0);
  const auto cov = s.at("clone_cov");
  EXPECT_NEAR(cov[0][0].get<double>(), 2.0, 0.02);
  EXPECT_NEAR(cov[0][1].get<double>(), 1.0, 0.02);
}

TEST_F(CliTest, SimulateByteStable) {
  const std::string ff = path("ff.json");
  const std::string d = write_design(NoiseProfile(1, 2, {0.25, 1.0}), "d.json");
  ASSERT_EQ(run({"synth", "--design", d, "--scheme", "feedforward", "--out", ff}).code, kExitOk);
  auto sim = [&](const std::string& csv, const std::string& threads) {
    return run({"simulate", "--circuit", ff, "--alpha", "0.3,-0.7", "--shots", "500", "--seed", "9", "--shards", "3",
                "--threads", threads, "--out", csv});
  };
  const Outcome a = sim(path("a.csv"), "1");
  const Outcome b = sim(path("b.csv"), "3");
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  const std::string csv = slurp(path("a.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 500 * 2);
  const Outcome c = run({"simulate", "--circuit", ff, "--alpha", "0.3,-0.7", "--shots", "500", "--seed", "10",
                         "--shards", "3"});
  EXPECT_NE(a.out, c.out);
}

TEST_F(CliTest, SimulatePreconditions) {
  const std::string d = symmetric_design();
  const std::string amp = path("amp.json"), ff = path("ff.json");
  ASSERT_EQ(run({"synth", "--design", d, "--scheme", "amplifier", "--out", amp}).code, kExitOk);
  ASSERT_EQ(run({"synth", "--design", d, "--scheme", "feedforward", "--out", ff}).code, kExitOk);
  EXPECT_EQ(run({"simulate", "--circuit", amp, "--shots", "10"}).code, kExitInput);
  EXPECT_EQ(run({"simulate", "--circuit", ff, "--shots", "0"}).code, kExitInput);
  EXPECT_EQ(run({"simulate", "--circuit", ff, "--shards", "0"}).code, kExitInput);
  EXPECT_EQ(run({"simulate", "--circuit", ff, "--alpha", "1"}).code, kExitInput);
}

TEST_F(CliTest, DocumentsByteStable) {
  const std::string d1 = path("d1.json"), d2 = path("d2.json");
  ASSERT_EQ(run({"design", "--weights", "0.3,2,7", "--n-in", "1", "--m-out", "3", "--out", d1}).code, kExitOk);
  ASSERT_EQ(run({"design", "--weights", "0.3,2,7", "--n-in", "1", "--m-out", "3", "--out", d2}).code, kExitOk);
  EXPECT_EQ(slurp(d1), slurp(d2));
  for (const char* scheme : {"amplifier", "feedforward"}) {
    ASSERT_EQ(run({"synth", "--design", d1, "--scheme", scheme, "--out", path("c1.json")}).code, kExitOk);
    ASSERT_EQ(run({"synth", "--design", d2, "--scheme", scheme, "--out", path("c2.json")}).code, kExitOk);
    EXPECT_EQ(slurp(path("c1.json")), slurp(path("c2.json")));
  }
  ASSERT_EQ(run({"certify", "--design", d1, "--seed", "3", "--trials", "100", "--out", path("r1.json")}).code, kExitOk);
  ASSERT_EQ(run({"certify", "--design", d2, "--seed", "3", "--trials", "100", "--out", path("r2.json")}).code, kExitOk);
  EXPECT_EQ(slurp(path("r1.json")), slurp(path("r2.json")));
  ASSERT_EQ(run({"tradeoff", "--points", "17", "--out", path("t1.csv")}).code, kExitOk);
  ASSERT_EQ(run({"tradeoff", "--points", "17", "--out", path("t2.csv")}).code, kExitOk);
  EXPECT_EQ(slurp(path("t1.csv")), slurp(path("t2.csv")));
}

TEST(DocumentHash, StableAndSensitive) {
  const json a{{"x", 1.0}, {"y", "z"}};
  EXPECT_EQ(document_hash(a), document_hash(json::parse(a.dump())));
  EXPECT_NE(document_hash(a), document_hash(json{{"x", 2.0}, {"y", "z"}}));
  EXPECT_EQ(document_hash(a).rfind("fnv1a64:", 0), 0u);
  EXPECT_EQ(document_hash(a).size(), 8u + 16u);
}
