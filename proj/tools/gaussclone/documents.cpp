#include "documents.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gaussclone/errors.hpp"

namespace gaussclone::cli {

using nlohmann::json;

namespace {

json matrix_json(const Matrix& m) {
  json data = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const json& j, const char* what) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto data = j.at("data").get<std::vector<double>>();
  if (rows < 0 || cols < 0 || static_cast<std::size_t>(rows * cols) != data.size()) {
    throw PreconditionError(std::string(what) + ": rows*cols does not match the data length");
  }
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[static_cast<std::size_t>(r * cols + c)];
  return m;
}

void require_kind(const json& j, const char* kind) {
  if (!j.is_object()) throw PreconditionError("document is not a JSON object");
  const int version = j.at("schema_version").get<int>();
  if (version != kSchemaVersion) {
    throw PreconditionError("unsupported schema_version " + std::to_string(version));
  }
  const auto k = j.at("kind").get<std::string>();
  if (k != kind) throw PreconditionError("expected a " + std::string(kind) + " document, got '" + k + "'");
}

// nlohmann's own exceptions become input errors.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed ") + what + " document: " + e.what());
  }
}

}  // namespace

DesignDocument DesignDocument::from_profile(const NoiseProfile& profile) {
  return {profile, std::nullopt, std::nullopt, gaussclone::residual(profile), profile.fidelities()};
}

json DesignDocument::to_json() const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "design";
  j["n_in"] = profile.n_in();
  j["m_out"] = profile.m_out();
  j["noises"] = std::vector<double>(profile.noises().begin(), profile.noises().end());
  if (weights) j["weights"] = *weights;
  if (lambda) j["lambda"] = *lambda;
  j["residual"] = residual;
  j["fidelities"] = fidelities;
  return j;
}

DesignDocument DesignDocument::from_json(const json& j) {
  return guarded("design", [&] {
    require_kind(j, "design");
    NoiseProfile profile(j.at("n_in").get<int>(), j.at("m_out").get<int>(), j.at("noises").get<std::vector<double>>());
    DesignDocument doc = from_profile(profile);
    if (j.contains("weights")) {
      doc.weights = j.at("weights").get<std::vector<double>>();
      if (doc.weights->size() != static_cast<std::size_t>(profile.m_out())) {
        throw PreconditionError("design document: weight count does not match m_out");
      }
    }
    if (j.contains("lambda")) doc.lambda = j.at("lambda").get<double>();
    const double stored = j.at("residual").get<double>();
    if (!(std::abs(stored - doc.residual) <= 1e-9)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "design document: stored residual " << stored << " does not match recomputed " << doc.residual;
      throw PreconditionError(msg.str());
    }
    return doc;
  });
}

const char* CircuitDocument::scheme() const {
  return std::holds_alternative<AmplifierCircuit>(circuit) ? "amplifier" : "feedforward";
}

json CircuitDocument::to_json() const {
  json params;
  if (const auto* amp = std::get_if<AmplifierCircuit>(&circuit)) {
    params = {{"t", amp->t}, {"g", amp->g}, {"V", matrix_json(amp->V)}, {"kappa", matrix_json(amp->kappa)}};
  } else {
    const auto& ff = std::get<FeedforwardCircuit>(circuit);
    params = {{"r_tap", ff.r_tap},
              {"gains", ff.gains},
              {"reflectances", ff.reflectances},
              {"phase_convention", to_string(ff.phase)}};
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "circuit";
  j["scheme"] = scheme();
  j["parameters"] = params;
  j["provenance"] = {{"design_hash", design_hash},
                     {"n_in", profile.n_in()},
                     {"m_out", profile.m_out()},
                     {"noises", std::vector<double>(profile.noises().begin(), profile.noises().end())}};
  return j;
}

CircuitDocument CircuitDocument::from_json(const json& j) {
  return guarded("circuit", [&] {
    require_kind(j, "circuit");
    const json& prov = j.at("provenance");
    NoiseProfile profile(prov.at("n_in").get<int>(), prov.at("m_out").get<int>(),
                         prov.at("noises").get<std::vector<double>>());
    const int m = profile.m_out();
    const std::string scheme = j.at("scheme").get<std::string>();
    const json& p = j.at("parameters");
    auto unit_interval = [](double v, const char* name) {
      if (!(v >= 0.0 && v <= 1.0)) throw PreconditionError(std::string(name) + " must lie in [0, 1]");
    };
    CircuitDocument doc{FeedforwardCircuit{}, profile, prov.at("design_hash").get<std::string>()};
    if (scheme == "amplifier") {
      AmplifierCircuit amp;
      amp.t = p.at("t").get<double>();
      amp.g = p.at("g").get<double>();
      amp.V = matrix_from_json(p.at("V"), "V");
      amp.kappa = matrix_from_json(p.at("kappa"), "kappa");
      unit_interval(amp.t, "t");
      if (!(amp.g >= 1.0)) throw PreconditionError("amplifier gain g must be >= 1");
      if (amp.V.rows() != m || amp.V.cols() != m) throw PreconditionError("V must be m_out x m_out");
      if (amp.kappa.rows() != m || amp.kappa.cols() != m - 1) throw PreconditionError("kappa must be m_out x (m_out-1)");
      doc.circuit = std::move(amp);
    } else if (scheme == "feedforward") {
      FeedforwardCircuit ff;
      ff.r_tap = p.at("r_tap").get<double>();
      ff.gains = p.at("gains").get<std::vector<double>>();
      ff.reflectances = p.at("reflectances").get<std::vector<double>>();
      ff.phase = phase_convention_from_string(p.at("phase_convention").get<std::string>());
      unit_interval(ff.r_tap, "r_tap");
      if (ff.gains.size() != static_cast<std::size_t>(m)) throw PreconditionError("expected m_out gains");
      if (ff.reflectances.size() != static_cast<std::size_t>(m - 1)) {
        throw PreconditionError("expected m_out - 1 reflectances");
      }
      for (double g : ff.gains) {
        if (!(g >= 0.0)) throw PreconditionError("electronic gains must be non-negative");
      }
      for (double r : ff.reflectances) unit_interval(r, "splitter reflectance");
      doc.circuit = std::move(ff);
    } else {
      throw PreconditionError("unknown scheme '" + scheme + "' (expected amplifier or feedforward)");
    }
    return doc;
  });
}

std::string document_hash(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw PreconditionError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text;
  if (!out) throw PreconditionError("failed writing '" + path + "'");
}

}  // namespace gaussclone::cli
