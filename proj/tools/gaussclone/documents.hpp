#pragma once

// JSON documents exchanged between the CLI commands.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaussclone/circuit.hpp"
#include "gaussclone/design.hpp"

namespace gaussclone::cli {

inline constexpr int kSchemaVersion = 1;

struct DesignDocument {
  NoiseProfile profile;
  std::optional<std::vector<double>> weights;
  std::optional<double> lambda;
  double residual = 0.0;
  std::vector<double> fidelities;

  static DesignDocument from_profile(const NoiseProfile& profile);
  nlohmann::json to_json() const;
  /// Recomputes the residual and requires it to match the stored value within
  /// 1e-9. Throws PreconditionError on malformed input.
  static DesignDocument from_json(const nlohmann::json& j);
};

struct CircuitDocument {
  std::variant<AmplifierCircuit, FeedforwardCircuit> circuit;
  NoiseProfile profile;  // provenance
  std::string design_hash;

  const char* scheme() const;
  nlohmann::json to_json() const;
  /// Structural checks only (sizes, ranges); numeric invariants are the job
  /// of `verify`.
  static CircuitDocument from_json(const nlohmann::json& j);
};

/// 64-bit FNV-1a of the compact JSON dump, as "fnv1a64:<16 hex digits>".
std::string document_hash(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gaussclone::cli
