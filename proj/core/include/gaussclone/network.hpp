#pragma once

// Heisenberg-picture propagation through linear optics, phase-insensitive
// amplifiers and feedforward. Every mode is tracked as a linear combination
// a = sum_k (mu_k a_k + nu_k a_k^dagger) of the network's input modes, which
// is enough to derive the Gaussian channel a circuit implements.

#include <vector>

#include "gaussclone/gaussian.hpp"

namespace gaussclone {

/// Linear combination of input annihilation and creation operators.
struct ModeOperator {
  std::vector<Complex> annihilation;
  std::vector<Complex> creation;

  static ModeOperator input(int index, int num_inputs);
  static ModeOperator zero(int num_inputs);

  int num_inputs() const { return static_cast<int>(annihilation.size()); }
  ModeOperator dagger() const;

  ModeOperator& operator+=(const ModeOperator& other);
  friend ModeOperator operator+(ModeOperator a, const ModeOperator& b) { return a += b; }
  friend ModeOperator operator*(Complex c, ModeOperator a);
};

class LinearNetwork {
 public:
  explicit LinearNetwork(int num_inputs);

  int num_inputs() const { return num_inputs_; }
  const ModeOperator& mode(int i) const { return modes_.at(static_cast<std::size_t>(i)); }
  void set_mode(int i, ModeOperator op) { modes_.at(static_cast<std::size_t>(i)) = std::move(op); }

  /// Real beam splitter: a_i <- t a_i - r a_j, a_j <- r a_i + t a_j.
  void beam_splitter(int i, int j, double t, double r);

  /// Phase-insensitive amplifier with amplitude gain g >= 1:
  /// a_s <- g a_s + sqrt(g^2-1) a_i^dagger, a_i <- g a_i + sqrt(g^2-1) a_s^dagger.
  void amplifier(int signal, int idler, double gain);

  /// Passive interferometer: out_j = sum_k u(j, k) in_k over the listed modes.
  void interferometer(const std::vector<int>& modes, const ComplexMatrix& u);

  /// Quadrature transfer matrix (2 outputs x 2 inputs) of the listed modes,
  /// using the (x..., p...) ordering on both sides.
  Matrix quadrature_map(const std::vector<int>& outputs) const;

  /// Gaussian channel seen by the `signal` inputs when every other input is
  /// vacuum.
  GaussianChannel channel(const std::vector<int>& outputs, const std::vector<int>& signal) const;

 private:
  int num_inputs_;
  std::vector<ModeOperator> modes_;
};

/// Quadrature rows (x row, p row) of a single operator.
Matrix quadrature_rows(const ModeOperator& op);

}  // namespace gaussclone
