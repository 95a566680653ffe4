#pragma once

#include <string>
#include <vector>

#include "dqc1/circuit.hpp"
#include "dqc1/pauli.hpp"

namespace dqc1 {

/// Width limit for dense evaluation; DQC1_DENSE_CAP overrides the default 12.
int dense_cap();

void check_dense_width(int width);

/// rho = (1 + Z1) / 2^w, diagonal.
DenseMatrix start_state_matrix(int width);

/// Left-multiply m by the local unitary of g embedded at its qubits.
void apply_gate_left(DenseMatrix& m, const Gate& g, int width);

/// Full 2^w unitary of a resolved gate list (last-listed gate leftmost).
DenseMatrix gates_unitary(const std::vector<Gate>& gates, int width);

DenseMatrix circuit_unitary(const Circuit& c, const std::string& input_bits);

/// Density operator with its invariants checkable on demand.
struct DenseState {
  int width = 1;
  DenseMatrix rho;

  /// Hermiticity and unit trace (1e-10); PSD check is opt-in.
  void validate(bool check_psd = false) const;
};

DenseState dense_run(const Circuit& c, const std::string& input_bits);

/// Tr[U rho U^dag M] for diagonal rho and diagonal M, without forming rho'.
double diag_sandwich_trace(const DenseMatrix& u,
                           const Eigen::VectorXd& rho_diag,
                           const Eigen::VectorXd& meas_diag);

}  // namespace dqc1
