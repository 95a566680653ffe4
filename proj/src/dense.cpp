#include "dqc1/dense.hpp"

#include <Eigen/Eigenvalues>
#include <cstdlib>

namespace dqc1 {

int dense_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("DQC1_DENSE_CAP")) {
      int v = std::atoi(env);
      if (v >= 1 && v <= 24) return v;
    }
    return 12;
  }();
  return cap;
}

void check_dense_width(int width) {
  if (width > dense_cap()) {
    throw DenseCapError("width " + std::to_string(width) +
                        " exceeds dense cap " + std::to_string(dense_cap()));
  }
}

DenseMatrix start_state_matrix(int width) {
  const Eigen::Index dim = Eigen::Index(1) << width;
  DenseMatrix rho = DenseMatrix::Zero(dim, dim);
  const double p = 2.0 / double(dim);
  // Qubit 1 is the MSB; (1 + Z1)/2^w weights the MSB=0 half.
  for (Eigen::Index j = 0; j < dim / 2; ++j) rho(j, j) = p;
  return rho;
}

void apply_gate_left(DenseMatrix& m, const Gate& g, int width) {
  g.validate(width);
  const DenseMatrix local = g.local_matrix();
  const std::vector<int> qs = g.qubits();
  const int k = int(qs.size());
  const Eigen::Index dim = Eigen::Index(1) << width;
  const Eigen::Index sub = Eigen::Index(1) << k;

  std::vector<std::uint64_t> bits(k);
  std::uint64_t gate_mask = 0;
  for (int j = 0; j < k; ++j) {
    bits[j] = 1ULL << (width - qs[j]);  // qs[0] is the local MSB
    gate_mask |= bits[j];
  }

  Eigen::VectorXcd scratch(sub);
  for (Eigen::Index col = 0; col < dim; ++col) {
    for (std::uint64_t base = 0; base < std::uint64_t(dim); ++base) {
      if ((base & gate_mask) != 0) continue;
      // Gather the 2^k rows that mix under this gate.
      for (Eigen::Index s = 0; s < sub; ++s) {
        std::uint64_t row = base;
        for (int j = 0; j < k; ++j) {
          if (s & (Eigen::Index(1) << (k - 1 - j))) row |= bits[j];
        }
        scratch(s) = m(Eigen::Index(row), col);
      }
      Eigen::VectorXcd mixed = local * scratch;
      for (Eigen::Index s = 0; s < sub; ++s) {
        std::uint64_t row = base;
        for (int j = 0; j < k; ++j) {
          if (s & (Eigen::Index(1) << (k - 1 - j))) row |= bits[j];
        }
        m(Eigen::Index(row), col) = mixed(s);
      }
    }
  }
}

DenseMatrix gates_unitary(const std::vector<Gate>& gates, int width) {
  check_dense_width(width);
  const Eigen::Index dim = Eigen::Index(1) << width;
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  for (const auto& g : gates) apply_gate_left(u, g, width);
  return u;
}

DenseMatrix circuit_unitary(const Circuit& c, const std::string& input_bits) {
  c.validate();
  return gates_unitary(resolve(c, input_bits), c.width);
}

void DenseState::validate(bool check_psd) const {
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-10) {
    throw Error("density matrix not Hermitian (deviation " +
                std::to_string(herm) + ")");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-10) {
    throw Error("density matrix trace differs from 1");
  }
  if (check_psd) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(rho,
                                                  Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8) {
      throw Error("density matrix has a negative eigenvalue");
    }
  }
}

DenseState dense_run(const Circuit& c, const std::string& input_bits) {
  const DenseMatrix u = circuit_unitary(c, input_bits);
  DenseState st;
  st.width = c.width;
  st.rho = u * start_state_matrix(c.width) * u.adjoint();
  return st;
}

double diag_sandwich_trace(const DenseMatrix& u,
                           const Eigen::VectorXd& rho_diag,
                           const Eigen::VectorXd& meas_diag) {
  // Tr[U rho U^dag M] = sum_ij M_ii |U_ij|^2 rho_jj for diagonal rho, M.
  return meas_diag.transpose() * u.cwiseAbs2() * rho_diag;
}

}  // namespace dqc1
