#include "dqc1/engines.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace dqc1 {

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Accept: return "accept";
    case Decision::Reject: return "reject";
    case Decision::Undetermined: return "undetermined";
  }
  return "?";
}

HeisenbergState pauli_run(const Circuit& c, const std::string& input_bits,
                          std::size_t term_cap) {
  c.validate();
  HeisenbergState st;
  st.width = c.width;
  st.observable = PauliSum::from_string(PauliString::z(c.width, 1));
  for (const auto& g : resolve(c, input_bits)) {
    st.observable = conjugate_gate(st.observable, g, term_cap);
  }
  return st;
}

double beta_of(const DenseState& state) {
  // Tr[rho Z1]; Z1 signs the MSB.
  const Eigen::Index dim = state.rho.rows();
  Complex acc = 0.0;
  for (Eigen::Index j = 0; j < dim; ++j) {
    acc += (j < dim / 2 ? 1.0 : -1.0) * state.rho(j, j);
  }
  if (std::abs(acc.imag()) > 1e-12) {
    throw Error("Tr[rho Z1] has a non-negligible imaginary part");
  }
  return acc.real();
}

double beta_of(const HeisenbergState& state) {
  const std::uint64_t z1 = 1ULL << (state.width - 1);
  Complex c = state.observable.coefficient(0, z1);
  if (std::abs(c.imag()) > 1e-12) {
    throw Error("Z1 coefficient has a non-negligible imaginary part");
  }
  return c.real();
}

double beta_dense(const Circuit& c, const std::string& input_bits) {
  const DenseMatrix u = circuit_unitary(c, input_bits);
  const Eigen::Index dim = u.rows();
  Eigen::VectorXd rho_diag(dim), z1(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    rho_diag(j) = j < dim / 2 ? 2.0 / double(dim) : 0.0;
    z1(j) = j < dim / 2 ? 1.0 : -1.0;
  }
  return diag_sandwich_trace(u, rho_diag, z1);
}

StateDecomposition decompose(const DenseState& state) {
  StateDecomposition d;
  d.beta = beta_of(state);
  if (d.beta * d.beta < 1.0 - 1e-12) {
    const Eigen::Index dim = state.rho.rows();
    // U Z1 U^dag = 2^w rho - 1.
    DenseMatrix uzu = double(dim) * state.rho - DenseMatrix::Identity(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      uzu(j, j) -= (j < dim / 2 ? 1.0 : -1.0) * d.beta;
    }
    d.r_part = uzu / std::sqrt(1.0 - d.beta * d.beta);
    d.defined_r = true;
  }
  return d;
}

double probability_zero(double beta) {
  if (std::abs(beta) > 1.0 + 1e-10) {
    throw Error("beta out of range: " + std::to_string(beta));
  }
  return (1.0 + std::clamp(beta, -1.0, 1.0)) / 2.0;
}

std::int64_t binomial_draw(std::int64_t shots, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::binomial_distribution<std::int64_t> dist(shots, std::clamp(p, 0.0, 1.0));
  return dist(rng);
}

SampleCounts sample(const Circuit& c, const std::string& input_bits,
                    std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw Error("shots must be >= 1");
  const double p = probability_zero(beta_dense(c, input_bits));
  SampleCounts counts;
  counts.zeros = binomial_draw(shots, p, seed);
  counts.ones = shots - counts.zeros;
  return counts;
}

double beta_cd(const Circuit& c, const std::string& input_bits, int c_pure,
               int d_meas) {
  c.validate();
  if (c_pure < 1 || c_pure > c.width || d_meas < 1 || d_meas > c.width) {
    throw QubitRangeError("c/d out of range for width " +
                          std::to_string(c.width));
  }
  const DenseMatrix u = circuit_unitary(c, input_bits);
  const Eigen::Index dim = u.rows();
  Eigen::VectorXd rho_diag(dim), proj(dim);
  // (1+Z)^{x c} / 2^w: uniform over indices whose first c bits are 0.
  // (1+Z)^{x d} / 2^d: projector onto first d bits all 0.
  const std::uint64_t c_mask = ((1ULL << c_pure) - 1) << (c.width - c_pure);
  const std::uint64_t d_mask = ((1ULL << d_meas) - 1) << (c.width - d_meas);
  const double pc = double(1ULL << c_pure) / double(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    rho_diag(j) = (std::uint64_t(j) & c_mask) == 0 ? pc : 0.0;
    proj(j) = (std::uint64_t(j) & d_mask) == 0 ? 1.0 : 0.0;
  }
  const double p0 = diag_sandwich_trace(u, rho_diag, proj);
  return 2.0 * p0 - 1.0;
}

Decision decide(double beta_hat, const DecisionPolicy& policy) {
  if (policy.q_bound < 1.0) {
    throw Error("decision bound q must be >= 1");
  }
  if (beta_hat >= 1.0 / policy.q_bound) return Decision::Accept;
  if (beta_hat <= -1.0 / policy.q_bound) return Decision::Reject;
  return Decision::Undetermined;
}

}  // namespace dqc1
