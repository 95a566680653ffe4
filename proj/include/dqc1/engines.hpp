#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dqc1/circuit.hpp"
#include "dqc1/conjugate.hpp"
#include "dqc1/dense.hpp"
#include "dqc1/pauli.hpp"

namespace dqc1 {

/// Heisenberg-picture tracking of Z1: observable = U Z1 U^dag.
struct HeisenbergState {
  int width = 1;
  PauliSum observable = PauliSum(1);
};

/// beta / workspace split of the evolved state; R is left undefined when
/// beta^2 = 1.
struct StateDecomposition {
  double beta = 1.0;
  bool defined_r = false;
  DenseMatrix r_part;  // traceless, Z1-orthogonal when defined_r
};

struct DecisionPolicy {
  double q_bound = 3.0;  // evaluated q(n), >= 1
  double p_bound = 3.0;  // evaluated promise bound p(n)
};

enum class Decision { Accept, Reject, Undetermined };

std::string to_string(Decision d);

struct SampleCounts {
  std::int64_t zeros = 0;
  std::int64_t ones = 0;
};

HeisenbergState pauli_run(const Circuit& c, const std::string& input_bits,
                          std::size_t term_cap = kDefaultTermCap);

double beta_of(const DenseState& state);
double beta_of(const HeisenbergState& state);

/// beta of the resolved circuit through the dense engine without forming the
/// density matrix (start state and Z1 are both diagonal).
double beta_dense(const Circuit& c, const std::string& input_bits);

StateDecomposition decompose(const DenseState& state);

double probability_zero(double beta);

SampleCounts sample(const Circuit& c, const std::string& input_bits,
                    std::int64_t shots, std::uint64_t seed);

/// Draw zeros ~ Binomial(shots, p) with a deterministic seeded generator.
std::int64_t binomial_draw(std::int64_t shots, double p, std::uint64_t seed);

/// Generalized output with c pure input qubits and a d-qubit all-zeros
/// measurement.
double beta_cd(const Circuit& c, const std::string& input_bits, int c_pure,
               int d_meas);

Decision decide(double beta_hat, const DecisionPolicy& policy);

}  // namespace dqc1
