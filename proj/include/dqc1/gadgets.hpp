#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dqc1/circuit.hpp"
#include "dqc1/engines.hpp"

namespace dqc1 {

struct TraceEstimate {
  double re_hat = 0.0;
  std::int64_t shots = 0;
  double half_width = 0.0;
  std::optional<double> exact;  // dense-oracle Re Tr[U]/2^w when width permits
};

struct WitnessReport {
  Complex v1;  // Tr[rho (1 - Z1)(1 + Z2)]
  Complex v2;  // Tr[rho (X1 + iY1)(X2 + iY2)]
  bool entangled_flag = false;
};

struct CornerReport {
  int t = 0;
  Complex trace_u;
  Complex trace_uprime;
  double diff = 0.0;
  double bound = 0.0;  // 2t
};

struct FourierReport {
  double lhs = 0.0;  // brute-force sign sum, scaled by 2^{-5w/2}
  double rhs = 0.0;  // Tr[V]/2^w by dense evaluation
};

/// Hadamard-test wrapper H1 * ctrl1(U) * H1 on width w+1; its beta is
/// Re Tr[U]/2^w.  Rejects circuits that already carry two controls.
Circuit trace_estimation_circuit(const Circuit& u);

/// Same circuit; the Y1 expectation of its final dense state equals
/// kImagTraceSign * Im Tr[U]/2^w.
Circuit imag_trace_circuit(const Circuit& u);

/// Sign frozen against the dense oracle (verified in tests on S and T):
/// the Y1 expectation of the gadget state is -Im Tr[U]/2^w.
inline constexpr double kImagTraceSign = -1.0;

double y1_expectation(const DenseState& state);

TraceEstimate estimate_trace(const Circuit& u, const std::string& input_bits,
                             std::int64_t shots, std::uint64_t seed,
                             double confidence);

/// Two-sided Hoeffding half-width on beta_hat = 2 zeros/shots - 1.
double hoeffding_half_width(std::int64_t shots, double confidence);

/// beta = (-1)^{x1 AND x2}, any width >= 1, two input bits.
Circuit and_gadget(int width = 1);
/// beta = (-1)^{x1 XOR x2}.
Circuit xor_gadget(int width = 1);
/// beta = (-1)^{NOT x1}.
Circuit not_gadget(int width = 1);

/// The two-qubit entangling preparation plus its expected Pauli expansion
/// (2 + X1X2 - Y1Y2 + Z1 - Z2)/2^{w+1}.
struct EntangledExample {
  Circuit circuit;
  PauliSum expected;
};

EntangledExample entangled_example(int width);

WitnessReport witness_check(const DenseState& state);

/// CNOT-reversal compilation U_hat^dag * X1 * U_hat of a CNOT-only circuit;
/// its beta is +-1 and equals 2C(x)-1 for the classical zero-probability C.
Circuit parity_l_compile(const Circuit& c);

/// GF(2) bit-vector run of a CNOT-only circuit from basis state |10...0>;
/// returns 1.0 when qubit 1 ends at |0>, else 0.0.
double classical_cnot_zero_probability(const Circuit& c,
                                       const std::string& input_bits);

/// Two-partition composition: partition two computes each
/// derived bit, controls the main-partition gates, then uncomputes.
Circuit reduction_compose(const std::vector<Circuit>& r_circuits,
                          const Circuit& main);

/// Evaluate the derived input string R(x) through the classical oracle.
std::string derived_input(const std::vector<Circuit>& r_circuits,
                          const std::string& input_bits);

/// Width w+2s circuit whose beta approximates beta_{2,1}(u)/3 within
/// 1/(3*4^{s-1}).
Circuit markov_mixing_circuit(const Circuit& u, int s);

/// Trace comparison of the word A_t*U*...*A_1*U against the corner-flipped
/// U' = U - 2|-><-|; requires U to act as identity on span{e0, e1}.
CornerReport corner_pair_experiment(const std::vector<DenseMatrix>& word,
                                    const DenseMatrix& u);

/// identity(2) block plus a Haar-random unitary on the complement.
DenseMatrix random_corner_unitary(int width, std::uint64_t seed);

/// Permutation-oracle identity: brute GF(2) sign sum against the dense trace
/// of V = H^w U H^w U H^w U.
FourierReport fourier_permutation_experiment(
    const std::vector<std::uint32_t>& pi, int width);

}  // namespace dqc1
