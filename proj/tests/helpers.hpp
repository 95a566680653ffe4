#pragma once

#include <random>

#include "dqc1/circuit.hpp"
#include "dqc1/dense.hpp"
#include "dqc1/pauli.hpp"

namespace dqc1::testing {

inline PauliString random_pauli(int width, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> mask(0, (1ULL << width) - 1);
  std::uniform_int_distribution<int> phase(0, 3);
  return PauliString::from_masks(width, mask(rng), mask(rng), phase(rng));
}

/// Independent oracle: conjugate through full dense matrices.
inline DenseMatrix dense_conjugate(const PauliString& p, const Gate& g) {
  const DenseMatrix u = gates_unitary({g}, p.width());
  return u * p.to_dense() * u.adjoint();
}

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline std::string bits_for(int value, int len) {
  std::string s;
  for (int b = len - 1; b >= 0; --b) s.push_back((value >> b) & 1 ? '1' : '0');
  return s;
}

}  // namespace dqc1::testing
