#pragma once

#include "dqc1/circuit.hpp"
#include "dqc1/pauli.hpp"

namespace dqc1 {

/// Exact tableau conjugation g * p * g^dag for Clifford g.
PauliString conjugate_clifford(const PauliString& p, const Gate& g);

inline constexpr std::size_t kDefaultTermCap = 4096;

/// g * s * g^dag for an arbitrary gate of arity <= 3, by conjugating the
/// local Pauli factor through the dense gate matrix and re-projecting onto
/// the Pauli basis.  Throws TermBlowupError past the cap.
PauliSum conjugate_dense_gate(const PauliSum& s, const Gate& g,
                              std::size_t term_cap = kDefaultTermCap);

/// Clifford fast path per term, dense expansion otherwise.
PauliSum conjugate_gate(const PauliSum& s, const Gate& g,
                        std::size_t term_cap = kDefaultTermCap);

}  // namespace dqc1
