#pragma once

#include <string>
#include <vector>

#include "dqc1/pauli.hpp"

namespace dqc1 {

enum class GateKind { I, H, X, Y, Z, S, Sdg, T, Tdg, Swap };

/// A base gate plus up to two control qubits.  CX is X with one control, CZ
/// is Z with one control, CCX is X with two controls.
struct Gate {
  GateKind base = GateKind::I;
  std::vector<int> controls;  // at most 2
  std::vector<int> targets;   // 1, or 2 for Swap

  static Gate single(GateKind kind, int q) { return {kind, {}, {q}}; }
  static Gate i(int q) { return single(GateKind::I, q); }
  static Gate h(int q) { return single(GateKind::H, q); }
  static Gate x(int q) { return single(GateKind::X, q); }
  static Gate y(int q) { return single(GateKind::Y, q); }
  static Gate z(int q) { return single(GateKind::Z, q); }
  static Gate s(int q) { return single(GateKind::S, q); }
  static Gate sdg(int q) { return single(GateKind::Sdg, q); }
  static Gate t(int q) { return single(GateKind::T, q); }
  static Gate tdg(int q) { return single(GateKind::Tdg, q); }
  static Gate cx(int c, int t) { return {GateKind::X, {c}, {t}}; }
  static Gate cz(int c, int t) { return {GateKind::Z, {c}, {t}}; }
  static Gate swap(int a, int b) { return {GateKind::Swap, {}, {a, b}}; }
  static Gate ccx(int c1, int c2, int t) { return {GateKind::X, {c1, c2}, {t}}; }

  /// Qubits in local-matrix order: controls (most significant) then targets.
  std::vector<int> qubits() const;
  int arity() const { return int(controls.size() + targets.size()); }

  int max_qubit() const;
  void validate(int width) const;

  Gate inverse() const;

  /// Wrap with one more control qubit; throws CtrlDepthError past two.
  Gate controlled(int control) const;

  /// Conjugation by this gate maps Pauli strings to Pauli strings.
  bool is_clifford() const;

  /// 2^arity unitary with qubits() giving bit significance (first = MSB).
  DenseMatrix local_matrix() const;

  /// Canonical DSL spelling, e.g. "cx 1 2" or "ctrl-h 2 1".
  std::string name() const;

  friend bool operator==(const Gate& a, const Gate& b) = default;
};

struct Instruction {
  enum class Kind { Always, IfBit, Pair };

  Kind kind = Kind::Always;
  int bit = 0;  // 1-based classical input bit for IfBit / Pair
  std::vector<Gate> gates;        // Always, IfBit
  std::vector<Gate> branch_zero;  // Pair
  std::vector<Gate> branch_one;   // Pair

  static Instruction always(std::vector<Gate> g);
  static Instruction if_bit(int bit, std::vector<Gate> g);
  static Instruction pair(int bit, std::vector<Gate> zero,
                          std::vector<Gate> one);

  friend bool operator==(const Instruction& a, const Instruction& b) = default;
};

/// Classically-controlled circuit.  Instructions are listed in temporal
/// order: the first instruction acts first, i.e. it is the rightmost factor
/// of the overall unitary product.
struct Circuit {
  int width = 1;
  int input_len = 0;
  std::vector<Instruction> instructions;

  void validate() const;
  std::size_t gate_count() const;

  friend bool operator==(const Circuit& a, const Circuit& b) = default;
};

/// Flatten with input bits substituted; the result has no classical control.
std::vector<Gate> resolve(const Circuit& c, const std::string& input_bits);

/// Wrap every gate with one more control qubit.
std::vector<Gate> control_on(const std::vector<Gate>& gates, int control);

/// Reversed, gate-wise inverted list; the dense product is the inverse.
std::vector<Gate> adjoint_gates(const std::vector<Gate>& gates);

/// Instruction-level adjoint: resolve(adjoint_circuit(c), x) is the adjoint
/// gate list of resolve(c, x) for every input.
Circuit adjoint_circuit(const Circuit& c);

/// Swap control and target of every CX; throws NonCnotGateError otherwise.
Circuit reverse_cnot_dual(const Circuit& c);

/// Circuit whose resolved product is U(x) * Z1 * U(x)^dag * Z1.
Circuit square_for_trace(const Circuit& c);

/// Temporal concatenation (a first, then b).
Circuit concat(const Circuit& a, const Circuit& b);

}  // namespace dqc1
