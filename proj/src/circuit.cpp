#include "dqc1/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace dqc1 {

namespace {

int base_target_count(GateKind kind) {
  return kind == GateKind::Swap ? 2 : 1;
}

std::string base_name(GateKind kind) {
  switch (kind) {
    case GateKind::I: return "i";
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Swap: return "swap";
  }
  return "?";
}

DenseMatrix base_matrix(GateKind kind) {
  using std::numbers::pi;
  const Complex i(0.0, 1.0);
  const double r = 1.0 / std::sqrt(2.0);
  DenseMatrix m;
  switch (kind) {
    case GateKind::I:
      m = DenseMatrix::Identity(2, 2);
      break;
    case GateKind::H:
      m.resize(2, 2);
      m << r, r, r, -r;
      break;
    case GateKind::X:
      m.resize(2, 2);
      m << 0, 1, 1, 0;
      break;
    case GateKind::Y:
      m.resize(2, 2);
      m << 0, -i, i, 0;
      break;
    case GateKind::Z:
      m.resize(2, 2);
      m << 1, 0, 0, -1;
      break;
    case GateKind::S:
      m.resize(2, 2);
      m << 1, 0, 0, i;
      break;
    case GateKind::Sdg:
      m.resize(2, 2);
      m << 1, 0, 0, -i;
      break;
    case GateKind::T:
      // exp(i Z pi/8) up to global phase; the standard diag(1, e^{i pi/4}).
      m.resize(2, 2);
      m << 1, 0, 0, std::exp(i * (pi / 4.0));
      break;
    case GateKind::Tdg:
      m.resize(2, 2);
      m << 1, 0, 0, std::exp(-i * (pi / 4.0));
      break;
    case GateKind::Swap:
      m = DenseMatrix::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 2) = 1;
      m(2, 1) = 1;
      m(3, 3) = 1;
      break;
  }
  return m;
}

}  // namespace

std::vector<int> Gate::qubits() const {
  std::vector<int> qs = controls;
  qs.insert(qs.end(), targets.begin(), targets.end());
  return qs;
}

int Gate::max_qubit() const {
  int m = 0;
  for (int q : controls) m = std::max(m, q);
  for (int q : targets) m = std::max(m, q);
  return m;
}

void Gate::validate(int width) const {
  if (controls.size() > 2) {
    throw CtrlDepthError("more than two control qubits");
  }
  if (int(targets.size()) != base_target_count(base)) {
    throw QubitRangeError("gate " + base_name(base) +
                          " has wrong target count");
  }
  std::set<int> seen;
  for (int q : qubits()) {
    if (q < 1 || q > width) {
      throw QubitRangeError("qubit " + std::to_string(q) +
                            " out of range for width " + std::to_string(width));
    }
    if (!seen.insert(q).second) {
      throw QubitRangeError("duplicate qubit " + std::to_string(q));
    }
  }
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (base) {
    case GateKind::S: g.base = GateKind::Sdg; break;
    case GateKind::Sdg: g.base = GateKind::S; break;
    case GateKind::T: g.base = GateKind::Tdg; break;
    case GateKind::Tdg: g.base = GateKind::T; break;
    default: break;  // self-inverse
  }
  return g;
}

Gate Gate::controlled(int control) const {
  if (controls.size() >= 2) {
    throw CtrlDepthError("control nesting depth would exceed 2");
  }
  for (int q : qubits()) {
    if (q == control) {
      throw QubitRangeError("control qubit " + std::to_string(control) +
                            " collides with gate qubits");
    }
  }
  Gate g = *this;
  g.controls.insert(g.controls.begin(), control);
  return g;
}

bool Gate::is_clifford() const {
  if (controls.empty()) {
    switch (base) {
      case GateKind::I:
      case GateKind::H:
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Z:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::Swap:
        return true;
      default:
        return false;
    }
  }
  if (controls.size() == 1) {
    return base == GateKind::X || base == GateKind::Z;
  }
  return false;
}

DenseMatrix Gate::local_matrix() const {
  DenseMatrix m = base_matrix(base);
  for (std::size_t i = 0; i < controls.size(); ++i) {
    // One more control: block-diagonal(identity, m), control as new MSB.
    Eigen::Index d = m.rows();
    DenseMatrix c = DenseMatrix::Identity(2 * d, 2 * d);
    c.block(d, d, d, d) = m;
    m = std::move(c);
  }
  return m;
}

std::string Gate::name() const {
  if (controls.size() == 1 && base == GateKind::X) return "cx";
  if (controls.size() == 1 && base == GateKind::Z) return "cz";
  if (controls.size() == 2 && base == GateKind::X) return "ccx";
  std::string n = base_name(base);
  for (std::size_t i = 0; i < controls.size(); ++i) n = "ctrl-" + n;
  return n;
}

Instruction Instruction::always(std::vector<Gate> g) {
  Instruction ins;
  ins.kind = Kind::Always;
  ins.gates = std::move(g);
  return ins;
}

Instruction Instruction::if_bit(int bit, std::vector<Gate> g) {
  Instruction ins;
  ins.kind = Kind::IfBit;
  ins.bit = bit;
  ins.gates = std::move(g);
  return ins;
}

Instruction Instruction::pair(int bit, std::vector<Gate> zero,
                              std::vector<Gate> one) {
  Instruction ins;
  ins.kind = Kind::Pair;
  ins.bit = bit;
  ins.branch_zero = std::move(zero);
  ins.branch_one = std::move(one);
  return ins;
}

void Circuit::validate() const {
  if (width < 1) throw QubitRangeError("width must be positive");
  if (input_len < 0) throw QubitRangeError("input arity must be non-negative");
  for (const auto& ins : instructions) {
    if (ins.kind != Instruction::Kind::Always) {
      if (ins.bit < 1 || ins.bit > input_len) {
        throw QubitRangeError("selector bit " + std::to_string(ins.bit) +
                              " out of range for input arity " +
                              std::to_string(input_len));
      }
    }
    for (const auto& g : ins.gates) g.validate(width);
    for (const auto& g : ins.branch_zero) g.validate(width);
    for (const auto& g : ins.branch_one) g.validate(width);
  }
}

std::size_t Circuit::gate_count() const {
  std::size_t n = 0;
  for (const auto& ins : instructions) {
    n += ins.gates.size() + ins.branch_zero.size() + ins.branch_one.size();
  }
  return n;
}

std::vector<Gate> resolve(const Circuit& c, const std::string& input_bits) {
  if (int(input_bits.size()) != c.input_len) {
    throw WidthMismatchError("input has " +
                             std::to_string(input_bits.size()) +
                             " bits, circuit expects " +
                             std::to_string(c.input_len));
  }
  for (char b : input_bits) {
    if (b != '0' && b != '1') {
      throw WidthMismatchError("input bits must be '0' or '1'");
    }
  }
  std::vector<Gate> out;
  for (const auto& ins : c.instructions) {
    switch (ins.kind) {
      case Instruction::Kind::Always:
        out.insert(out.end(), ins.gates.begin(), ins.gates.end());
        break;
      case Instruction::Kind::IfBit:
        if (input_bits[ins.bit - 1] == '1') {
          out.insert(out.end(), ins.gates.begin(), ins.gates.end());
        }
        break;
      case Instruction::Kind::Pair: {
        const auto& branch = input_bits[ins.bit - 1] == '1' ? ins.branch_one
                                                            : ins.branch_zero;
        out.insert(out.end(), branch.begin(), branch.end());
        break;
      }
    }
  }
  return out;
}

std::vector<Gate> control_on(const std::vector<Gate>& gates, int control) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (const auto& g : gates) out.push_back(g.controlled(control));
  return out;
}

std::vector<Gate> adjoint_gates(const std::vector<Gate>& gates) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

Circuit adjoint_circuit(const Circuit& c) {
  Circuit out;
  out.width = c.width;
  out.input_len = c.input_len;
  out.instructions.reserve(c.instructions.size());
  for (auto it = c.instructions.rbegin(); it != c.instructions.rend(); ++it) {
    Instruction ins = *it;
    ins.gates = adjoint_gates(ins.gates);
    ins.branch_zero = adjoint_gates(ins.branch_zero);
    ins.branch_one = adjoint_gates(ins.branch_one);
    out.instructions.push_back(std::move(ins));
  }
  return out;
}

namespace {

Gate reverse_cnot(const Gate& g) {
  if (g.base != GateKind::X || g.controls.size() != 1) {
    throw NonCnotGateError("gate " + g.name() + " is not a CNOT");
  }
  return Gate::cx(g.targets[0], g.controls[0]);
}

std::vector<Gate> reverse_cnots(const std::vector<Gate>& gates) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (const auto& g : gates) out.push_back(reverse_cnot(g));
  return out;
}

}  // namespace

Circuit reverse_cnot_dual(const Circuit& c) {
  Circuit out;
  out.width = c.width;
  out.input_len = c.input_len;
  out.instructions.reserve(c.instructions.size());
  for (const auto& ins : c.instructions) {
    Instruction dual = ins;
    dual.gates = reverse_cnots(ins.gates);
    dual.branch_zero = reverse_cnots(ins.branch_zero);
    dual.branch_one = reverse_cnots(ins.branch_one);
    out.instructions.push_back(std::move(dual));
  }
  return out;
}

Circuit square_for_trace(const Circuit& c) {
  // Temporal order Z1, U^dag(x), Z1, U(x); product is U * Z1 * U^dag * Z1.
  Circuit out;
  out.width = c.width;
  out.input_len = c.input_len;
  out.instructions.push_back(Instruction::always({Gate::z(1)}));
  Circuit adj = adjoint_circuit(c);
  out.instructions.insert(out.instructions.end(), adj.instructions.begin(),
                          adj.instructions.end());
  out.instructions.push_back(Instruction::always({Gate::z(1)}));
  out.instructions.insert(out.instructions.end(), c.instructions.begin(),
                          c.instructions.end());
  return out;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  if (a.width != b.width || a.input_len != b.input_len) {
    throw WidthMismatchError("cannot concatenate circuits of different shape");
  }
  Circuit out = a;
  out.instructions.insert(out.instructions.end(), b.instructions.begin(),
                          b.instructions.end());
  return out;
}

}  // namespace dqc1
