#include "dqc1/gadgets.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <random>

namespace dqc1 {

namespace {

Gate shift_gate(const Gate& g, int delta) {
  Gate out = g;
  for (int& q : out.controls) q += delta;
  for (int& q : out.targets) q += delta;
  return out;
}

std::vector<Gate> shift_gates(const std::vector<Gate>& gates, int delta) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (const auto& g : gates) out.push_back(shift_gate(g, delta));
  return out;
}

Instruction map_instruction(const Instruction& ins,
                            const std::function<Gate(const Gate&)>& f) {
  Instruction out = ins;
  auto apply = [&](std::vector<Gate>& gs) {
    for (auto& g : gs) g = f(g);
  };
  apply(out.gates);
  apply(out.branch_zero);
  apply(out.branch_one);
  return out;
}

}  // namespace

Circuit trace_estimation_circuit(const Circuit& u) {
  u.validate();
  Circuit out;
  out.width = u.width + 1;
  out.input_len = u.input_len;
  out.instructions.push_back(Instruction::always({Gate::h(1)}));
  for (const auto& ins : u.instructions) {
    out.instructions.push_back(map_instruction(ins, [&](const Gate& g) {
      return shift_gate(g, 1).controlled(1);
    }));
  }
  out.instructions.push_back(Instruction::always({Gate::h(1)}));
  return out;
}

Circuit imag_trace_circuit(const Circuit& u) { return trace_estimation_circuit(u); }

double y1_expectation(const DenseState& state) {
  const Eigen::Index dim = state.rho.rows();
  const Eigen::Index half = dim / 2;
  // Tr[rho Y1] with Y1 = i|1><0| - i|0><1| on the MSB.
  Complex acc = 0.0;
  const Complex i(0.0, 1.0);
  for (Eigen::Index a = 0; a < half; ++a) {
    acc += state.rho(a, a + half) * i;       // Y_{(a+half), a} pairs
    acc -= state.rho(a + half, a) * i;
  }
  // acc = sum rho_{a,b} Y_{b,a}; rewrite: entries above give Tr[rho Y1].
  return acc.real();
}

double hoeffding_half_width(std::int64_t shots, double confidence) {
  if (shots < 1 || confidence <= 0.0 || confidence >= 1.0) {
    throw Error("need shots >= 1 and confidence in (0, 1)");
  }
  const double delta = 1.0 - confidence;
  return std::sqrt(2.0 * std::log(2.0 / delta) / double(shots));
}

TraceEstimate estimate_trace(const Circuit& u, const std::string& input_bits,
                             std::int64_t shots, std::uint64_t seed,
                             double confidence) {
  const Circuit gadget = trace_estimation_circuit(u);
  const SampleCounts counts = sample(gadget, input_bits, shots, seed);
  TraceEstimate est;
  est.shots = shots;
  est.re_hat = 2.0 * double(counts.zeros) / double(shots) - 1.0;
  est.half_width = hoeffding_half_width(shots, confidence);
  if (u.width <= dense_cap()) {
    const DenseMatrix um = circuit_unitary(u, input_bits);
    est.exact = um.trace().real() / double(um.rows());
  }
  return est;
}

Circuit and_gadget(int width) {
  Circuit c;
  c.width = width;
  c.input_len = 2;
  c.instructions = {
      Instruction::pair(1, {}, {Gate::h(1)}),
      Instruction::pair(2, {}, {Gate::z(1)}),
      Instruction::pair(1, {}, {Gate::h(1)}),
  };
  return c;
}

Circuit xor_gadget(int width) {
  Circuit c;
  c.width = width;
  c.input_len = 2;
  c.instructions = {
      Instruction::pair(1, {}, {Gate::x(1)}),
      Instruction::pair(2, {}, {Gate::x(1)}),
  };
  return c;
}

Circuit not_gadget(int width) {
  Circuit c;
  c.width = width;
  c.input_len = 1;
  c.instructions = {
      Instruction::pair(1, {Gate::x(1)}, {}),
  };
  return c;
}

EntangledExample entangled_example(int width) {
  if (width < 2) throw QubitRangeError("entangled example needs width >= 2");
  EntangledExample ex{Circuit{}, PauliSum(width)};
  ex.circuit.width = width;
  ex.circuit.input_len = 0;
  // Hadamard on qubit 1 controlled on qubit 2 being |0>, then CNOT(1 -> 2).
  ex.circuit.instructions = {
      Instruction::always({Gate::x(2), Gate::h(1).controlled(2), Gate::x(2)}),
      Instruction::always({Gate::cx(1, 2)}),
  };

  const double norm = 1.0 / double(1ULL << (width + 1));
  PauliSum& e = ex.expected;
  e.add(PauliString::identity(width), 2.0 * norm);
  e.add(PauliString::x(width, 1) * PauliString::x(width, 2), norm);
  e.add(PauliString::y(width, 1) * PauliString::y(width, 2), -norm);
  e.add(PauliString::z(width, 1), norm);
  e.add(PauliString::z(width, 2), -norm);
  return ex;
}

WitnessReport witness_check(const DenseState& state) {
  if (state.width < 2) throw QubitRangeError("witness needs width >= 2");
  const int w = state.width;
  const Complex i(0.0, 1.0);

  PauliSum m1(w);  // (1 - Z1)(1 + Z2)
  m1.add(PauliString::identity(w), 1.0);
  m1.add(PauliString::z(w, 2), 1.0);
  m1.add(PauliString::z(w, 1), -1.0);
  m1.add(PauliString::z(w, 1) * PauliString::z(w, 2), -1.0);

  PauliSum m2(w);  // (X1 + iY1)(X2 + iY2)
  m2.add(PauliString::x(w, 1) * PauliString::x(w, 2), 1.0);
  m2.add(PauliString::x(w, 1) * PauliString::y(w, 2), i);
  m2.add(PauliString::y(w, 1) * PauliString::x(w, 2), i);
  m2.add(PauliString::y(w, 1) * PauliString::y(w, 2), -1.0);

  WitnessReport rep;
  rep.v1 = (state.rho * m1.to_dense()).trace();
  rep.v2 = (state.rho * m2.to_dense()).trace();
  rep.entangled_flag = std::abs(rep.v1) <= 1e-10 && std::abs(rep.v2) >= 1e-6;
  return rep;
}

Circuit parity_l_compile(const Circuit& c) {
  const Circuit dual = reverse_cnot_dual(c);
  Circuit out = dual;
  out.instructions.push_back(Instruction::always({Gate::x(1)}));
  const Circuit adj = adjoint_circuit(dual);
  out.instructions.insert(out.instructions.end(), adj.instructions.begin(),
                          adj.instructions.end());
  return out;
}

double classical_cnot_zero_probability(const Circuit& c,
                                       const std::string& input_bits) {
  std::vector<int> bits(std::size_t(c.width) + 1, 0);
  bits[1] = 1;  // start state |10...0>
  for (const auto& g : resolve(c, input_bits)) {
    if (g.base != GateKind::X || g.controls.size() != 1) {
      throw NonCnotGateError("classical oracle requires CNOT-only circuits");
    }
    bits[std::size_t(g.targets[0])] ^= bits[std::size_t(g.controls[0])];
  }
  return bits[1] == 0 ? 1.0 : 0.0;
}

std::string derived_input(const std::vector<Circuit>& r_circuits,
                          const std::string& input_bits) {
  std::string derived;
  derived.reserve(r_circuits.size());
  for (const auto& r : r_circuits) {
    // C = 1 means qubit 1 ends at |0>, i.e. the computed bit R_i is 0.
    const double c = classical_cnot_zero_probability(r, input_bits);
    derived.push_back(c > 0.5 ? '0' : '1');
  }
  return derived;
}

Circuit reduction_compose(const std::vector<Circuit>& r_circuits,
                          const Circuit& main) {
  main.validate();
  if (int(r_circuits.size()) != main.input_len) {
    throw WidthMismatchError("need one derived-bit circuit per main input bit");
  }
  int r_width = 2;
  int raw_len = r_circuits.empty() ? 0 : r_circuits.front().input_len;
  for (const auto& r : r_circuits) {
    r.validate();
    r_width = std::max(r_width, r.width);
    if (r.input_len != raw_len) {
      throw WidthMismatchError("derived-bit circuits disagree on raw arity");
    }
  }

  const int wm = main.width;
  Circuit out;
  out.width = wm + r_width;
  out.input_len = raw_len;

  const auto map_main = [&](const Gate& g) {
    Gate m = g;
    for (int& q : m.controls) q = q == 1 ? 1 : q + 1;
    for (int& q : m.targets) q = q == 1 ? 1 : q + 1;
    return m;
  };
  const auto map_r = [&](const Gate& g) {
    Gate m = g;
    for (int& q : m.controls) q = q == 1 ? 2 : wm + q;
    for (int& q : m.targets) q = q == 1 ? 2 : wm + q;
    return m;
  };
  const auto emit_derived_bit = [&](int bit_index) {
    // Maps qubit 2 from |0> to |R_i(x)>; self-inverse, so it also uncomputes.
    const Circuit compiled = parity_l_compile(r_circuits[std::size_t(bit_index - 1)]);
    for (const auto& ins : compiled.instructions) {
      out.instructions.push_back(map_instruction(ins, map_r));
    }
  };
  const auto emit_controlled = [&](const std::vector<Gate>& gates,
                                   bool on_one) {
    if (gates.empty()) return;
    std::vector<Gate> body;
    if (!on_one) body.push_back(Gate::x(2));
    for (const auto& g : gates) body.push_back(map_main(g).controlled(2));
    if (!on_one) body.push_back(Gate::x(2));
    out.instructions.push_back(Instruction::always(std::move(body)));
  };

  for (const auto& ins : main.instructions) {
    switch (ins.kind) {
      case Instruction::Kind::Always: {
        std::vector<Gate> body;
        for (const auto& g : ins.gates) body.push_back(map_main(g));
        if (!body.empty()) {
          out.instructions.push_back(Instruction::always(std::move(body)));
        }
        break;
      }
      case Instruction::Kind::IfBit:
        emit_derived_bit(ins.bit);
        emit_controlled(ins.gates, /*on_one=*/true);
        emit_derived_bit(ins.bit);
        break;
      case Instruction::Kind::Pair:
        emit_derived_bit(ins.bit);
        emit_controlled(ins.branch_zero, /*on_one=*/false);
        emit_controlled(ins.branch_one, /*on_one=*/true);
        emit_derived_bit(ins.bit);
        break;
    }
  }
  return out;
}

Circuit markov_mixing_circuit(const Circuit& u, int s) {
  u.validate();
  if (s < 1) throw Error("mixing steps s must be >= 1");
  const int w = u.width;
  Circuit out;
  out.width = w + 2 * s;
  out.input_len = u.input_len;
  // Toffoli ladder sourcing the 2s fresh mixed qubits, alternating targets.
  for (int j = 1; j <= 2 * s; ++j) {
    const Gate tof = (j % 2 == 1) ? Gate::ccx(2, w + j, 1)
                                  : Gate::ccx(1, w + j, 2);
    out.instructions.push_back(Instruction::always({tof}));
  }
  out.instructions.insert(out.instructions.end(), u.instructions.begin(),
                          u.instructions.end());
  return out;
}

CornerReport corner_pair_experiment(const std::vector<DenseMatrix>& word,
                                    const DenseMatrix& u) {
  const Eigen::Index dim = u.rows();
  if (dim < 2 || u.cols() != dim) throw Error("corner unitary must be square");
  for (const auto& a : word) {
    if (a.rows() != dim || a.cols() != dim) {
      throw WidthMismatchError("word letters must match the oracle dimension");
    }
  }
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(dim);
  Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(dim);
  e0(0) = 1.0;
  e1(1) = 1.0;
  if ((u * e0 - e0).norm() > 1e-10 || (u * e1 - e1).norm() > 1e-10) {
    throw Error("oracle must act as identity on span{|0...00>, |0...01>}");
  }

  const Eigen::VectorXcd minus = (e0 - e1) / std::sqrt(2.0);
  const DenseMatrix uprime = u - 2.0 * minus * minus.adjoint();

  DenseMatrix v = DenseMatrix::Identity(dim, dim);
  DenseMatrix vp = v;
  for (const auto& a : word) {
    v = a * (u * v);
    vp = a * (uprime * vp);
  }

  CornerReport rep;
  rep.t = int(word.size());
  rep.trace_u = v.trace();
  rep.trace_uprime = vp.trace();
  rep.diff = std::abs(rep.trace_u - rep.trace_uprime);
  rep.bound = 2.0 * rep.t;
  return rep;
}

DenseMatrix random_corner_unitary(int width, std::uint64_t seed) {
  const Eigen::Index dim = Eigen::Index(1) << width;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Eigen::Index rest = dim - 2;
  DenseMatrix g(rest, rest);
  for (Eigen::Index r = 0; r < rest; ++r) {
    for (Eigen::Index c = 0; c < rest; ++c) {
      g(r, c) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<DenseMatrix> qr(g);
  DenseMatrix q = qr.householderQ();
  DenseMatrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < rest; ++j) {
    const Complex d = rmat(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0);
  }
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  u.block(2, 2, rest, rest) = q;
  return u;
}

FourierReport fourier_permutation_experiment(
    const std::vector<std::uint32_t>& pi, int width) {
  if (width < 1 || width > 5) {
    throw Error("fourier experiment limited to width <= 5");
  }
  const std::uint32_t dim = 1u << width;
  if (pi.size() != dim) {
    throw WidthMismatchError("permutation size does not match width");
  }
  std::vector<bool> seen(dim, false);
  for (std::uint32_t v : pi) {
    if (v >= dim || seen[v]) throw Error("not a permutation");
    seen[v] = true;
  }

  // Brute GF(2) sign sum.
  long long signed_sum = 0;
  for (std::uint32_t i = 0; i < dim; ++i) {
    for (std::uint32_t k = 0; k < dim; ++k) {
      for (std::uint32_t m = 0; m < dim; ++m) {
        const int parity = (std::popcount(i & pi[k]) + std::popcount(k & pi[m]) +
                            std::popcount(m & pi[i])) &
                           1;
        signed_sum += parity ? -1 : 1;
      }
    }
  }

  // Dense Tr[V]/2^w with V = H U H U H U.
  DenseMatrix h(dim, dim);
  const double scale = 1.0 / std::sqrt(double(dim));
  for (std::uint32_t r = 0; r < dim; ++r) {
    for (std::uint32_t c = 0; c < dim; ++c) {
      h(r, c) = (std::popcount(r & c) & 1) ? -scale : scale;
    }
  }
  DenseMatrix u = DenseMatrix::Zero(dim, dim);
  for (std::uint32_t c = 0; c < dim; ++c) u(pi[c], c) = 1.0;
  const DenseMatrix hu = h * u;
  const DenseMatrix v = hu * hu * hu;

  FourierReport rep;
  rep.lhs = double(signed_sum) * std::pow(2.0, -2.5 * width);
  rep.rhs = v.trace().real() / double(dim);
  return rep;
}

}  // namespace dqc1
