#include "dqc1/conjugate.hpp"

#include <bit>

namespace dqc1 {

namespace {

// Rules below act on the global canonical form i^k X^A Z^B.  Because the X
// part and the Z part conjugate independently, CX and SWAP pick up no phase
// at all in this representation; S/Sdg/H/CZ phases follow from Y = iXZ.
struct Rep {
  std::uint64_t x;
  std::uint64_t z;
  int k;  // phase exponent of i
};

void conj_h(Rep& r, std::uint64_t q) {
  bool xs = r.x & q, zs = r.z & q;
  if (xs != zs) {
    r.x ^= q;
    r.z ^= q;
  } else if (xs && zs) {
    // X Z -> Z X = -X Z
    r.k += 2;
  }
}

void conj_x(Rep& r, std::uint64_t q) {
  if (r.z & q) r.k += 2;
}

void conj_z(Rep& r, std::uint64_t q) {
  if (r.x & q) r.k += 2;
}

void conj_y(Rep& r, std::uint64_t q) {
  bool xs = r.x & q, zs = r.z & q;
  if (xs != zs) r.k += 2;
}

void conj_s(Rep& r, std::uint64_t q, bool dagger) {
  if (r.x & q) {
    r.z ^= q;
    r.k += dagger ? 3 : 1;
  }
}

void conj_cx(Rep& r, std::uint64_t c, std::uint64_t t) {
  if (r.x & c) r.x ^= t;
  if (r.z & t) r.z ^= c;
}

void conj_cz(Rep& r, std::uint64_t a, std::uint64_t b) {
  if ((r.x & a) && (r.x & b)) r.k += 2;
  if (r.x & a) r.z ^= b;
  if (r.x & b) r.z ^= a;
}

void conj_swap(Rep& r, std::uint64_t a, std::uint64_t b) {
  bool xa = r.x & a, xb = r.x & b, za = r.z & a, zb = r.z & b;
  if (xa != xb) r.x ^= a | b;
  if (za != zb) r.z ^= a | b;
}

}  // namespace

PauliString conjugate_clifford(const PauliString& p, const Gate& g) {
  g.validate(p.width());
  if (!g.is_clifford()) {
    throw NonCliffordError("gate " + g.name() +
                           " has no tableau conjugation rule");
  }
  Rep r{p.x_mask(), p.z_mask(), p.phase_exp()};
  const auto bit = [&](int q) { return p.bit(q); };

  if (g.controls.size() == 1) {
    if (g.base == GateKind::X) {
      conj_cx(r, bit(g.controls[0]), bit(g.targets[0]));
    } else {
      conj_cz(r, bit(g.controls[0]), bit(g.targets[0]));
    }
  } else {
    switch (g.base) {
      case GateKind::I: break;
      case GateKind::H: conj_h(r, bit(g.targets[0])); break;
      case GateKind::X: conj_x(r, bit(g.targets[0])); break;
      case GateKind::Y: conj_y(r, bit(g.targets[0])); break;
      case GateKind::Z: conj_z(r, bit(g.targets[0])); break;
      case GateKind::S: conj_s(r, bit(g.targets[0]), false); break;
      case GateKind::Sdg: conj_s(r, bit(g.targets[0]), true); break;
      case GateKind::Swap:
        conj_swap(r, bit(g.targets[0]), bit(g.targets[1]));
        break;
      default:
        throw NonCliffordError("unexpected gate " + g.name());
    }
  }
  return PauliString::from_masks(p.width(), r.x, r.z, r.k);
}

namespace {

// Dense Pauli matrix X^a Z^b on k qubits, bit (k-1-j) for local qubit j.
DenseMatrix local_pauli(int k, std::uint64_t a, std::uint64_t b) {
  const Eigen::Index dim = Eigen::Index(1) << k;
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (std::uint64_t col = 0; col < std::uint64_t(dim); ++col) {
    double sign = (std::popcount(col & b) & 1) ? -1.0 : 1.0;
    m(Eigen::Index(col ^ a), Eigen::Index(col)) = sign;
  }
  return m;
}

}  // namespace

PauliSum conjugate_dense_gate(const PauliSum& s, const Gate& g,
                              std::size_t term_cap) {
  g.validate(s.width());
  if (g.arity() > 3) {
    throw Error("dense conjugation limited to arity 3, got " +
                std::to_string(g.arity()));
  }
  const std::vector<int> qs = g.qubits();
  const int k = int(qs.size());
  const int w = s.width();
  const Eigen::Index sub = Eigen::Index(1) << k;
  const DenseMatrix gm = g.local_matrix();

  std::vector<std::uint64_t> bits(k);
  std::uint64_t gate_mask = 0;
  for (int j = 0; j < k; ++j) {
    bits[j] = 1ULL << (w - qs[j]);
    gate_mask |= bits[j];
  }
  const auto extract_local = [&](std::uint64_t mask) {
    std::uint64_t local = 0;
    for (int j = 0; j < k; ++j) {
      if (mask & bits[j]) local |= 1ULL << (k - 1 - j);
    }
    return local;
  };
  const auto embed_local = [&](std::uint64_t local) {
    std::uint64_t mask = 0;
    for (int j = 0; j < k; ++j) {
      if (local & (1ULL << (k - 1 - j))) mask |= bits[j];
    }
    return mask;
  };

  PauliSum out(w);
  for (const auto& [key, coeff] : s.terms()) {
    const std::uint64_t rest_x = key.first & ~gate_mask;
    const std::uint64_t rest_z = key.second & ~gate_mask;
    const std::uint64_t loc_x = extract_local(key.first);
    const std::uint64_t loc_z = extract_local(key.second);

    DenseMatrix conj = gm * local_pauli(k, loc_x, loc_z) * gm.adjoint();
    for (std::uint64_t a = 0; a < std::uint64_t(sub); ++a) {
      for (std::uint64_t b = 0; b < std::uint64_t(sub); ++b) {
        Complex acc = 0.0;
        for (std::uint64_t col = 0; col < std::uint64_t(sub); ++col) {
          double sign = (std::popcount(col & b) & 1) ? -1.0 : 1.0;
          acc += sign * conj(Eigen::Index(col ^ a), Eigen::Index(col));
        }
        Complex c = acc / double(sub);
        if (std::abs(c) < 1e-15) continue;
        out.add({rest_x | embed_local(a), rest_z | embed_local(b)}, c * coeff);
        if (out.term_count() > term_cap) {
          throw TermBlowupError("Pauli term count exceeded cap " +
                                std::to_string(term_cap));
        }
      }
    }
  }
  return out;
}

PauliSum conjugate_gate(const PauliSum& s, const Gate& g,
                        std::size_t term_cap) {
  if (!g.is_clifford()) return conjugate_dense_gate(s, g, term_cap);
  PauliSum out(s.width());
  for (const auto& [key, coeff] : s.terms()) {
    PauliString p = PauliString::from_masks(s.width(), key.first, key.second);
    out.add(conjugate_clifford(p, g), coeff);
  }
  return out;
}

}  // namespace dqc1
