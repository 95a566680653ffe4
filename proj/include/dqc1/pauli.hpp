#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "dqc1/errors.hpp"

namespace dqc1 {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

/// Signed Pauli string  i^phase_exp * prod_q X_q^{x} Z_q^{z}, with the X
/// factor to the left of the Z factor on every qubit.  Y never appears as a
/// primitive; it is the combination i*X*Z.
///
/// Mask bit (width - q) corresponds to qubit q, so qubit 1 is the most
/// significant bit of a computational-basis index.
class PauliString {
 public:
  explicit PauliString(int width);

  static PauliString identity(int width) { return PauliString(width); }
  static PauliString x(int width, int qubit);
  static PauliString y(int width, int qubit);
  static PauliString z(int width, int qubit);
  static PauliString from_masks(int width, std::uint64_t x_mask,
                                std::uint64_t z_mask, int phase_exp = 0);

  int width() const { return width_; }
  std::uint64_t x_mask() const { return x_mask_; }
  std::uint64_t z_mask() const { return z_mask_; }
  /// Exponent k of the stored phase i^k, in {0,1,2,3}.
  int phase_exp() const { return phase_exp_; }
  Complex phase() const;

  bool is_identity_up_to_phase() const { return x_mask_ == 0 && z_mask_ == 0; }

  /// Hermitian conjugate (inverts the phase and reorders XZ -> ZX per qubit).
  PauliString adjoint() const;

  /// Multiply by an extra power of i.
  PauliString with_phase_exp(int k) const;

  std::uint64_t bit(int qubit_1based) const {
    return 1ULL << (width_ - qubit_1based);
  }

  DenseMatrix to_dense() const;

  std::string to_string() const;

  friend PauliString operator*(const PauliString& a, const PauliString& b);
  friend bool operator==(const PauliString& a, const PauliString& b) = default;

 private:
  int width_;
  int phase_exp_;  // i^phase_exp
  std::uint64_t x_mask_;
  std::uint64_t z_mask_;
};

/// Complex-linear combination of phaseless Pauli strings X^a Z^b, keyed by the
/// (x_mask, z_mask) pair.  Phases of inserted strings fold into coefficients.
class PauliSum {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  using TermMap = std::map<Key, Complex>;

  explicit PauliSum(int width);

  static PauliSum zero(int width) { return PauliSum(width); }
  static PauliSum from_string(const PauliString& p, Complex coeff = 1.0);

  int width() const { return width_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add(const PauliString& p, Complex coeff);
  void add(const Key& key, Complex coeff);

  Complex coefficient(std::uint64_t x_mask, std::uint64_t z_mask) const;

  PauliSum& operator*=(Complex scale);
  PauliSum& operator+=(const PauliSum& other);

  PauliSum adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;

  DenseMatrix to_dense() const;

  std::string to_string() const;

 private:
  void prune(const Key& key);

  int width_;
  TermMap terms_;
};

/// Tr over A_w: 2^w times the identity coefficient; everything else is
/// traceless.
Complex trace(const PauliSum& s);

/// Exact Pauli-basis decomposition of a 2^w-square matrix.
PauliSum pauli_decompose(const DenseMatrix& m, int width);

}  // namespace dqc1
