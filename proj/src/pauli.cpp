#include "dqc1/pauli.hpp"

#include <bit>
#include <sstream>

namespace dqc1 {

namespace {

constexpr double kPruneTol = 1e-15;

void check_width(int width) {
  if (width < 1 || width > 63) {
    throw QubitRangeError("width must be in [1, 63], got " +
                          std::to_string(width));
  }
}

void check_qubit(int width, int qubit) {
  if (qubit < 1 || qubit > width) {
    throw QubitRangeError("qubit " + std::to_string(qubit) +
                          " out of range for width " + std::to_string(width));
  }
}

Complex phase_value(int exp) {
  switch (exp & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

PauliString::PauliString(int width)
    : width_(width), phase_exp_(0), x_mask_(0), z_mask_(0) {
  check_width(width);
}

PauliString PauliString::x(int width, int qubit) {
  check_width(width);
  check_qubit(width, qubit);
  PauliString p(width);
  p.x_mask_ = p.bit(qubit);
  return p;
}

PauliString PauliString::z(int width, int qubit) {
  check_width(width);
  check_qubit(width, qubit);
  PauliString p(width);
  p.z_mask_ = p.bit(qubit);
  return p;
}

PauliString PauliString::y(int width, int qubit) {
  // Y = i X Z
  PauliString p = x(width, qubit);
  p.z_mask_ = p.x_mask_;
  p.phase_exp_ = 1;
  return p;
}

PauliString PauliString::from_masks(int width, std::uint64_t x_mask,
                                    std::uint64_t z_mask, int phase_exp) {
  check_width(width);
  std::uint64_t valid = (width == 63) ? ~0ULL >> 1 : (1ULL << width) - 1;
  if ((x_mask & ~valid) != 0 || (z_mask & ~valid) != 0) {
    throw QubitRangeError("mask has bits outside width");
  }
  PauliString p(width);
  p.x_mask_ = x_mask;
  p.z_mask_ = z_mask;
  p.phase_exp_ = phase_exp & 3;
  return p;
}

Complex PauliString::phase() const { return phase_value(phase_exp_); }

PauliString PauliString::adjoint() const {
  // (i^k X^a Z^b)^dag = (-i)^k Z^b X^a = (-i)^k (-1)^{|a & b|} X^a Z^b
  PauliString p = *this;
  int swaps = std::popcount(x_mask_ & z_mask_);
  p.phase_exp_ = (4 - phase_exp_ + 2 * swaps) & 3;
  return p;
}

PauliString PauliString::with_phase_exp(int k) const {
  PauliString p = *this;
  p.phase_exp_ = (phase_exp_ + k) & 3;
  return p;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.width_ != b.width_) {
    throw WidthMismatchError("pauli product of widths " +
                             std::to_string(a.width_) + " and " +
                             std::to_string(b.width_));
  }
  // (X^a Z^b)(X^c Z^d): moving X^c left through Z^b costs (-1)^{|b & c|}.
  PauliString p(a.width_);
  int swaps = std::popcount(a.z_mask_ & b.x_mask_);
  p.phase_exp_ = (a.phase_exp_ + b.phase_exp_ + 2 * swaps) & 3;
  p.x_mask_ = a.x_mask_ ^ b.x_mask_;
  p.z_mask_ = a.z_mask_ ^ b.z_mask_;
  return p;
}

DenseMatrix PauliString::to_dense() const {
  const Eigen::Index dim = Eigen::Index(1) << width_;
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  const Complex ph = phase();
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index row = Eigen::Index(std::uint64_t(col) ^ x_mask_);
    double sign =
        (std::popcount(std::uint64_t(col) & z_mask_) & 1) ? -1.0 : 1.0;
    m(row, col) = ph * sign;
  }
  return m;
}

std::string PauliString::to_string() const {
  std::ostringstream os;
  switch (phase_exp_) {
    case 0: os << "+"; break;
    case 1: os << "+i"; break;
    case 2: os << "-"; break;
    case 3: os << "-i"; break;
  }
  bool any = false;
  for (int q = 1; q <= width_; ++q) {
    bool xs = x_mask_ & bit(q);
    bool zs = z_mask_ & bit(q);
    if (xs) {
      os << "X" << q;
      any = true;
    }
    if (zs) {
      os << "Z" << q;
      any = true;
    }
  }
  if (!any) os << "1";
  return os.str();
}

PauliSum::PauliSum(int width) : width_(width) { check_width(width); }

PauliSum PauliSum::from_string(const PauliString& p, Complex coeff) {
  PauliSum s(p.width());
  s.add(p, coeff);
  return s;
}

void PauliSum::add(const PauliString& p, Complex coeff) {
  if (p.width() != width_) {
    throw WidthMismatchError("term width does not match sum width");
  }
  add({p.x_mask(), p.z_mask()}, coeff * p.phase());
}

void PauliSum::add(const Key& key, Complex coeff) {
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) it->second += coeff;
  prune(key);
}

void PauliSum::prune(const Key& key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && std::abs(it->second) < kPruneTol) {
    terms_.erase(it);
  }
}

Complex PauliSum::coefficient(std::uint64_t x_mask,
                              std::uint64_t z_mask) const {
  auto it = terms_.find({x_mask, z_mask});
  return it == terms_.end() ? Complex(0.0) : it->second;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  for (auto& [key, c] : terms_) c *= scale;
  if (std::abs(scale) < kPruneTol) terms_.clear();
  return *this;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.width_ != width_) {
    throw WidthMismatchError("sum widths differ");
  }
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

PauliSum PauliSum::adjoint() const {
  // (c X^a Z^b)^dag = conj(c) (-1)^{|a & b|} X^a Z^b
  PauliSum out(width_);
  for (const auto& [key, c] : terms_) {
    double sign = (std::popcount(key.first & key.second) & 1) ? -1.0 : 1.0;
    out.terms_[key] = std::conj(c) * sign;
  }
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [key, c] : terms_) {
    double sign = (std::popcount(key.first & key.second) & 1) ? -1.0 : 1.0;
    if (std::abs(std::conj(c) * sign - c) > tol) return false;
  }
  return true;
}

DenseMatrix PauliSum::to_dense() const {
  const Eigen::Index dim = Eigen::Index(1) << width_;
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const auto& [key, c] : terms_) {
    for (Eigen::Index col = 0; col < dim; ++col) {
      Eigen::Index row = Eigen::Index(std::uint64_t(col) ^ key.first);
      double sign =
          (std::popcount(std::uint64_t(col) & key.second) & 1) ? -1.0 : 1.0;
      m(row, col) += c * sign;
    }
  }
  return m;
}

std::string PauliSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)*"
       << PauliString::from_masks(width_, key.first, key.second).to_string();
  }
  return os.str();
}

Complex trace(const PauliSum& s) {
  return s.coefficient(0, 0) * double(std::uint64_t(1) << s.width());
}

PauliSum pauli_decompose(const DenseMatrix& m, int width) {
  check_width(width);
  const Eigen::Index dim = Eigen::Index(1) << width;
  if (m.rows() != dim || m.cols() != dim) {
    throw WidthMismatchError("matrix dimension does not match width");
  }
  PauliSum out(width);
  // coeff(a,b) = Tr[(X^a Z^b)^dag m] / 2^w; the sum below is already the
  // adjoint trace because the word's entries are real.
  for (std::uint64_t a = 0; a < std::uint64_t(dim); ++a) {
    for (std::uint64_t b = 0; b < std::uint64_t(dim); ++b) {
      Complex acc = 0.0;
      for (std::uint64_t col = 0; col < std::uint64_t(dim); ++col) {
        double sign = (std::popcount(col & b) & 1) ? -1.0 : 1.0;
        acc += sign * m(Eigen::Index(col ^ a), Eigen::Index(col));
      }
      Complex coeff = acc / double(dim);
      if (std::abs(coeff) >= kPruneTol) {
        out.add({a, b}, coeff);
      }
    }
  }
  return out;
}

}  // namespace dqc1
