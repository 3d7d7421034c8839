#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "pauli.hpp"

namespace clusterforge {

// Default cap on register width; the CLI can raise it via environment.
inline constexpr int kDefaultMaxQubits = 24;

// Dense state vector of n qubits: 2^n amplitudes, qubit q is bit q of the
// amplitude index (bit 0 least significant).
class StateVector {
 public:
  explicit StateVector(int num_qubits, int max_qubits = kDefaultMaxQubits)
      : num_qubits_(num_qubits) {
    if (num_qubits < 1) throw ValidationError("state needs at least one qubit");
    if (num_qubits > max_qubits)
      throw SizeError("requested " + std::to_string(num_qubits) +
                      " qubits, limit is " + std::to_string(max_qubits));
    amps_.assign(std::uint64_t{1} << num_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
  }

  static StateVector from_amplitudes(int num_qubits, std::vector<cplx> amps,
                                     bool renormalize = false,
                                     int max_qubits = kDefaultMaxQubits) {
    StateVector sv(num_qubits, max_qubits);
    if (amps.size() != sv.amps_.size())
      throw ValidationError("amplitude count " + std::to_string(amps.size()) +
                            " does not match 2^" + std::to_string(num_qubits));
    sv.amps_ = std::move(amps);
    const double n = sv.norm();
    if (renormalize) {
      if (n < 1e-12) throw ValidationError("cannot renormalize a zero-norm state");
      for (auto& a : sv.amps_) a /= n;
    } else if (std::abs(n - 1.0) > 1e-9) {
      throw ValidationError("state norm " + std::to_string(n) + " is not 1");
    }
    return sv;
  }

  int num_qubits() const { return num_qubits_; }
  std::uint64_t size() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }

  void apply_1q(int q, const Mat2& u) {
    check_qubit(q);
    check_unitary(u);
    const std::uint64_t step = std::uint64_t{1} << q;
    for (std::uint64_t base = 0; base < amps_.size(); base += 2 * step)
      for (std::uint64_t off = 0; off < step; ++off) {
        const std::uint64_t i0 = base | off;
        const std::uint64_t i1 = i0 | step;
        const cplx a0 = amps_[i0], a1 = amps_[i1];
        amps_[i0] = u(0, 0) * a0 + u(0, 1) * a1;
        amps_[i1] = u(1, 0) * a0 + u(1, 1) * a1;
      }
  }

  // The 4x4 row/column index is (bit of q1 << 1) | bit of q2: q1 is the
  // high bit of the gate's basis ordering.
  void apply_2q(int q1, int q2, const Mat4& u) {
    check_qubit(q1);
    check_qubit(q2);
    if (q1 == q2) throw ValidationError("two-qubit gate needs distinct qubits");
    check_unitary(u);
    const int lo = q1 < q2 ? q1 : q2;
    const int hi = q1 < q2 ? q2 : q1;
    const std::uint64_t b1 = std::uint64_t{1} << q1;
    const std::uint64_t b2 = std::uint64_t{1} << q2;
    const std::uint64_t groups = amps_.size() >> 2;
    for (std::uint64_t k = 0; k < groups; ++k) {
      const std::uint64_t base = insert_bit(insert_bit(k, lo), hi);
      std::uint64_t idx[4];
      for (int r = 0; r < 4; ++r)
        idx[r] = base | ((r & 2) ? b1 : 0) | ((r & 1) ? b2 : 0);
      cplx v[4];
      for (int r = 0; r < 4; ++r) v[r] = amps_[idx[r]];
      for (int r = 0; r < 4; ++r) {
        cplx acc = 0.0;
        for (int c = 0; c < 4; ++c) acc += u(r, c) * v[c];
        amps_[idx[r]] = acc;
      }
    }
  }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  // <psi| P |psi> for a Pauli string. One pass over the amplitudes:
  // P|b> = c(b) |b ^ flip> with c(b) = i^{#Y} (-1)^{popcount(b & phase_mask)}.
  double expectation(const PauliString& p) const {
    std::uint64_t flip = 0, phase_mask = 0;
    int y_count = 0;
    for (const auto& [q, op] : p.factors) {
      check_qubit(q);
      const std::uint64_t bit = std::uint64_t{1} << q;
      switch (op) {
        case Pauli::I: break;
        case Pauli::X: flip |= bit; break;
        case Pauli::Y: flip |= bit; phase_mask |= bit; ++y_count; break;
        case Pauli::Z: phase_mask |= bit; break;
      }
    }
    static constexpr cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cplx y_factor = i_pow[y_count & 3];
    cplx acc = 0.0;
    for (std::uint64_t j = 0; j < amps_.size(); ++j) {
      const std::uint64_t b = j ^ flip;
      const double s = (std::popcount(b & phase_mask) & 1) ? -1.0 : 1.0;
      acc += std::conj(amps_[j]) * amps_[b] * (s * y_factor);
    }
    return static_cast<double>(p.sign) * acc.real();
  }

 private:
  static std::uint64_t insert_bit(std::uint64_t k, int pos) {
    const std::uint64_t low = k & ((std::uint64_t{1} << pos) - 1);
    return ((k >> pos) << (pos + 1)) | low;
  }

  void check_qubit(int q) const {
    if (q < 0 || q >= num_qubits_)
      throw ValidationError("qubit index " + std::to_string(q) +
                            " out of range for " + std::to_string(num_qubits_) +
                            " qubits");
  }

  template <std::size_t N>
  static void check_unitary(const Mat<N>& u) {
    if (!is_unitary(u)) throw ValidationError("gate matrix is not unitary");
  }

  int num_qubits_;
  std::vector<cplx> amps_;
};

// Uniform superposition |+...+>: every amplitude 2^{-n/2}.
inline StateVector plus_state(int num_qubits, int max_qubits = kDefaultMaxQubits) {
  StateVector sv(num_qubits, max_qubits);
  std::vector<cplx> amps(sv.size(),
                         1.0 / std::sqrt(static_cast<double>(sv.size())));
  return StateVector::from_amplitudes(num_qubits, std::move(amps), false, max_qubits);
}

// |<a|b>|, insensitive to the global phase of either state.
inline double phase_invariant_overlap(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits())
    throw ValidationError("overlap needs equal qubit counts");
  cplx acc = 0.0;
  for (std::uint64_t i = 0; i < a.size(); ++i)
    acc += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  return std::abs(acc);
}

}  // namespace clusterforge
