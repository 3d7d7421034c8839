#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "statevector.hpp"

namespace clusterforge {

inline constexpr double kPi = std::numbers::pi;

// Time-integrated exchange couplings (hbar = 1, spin operators S = sigma/2).
// The isotropic case is j_xx == j_yy == j_zz.
struct PulseSpec {
  double j_xx = 0.0;
  double j_yy = 0.0;
  double j_zz = 0.0;
};

inline Mat2 pauli_x_matrix() {
  Mat2 u;
  u(0, 1) = 1.0;
  u(1, 0) = 1.0;
  return u;
}

inline Mat2 pauli_y_matrix() {
  Mat2 u;
  u(0, 1) = cplx{0.0, -1.0};
  u(1, 0) = cplx{0.0, 1.0};
  return u;
}

inline Mat2 pauli_z_matrix() {
  Mat2 u;
  u(0, 0) = 1.0;
  u(1, 1) = -1.0;
  return u;
}

// exp(i * angle * S_z) = diag(e^{i angle/2}, e^{-i angle/2}).
inline Mat2 rz(double angle) {
  Mat2 u;
  u(0, 0) = std::polar(1.0, angle / 2.0);
  u(1, 1) = std::polar(1.0, -angle / 2.0);
  return u;
}

// Conditional phase: diag(1, 1, 1, -1).
inline Mat4 ising_cz() {
  Mat4 u = Mat4::identity();
  u(3, 3) = -1.0;
  return u;
}

// Ising bond evolution by integrated strength theta: diag(1, 1, 1, e^{-i theta}).
// theta = pi reproduces ising_cz exactly.
inline Mat4 ising_theta_evolution(double theta) {
  Mat4 u = Mat4::identity();
  u(3, 3) = std::polar(1.0, -theta);
  return u;
}

inline Mat4 swap_gate() {
  Mat4 u;
  u(0, 0) = 1.0;
  u(1, 2) = 1.0;
  u(2, 1) = 1.0;
  u(3, 3) = 1.0;
  return u;
}

// exp(-i theta S.S): triplet sector gains e^{-i theta/4}, singlet e^{+3i theta/4}.
inline Mat4 heisenberg_exchange(double theta) {
  const cplx t = std::polar(1.0, -theta / 4.0);
  const cplx s = std::polar(1.0, 3.0 * theta / 4.0);
  Mat4 u;
  u(0, 0) = t;
  u(3, 3) = t;
  u(1, 1) = (t + s) / 2.0;
  u(2, 2) = (t + s) / 2.0;
  u(1, 2) = (t - s) / 2.0;
  u(2, 1) = (t - s) / 2.0;
  return u;
}

// Square root of swap with the triplet sector fixed (eigenvalue 1) and the
// singlet sent to -i. This branch squares to swap_gate exactly and is the
// one whose interleaving with z-rotations composes to a conditional phase.
inline Mat4 sqrt_swap() {
  const cplx p{0.5, -0.5}, q{0.5, 0.5};
  Mat4 u;
  u(0, 0) = 1.0;
  u(3, 3) = 1.0;
  u(1, 1) = p;
  u(2, 2) = p;
  u(1, 2) = q;
  u(2, 1) = q;
  return u;
}

inline Mat4 sqrt_swap_inverse() { return adjoint(sqrt_swap()); }

// One element of a two-spin gate sequence. `targets` are edge-local: 0 is
// the first spin of the bond, 1 the second. Two-qubit elements act on both.
struct SequenceOp {
  std::vector<int> targets;
  std::variant<Mat2, Mat4> gate;
};

using GateSequence = std::vector<SequenceOp>;

// Pulse sequence replacing one Ising bond by exchange half-swaps and
// single-spin z-rotations; first element is applied first.
inline GateSequence xor_sequence() {
  return {
      {{0, 1}, sqrt_swap()},
      {{0}, rz(kPi)},
      {{0, 1}, sqrt_swap()},
      {{1}, rz(-kPi / 2.0)},
      {{0}, rz(kPi / 2.0)},
  };
}

// Equivalent six-element variant whose single-spin rotations all act on the
// first spin of the bond.
inline GateSequence xor_alternative() {
  return {
      {{0, 1}, sqrt_swap()},
      {{0}, rz(kPi / 2.0)},
      {{0, 1}, swap_gate()},
      {{0}, rz(-kPi / 2.0)},
      {{0, 1}, sqrt_swap_inverse()},
      {{0}, rz(kPi)},
  };
}

// Net 4x4 unitary of a sequence on one bond; the first spin is the high bit.
inline Mat4 compose_sequence(const GateSequence& seq) {
  Mat4 total = Mat4::identity();
  for (const auto& op : seq) {
    Mat4 embedded;
    if (std::holds_alternative<Mat2>(op.gate)) {
      if (op.targets.size() != 1 || (op.targets[0] != 0 && op.targets[0] != 1))
        throw ValidationError("single-spin element needs target 0 or 1");
      const Mat2& u = std::get<Mat2>(op.gate);
      embedded = op.targets[0] == 0 ? kron(u, Mat2::identity())
                                    : kron(Mat2::identity(), u);
    } else {
      if (op.targets != std::vector<int>{0, 1})
        throw ValidationError("two-spin element needs targets {0, 1}");
      embedded = std::get<Mat4>(op.gate);
    }
    total = embedded * total;
  }
  return total;
}

// Applies a sequence to the bond (q_first, q_second) of a register.
inline void apply_sequence(StateVector& sv, const GateSequence& seq, int q_first,
                           int q_second) {
  const int qubits[2] = {q_first, q_second};
  for (const auto& op : seq) {
    if (std::holds_alternative<Mat2>(op.gate)) {
      if (op.targets.size() != 1 || (op.targets[0] != 0 && op.targets[0] != 1))
        throw ValidationError("single-spin element needs target 0 or 1");
      sv.apply_1q(qubits[op.targets[0]], std::get<Mat2>(op.gate));
    } else {
      if (op.targets != std::vector<int>{0, 1})
        throw ValidationError("two-spin element needs targets {0, 1}");
      sv.apply_2q(q_first, q_second, std::get<Mat4>(op.gate));
    }
  }
}

// exp(-i j S_p x S_q) = cos(j/4) 1 - i sin(j/4) (sigma_p x sigma_q),
// exact because (sigma_p x sigma_q)^2 = 1.
inline Mat4 coupling_exponential(const Mat2& sigma_p, const Mat2& sigma_q, double j) {
  const Mat4 pq = kron(sigma_p, sigma_q);
  return std::cos(j / 4.0) * Mat4::identity() + cplx{0.0, -std::sin(j / 4.0)} * pq;
}

// Anisotropic exchange evolution exp(-i (j_xx SxSx + j_yy SySy + j_zz SzSz)).
// The three terms commute pairwise, so the factored product is exact.
inline Mat4 sah_evolution(const PulseSpec& p) {
  return coupling_exponential(pauli_x_matrix(), pauli_x_matrix(), p.j_xx) *
         coupling_exponential(pauli_y_matrix(), pauli_y_matrix(), p.j_yy) *
         coupling_exponential(pauli_z_matrix(), pauli_z_matrix(), p.j_zz);
}

// Whether a pulse satisfies the tuning conditions j_xx = 4 n pi,
// j_yy = 4 m pi, j_zz = (2k + 1) pi within tol (absolute, radians).
struct SahConditions {
  bool ok = false;
  long n = 0, m = 0, k = 0;
  std::string failure;
};

inline constexpr double kConditionTolerance = 1e-9;

inline SahConditions sah_conditions_check(const PulseSpec& p,
                                          double tol = kConditionTolerance) {
  SahConditions out;
  out.n = std::lround(p.j_xx / (4.0 * kPi));
  out.m = std::lround(p.j_yy / (4.0 * kPi));
  out.k = std::lround((p.j_zz / kPi - 1.0) / 2.0);
  if (std::abs(p.j_xx - 4.0 * kPi * static_cast<double>(out.n)) > tol)
    out.failure = "j_xx is not a multiple of 4*pi";
  else if (std::abs(p.j_yy - 4.0 * kPi * static_cast<double>(out.m)) > tol)
    out.failure = "j_yy is not a multiple of 4*pi";
  else if (std::abs(p.j_zz - kPi * static_cast<double>(2 * out.k + 1)) > tol)
    out.failure = "j_zz is not an odd multiple of pi";
  else
    out.ok = true;
  return out;
}

// Evolution under alpha SxSy + beta SySx + gamma SzSz; the three terms
// commute pairwise, so the factored product is exact.
inline Mat4 aah_evolution(double alpha, double beta, double gamma) {
  return coupling_exponential(pauli_x_matrix(), pauli_y_matrix(), alpha) *
         coupling_exponential(pauli_y_matrix(), pauli_x_matrix(), beta) *
         coupling_exponential(pauli_z_matrix(), pauli_z_matrix(), gamma);
}

// Named identities behind the gate-check command. Distances are
// phase-invariant; pass means distance <= tol.
struct IdentityCheck {
  std::string identity;
  double distance = 0.0;
  bool pass = false;
};

inline constexpr double kIdentityTolerance = 1e-12;

inline std::vector<IdentityCheck> gate_identity_checks(double tol = kIdentityTolerance) {
  std::vector<IdentityCheck> checks;
  auto add = [&checks, tol](std::string name, double distance) {
    checks.push_back({std::move(name), distance, distance <= tol});
  };
  add("ising_theta_pi_is_cz", phase_aligned_distance(ising_theta_evolution(kPi), ising_cz()));
  add("sqrt_swap_squares_to_swap",
      phase_aligned_distance(sqrt_swap() * sqrt_swap(), swap_gate()));
  add("sqrt_swap_inverse_undoes_sqrt_swap",
      phase_aligned_distance(sqrt_swap_inverse() * sqrt_swap(), Mat4::identity()));
  add("sqrt_swap_matches_exchange_pulse",
      phase_aligned_distance(sqrt_swap(), heisenberg_exchange(-kPi / 2.0)));
  add("exchange_pi_is_swap", phase_aligned_distance(heisenberg_exchange(kPi), swap_gate()));
  add("exchange_2pi_is_identity",
      phase_aligned_distance(heisenberg_exchange(2.0 * kPi), Mat4::identity()));
  add("xor_sequence_composes_to_cz",
      phase_aligned_distance(compose_sequence(xor_sequence()), ising_cz()));
  add("xor_alternative_composes_to_cz",
      phase_aligned_distance(compose_sequence(xor_alternative()), ising_cz()));
  add("xor_sequences_agree",
      phase_aligned_distance(compose_sequence(xor_sequence()),
                             compose_sequence(xor_alternative())));
  {
    const PulseSpec tuned{4.0 * kPi, 4.0 * kPi, kPi};
    add("tuned_exchange_is_zz_evolution",
        phase_aligned_distance(
            sah_evolution(tuned),
            coupling_exponential(pauli_z_matrix(), pauli_z_matrix(), kPi)));
  }
  {
    const Mat4 a = sah_evolution({4.0 * kPi, 0.0, kPi});
    const Mat4 b = coupling_exponential(pauli_x_matrix(), pauli_x_matrix(), 4.0 * kPi) *
                   coupling_exponential(pauli_z_matrix(), pauli_z_matrix(), kPi) *
                   coupling_exponential(pauli_y_matrix(), pauli_y_matrix(), 0.0);
    add("exchange_factors_commute", phase_aligned_distance(a, b));
  }
  {
    const double a = 0.7, b = -1.3, c = 2.1;
    const Mat2 v = rz(-kPi / 2.0);
    const Mat4 conj = kron(Mat2::identity(), v);
    const Mat4 rotated = conj * sah_evolution({a, -b, c}) * adjoint(conj);
    add("rotated_exchange_is_anisotropic",
        phase_aligned_distance(aah_evolution(a, b, c), rotated));
  }
  return checks;
}

}  // namespace clusterforge
