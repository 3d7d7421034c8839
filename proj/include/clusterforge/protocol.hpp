#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gates.hpp"
#include "lattice.hpp"
#include "schedule.hpp"
#include "statevector.hpp"

namespace clusterforge {

enum class Model { ising, heisenberg, sah };

inline std::string_view model_name(Model m) {
  switch (m) {
    case Model::ising: return "ising";
    case Model::heisenberg: return "heisenberg";
    case Model::sah: return "sah";
  }
  throw ValidationError("unknown model");
}

inline Model model_from_name(std::string_view name) {
  if (name == "ising") return Model::ising;
  if (name == "heisenberg") return Model::heisenberg;
  if (name == "sah") return Model::sah;
  throw ValidationError("unknown model '" + std::string(name) +
                        "', expected ising, heisenberg or sah");
}

// Single-qubit z-rotation recorded as (qubit, angle), angle in radians.
struct Correction {
  int qubit = 0;
  double angle = 0.0;
};

struct BuildResult {
  StateVector state;
  Model model = Model::ising;
  Schedule schedule_used;
  std::vector<Correction> corrections_applied;
};

namespace detail {

inline void require_connected(const Cluster& c) {
  const ClusterReport report = validate_cluster(c);
  if (!report.ok) throw ValidationError(report.violations.front());
}

}  // namespace detail

// Builds the cluster state by direct conditional-phase bonds. The gates are
// diagonal and mutually commuting, so they are applied in schedule order
// purely for uniformity with the other builders.
inline BuildResult build_ising(const Cluster& c, int max_qubits = kDefaultMaxQubits) {
  detail::require_connected(c);
  BuildResult out{plus_state(c.size(), max_qubits), Model::ising,
                  generate_schedule(c), {}};
  for (const auto& step : out.schedule_used.steps)
    for (const auto& e : step.edges)
      out.state.apply_2q(c.qubit_index(e.a), c.qubit_index(e.b), ising_cz());
  return out;
}

// Builds the cluster state bond by bond through the exchange-based pulse
// sequence; each bond's net effect equals a conditional phase up to global
// phase, so no local corrections are needed.
inline BuildResult build_heisenberg(const Cluster& c,
                                    int max_qubits = kDefaultMaxQubits) {
  detail::require_connected(c);
  BuildResult out{plus_state(c.size(), max_qubits), Model::heisenberg,
                  generate_schedule(c), {}};
  const GateSequence seq = xor_sequence();
  for (const auto& step : out.schedule_used.steps)
    for (const auto& e : step.edges)
      apply_sequence(out.state, seq, c.qubit_index(e.a), c.qubit_index(e.b));
  return out;
}

// Residual single-qubit z-rotations left by one tuned anisotropic bond
// evolution on each of its endpoints. With witness k from the tuning
// conditions, each endpoint of each bond accumulates angle (-1)^k * pi/2;
// the rotations are diagonal, hence collectable per site as
// (-1)^k * pi/2 * degree. One entry per site, zero angle included.
inline std::vector<Correction> local_corrections(const Cluster& c,
                                                 const PulseSpec& p,
                                                 double tol = kConditionTolerance) {
  const SahConditions cond = sah_conditions_check(p, tol);
  if (!cond.ok)
    throw ValidationError("pulse spec refused: " + cond.failure);
  const double sign = (cond.k % 2 != 0) ? -1.0 : 1.0;
  std::vector<Correction> out;
  out.reserve(c.sites().size());
  for (const auto& s : c.sites())
    out.push_back({c.qubit_index(s), sign * (kPi / 2.0) * c.degree(s)});
  return out;
}

// Builds the cluster state from tuned anisotropic exchange pulses, then
// applies the per-site correction rotations. Refuses pulses that miss the
// tuning conditions.
inline BuildResult build_sah(const Cluster& c, const PulseSpec& p,
                             double tol = kConditionTolerance,
                             int max_qubits = kDefaultMaxQubits) {
  detail::require_connected(c);
  const SahConditions cond = sah_conditions_check(p, tol);
  if (!cond.ok)
    throw ValidationError("pulse spec refused: " + cond.failure);
  BuildResult out{plus_state(c.size(), max_qubits), Model::sah,
                  generate_schedule(c), {}};
  const Mat4 bond = sah_evolution(p);
  for (const auto& step : out.schedule_used.steps)
    for (const auto& e : step.edges)
      out.state.apply_2q(c.qubit_index(e.a), c.qubit_index(e.b), bond);
  out.corrections_applied = local_corrections(c, p, tol);
  for (const auto& corr : out.corrections_applied)
    out.state.apply_1q(corr.qubit, rz(corr.angle));
  return out;
}

inline BuildResult build_cluster_state(const Cluster& c, Model m,
                                       const std::optional<PulseSpec>& p = {},
                                       double tol = kConditionTolerance,
                                       int max_qubits = kDefaultMaxQubits) {
  switch (m) {
    case Model::ising: return build_ising(c, max_qubits);
    case Model::heisenberg: return build_heisenberg(c, max_qubits);
    case Model::sah:
      if (!p) throw ValidationError("sah model needs a pulse spec");
      return build_sah(c, *p, tol, max_qubits);
  }
  throw ValidationError("unknown model");
}

inline constexpr double kVerifyTolerance = 1e-8;

// Per-site stabilizer eigenvalue check. For site a the correlation operator
// must have expectation (-1)^{kappa_a}; max_deviation is the worst |error|.
struct VerificationReport {
  struct SiteResult {
    Site site;
    int kappa = 0;
    double expectation = 0.0;
  };
  std::vector<SiteResult> sites;
  bool pass = false;
  double max_deviation = 0.0;
};

inline VerificationReport verify_cluster_state(const StateVector& sv,
                                               const Cluster& c,
                                               const std::vector<int>& kappa = {},
                                               double tol = kVerifyTolerance) {
  if (sv.num_qubits() != c.size())
    throw ValidationError("state has " + std::to_string(sv.num_qubits()) +
                          " qubits but the cluster has " +
                          std::to_string(c.size()) + " sites");
  if (!kappa.empty() && kappa.size() != c.sites().size())
    throw ValidationError("kappa list has " + std::to_string(kappa.size()) +
                          " entries, expected " + std::to_string(c.size()));
  for (const int k : kappa)
    if (k != 0 && k != 1)
      throw ValidationError("kappa entries must be 0 or 1");
  VerificationReport report;
  report.pass = true;
  for (int i = 0; i < c.size(); ++i) {
    const Site& site = c.sites()[i];
    const int k = kappa.empty() ? 0 : kappa[i];
    const double e = sv.expectation(c.correlation_operator(site));
    const double target = k ? -1.0 : 1.0;
    report.max_deviation = std::max(report.max_deviation, std::abs(e - target));
    report.sites.push_back({site, k, e});
  }
  report.pass = report.max_deviation <= tol;
  return report;
}

inline constexpr double kOverlapTolerance = 1e-10;

// Cross-model agreement: pairwise phase-invariant overlaps plus a
// verification report per model. Passes when every overlap reaches
// 1 - tol and every verification passes.
struct CompareReport {
  struct PairOverlap {
    Model a = Model::ising;
    Model b = Model::heisenberg;
    double overlap = 0.0;
  };
  std::vector<PairOverlap> overlaps;
  std::vector<std::pair<Model, VerificationReport>> verifications;
  bool pass = false;
};

inline CompareReport compare_builds(const Cluster& c,
                                    const std::optional<PulseSpec>& p = {},
                                    double overlap_tol = kOverlapTolerance,
                                    int max_qubits = kDefaultMaxQubits) {
  std::vector<BuildResult> builds;
  builds.push_back(build_ising(c, max_qubits));
  builds.push_back(build_heisenberg(c, max_qubits));
  if (p) builds.push_back(build_sah(c, *p, kConditionTolerance, max_qubits));
  CompareReport report;
  report.pass = true;
  for (std::size_t i = 0; i < builds.size(); ++i)
    for (std::size_t j = i + 1; j < builds.size(); ++j) {
      const double ov = phase_invariant_overlap(builds[i].state, builds[j].state);
      report.overlaps.push_back({builds[i].model, builds[j].model, ov});
      if (ov < 1.0 - overlap_tol) report.pass = false;
    }
  for (const auto& b : builds) {
    report.verifications.emplace_back(b.model, verify_cluster_state(b.state, c));
    if (!report.verifications.back().second.pass) report.pass = false;
  }
  return report;
}

}  // namespace clusterforge
