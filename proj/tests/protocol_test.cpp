#include <clusterforge/protocol.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace clusterforge;

namespace {

const PulseSpec kTunedPulse{4.0 * kPi, 4.0 * kPi, kPi};

TEST(ProtocolTest, IsingPairState) {
  const BuildResult r = build_ising(oracle::chain_cluster(2));
  ASSERT_EQ(r.state.num_qubits(), 2);
  const std::vector<cplx> want = {{0.5, 0}, {0.5, 0}, {0.5, 0}, {-0.5, 0}};
  for (int i = 0; i < 4; ++i)
    EXPECT_NEAR(std::abs(r.state.amplitudes()[i] - want[i]), 0.0, 1e-15);
  EXPECT_EQ(r.model, Model::ising);
  EXPECT_TRUE(r.corrections_applied.empty());
  EXPECT_TRUE(validate_schedule(oracle::chain_cluster(2), r.schedule_used).ok);
}

TEST(ProtocolTest, IsingThreeChainSignPattern) {
  const BuildResult r = build_ising(oracle::chain_cluster(3));
  // Sign is (-1)^(edges with both endpoint bits set): -1 at indices 3 and 6.
  const double a = 1.0 / std::sqrt(8.0);
  const std::array<double, 8> sign = {1, 1, 1, -1, 1, 1, -1, 1};
  for (int i = 0; i < 8; ++i)
    EXPECT_NEAR(std::abs(r.state.amplitudes()[i] - cplx{sign[i] * a, 0.0}), 0.0,
                1e-15)
        << "index " << i;
  const VerificationReport v = verify_cluster_state(r.state, oracle::chain_cluster(3));
  EXPECT_TRUE(v.pass);
  for (const auto& site : v.sites) EXPECT_NEAR(site.expectation, 1.0, 1e-12);
}

TEST(ProtocolTest, SingleSiteBuildsPlusState) {
  for (const Model m : {Model::ising, Model::heisenberg}) {
    const BuildResult r = build_cluster_state(Cluster(1, {{0}}), m);
    ASSERT_EQ(r.state.num_qubits(), 1);
    EXPECT_NEAR(std::abs(r.state.amplitudes()[0] - cplx{1 / std::sqrt(2.0), 0}), 0.0,
                1e-12);
    EXPECT_NEAR(std::abs(r.state.amplitudes()[1] - cplx{1 / std::sqrt(2.0), 0}), 0.0,
                1e-12);
    EXPECT_TRUE(verify_cluster_state(r.state, Cluster(1, {{0}})).pass);
  }
}

TEST(ProtocolTest, HeisenbergMatchesIsingOnChains) {
  for (int n = 2; n <= 8; ++n) {
    const Cluster c = oracle::chain_cluster(n);
    const double overlap =
        phase_invariant_overlap(build_ising(c).state, build_heisenberg(c).state);
    EXPECT_GT(overlap, 1.0 - 1e-10) << "chain " << n;
  }
}

TEST(ProtocolTest, HeisenbergMatchesIsingOnBlocks) {
  const Cluster square = oracle::grid_cluster(2, 2);
  const BuildResult ising = build_ising(square);
  const BuildResult heis = build_heisenberg(square);
  EXPECT_EQ(heis.schedule_used.steps.size(), 4u);
  EXPECT_GT(phase_invariant_overlap(ising.state, heis.state), 1.0 - 1e-10);
  EXPECT_TRUE(verify_cluster_state(heis.state, square).pass);
}

TEST(ProtocolTest, SahTunedPulseMatchesIsing) {
  const Cluster c = oracle::chain_cluster(4);
  const BuildResult ising = build_ising(c);
  for (const PulseSpec p :
       {PulseSpec{0.0, 0.0, kPi}, PulseSpec{4.0 * kPi, 4.0 * kPi, 3.0 * kPi},
        PulseSpec{-4.0 * kPi, 8.0 * kPi, -kPi}}) {
    const BuildResult sah = build_sah(c, p);
    EXPECT_GT(phase_invariant_overlap(ising.state, sah.state), 1.0 - 1e-10);
    EXPECT_TRUE(verify_cluster_state(sah.state, c).pass);
    EXPECT_EQ(sah.corrections_applied.size(), 4u);
  }
}

TEST(ProtocolTest, SahRefusesUntunedPulse) {
  const Cluster c = oracle::chain_cluster(4);
  EXPECT_THROW(build_sah(c, {kPi, 0.0, kPi}), ValidationError);
  EXPECT_THROW(build_sah(c, {0.0, 0.0, kPi / 2.0}), ValidationError);
  EXPECT_THROW(local_corrections(c, {kPi, 0.0, kPi}), ValidationError);
}

// The bare zz evolution differs from the conditional phase by -pi/2
// z-rotations on both endpoints and a global phase; the identity behind
// the per-site corrections, checked by direct multiplication.
TEST(ProtocolTest, ZzEvolutionFactorsIntoRotationsAndConditionalPhase) {
  const Mat4 zz = coupling_exponential(pauli_z_matrix(), pauli_z_matrix(), kPi);
  const Mat4 rot = kron(rz(-kPi / 2.0), rz(-kPi / 2.0));
  const Mat4 recomposed = std::polar(1.0, kPi / 4.0) * (rot * ising_cz());
  EXPECT_LT(max_abs_diff(zz, recomposed), 1e-15);
}

TEST(ProtocolTest, CorrectionAnglesAreDegreeProportional) {
  const Cluster chain5 = oracle::chain_cluster(5);
  const auto k0 = local_corrections(chain5, {0.0, 0.0, kPi});
  ASSERT_EQ(k0.size(), 5u);
  for (const auto& corr : k0) {
    const double expected =
        (corr.qubit == 0 || corr.qubit == 4) ? kPi / 2.0 : kPi;
    EXPECT_NEAR(corr.angle, expected, 1e-15) << "qubit " << corr.qubit;
  }
  // Odd witness k flips the sign.
  const auto k1 = local_corrections(chain5, {0.0, 0.0, 3.0 * kPi});
  for (std::size_t i = 0; i < k1.size(); ++i)
    EXPECT_NEAR(k1[i].angle, -k0[i].angle, 1e-15);
  const auto kneg = local_corrections(chain5, {0.0, 0.0, -kPi});  // k = -1
  for (std::size_t i = 0; i < kneg.size(); ++i)
    EXPECT_NEAR(kneg[i].angle, -k0[i].angle, 1e-15);

  const auto lone = local_corrections(Cluster(1, {{0}}), {0.0, 0.0, kPi});
  ASSERT_EQ(lone.size(), 1u);
  EXPECT_EQ(lone[0].angle, 0.0);
}

TEST(ProtocolTest, VerifyDetectsNonClusterStates) {
  const Cluster c = oracle::chain_cluster(3);
  const VerificationReport v = verify_cluster_state(plus_state(3), c);
  EXPECT_FALSE(v.pass);
  // X expectations stay 1, but any site with a neighbor fails; the middle
  // site's operator has two Z factors and expectation 0.
  EXPECT_NEAR(v.sites[1].expectation, 0.0, 1e-12);
  EXPECT_NEAR(v.max_deviation, 1.0, 1e-12);
}

TEST(ProtocolTest, VerifyRespectsKappa) {
  const Cluster c = oracle::chain_cluster(3);
  BuildResult r = build_ising(c);
  // Z on site a flips kappa_a and nothing else.
  Mat2 z;
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  r.state.apply_1q(0, z);
  EXPECT_FALSE(verify_cluster_state(r.state, c).pass);
  const VerificationReport flipped = verify_cluster_state(r.state, c, {1, 0, 0});
  EXPECT_TRUE(flipped.pass);
  EXPECT_NEAR(flipped.sites[0].expectation, -1.0, 1e-12);
  // Declared kappa is reported per site.
  EXPECT_EQ(flipped.sites[0].kappa, 1);
  EXPECT_EQ(flipped.sites[1].kappa, 0);
  // Wrong kappa pattern fails on the flipped site.
  const VerificationReport wrong = verify_cluster_state(r.state, c, {0, 1, 0});
  EXPECT_FALSE(wrong.pass);
}

TEST(ProtocolTest, VerifyRejectsBadInputs) {
  const Cluster c = oracle::chain_cluster(3);
  EXPECT_THROW(verify_cluster_state(plus_state(2), c), ValidationError);
  EXPECT_THROW(verify_cluster_state(plus_state(3), c, {0, 1}), ValidationError);
  EXPECT_THROW(verify_cluster_state(plus_state(3), c, {0, 2, 0}), ValidationError);
}

TEST(ProtocolTest, BuildersRejectBadClusters) {
  EXPECT_THROW(build_ising(Cluster(2, {{0, 0}, {2, 0}})), ValidationError);
  EXPECT_THROW(build_heisenberg(Cluster(1, {})), ValidationError);
  EXPECT_THROW(build_ising(oracle::chain_cluster(25)), SizeError);
  EXPECT_THROW(build_cluster_state(oracle::chain_cluster(2), Model::sah),
               ValidationError);
}

TEST(ProtocolTest, CompareBuildsAcrossModels) {
  const CompareReport two = compare_builds(oracle::chain_cluster(4));
  EXPECT_TRUE(two.pass);
  ASSERT_EQ(two.overlaps.size(), 1u);
  EXPECT_GT(two.overlaps[0].overlap, 1.0 - 1e-10);
  ASSERT_EQ(two.verifications.size(), 2u);

  const CompareReport three = compare_builds(oracle::chain_cluster(4), kTunedPulse);
  EXPECT_TRUE(three.pass);
  ASSERT_EQ(three.overlaps.size(), 3u);
  for (const auto& pair : three.overlaps)
    EXPECT_GT(pair.overlap, 1.0 - 1e-10);
  ASSERT_EQ(three.verifications.size(), 3u);
  for (const auto& [model, report] : three.verifications) EXPECT_TRUE(report.pass);

  const Cluster lshape(2, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}});
  EXPECT_TRUE(compare_builds(lshape, kTunedPulse).pass);
  const Cluster block(2, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
  EXPECT_TRUE(compare_builds(block, kTunedPulse).pass);
}

TEST(ProtocolTest, EdgeOrderWithinStepIrrelevant) {
  const Cluster c = oracle::grid_cluster(2, 3);
  const BuildResult reference = build_heisenberg(c);
  Schedule reversed = generate_schedule(c);
  for (auto& step : reversed.steps)
    std::reverse(step.edges.begin(), step.edges.end());
  // Replay the build with reversed edge order inside each step.
  StateVector sv = plus_state(c.size());
  const GateSequence seq = xor_sequence();
  for (const auto& step : reversed.steps)
    for (const auto& e : step.edges)
      apply_sequence(sv, seq, c.qubit_index(e.a), c.qubit_index(e.b));
  for (std::uint64_t i = 0; i < sv.size(); ++i)
    EXPECT_NEAR(std::abs(sv.amplitudes()[i] - reference.state.amplitudes()[i]), 0.0,
                1e-12);
}

TEST(ProtocolTest, RandomSubClustersAgreeAcrossModels) {
  std::mt19937_64 rng(31337);
  const Cluster grid = oracle::grid_cluster(4, 4);
  const Cluster box = oracle::box_cluster(2, 2, 3);
  for (const Cluster* base : {&grid, &box}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Site> grown;
      std::set<Site> in;
      Site seed = base->sites()[rng() % base->sites().size()];
      grown.push_back(seed);
      in.insert(seed);
      const int target = 3 + static_cast<int>(rng() % 8);
      while (static_cast<int>(grown.size()) < target) {
        const Site& from = grown[rng() % grown.size()];
        const auto nbs = base->neighbors(from);
        const Site next = nbs[rng() % nbs.size()];
        if (in.insert(next).second) grown.push_back(next);
      }
      const Cluster c(base->dimension(), grown);
      const CompareReport report = compare_builds(c, kTunedPulse);
      EXPECT_TRUE(report.pass) << "dimension " << base->dimension() << " size "
                               << c.size();
    }
  }
}

TEST(ProtocolTest, ModelNames) {
  EXPECT_EQ(model_name(Model::ising), "ising");
  EXPECT_EQ(model_name(Model::heisenberg), "heisenberg");
  EXPECT_EQ(model_name(Model::sah), "sah");
  EXPECT_EQ(model_from_name("sah"), Model::sah);
  EXPECT_THROW(model_from_name("bogus"), ValidationError);
}

}  // namespace
