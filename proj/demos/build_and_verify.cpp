// Builds a 2x3 cluster with each interaction model, cross-checks the
// states and prints the stabilizer report of the exchange-sequence build.

#include <iostream>

#include <clusterforge/clusterforge.hpp>

using namespace clusterforge;

int main() {
  std::vector<Site> sites;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 3; ++y) sites.push_back({x, y});
  const Cluster cluster(2, sites);

  const PulseSpec pulse{4.0 * kPi, 4.0 * kPi, kPi};
  const CompareReport report = compare_builds(cluster, pulse);
  for (const auto& pair : report.overlaps)
    std::cout << model_name(pair.a) << " vs " << model_name(pair.b)
              << ": overlap " << pair.overlap << "\n";

  const BuildResult heisenberg = build_heisenberg(cluster);
  std::cout << write_verification_json(
                   verify_cluster_state(heisenberg.state, cluster))
            << "\n";
  return report.pass ? 0 : 1;
}
