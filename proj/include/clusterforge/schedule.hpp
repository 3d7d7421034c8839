#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace clusterforge {

struct Step {
  std::vector<Edge> edges;
};

// Ordered list of interaction rounds. Within one step the edges are
// vertex-disjoint, so the corresponding gates commute.
struct Schedule {
  std::vector<Step> steps;
};

// Deterministic 2d-step schedule: steps 2k and 2k+1 hold the axis-k bonds
// whose lower endpoint has even (resp. odd) k-th coordinate. Two bonds of
// equal axis and parity cannot share a site, so each step is a matching.
// Empty steps are kept; the step count is always exactly 2 * dimension.
// Refuses empty or disconnected clusters.
inline Schedule generate_schedule(const Cluster& c) {
  const ClusterReport check = validate_cluster(c);
  if (!check.ok) throw ValidationError(check.violations.front());
  Schedule sched;
  sched.steps.resize(2 * static_cast<std::size_t>(c.dimension()));
  for (const auto& e : c.edges()) {
    int axis = -1;
    for (int k = 0; k < c.dimension(); ++k)
      if (e.a[k] != e.b[k]) axis = k;
    const int parity = ((e.a[axis] % 2) + 2) % 2;
    sched.steps[2 * axis + parity].edges.push_back(e);
  }
  return sched;
}

struct ScheduleReport {
  bool ok = true;
  std::vector<std::string> violations;
};

inline std::string edge_string(const Edge& e) {
  return site_string(e.a) + "-" + site_string(e.b);
}

// Checks that a schedule is exactly the cluster's bond set, one bond per
// appearance, with every step a matching over occupied sites, in at most
// 2d steps.
inline ScheduleReport validate_schedule(const Cluster& c, const Schedule& s) {
  ScheduleReport report;
  auto fail = [&report](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };
  if (s.steps.size() > 2 * static_cast<std::size_t>(c.dimension()))
    fail("schedule has " + std::to_string(s.steps.size()) +
         " steps, more than 2 * dimension = " + std::to_string(2 * c.dimension()));
  std::map<Edge, int> seen;
  for (std::size_t step = 0; step < s.steps.size(); ++step) {
    std::set<Site> used;
    for (const auto& e : s.steps[step].edges) {
      Edge norm = e.a <= e.b ? e : Edge{e.b, e.a};
      if (!c.contains(norm.a) || !c.contains(norm.b)) {
        fail("step " + std::to_string(step) + " edge " + edge_string(norm) +
             " touches a site outside the cluster");
        continue;
      }
      int diff_axes = 0, gap = 0;
      for (int k = 0; k < c.dimension(); ++k)
        if (norm.a[k] != norm.b[k]) {
          ++diff_axes;
          gap = norm.b[k] - norm.a[k];
        }
      if (diff_axes != 1 || (gap != 1 && gap != -1))
        fail("step " + std::to_string(step) + " edge " + edge_string(norm) +
             " is not a nearest-neighbor bond");
      for (const Site* endpoint : {&norm.a, &norm.b})
        if (!used.insert(*endpoint).second)
          fail("step " + std::to_string(step) + " reuses site " +
               site_string(*endpoint));
      ++seen[norm];
    }
  }
  for (const auto& [edge, count] : seen)
    if (count > 1)
      fail("edge " + edge_string(edge) + " appears " + std::to_string(count) +
           " times");
  for (const auto& e : c.edges())
    if (!seen.count(e)) fail("edge " + edge_string(e) + " is missing");
  return report;
}

}  // namespace clusterforge
