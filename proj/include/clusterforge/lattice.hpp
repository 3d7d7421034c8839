#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "errors.hpp"
#include "pauli.hpp"

namespace clusterforge {

// Integer coordinates of one lattice site; size() is the lattice dimension.
using Site = std::vector<int>;

// Nearest-neighbor bond. Kept with a lexicographically below b.
struct Edge {
  Site a, b;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string site_string(const Site& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

// A finite set of occupied sites on the d-dimensional cubic lattice.
// Sites are stored in lexicographic order; a site's position in that order
// is its qubit index. Construction checks shape, not connectivity; use
// validate_cluster for the connectivity report.
class Cluster {
 public:
  Cluster(int dimension, std::vector<Site> sites) : dimension_(dimension) {
    if (dimension < 1) throw ValidationError("dimension must be at least 1");
    for (const auto& s : sites)
      if (static_cast<int>(s.size()) != dimension)
        throw ValidationError("site " + site_string(s) + " has " +
                              std::to_string(s.size()) +
                              " coordinates, expected " +
                              std::to_string(dimension));
    std::sort(sites.begin(), sites.end());
    for (std::size_t i = 1; i < sites.size(); ++i)
      if (sites[i] == sites[i - 1])
        throw ValidationError("duplicate site " + site_string(sites[i]));
    sites_ = std::move(sites);
    for (std::size_t i = 0; i < sites_.size(); ++i)
      index_[sites_[i]] = static_cast<int>(i);
  }

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(sites_.size()); }
  const std::vector<Site>& sites() const { return sites_; }

  bool contains(const Site& s) const { return index_.count(s) != 0; }

  int qubit_index(const Site& s) const {
    auto it = index_.find(s);
    if (it == index_.end())
      throw ValidationError("site " + site_string(s) + " is not in the cluster");
    return it->second;
  }

  // Occupied sites at unit distance along one axis, in lexicographic order.
  std::vector<Site> neighbors(const Site& s) const {
    qubit_index(s);
    std::vector<Site> out;
    for (int k = 0; k < dimension_; ++k)
      for (int step : {-1, +1}) {
        Site t = s;
        t[k] += step;
        if (contains(t)) out.push_back(std::move(t));
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  int degree(const Site& s) const { return static_cast<int>(neighbors(s).size()); }

  // Every nearest-neighbor bond exactly once, ordered by lower endpoint
  // then axis.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& s : sites_)
      for (int k = 0; k < dimension_; ++k) {
        Site t = s;
        t[k] += 1;
        if (contains(t)) out.push_back(Edge{s, std::move(t)});
      }
    return out;
  }

  // Per-axis [min, max] over occupied sites.
  std::vector<std::array<int, 2>> bounding_box() const {
    if (sites_.empty())
      throw ValidationError("bounding box of an empty cluster is undefined");
    std::vector<std::array<int, 2>> box(
        dimension_, {std::numeric_limits<int>::max(), std::numeric_limits<int>::min()});
    for (const auto& s : sites_)
      for (int k = 0; k < dimension_; ++k) {
        box[k][0] = std::min(box[k][0], s[k]);
        box[k][1] = std::max(box[k][1], s[k]);
      }
    return box;
  }

  // Correlation operator of site a: X on a, Z on each occupied neighbor.
  PauliString correlation_operator(const Site& a) const {
    PauliString p;
    p.factors[qubit_index(a)] = Pauli::X;
    for (const auto& b : neighbors(a)) p.factors[qubit_index(b)] = Pauli::Z;
    return p;
  }

 private:
  int dimension_;
  std::vector<Site> sites_;
  std::map<Site, int> index_;
};

// Connectivity report: `components` lists the connected pieces; `ok` means
// exactly one piece. Violations are human-readable.
struct ClusterReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<std::vector<Site>> components;
};

inline ClusterReport validate_cluster(const Cluster& c) {
  ClusterReport report;
  if (c.size() == 0) {
    report.ok = false;
    report.violations.push_back("cluster is empty");
    return report;
  }
  std::vector<int> component(c.size(), -1);
  int next = 0;
  for (int start = 0; start < c.size(); ++start) {
    if (component[start] >= 0) continue;
    std::queue<int> frontier;
    frontier.push(start);
    component[start] = next;
    while (!frontier.empty()) {
      const int i = frontier.front();
      frontier.pop();
      for (const auto& nb : c.neighbors(c.sites()[i])) {
        const int j = c.qubit_index(nb);
        if (component[j] < 0) {
          component[j] = next;
          frontier.push(j);
        }
      }
    }
    ++next;
  }
  report.components.resize(next);
  for (int i = 0; i < c.size(); ++i)
    report.components[component[i]].push_back(c.sites()[i]);
  if (next > 1) {
    report.ok = false;
    report.violations.push_back("cluster has " + std::to_string(next) +
                                " connected components, expected 1");
  }
  return report;
}

}  // namespace clusterforge
