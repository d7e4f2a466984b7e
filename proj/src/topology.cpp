#include "combplan/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace combplan {

std::vector<double> split_spans(double length_km) {
  if (!(length_km > 0.0)) {
    throw ValidationError("split_spans: length must be positive");
  }
  const int n = static_cast<int>(std::ceil(length_km / kMaxSpanKm));
  return std::vector<double>(static_cast<size_t>(n), length_km / n);
}

Topology::Topology(std::vector<Node> nodes, const std::vector<LinkSpec>& links)
    : nodes_(std::move(nodes)) {
  std::vector<std::string> problems;

  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id.empty()) {
      problems.push_back("node " + std::to_string(i) + ": empty id");
      continue;
    }
    if (nodes_[i].weight < 0.0) {
      problems.push_back("node '" + nodes_[i].id + "': negative weight");
    }
    if (!index_.emplace(nodes_[i].id, static_cast<int>(i)).second) {
      problems.push_back("node '" + nodes_[i].id + "': duplicate id");
    }
  }

  std::set<std::pair<int, int>> seen;
  for (const auto& spec : links) {
    const int a = node_index(spec.a);
    const int b = node_index(spec.b);
    const std::string tag = "link " + spec.a + "--" + spec.b;
    if (a < 0 || b < 0) {
      problems.push_back(tag + ": unknown endpoint");
      continue;
    }
    if (a == b) {
      problems.push_back(tag + ": self-loop");
      continue;
    }
    if (!(spec.length_km > 0.0)) {
      problems.push_back(tag + ": non-positive length");
      continue;
    }
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      problems.push_back(tag + ": duplicate link");
      continue;
    }
    links_.push_back(Link{a, b, spec.length_km, split_spans(spec.length_km)});
  }

  adjacency_.resize(nodes_.size());
  for (size_t li = 0; li < links_.size(); ++li) {
    adjacency_[links_[li].a].emplace_back(links_[li].b, static_cast<int>(li));
    adjacency_[links_[li].b].emplace_back(links_[li].a, static_cast<int>(li));
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
  }

  // Connectivity: BFS from node 0 must reach every node.
  if (!nodes_.empty() && problems.empty()) {
    std::vector<char> reached(nodes_.size(), 0);
    std::queue<int> frontier;
    frontier.push(0);
    reached[0] = 1;
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (const auto& [v, li] : adjacency_[u]) {
        if (!reached[v]) {
          reached[v] = 1;
          frontier.push(v);
        }
      }
    }
    for (size_t i = 0; i < nodes_.size(); ++i) {
      if (!reached[i]) {
        problems.push_back("node '" + nodes_[i].id + "': unreachable (graph disconnected)");
      }
    }
  }

  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "invalid topology:";
    for (const auto& p : problems) msg << "\n  " << p;
    throw ValidationError(msg.str());
  }
}

int Topology::node_index(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

int Topology::find_link(int a, int b) const {
  for (const auto& [v, li] : adjacency_[a]) {
    if (v == b) return li;
  }
  return -1;
}

double Topology::mean_shortest_path_km() const {
  const int n = node_count();
  double total = 0.0;
  int pairs = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    dist[s] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.emplace(0.0, s);
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > dist[u]) continue;
      for (const auto& [v, li] : adjacency_[u]) {
        const double nd = d + links_[li].length_km;
        if (nd < dist[v]) {
          dist[v] = nd;
          pq.emplace(nd, v);
        }
      }
    }
    for (int t = s + 1; t < n; ++t) {
      total += dist[t];
      ++pairs;
    }
  }
  return pairs == 0 ? 0.0 : total / pairs;
}

}  // namespace combplan
