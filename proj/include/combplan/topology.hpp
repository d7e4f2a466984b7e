#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace combplan {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Node {
  std::string id;
  double weight = 0.0;  // traffic weight (data centers + IXPs), dimensionless
};

struct LinkSpec {
  std::string a;
  std::string b;
  double length_km = 0.0;
};

struct Link {
  int a = -1;
  int b = -1;
  double length_km = 0.0;
  std::vector<double> spans_km;
};

// Equal-length spans of at most 80 km: n = ceil(length/80), each length/n.
std::vector<double> split_spans(double length_km);

inline constexpr double kMaxSpanKm = 80.0;

// Physical plant: nodes, bidirectional links, per-link span decomposition.
// Immutable after construction; safe to share across concurrent planning runs.
class Topology {
 public:
  Topology(std::vector<Node> nodes, const std::vector<LinkSpec>& links);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }
  const Node& node(int i) const { return nodes_[i]; }
  const Link& link(int i) const { return links_[i]; }

  int node_index(const std::string& id) const;  // -1 if unknown
  int find_link(int a, int b) const;            // -1 if absent; unordered pair

  // (neighbor node, link index) pairs.
  std::span<const std::pair<int, int>> neighbors(int node) const {
    return adjacency_[node];
  }

  // Mean over all unordered node pairs of the shortest-path length in km.
  double mean_shortest_path_km() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

}  // namespace combplan
