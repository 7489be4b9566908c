#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hypermap {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Key of an unordered pair, independent of argument order.
inline std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

/// Immutable undirected simple graph over dense indices 0..n-1.
///
/// Neighbor lists are sorted; edge membership is an O(1) hash lookup.
class AdjacencySnapshot {
 public:
  AdjacencySnapshot() = default;

  /// Self-loops and duplicate edges are dropped silently; callers that
  /// need counts should deduplicate first (see read_edge_list).
  AdjacencySnapshot(std::vector<std::string> labels, std::span<const Edge> edges);

  /// Labels default to "0".."n-1".
  static AdjacencySnapshot from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeId v) const { return labels_[v]; }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId a, NodeId b) const { return a != b && edge_index_.contains(pair_key(a, b)); }
  /// Edges with first < second, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  double average_degree() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::unordered_set<std::uint64_t> edge_index_;
};

/// Component id per node, numbered by first appearance.
std::vector<std::uint32_t> connected_components(const AdjacencySnapshot& g);

/// Nodes of the largest component (ties: lowest component id), ascending.
std::vector<NodeId> giant_component(const AdjacencySnapshot& g);

/// BFS hop distances from source; -1 where unreachable.
std::vector<std::int32_t> bfs_distances(const AdjacencySnapshot& g, NodeId source);

}  // namespace hypermap
