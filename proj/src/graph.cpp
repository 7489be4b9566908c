#include "hypermap/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypermap {

AdjacencySnapshot::AdjacencySnapshot(std::vector<std::string> labels, std::span<const Edge> edges)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw std::out_of_range("edge endpoint outside node range");
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::size_t> deg(n, 0);
  for (auto [a, b] : edges_) {
    ++deg[a];
    ++deg[b];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  edge_index_.reserve(edges_.size() * 2);
  for (auto [a, b] : edges_) {
    adjacency_[fill[a]++] = b;
    adjacency_[fill[b]++] = a;
    edge_index_.insert(pair_key(a, b));
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

AdjacencySnapshot AdjacencySnapshot::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = std::to_string(v);
  return AdjacencySnapshot(std::move(labels), edges);
}

double AdjacencySnapshot::average_degree() const {
  if (labels_.empty()) return 0.0;
  return 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(labels_.size());
}

std::vector<std::uint32_t> connected_components(const AdjacencySnapshot& g) {
  const std::size_t n = g.node_count();
  constexpr std::uint32_t kUnset = ~0u;
  std::vector<std::uint32_t> comp(n, kUnset);
  std::vector<NodeId> stack;
  std::uint32_t next = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(v)) {
        if (comp[w] == kUnset) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<NodeId> giant_component(const AdjacencySnapshot& g) {
  const auto comp = connected_components(g);
  if (comp.empty()) return {};
  const std::uint32_t count = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  const auto best = static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> nodes;
  nodes.reserve(sizes[best]);
  for (NodeId v = 0; v < comp.size(); ++v) {
    if (comp[v] == best) nodes.push_back(v);
  }
  return nodes;
}

std::vector<std::int32_t> bfs_distances(const AdjacencySnapshot& g, NodeId source) {
  std::vector<std::int32_t> dist(g.node_count(), -1);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace hypermap
