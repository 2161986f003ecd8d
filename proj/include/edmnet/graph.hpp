#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace edmnet {

using Vertex = std::size_t;

/// Simple undirected graph with sorted adjacency lists. No self-loops and no
/// parallel edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Component label per vertex; labels are numbered by smallest member.
  std::vector<std::size_t> components() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edges_ = 0;
};

}  // namespace edmnet
