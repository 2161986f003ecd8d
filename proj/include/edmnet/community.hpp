#pragma once

#include <cstddef>
#include <vector>

#include "edmnet/graph.hpp"

namespace edmnet {

struct Partition {
  std::vector<std::size_t> assignment;  // vertex -> community id, ids contiguous from 0
  std::size_t community_count = 0;
  double modularity = 0.0;  // against the source graph; 0 when it has no edges

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Girvan-Newman dendrogram. Index 0 is the component partition of `g`; each
/// later level follows an edge removal that split a component. Isolated
/// vertices never enter the edge-removal loop and carry the highest ids.
std::vector<Partition> girvan_newman(const Graph& g);

/// Unweighted Newman modularity; undefined_metric error for edgeless graphs.
double modularity(const Graph& g, const Partition& p);

struct PartitionChoice {
  Partition partition;
  std::size_t level = 0;
  bool warning = false;  // set when modularity was undefined (edgeless graph)
};

/// Maximum-modularity level; ties go to fewer communities, then the earlier level.
PartitionChoice select_partition(const std::vector<Partition>& levels, const Graph& g);

struct CommunityNode {
  std::size_t id = 0;
  std::size_t size = 0;
  bool displayed = false;  // size >= 2
};

struct CommunityEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t count = 0;  // cross edges between communities a < b
};

struct CommunityGraph {
  std::vector<CommunityNode> nodes;
  std::vector<CommunityEdge> edges;
  std::size_t intra_edges = 0;
};

CommunityGraph aggregate_communities(const Graph& g, const Partition& p);

}  // namespace edmnet
