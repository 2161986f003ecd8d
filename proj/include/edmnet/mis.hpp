#pragma once

#include <span>
#include <string>
#include <vector>

#include "edmnet/graph.hpp"

namespace edmnet {

enum class MisReason { member, neighbor_removed, isolated_excluded };
const char* mis_reason_name(MisReason r);

struct IndependentSet {
  std::vector<Vertex> members;            // ascending
  std::vector<Vertex> excluded_isolated;  // ascending
  std::vector<Vertex> pick_order;         // members in the order chosen
  std::vector<MisReason> reasons;         // per vertex
};

/// Min-degree greedy on the residual graph after dropping isolated vertices.
/// Ties: lower normalized betweenness (taken on the original graph), then the
/// lexicographically smaller label.
IndependentSet greedy_mis(const Graph& g, std::span<const std::string> labels,
                          std::span<const double> normalized_betweenness);

/// True iff no edge joins two vertices of `s`; membership error for unknown vertices.
bool verify_independent(const Graph& g, std::span<const Vertex> s);
bool verify_independent(const Graph& g, std::span<const std::string> labels,
                        std::span<const std::string> subset);

/// Every non-isolated vertex outside `s` has a neighbour in `s`.
bool is_maximal_independent(const Graph& g, std::span<const Vertex> s);

}  // namespace edmnet
