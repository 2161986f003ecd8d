#include "edmnet/mis.hpp"

#include <algorithm>
#include <cmath>

#include "edmnet/error.hpp"

namespace edmnet {

const char* mis_reason_name(MisReason r) {
  switch (r) {
    case MisReason::member: return "member";
    case MisReason::neighbor_removed: return "neighbor-removed";
    case MisReason::isolated_excluded: return "isolated-excluded";
  }
  return "unknown";
}

IndependentSet greedy_mis(const Graph& g, std::span<const std::string> labels,
                          std::span<const double> bn) {
  const std::size_t n = g.vertex_count();
  require(labels.size() == n && bn.size() == n, "labels and centrality must cover every vertex");

  IndependentSet out;
  out.reasons.assign(n, MisReason::neighbor_removed);
  std::vector<bool> alive(n, false);
  std::vector<std::size_t> residual_degree(n, 0);
  std::size_t remaining = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      out.excluded_isolated.push_back(v);
      out.reasons[v] = MisReason::isolated_excluded;
    } else {
      alive[v] = true;
      residual_degree[v] = g.degree(v);
      ++remaining;
    }
  }

  constexpr double kTieTol = 1e-12;
  auto better = [&](Vertex a, Vertex b) {
    if (residual_degree[a] != residual_degree[b]) return residual_degree[a] < residual_degree[b];
    if (std::abs(bn[a] - bn[b]) > kTieTol) return bn[a] < bn[b];
    return labels[a] < labels[b];
  };

  auto kill = [&](Vertex v) {
    alive[v] = false;
    --remaining;
    for (Vertex w : g.neighbors(v))
      if (alive[w]) --residual_degree[w];
  };

  while (remaining > 0) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && (pick == n || better(v, pick))) pick = v;
    out.pick_order.push_back(pick);
    out.reasons[pick] = MisReason::member;
    kill(pick);
    for (Vertex w : g.neighbors(pick))
      if (alive[w]) kill(w);
  }
  out.members = out.pick_order;
  std::sort(out.members.begin(), out.members.end());
  return out;
}

bool verify_independent(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s)
    if (v >= g.vertex_count()) fail(Errc::membership, "vertex " + std::to_string(v) + " is not in the graph");
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.has_edge(s[a], s[b])) return false;
  return true;
}

bool verify_independent(const Graph& g, std::span<const std::string> labels,
                        std::span<const std::string> subset) {
  std::vector<Vertex> ids;
  for (const auto& name : subset) {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) fail(Errc::membership, "unknown vertex '" + name + "'");
    ids.push_back(static_cast<Vertex>(it - labels.begin()));
  }
  return verify_independent(g, ids);
}

bool is_maximal_independent(const Graph& g, std::span<const Vertex> s) {
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : s) in[v] = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in[v] || g.degree(v) == 0) continue;
    const auto nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return in[w]; })) return false;
  }
  return true;
}

}  // namespace edmnet
