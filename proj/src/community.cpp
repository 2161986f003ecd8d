#include "edmnet/community.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "edmnet/error.hpp"
#include "edmnet/network.hpp"

namespace edmnet {

namespace {

// Components of `work` become communities numbered by smallest member; the
// vertices in `isolated` are appended afterwards as singletons.
Partition component_partition(const Graph& work, const std::vector<bool>& isolated) {
  const std::size_t n = work.vertex_count();
  const auto comp = work.components();
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> remap(n, unset);
  Partition p;
  p.assignment.assign(n, 0);
  std::size_t next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (isolated[v]) continue;
    if (remap[comp[v]] == unset) remap[comp[v]] = next++;
    p.assignment[v] = remap[comp[v]];
  }
  for (Vertex v = 0; v < n; ++v)
    if (isolated[v]) p.assignment[v] = next++;
  p.community_count = next;
  return p;
}

std::pair<Vertex, Vertex> strongest_edge(const Graph& g) {
  const auto scores = edge_betweenness(g);
  double best = -1.0;
  for (const auto& [edge, value] : scores) best = std::max(best, value);
  const double cutoff = best - 1e-9 * std::max(1.0, best);
  // map order is lexicographic in (u, v)
  for (const auto& [edge, value] : scores)
    if (value >= cutoff) return edge;
  return scores.begin()->first;
}

}  // namespace

double modularity(const Graph& g, const Partition& p) {
  const std::size_t m = g.edge_count();
  if (m == 0) fail(Errc::undefined_metric, "modularity is undefined for a graph without edges");
  require(p.assignment.size() == g.vertex_count(), "partition size does not match graph");
  std::vector<double> internal(p.community_count, 0.0);
  std::vector<double> degree_sum(p.community_count, 0.0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) degree_sum[p.assignment[v]] += static_cast<double>(g.degree(v));
  for (const auto& [u, v] : g.edges())
    if (p.assignment[u] == p.assignment[v]) internal[p.assignment[u]] += 1.0;
  const double md = static_cast<double>(m);
  double q = 0.0;
  for (std::size_t c = 0; c < p.community_count; ++c) {
    const double share = degree_sum[c] / (2.0 * md);
    q += internal[c] / md - share * share;
  }
  return q;
}

std::vector<Partition> girvan_newman(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> isolated(n);
  for (Vertex v = 0; v < n; ++v) isolated[v] = g.degree(v) == 0;

  auto scored = [&](Partition p) {
    p.modularity = g.edge_count() > 0 ? modularity(g, p) : 0.0;
    return p;
  };

  Graph work = g;
  std::vector<Partition> levels{scored(component_partition(work, isolated))};
  while (work.edge_count() > 0) {
    const auto [u, v] = strongest_edge(work);
    work.remove_edge(u, v);
    Partition next = component_partition(work, isolated);
    if (next.community_count != levels.back().community_count) levels.push_back(scored(std::move(next)));
  }
  return levels;
}

PartitionChoice select_partition(const std::vector<Partition>& levels, const Graph& g) {
  require(!levels.empty(), "no dendrogram levels to select from");
  if (g.edge_count() == 0) {
    Partition singletons;
    singletons.assignment.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) singletons.assignment[v] = v;
    singletons.community_count = g.vertex_count();
    return {singletons, levels.size() - 1, true};
  }
  std::size_t best = 0;
  double best_q = modularity(g, levels[0]);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const double q = modularity(g, levels[i]);
    const double tol = 1e-12;
    if (q > best_q + tol ||
        (std::abs(q - best_q) <= tol && levels[i].community_count < levels[best].community_count)) {
      best = i;
      best_q = q;
    }
  }
  Partition chosen = levels[best];
  chosen.modularity = best_q;
  return {chosen, best, false};
}

CommunityGraph aggregate_communities(const Graph& g, const Partition& p) {
  require(p.assignment.size() == g.vertex_count(), "partition size does not match graph");
  CommunityGraph out;
  out.nodes.resize(p.community_count);
  for (std::size_t c = 0; c < p.community_count; ++c) out.nodes[c].id = c;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    require(p.assignment[v] < p.community_count, "community id out of range");
    ++out.nodes[p.assignment[v]].size;
  }
  for (auto& node : out.nodes) node.displayed = node.size >= 2;

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> cross;
  for (const auto& [u, v] : g.edges()) {
    const std::size_t a = p.assignment[u];
    const std::size_t b = p.assignment[v];
    if (a == b) {
      ++out.intra_edges;
    } else {
      ++cross[{std::min(a, b), std::max(a, b)}];
    }
  }
  for (const auto& [key, count] : cross) out.edges.push_back({key.first, key.second, count});
  return out;
}

}  // namespace edmnet
