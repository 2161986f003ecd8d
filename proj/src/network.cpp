#include "edmnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "edmnet/error.hpp"

namespace edmnet {

ThresholdGraph build_graph(const EdmMatrix& edm, double theta) {
  require(theta > -0.5, "theta must exceed -0.5");
  require(theta <= 0.5, "theta exceeds 0.5");
  const std::size_t n = edm.tickers.size();
  ThresholdGraph out{edm.tickers, theta, Graph(n), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edm.values(i, j) >= theta) {
        out.graph.add_edge(i, j);
        out.weights(i, j) = out.weights(j, i) = edm.values(i, j);
      }
  return out;
}

DegreeSummary summarize_degrees(std::vector<std::size_t> degrees) {
  DegreeSummary out;
  out.degrees = std::move(degrees);
  std::vector<std::size_t> sorted = out.degrees;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out.ccdf_points.emplace_back(static_cast<double>(sorted[i]), static_cast<double>(sorted.size() - j) / n);
    i = j;
  }
  return out;
}

DegreeSummary degree_stats(const Graph& g) {
  std::vector<std::size_t> degrees(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
  return summarize_degrees(std::move(degrees));
}

PowerLawFit fit_power_law(const DegreeSummary& summary) {
  PowerLawFit fit;
  for (const auto& [k, s] : summary.ccdf_points)
    if (k > 0.0 && s > 0.0) fit.support.emplace_back(k, s);
  if (fit.support.size() < 3)
    fail(Errc::insufficient_support, "power-law fit needs 3 positive CCDF points, have " +
                                         std::to_string(fit.support.size()));

  const double m = static_cast<double>(fit.support.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [k, s] : fit.support) {
    mx += std::log(k);
    my += std::log(s);
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [k, s] : fit.support) {
    const double dx = std::log(k) - mx;
    const double dy = std::log(s) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  fit.alpha_hat = 1.0 + std::abs(fit.slope);
  return fit;
}

const char* path_mode_name(PathMode mode) {
  return mode == PathMode::paper_compat ? "paper-compat" : "connected-only";
}

PathMode parse_path_mode(const std::string& name) {
  if (name == "paper-compat") return PathMode::paper_compat;
  if (name == "connected-only") return PathMode::connected_only;
  fail(Errc::precondition, "unknown path mode '" + name + "'");
}

namespace {

std::vector<long> bfs_distances(const Graph& g, Vertex source) {
  std::vector<long> dist(g.vertex_count(), -1);
  dist[source] = 0;
  std::queue<Vertex> frontier;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
  }
  return dist;
}

}  // namespace

PathMetrics path_metrics(const Graph& g, PathMode mode) {
  const std::size_t n = g.vertex_count();
  long total = 0;
  long longest = 0;
  std::size_t reachable_pairs = 0;
  for (Vertex s = 0; s < n; ++s) {
    const auto dist = bfs_distances(g, s);
    for (Vertex t = s + 1; t < n; ++t)
      if (dist[t] > 0) {
        total += dist[t];
        longest = std::max(longest, dist[t]);
        ++reachable_pairs;
      }
  }
  PathMetrics out;
  out.diameter = static_cast<double>(longest);
  if (mode == PathMode::paper_compat) {
    if (n >= 2) out.average_path_length = 2.0 * static_cast<double>(total) / (static_cast<double>(n) * (n - 1));
  } else if (reachable_pairs > 0) {
    out.average_path_length = static_cast<double>(total) / static_cast<double>(reachable_pairs);
  }
  return out;
}

ClusteringResult clustering(const Graph& g) {
  ClusteringResult out;
  out.per_vertex.assign(g.vertex_count(), 0.0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto nbrs = g.neighbors(v);
    const std::size_t k = nbrs.size();
    if (k < 2) continue;
    std::size_t links = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (g.has_edge(nbrs[a], nbrs[b])) ++links;
    out.per_vertex[v] = 2.0 * static_cast<double>(links) / (static_cast<double>(k) * (k - 1));
  }
  if (!out.per_vertex.empty()) {
    double sum = 0.0;
    for (double c : out.per_vertex) sum += c;
    out.average = sum / static_cast<double>(out.per_vertex.size());
  }
  return out;
}

double density(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) fail(Errc::undefined_metric, "density is undefined for fewer than 2 vertices");
  return 2.0 * static_cast<double>(g.edge_count()) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

NetworkStats network_stats(const ThresholdGraph& tg, PathMode mode) {
  const Graph& g = tg.graph;
  NetworkStats s;
  s.theta = tg.theta;
  s.mode = mode;
  s.vertex_count = g.vertex_count();
  s.edge_count = g.edge_count();
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) ++s.isolated_count;
  s.density = density(g);
  s.average_degree = 2.0 * static_cast<double>(s.edge_count) / static_cast<double>(s.vertex_count);
  const auto paths = path_metrics(g, mode);
  s.diameter = paths.diameter;
  s.average_path_length = paths.average_path_length;
  s.average_clustering = clustering(g).average;
  return s;
}

double normalized_betweenness(double b, std::size_t n) {
  require(n >= 3, "normalized betweenness needs n >= 3");
  const double nd = static_cast<double>(n);
  return 2.0 * b / ((nd - 1.0) * (nd - 2.0));
}

CentralityReport betweenness(const Graph& g) {
  CentralityReport out;
  out.b = brandes_betweenness<double>(g);
  const std::size_t n = g.vertex_count();
  out.b_n.assign(n, 0.0);
  if (n < 3) {
    out.normalization_undefined = true;
    return out;
  }
  for (std::size_t v = 0; v < n; ++v) out.b_n[v] = normalized_betweenness(out.b[v], n);
  return out;
}

std::map<std::pair<Vertex, Vertex>, double> edge_betweenness(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::map<std::pair<Vertex, Vertex>, double> out;
  for (const auto& e : g.edges()) out[e] = 0.0;

  std::vector<std::vector<Vertex>> preds(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<long> dist(n);
  std::vector<Vertex> order;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex v = 0; v < n; ++v) {
      preds[v].clear();
      sigma[v] = 0.0;
      delta[v] = 0.0;
      dist[v] = -1;
    }
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    std::queue<Vertex> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      order.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex w = *it;
      for (Vertex v : preds[w]) {
        const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
        out[{std::min(v, w), std::max(v, w)}] += c;
        delta[v] += c;
      }
    }
  }
  for (auto& [edge, value] : out) value /= 2.0;
  return out;
}

}  // namespace edmnet
