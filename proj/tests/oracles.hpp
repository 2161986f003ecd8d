#pragma once

// Test-only reference implementations. None of these share code paths with
// the library algorithms they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "edmnet/graph.hpp"

namespace oracle {

using edmnet::Graph;
using edmnet::Vertex;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

inline Graph star_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Two K_k cliques joined by a single bridge between vertex k-1 and vertex k.
inline Graph bridged_cliques(std::size_t k) {
  Graph g(2 * k);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) {
      g.add_edge(u, v);
      g.add_edge(k + u, k + v);
    }
  g.add_edge(k - 1, k);
  return g;
}

// Floyd-Warshall all-pairs hop distances; -1 when unreachable.
inline std::vector<std::vector<long>> all_pairs_hops(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr long inf = std::numeric_limits<long>::max() / 4;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v = 0; v < n; ++v)
      if (g.has_edge(u, v)) d[u][v] = 1;
  }
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

// Enumerates every shortest path explicitly and accumulates n^v_ij / n_ij.
template <class Rational>
std::vector<Rational> brute_force_betweenness(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto d = all_pairs_hops(g);
  std::vector<Rational> b(n, Rational(0));
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = s + 1; t < n; ++t) {
      if (d[s][t] < 2) continue;  // unreachable or adjacent: no interior vertices
      long total = 0;
      std::vector<long> through(n, 0);
      std::vector<Vertex> path{s};
      std::function<void(Vertex)> walk = [&](Vertex u) {
        if (u == t) {
          ++total;
          for (std::size_t k = 1; k + 1 < path.size(); ++k) ++through[path[k]];
          return;
        }
        for (Vertex w = 0; w < n; ++w)
          if (g.has_edge(u, w) && d[s][w] == d[s][u] + 1 && d[w][t] == d[u][t] - 1) {
            path.push_back(w);
            walk(w);
            path.pop_back();
          }
      };
      walk(s);
      for (Vertex v = 0; v < n; ++v)
        if (through[v] > 0) b[v] += Rational(through[v], total);
    }
  return b;
}

// Largest independent set among the non-isolated vertices (exhaustive).
inline std::size_t exact_mis_size(const Graph& g) {
  std::vector<Vertex> active;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) active.push_back(v);
  const std::size_t k = active.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a)
      if (mask >> a & 1U)
        for (std::size_t b = a + 1; b < k && ok; ++b)
          if ((mask >> b & 1U) && g.has_edge(active[a], active[b])) ok = false;
    if (ok) best = size;
  }
  return best;
}

struct VertexOptimum {
  bool feasible = false;
  double objective = std::numeric_limits<double>::infinity();
  std::vector<double> weights;
};

// Enumerates the basic feasible points of
//   min c'w  s.t. sum w = 1, lo <= w <= hi, r'w >= floor.
// A vertex fixes all but at most two weights at a bound: one free weight is
// pinned by the budget, two free weights by budget + active return row.
inline VertexOptimum enumerate_vertices(const std::vector<double>& c, const std::vector<double>& r, double lo,
                                        double hi, double floor) {
  const std::size_t n = c.size();
  constexpr double tol = 1e-9;
  VertexOptimum best;
  auto consider = [&](const std::vector<double>& w) {
    double sum = 0, ret = 0, obj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] < lo - tol || w[i] > hi + tol) return;
      sum += w[i];
      ret += r[i] * w[i];
      obj += c[i] * w[i];
    }
    if (std::abs(sum - 1.0) > tol || ret < floor - tol) return;
    best.feasible = true;
    if (obj < best.objective) {
      best.objective = obj;
      best.weights = w;
    }
  };
  std::vector<double> w(n);
  auto fixed_patterns = [&](const std::vector<std::size_t>& free, auto&& body) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(free.begin(), free.end(), i) == free.end()) rest.push_back(i);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
      for (std::size_t k = 0; k < rest.size(); ++k) w[rest[k]] = (mask >> k & 1U) ? hi : lo;
      body();
    }
  };
  fixed_patterns({}, [&] { consider(w); });
  for (std::size_t i = 0; i < n; ++i)
    fixed_patterns({i}, [&] {
      double s = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) s += w[k];
      w[i] = 1.0 - s;
      consider(w);
    });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      fixed_patterns({i, j}, [&] {
        double s = 0, rr = 0;
        for (std::size_t k = 0; k < n; ++k)
          if (k != i && k != j) {
            s += w[k];
            rr += r[k] * w[k];
          }
        // w_i + w_j = 1 - s ; r_i w_i + r_j w_j = floor - rr
        const double det = r[j] - r[i];
        if (std::abs(det) < 1e-14) return;
        const double wj = (floor - rr - r[i] * (1.0 - s)) / det;
        w[j] = wj;
        w[i] = 1.0 - s - wj;
        consider(w);
      });
  return best;
}

}  // namespace oracle
