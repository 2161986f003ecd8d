#pragma once

#include <cstddef>
#include <queue>
#include <vector>

namespace edmnet {

template <class Scalar>
std::vector<Scalar> brandes_betweenness(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Scalar> centrality(n, Scalar(0));
  std::vector<std::vector<Vertex>> preds(n);
  std::vector<Scalar> sigma(n);
  std::vector<Scalar> delta(n);
  std::vector<long> dist(n);
  std::vector<Vertex> order;
  order.reserve(n);

  for (Vertex s = 0; s < n; ++s) {
    for (Vertex v = 0; v < n; ++v) {
      preds[v].clear();
      sigma[v] = Scalar(0);
      delta[v] = Scalar(0);
      dist[v] = -1;
    }
    order.clear();
    sigma[s] = Scalar(1);
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
      for (Vertex v : preds[w]) delta[v] += sigma[v] / sigma[w] * (Scalar(1) + delta[w]);
      if (w != s) centrality[w] += delta[w];
    }
  }
  // every unordered pair was visited from both ends
  for (auto& c : centrality) c /= Scalar(2);
  return centrality;
}

}  // namespace edmnet
