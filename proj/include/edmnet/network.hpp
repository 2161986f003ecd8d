#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "edmnet/edm.hpp"
#include "edmnet/graph.hpp"
#include "edmnet/matrix.hpp"

namespace edmnet {

struct ThresholdGraph {
  std::vector<std::string> tickers;
  double theta = 0.0;
  Graph graph;
  Matrix weights;  // EDM value on present edges, 0 elsewhere

  std::size_t size() const noexcept { return tickers.size(); }
};

/// Edge {i,j} present iff i != j and EDM(i,j) >= theta. theta in (-0.5, 0.5].
ThresholdGraph build_graph(const EdmMatrix& edm, double theta);

struct DegreeSummary {
  std::vector<std::size_t> degrees;
  // (k, fraction of vertices with degree > k) for each observed degree k, ascending.
  std::vector<std::pair<double, double>> ccdf_points;
};

DegreeSummary degree_stats(const Graph& g);
DegreeSummary summarize_degrees(std::vector<std::size_t> degrees);

struct PowerLawFit {
  double alpha_hat = 0.0;  // density exponent, 1 + |slope|
  double slope = 0.0;      // least-squares slope of log survival on log degree
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<double, double>> support;
};

PowerLawFit fit_power_law(const DegreeSummary& summary);

enum class PathMode {
  paper_compat,    // unreachable pairs count as distance 0 over all N(N-1)/2 pairs
  connected_only,  // average over reachable pairs only
};

const char* path_mode_name(PathMode mode);
PathMode parse_path_mode(const std::string& name);

struct PathMetrics {
  double average_path_length = 0.0;
  double diameter = 0.0;
};

PathMetrics path_metrics(const Graph& g, PathMode mode);

struct ClusteringResult {
  std::vector<double> per_vertex;
  double average = 0.0;
};

ClusteringResult clustering(const Graph& g);

/// 2M / (N(N-1)); throws undefined_metric for N < 2.
double density(const Graph& g);

struct NetworkStats {
  double theta = 0.0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t isolated_count = 0;
  double average_degree = 0.0;
  double diameter = 0.0;
  double density = 0.0;
  double average_clustering = 0.0;
  double average_path_length = 0.0;
  PathMode mode = PathMode::paper_compat;
};

NetworkStats network_stats(const ThresholdGraph& g, PathMode mode);

struct CentralityReport {
  std::vector<double> b;
  std::vector<double> b_n;  // 2B / ((n-1)(n-2))
  bool normalization_undefined = false;  // n < 3; b_n reported as zeros
};

CentralityReport betweenness(const Graph& g);

/// Normalized betweenness 2B / ((n-1)(n-2)) for n >= 3.
double normalized_betweenness(double b, std::size_t n);

/// Brandes accumulation over all sources; Scalar may be an exact rational type.
template <class Scalar>
std::vector<Scalar> brandes_betweenness(const Graph& g);

/// Edge betweenness keyed by (u, v), u < v.
std::map<std::pair<Vertex, Vertex>, double> edge_betweenness(const Graph& g);

}  // namespace edmnet

#include "edmnet/detail/brandes.hpp"
