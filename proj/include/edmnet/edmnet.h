/* edmnet C API: extremal-dependence networks and ES-minimizing portfolios. */
#ifndef EDMNET_H
#define EDMNET_H

#include <stddef.h>

#if defined(EDMNET_BUILDING_LIBRARY)
#define EDMNET_API __attribute__((visibility("default")))
#else
#define EDMNET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum edmnet_status {
  EDMNET_OK = 0,
  EDMNET_ERR_INTERNAL = 1,
  EDMNET_ERR_PRECONDITION = 2,     /* bad argument or configuration */
  EDMNET_ERR_INFEASIBLE = 3,       /* portfolio LP has no feasible point */
  EDMNET_ERR_MISSING_ARTIFACT = 4, /* upstream stage output absent */
  EDMNET_ERR_DATA = 5              /* input data unusable (parse, alignment, short series, ...) */
} edmnet_status;

typedef struct edmnet_config edmnet_config;
typedef struct edmnet_manifest edmnet_manifest;
typedef struct edmnet_panel edmnet_panel;
typedef struct edmnet_edm edmnet_edm;
typedef struct edmnet_graph edmnet_graph;

EDMNET_API const char* edmnet_version(void);
EDMNET_API const char* edmnet_status_name(edmnet_status status);
/* Message of the last failing call on this thread; "" after a success. */
EDMNET_API const char* edmnet_last_error(void);

/* ---- pipeline configuration ---- */
EDMNET_API edmnet_status edmnet_config_create(edmnet_config** out);
EDMNET_API void edmnet_config_destroy(edmnet_config* config);
/* Keys: prices, prices_next, index, out, tail_quantile, min_tail, theta, alpha,
   q, cap, min_return, interval, seed, path_mode, sweep, top_k, synth_law,
   synth_alpha, synth_phi, synth_count. '-' and '_' are interchangeable. */
EDMNET_API edmnet_status edmnet_config_set(edmnet_config* config, const char* key, const char* value);
EDMNET_API edmnet_status edmnet_config_load_file(edmnet_config* config, const char* path);
EDMNET_API edmnet_status edmnet_config_validate(const edmnet_config* config);

/* ---- runs ----
   Both calls store a manifest in *out (also when the run fails, listing what
   completed) and return the status of the failure, if any. */
EDMNET_API edmnet_status edmnet_run_pipeline(const edmnet_config* config, edmnet_manifest** out);
EDMNET_API edmnet_status edmnet_run_stage(const edmnet_config* config, const char* stage, edmnet_manifest** out);
EDMNET_API size_t edmnet_stage_count(void);
EDMNET_API const char* edmnet_stage_name(size_t i);

EDMNET_API void edmnet_manifest_destroy(edmnet_manifest* manifest);
EDMNET_API edmnet_status edmnet_manifest_status(const edmnet_manifest* manifest);
EDMNET_API const char* edmnet_manifest_error(const edmnet_manifest* manifest);
EDMNET_API size_t edmnet_manifest_artifact_count(const edmnet_manifest* manifest);
EDMNET_API const char* edmnet_manifest_artifact_name(const edmnet_manifest* manifest, size_t i);
EDMNET_API const char* edmnet_manifest_artifact_hash(const edmnet_manifest* manifest, size_t i);
EDMNET_API size_t edmnet_manifest_warning_count(const edmnet_manifest* manifest);
EDMNET_API const char* edmnet_manifest_warning(const edmnet_manifest* manifest, size_t i);
EDMNET_API const char* edmnet_manifest_json(const edmnet_manifest* manifest);

/* ---- return panels ---- */
/* Long-format date,ticker,adj_close prices -> aligned daily log-returns. */
EDMNET_API edmnet_status edmnet_panel_from_prices_csv(const char* path, edmnet_panel** out);
EDMNET_API void edmnet_panel_destroy(edmnet_panel* panel);
EDMNET_API size_t edmnet_panel_assets(const edmnet_panel* panel);
EDMNET_API size_t edmnet_panel_observations(const edmnet_panel* panel);
EDMNET_API const char* edmnet_panel_ticker(const edmnet_panel* panel, size_t i);
EDMNET_API double edmnet_panel_return(const edmnet_panel* panel, size_t t, size_t asset);

/* ---- extremal dependence ---- */
EDMNET_API edmnet_status edmnet_edm_pair(const double* x, const double* y, size_t n, double tail_quantile,
                                         size_t min_tail, double* edm, size_t* tail_count);
EDMNET_API edmnet_status edmnet_edm_matrix(const edmnet_panel* panel, double tail_quantile, size_t min_tail,
                                           edmnet_edm** out);
EDMNET_API void edmnet_edm_destroy(edmnet_edm* edm);
EDMNET_API size_t edmnet_edm_size(const edmnet_edm* edm);
EDMNET_API double edmnet_edm_value(const edmnet_edm* edm, size_t i, size_t j);
EDMNET_API size_t edmnet_edm_tail_count(const edmnet_edm* edm, size_t i, size_t j);

/* ---- threshold network ---- */
typedef struct edmnet_network_stats {
  size_t vertex_count;
  size_t edge_count;
  size_t isolated_count;
  double average_degree;
  double diameter;
  double density;
  double average_clustering;
  double average_path_length;
} edmnet_network_stats;

EDMNET_API edmnet_status edmnet_graph_build(const edmnet_edm* edm, double theta, edmnet_graph** out);
/* n vertices, m edges given as 2*m vertex indices. */
EDMNET_API edmnet_status edmnet_graph_from_edges(size_t n, const size_t* edges, size_t m, edmnet_graph** out);
EDMNET_API void edmnet_graph_destroy(edmnet_graph* graph);
EDMNET_API size_t edmnet_graph_vertex_count(const edmnet_graph* graph);
EDMNET_API size_t edmnet_graph_edge_count(const edmnet_graph* graph);
EDMNET_API int edmnet_graph_has_edge(const edmnet_graph* graph, size_t u, size_t v);
/* connected_only = 0 selects the paper-compatible path averaging. */
EDMNET_API edmnet_status edmnet_graph_stats(const edmnet_graph* graph, int connected_only, edmnet_network_stats* out);
/* b and b_n each hold vertex_count values; b_n may be NULL. */
EDMNET_API edmnet_status edmnet_graph_betweenness(const edmnet_graph* graph, double* b, double* b_n);
/* selected[v] = 1 for members of the greedy independent set. */
EDMNET_API edmnet_status edmnet_graph_greedy_mis(const edmnet_graph* graph, int* selected, size_t* member_count);

/* ---- risk and portfolio ---- */
EDMNET_API edmnet_status edmnet_var_es(const double* losses, size_t n, double alpha, double* var, double* es);
/* min cost'w s.t. sum w = 1, 0 <= w <= cap, returns'w >= min_return.
   Returns EDMNET_ERR_INFEASIBLE when no such w exists. */
EDMNET_API edmnet_status edmnet_portfolio_solve(const double* cost, const double* returns, size_t n, double cap,
                                                double min_return, double* weights, double* objective);

#ifdef __cplusplus
}
#endif

#endif /* EDMNET_H */
