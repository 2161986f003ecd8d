#include "edmnet/edmnet.h"

#include <exception>
#include <new>
#include <string>

#include "edmnet/edm.hpp"
#include "edmnet/error.hpp"
#include "edmnet/ingest.hpp"
#include "edmnet/mis.hpp"
#include "edmnet/network.hpp"
#include "edmnet/pipeline.hpp"
#include "edmnet/portfolio.hpp"
#include "edmnet/risk.hpp"

struct edmnet_config {
  edmnet::cli::PipelineConfig cfg;
};

struct edmnet_manifest {
  edmnet::cli::RunManifest m;
  std::string json;
  std::string error;
};

struct edmnet_panel {
  edmnet::ReturnPanel panel;
};

struct edmnet_edm {
  edmnet::EdmMatrix m;
};

struct edmnet_graph {
  std::vector<std::string> labels;
  edmnet::Graph g;
};

namespace {

thread_local std::string last_error;

edmnet_status status_of(edmnet::Errc code) {
  switch (code) {
    case edmnet::Errc::precondition: return EDMNET_ERR_PRECONDITION;
    case edmnet::Errc::infeasible: return EDMNET_ERR_INFEASIBLE;
    case edmnet::Errc::missing_artifact: return EDMNET_ERR_MISSING_ARTIFACT;
    default: return EDMNET_ERR_DATA;
  }
}

edmnet_status fail_with(edmnet_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

template <class F>
edmnet_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const edmnet::Error& e) {
    return fail_with(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(EDMNET_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(EDMNET_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail_with(EDMNET_ERR_INTERNAL, "unknown error");
  }
}

#define EDMNET_REQUIRE_ARG(cond) \
  if (!(cond)) return fail_with(EDMNET_ERR_PRECONDITION, "invalid argument: " #cond)

edmnet_status finish_run(edmnet::cli::RunManifest m, edmnet_manifest** out) {
  auto* h = new edmnet_manifest{std::move(m), {}, {}};
  h->json = h->m.to_json();
  edmnet_status s = EDMNET_OK;
  if (h->m.failure) {
    h->error = h->m.failure->stage + ": " + h->m.failure->message;
    s = fail_with(status_of(h->m.failure->code), h->error);
  }
  *out = h;
  return s;
}

}  // namespace

extern "C" {

const char* edmnet_version(void) { return "1.0.0"; }

const char* edmnet_status_name(edmnet_status status) {
  switch (status) {
    case EDMNET_OK: return "ok";
    case EDMNET_ERR_INTERNAL: return "internal";
    case EDMNET_ERR_PRECONDITION: return "precondition";
    case EDMNET_ERR_INFEASIBLE: return "infeasible";
    case EDMNET_ERR_MISSING_ARTIFACT: return "missing-artifact";
    case EDMNET_ERR_DATA: return "data";
  }
  return "unknown";
}

const char* edmnet_last_error(void) { return last_error.c_str(); }

edmnet_status edmnet_config_create(edmnet_config** out) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(out);
    *out = new edmnet_config{};
    return EDMNET_OK;
  });
}

void edmnet_config_destroy(edmnet_config* config) { delete config; }

edmnet_status edmnet_config_set(edmnet_config* config, const char* key, const char* value) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(config && key && value);
    config->cfg.set(key, value);
    return EDMNET_OK;
  });
}

edmnet_status edmnet_config_load_file(edmnet_config* config, const char* path) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(config && path);
    config->cfg.load_file(path);
    return EDMNET_OK;
  });
}

edmnet_status edmnet_config_validate(const edmnet_config* config) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(config);
    config->cfg.validate();
    return EDMNET_OK;
  });
}

edmnet_status edmnet_run_pipeline(const edmnet_config* config, edmnet_manifest** out) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(config && out);
    return finish_run(edmnet::cli::run_pipeline(config->cfg), out);
  });
}

edmnet_status edmnet_run_stage(const edmnet_config* config, const char* stage, edmnet_manifest** out) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(config && stage && out);
    return finish_run(edmnet::cli::run_stage(config->cfg, stage), out);
  });
}

size_t edmnet_stage_count(void) { return edmnet::cli::stage_names().size(); }

const char* edmnet_stage_name(size_t i) {
  const auto& names = edmnet::cli::stage_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

void edmnet_manifest_destroy(edmnet_manifest* manifest) { delete manifest; }

edmnet_status edmnet_manifest_status(const edmnet_manifest* manifest) {
  if (!manifest) return EDMNET_ERR_PRECONDITION;
  return manifest->m.failure ? status_of(manifest->m.failure->code) : EDMNET_OK;
}

const char* edmnet_manifest_error(const edmnet_manifest* manifest) {
  return manifest ? manifest->error.c_str() : "";
}

size_t edmnet_manifest_artifact_count(const edmnet_manifest* manifest) {
  return manifest ? manifest->m.artifacts.size() : 0;
}

const char* edmnet_manifest_artifact_name(const edmnet_manifest* manifest, size_t i) {
  return manifest && i < manifest->m.artifacts.size() ? manifest->m.artifacts[i].name.c_str() : nullptr;
}

const char* edmnet_manifest_artifact_hash(const edmnet_manifest* manifest, size_t i) {
  return manifest && i < manifest->m.artifacts.size() ? manifest->m.artifacts[i].hash.c_str() : nullptr;
}

size_t edmnet_manifest_warning_count(const edmnet_manifest* manifest) {
  return manifest ? manifest->m.warnings.size() : 0;
}

const char* edmnet_manifest_warning(const edmnet_manifest* manifest, size_t i) {
  return manifest && i < manifest->m.warnings.size() ? manifest->m.warnings[i].c_str() : nullptr;
}

const char* edmnet_manifest_json(const edmnet_manifest* manifest) { return manifest ? manifest->json.c_str() : ""; }

edmnet_status edmnet_panel_from_prices_csv(const char* path, edmnet_panel** out) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(path && out);
    auto panel = edmnet::log_returns(edmnet::align_panel(edmnet::read_prices_file(path)));
    *out = new edmnet_panel{std::move(panel)};
    return EDMNET_OK;
  });
}

void edmnet_panel_destroy(edmnet_panel* panel) { delete panel; }

size_t edmnet_panel_assets(const edmnet_panel* panel) { return panel ? panel->panel.assets() : 0; }

size_t edmnet_panel_observations(const edmnet_panel* panel) { return panel ? panel->panel.observations() : 0; }

const char* edmnet_panel_ticker(const edmnet_panel* panel, size_t i) {
  return panel && i < panel->panel.assets() ? panel->panel.tickers[i].c_str() : nullptr;
}

double edmnet_panel_return(const edmnet_panel* panel, size_t t, size_t asset) {
  if (!panel || t >= panel->panel.observations() || asset >= panel->panel.assets()) return 0.0;
  return panel->panel.returns(t, asset);
}

edmnet_status edmnet_edm_pair(const double* x, const double* y, size_t n, double tail_quantile, size_t min_tail,
                              double* edm, size_t* tail_count) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(x && y && edm);
    const auto est = edmnet::edm_pair({x, n}, {y, n}, edmnet::TailPolicy{tail_quantile, min_tail});
    *edm = est.edm;
    if (tail_count) *tail_count = est.tail_count;
    return EDMNET_OK;
  });
}

edmnet_status edmnet_edm_matrix(const edmnet_panel* panel, double tail_quantile, size_t min_tail, edmnet_edm** out) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(panel && out);
    *out = new edmnet_edm{edmnet::edm_matrix(panel->panel, edmnet::TailPolicy{tail_quantile, min_tail})};
    return EDMNET_OK;
  });
}

void edmnet_edm_destroy(edmnet_edm* edm) { delete edm; }

size_t edmnet_edm_size(const edmnet_edm* edm) { return edm ? edm->m.tickers.size() : 0; }

double edmnet_edm_value(const edmnet_edm* edm, size_t i, size_t j) {
  if (!edm || i >= edm->m.tickers.size() || j >= edm->m.tickers.size()) return 0.0;
  return edm->m.values(i, j);
}

size_t edmnet_edm_tail_count(const edmnet_edm* edm, size_t i, size_t j) {
  if (!edm || i >= edm->m.tickers.size() || j >= edm->m.tickers.size()) return 0;
  return static_cast<size_t>(edm->m.tail_counts(i, j));
}

edmnet_status edmnet_graph_build(const edmnet_edm* edm, double theta, edmnet_graph** out) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(edm && out);
    auto tg = edmnet::build_graph(edm->m, theta);
    *out = new edmnet_graph{std::move(tg.tickers), std::move(tg.graph)};
    return EDMNET_OK;
  });
}

edmnet_status edmnet_graph_from_edges(size_t n, const size_t* edges, size_t m, edmnet_graph** out) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(out && (m == 0 || edges));
    edmnet::Graph g(n);
    for (size_t k = 0; k < m; ++k) {
      const size_t u = edges[2 * k], v = edges[2 * k + 1];
      edmnet::require(u < n && v < n && u != v, "edge " + std::to_string(k) + " is out of range or a self-loop");
      g.add_edge(u, v);
    }
    std::vector<std::string> labels;
    for (size_t v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
    *out = new edmnet_graph{std::move(labels), std::move(g)};
    return EDMNET_OK;
  });
}

void edmnet_graph_destroy(edmnet_graph* graph) { delete graph; }

size_t edmnet_graph_vertex_count(const edmnet_graph* graph) { return graph ? graph->g.vertex_count() : 0; }

size_t edmnet_graph_edge_count(const edmnet_graph* graph) { return graph ? graph->g.edge_count() : 0; }

int edmnet_graph_has_edge(const edmnet_graph* graph, size_t u, size_t v) {
  if (!graph || u >= graph->g.vertex_count() || v >= graph->g.vertex_count()) return 0;
  return graph->g.has_edge(u, v) ? 1 : 0;
}

edmnet_status edmnet_graph_stats(const edmnet_graph* graph, int connected_only, edmnet_network_stats* out) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(graph && out);
    edmnet::ThresholdGraph tg;
    tg.tickers = graph->labels;
    tg.graph = graph->g;
    tg.weights = edmnet::Matrix(graph->g.vertex_count(), graph->g.vertex_count());
    const auto s = edmnet::network_stats(tg, connected_only ? edmnet::PathMode::connected_only
                                                              : edmnet::PathMode::paper_compat);
    *out = {s.vertex_count, s.edge_count, s.isolated_count, s.average_degree, s.diameter,
            s.density, s.average_clustering, s.average_path_length};
    return EDMNET_OK;
  });
}

edmnet_status edmnet_graph_betweenness(const edmnet_graph* graph, double* b, double* b_n) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(graph && b);
    const auto c = edmnet::betweenness(graph->g);
    for (size_t v = 0; v < c.b.size(); ++v) {
      b[v] = c.b[v];
      if (b_n) b_n[v] = c.b_n[v];
    }
    return EDMNET_OK;
  });
}

edmnet_status edmnet_graph_greedy_mis(const edmnet_graph* graph, int* selected, size_t* member_count) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(graph && selected);
    const auto c = edmnet::betweenness(graph->g);
    const auto s = edmnet::greedy_mis(graph->g, graph->labels, c.b_n);
    for (size_t v = 0; v < graph->g.vertex_count(); ++v) selected[v] = 0;
    for (auto v : s.members) selected[v] = 1;
    if (member_count) *member_count = s.members.size();
    return EDMNET_OK;
  });
}

edmnet_status edmnet_var_es(const double* losses, size_t n, double alpha, double* var, double* es) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(losses && var && es);
    *var = edmnet::risk::var({losses, n}, alpha);
    *es = edmnet::risk::es({losses, n}, alpha);
    return EDMNET_OK;
  });
}

edmnet_status edmnet_portfolio_solve(const double* cost, const double* returns, size_t n, double cap,
                                     double min_return, double* weights, double* objective) {
  return guarded([&] {
    EDMNET_REQUIRE_ARG(cost && returns && weights);
    edmnet::portfolio::LpProblem p;
    p.cost.assign(cost, cost + n);
    p.returns.assign(returns, returns + n);
    p.cap = cap;
    p.min_return = min_return;
    const auto s = edmnet::portfolio::simplex_solve(p);
    if (s.status != edmnet::portfolio::Status::optimal)
      return fail_with(EDMNET_ERR_INFEASIBLE, s.message.empty() ? "no feasible portfolio" : s.message);
    for (size_t i = 0; i < n; ++i) weights[i] = s.weights[i];
    if (objective) *objective = s.objective;
    return EDMNET_OK;
  });
}

}  // extern "C"
