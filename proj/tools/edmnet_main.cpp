// edmnet command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "edmnet/edmnet.h"

namespace {

int exit_code(edmnet_status s) {
  switch (s) {
    case EDMNET_OK: return 0;
    case EDMNET_ERR_PRECONDITION:
    case EDMNET_ERR_DATA: return 2;
    case EDMNET_ERR_INFEASIBLE: return 3;
    case EDMNET_ERR_MISSING_ARTIFACT: return 4;
    case EDMNET_ERR_INTERNAL: return 1;
  }
  return 1;
}

int report_failure(edmnet_status s) {
  std::fprintf(stderr, "edmnet: %s error: %s\n", edmnet_status_name(s), edmnet_last_error());
  return exit_code(s);
}

struct ConfigHandle {
  edmnet_config* h = nullptr;
  ~ConfigHandle() { edmnet_config_destroy(h); }
};

struct ManifestHandle {
  edmnet_manifest* h = nullptr;
  ~ManifestHandle() { edmnet_manifest_destroy(h); }
};

}  // namespace

int main(int argc, char** argv) {
  std::string commands = "run";
  for (size_t i = 0; i < edmnet_stage_count(); ++i) commands += std::string("|") + edmnet_stage_name(i);

  CLI::App app{"EDM threshold networks, MIS selection and ES-minimizing portfolios"};
  app.set_version_flag("--version", edmnet_version());

  std::string command = "run";
  app.add_option("command", command, "Pipeline step: " + commands)->capture_default_str();

  std::optional<std::string> config_file;
  app.add_option("--config", config_file, "key = value settings file; flags override it");

  // Flag name -> config key. Values are passed through as text and parsed by the library.
  struct Flag {
    const char* name;
    const char* key;
    const char* help;
  };
  const std::vector<Flag> flags{
      {"--prices", "prices", "Wide price CSV (date,<tickers>) for the estimation window"},
      {"--prices-next", "prices_next", "Price CSV for the following window, used by backtest"},
      {"--index", "index", "Long-format index CSV (date,ticker,adj_close) for backtest comparison"},
      {"--tail-quantile", "tail_quantile", "Fraction of largest radii used by the EDM estimator"},
      {"--theta", "theta", "Edge threshold on EDM values, in (-0.5, 0.5]"},
      {"--alpha", "alpha", "VaR/ES confidence level"},
      {"--q", "q", "CoVaR quantile level"},
      {"--cap", "cap", "Per-asset weight cap"},
      {"--min-return", "min_return", "Floor on the mean daily log-return of the portfolio"},
      {"--interval", "interval", "Backtest rebalancing interval in trading days"},
      {"--seed", "seed", "Seed for synth and fixture stages"},
      {"--out", "out", "Artifact directory"},
      {"--min-tail", "min_tail", "Minimum tail observations per EDM pair"},
      {"--path-mode", "path_mode", "Path metrics on disconnected graphs: paper-compat|connected-only"},
      {"--sweep", "sweep", "Comma-separated thresholds for the stats sweep"},
      {"--top-k", "top_k", "Rows in the summary centrality table"},
      {"--synth-law", "synth_law", "Angular law for synth: uniform|axes|point"},
      {"--synth-alpha", "synth_alpha", "Tail index for synth"},
      {"--synth-phi", "synth_phi", "Angle for the point law (radians)"},
      {"--synth-count", "synth_count", "Number of synth samples"},
  };
  std::vector<std::optional<std::string>> values(flags.size());
  for (size_t i = 0; i < flags.size(); ++i) app.add_option(flags[i].name, values[i], flags[i].help);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "Print nothing on success");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  ConfigHandle cfg;
  if (edmnet_status s = edmnet_config_create(&cfg.h); s != EDMNET_OK) return report_failure(s);
  if (config_file)
    if (edmnet_status s = edmnet_config_load_file(cfg.h, config_file->c_str()); s != EDMNET_OK)
      return report_failure(s);
  for (size_t i = 0; i < flags.size(); ++i)
    if (values[i])
      if (edmnet_status s = edmnet_config_set(cfg.h, flags[i].key, values[i]->c_str()); s != EDMNET_OK)
        return report_failure(s);

  ManifestHandle manifest;
  const edmnet_status s = command == "run" ? edmnet_run_pipeline(cfg.h, &manifest.h)
                                           : edmnet_run_stage(cfg.h, command.c_str(), &manifest.h);
  if (!manifest.h) return report_failure(s);

  if (!quiet || s != EDMNET_OK) {
    for (size_t i = 0; i < edmnet_manifest_warning_count(manifest.h); ++i)
      std::fprintf(stderr, "edmnet: warning: %s\n", edmnet_manifest_warning(manifest.h, i));
  }
  if (!quiet) {
    for (size_t i = 0; i < edmnet_manifest_artifact_count(manifest.h); ++i)
      std::printf("%s  %s\n", edmnet_manifest_artifact_hash(manifest.h, i), edmnet_manifest_artifact_name(manifest.h, i));
  }
  if (s != EDMNET_OK) {
    std::fprintf(stderr, "edmnet: %s error: %s\n", edmnet_status_name(s), edmnet_manifest_error(manifest.h));
    return exit_code(s);
  }
  return 0;
}
