#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edmnet/error.hpp"
#include "edmnet/network.hpp"

namespace edmnet::cli {

struct PipelineConfig {
  std::filesystem::path prices;
  std::filesystem::path prices_next;  // optional; enables the backtest
  std::filesystem::path index;        // optional benchmark series, same long CSV format
  std::filesystem::path out = "edmnet_out";

  double tail_quantile = 0.10;
  std::size_t min_tail = 20;
  double theta = 0.22;
  double alpha = 0.95;
  double q = 0.99;
  double cap = 0.1;
  double min_return = 0.0;
  std::size_t interval = 10;
  std::uint64_t seed = 7;
  PathMode path_mode = PathMode::paper_compat;
  std::vector<double> sweep{0.18, 0.20, 0.22, 0.24};
  std::size_t top_k = 8;

  // `synth` subcommand
  std::string synth_law = "uniform";  // uniform | axes | point
  double synth_alpha = 2.0;
  double synth_phi = 0.7853981633974483;
  std::size_t synth_count = 1000;

  /// Keys use '_' or '-' interchangeably. Unknown keys and unparseable values
  /// are precondition errors.
  void set(std::string_view key, std::string_view value);
  /// `key = value` lines; '#' starts a comment.
  void load_file(const std::filesystem::path& path);
  void validate() const;
  /// Every setting except `out`, as rendered strings, in a fixed order.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

struct ArtifactRecord {
  std::string name;
  std::string hash;  // FNV-1a 64, hex
  std::size_t bytes = 0;
};

struct Failure {
  std::string stage;
  Errc code = Errc::precondition;
  std::string message;
};

struct RunManifest {
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, hash
  std::vector<std::string> stages;                          // completed, in order
  std::vector<ArtifactRecord> artifacts;                    // first-emission order, final content
  std::vector<std::string> warnings;                        // deduplicated
  std::optional<Failure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
  std::string to_json() const;
};

/// Stage names accepted by run_stage, in pipeline order, followed by the
/// utility stages (`summary`, `synth`, `fixture`).
const std::vector<std::string>& stage_names();

/// Full run: returns, edm, graph, stats, centrality, communities, mis, risk,
/// optimize, backtest (when prices_next is set), summary. Writes
/// manifest.json, also on failure. Never throws edmnet::Error; failures land
/// in the manifest.
RunManifest run_pipeline(const PipelineConfig& config);

/// One stage, reading upstream artifacts from config.out.
RunManifest run_stage(const PipelineConfig& config, const std::string& stage);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hash_hex(std::uint64_t h);
/// splitmix64(seed ^ fnv1a64(stage))
std::uint64_t stage_seed(std::uint64_t seed, std::string_view stage);

}  // namespace edmnet::cli
