#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "edmnet/export.hpp"
#include "edmnet/network.hpp"

namespace edmnet::report {

struct PortfolioSection {
  std::vector<io::PortfolioRow> rows;
  std::string status = "optimal";
  double objective = 0.0;
  double achieved_return = 0.0;
};

struct SummaryInputs {
  std::optional<std::vector<NetworkStats>> stats;
  std::optional<std::vector<io::CentralityRow>> centrality;
  std::optional<PortfolioSection> portfolio;
  std::optional<std::vector<io::BacktestRow>> backtest;
  bool backtest_requested = false;  // a missing backtest only earns a notice when one was asked for
  std::size_t top_k = 8;
};

struct SummaryDocument {
  std::vector<std::string> sections;  // names of rendered sections, in order
  std::vector<std::string> notices;   // one per omitted section
  std::string text;
  std::string json;
};

/// Stats at 5 d.p., centrality at 4 d.p., percentages at 2 d.p.
SummaryDocument render_summary(const SummaryInputs& in);

/// Reads whichever of stats.json, centrality.csv, portfolio.json/.csv and
/// backtest.csv exist under `dir`.
SummaryInputs load_summary_inputs(const std::filesystem::path& dir, bool backtest_requested, std::size_t top_k = 8);

}  // namespace edmnet::report
