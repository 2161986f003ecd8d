#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "edmnet/community.hpp"
#include "edmnet/edm.hpp"
#include "edmnet/ingest.hpp"
#include "edmnet/mis.hpp"
#include "edmnet/network.hpp"
#include "edmnet/portfolio.hpp"
#include "edmnet/risk.hpp"

// Artifact writers and the readers the stage-wise CLI needs. Numbers in CSV
// files use the shortest round-trip decimal form, so a value read back is the
// value that was written.
namespace edmnet::io {

// returns.csv: date,<ticker>...
void write_returns_csv(std::ostream& out, const ReturnPanel& panel);
ReturnPanel read_returns_csv(std::istream& in);

// edm.csv: ticker,<ticker>... with one row per ticker
void write_edm_csv(std::ostream& out, const EdmMatrix& m);
EdmMatrix read_edm_csv(std::istream& in);
void write_edm_json(std::ostream& out, const EdmMatrix& m, const TailPolicy& policy);

// Optional per-vertex annotations for graph exports.
struct GraphAnnotations {
  const CentralityReport* centrality = nullptr;
  const Partition* partition = nullptr;
};
void write_graph_dot(std::ostream& out, const ThresholdGraph& g, const GraphAnnotations& notes);
void write_graph_json(std::ostream& out, const ThresholdGraph& g, const GraphAnnotations& notes);
ThresholdGraph read_graph_json(std::istream& in);

struct StatsExport {
  NetworkStats main;
  const PowerLawFit* fit = nullptr;  // omitted when the fit had too little support
  std::vector<NetworkStats> sweep;
};
void write_stats_json(std::ostream& out, const StatsExport& stats);
std::vector<NetworkStats> read_stats_json(std::istream& in);  // main row first, then the sweep
void write_ccdf_csv(std::ostream& out, const DegreeSummary& summary);
std::string ccdf_file_name(double theta);

struct CentralityRow {
  std::string ticker;
  std::size_t degree = 0;
  double b = 0.0;
  double b_n = 0.0;
};
void write_centrality_csv(std::ostream& out, const ThresholdGraph& g, const CentralityReport& c);
std::vector<CentralityRow> read_centrality_csv(std::istream& in);

void write_partition_csv(std::ostream& out, const std::vector<std::string>& tickers, const Partition& p);
void write_community_dot(std::ostream& out, const CommunityGraph& cg);
void write_communities_json(std::ostream& out, const PartitionChoice& choice, std::size_t level_count,
                            const CommunityGraph& cg);

void write_mis_csv(std::ostream& out, const std::vector<std::string>& tickers, const IndependentSet& s);
/// Tickers flagged `selected` in a mis.csv artifact, in file order.
std::vector<std::string> read_mis_members(std::istream& in);

void write_risk_csv(std::ostream& out, const risk::RiskReport& r);
/// Heat matrix with the `first` tickers leading (in the given order), the rest after.
void write_heatmap_csv(std::ostream& out, const risk::RiskReport& r, const std::vector<std::string>& first);
void write_risk_json(std::ostream& out, const risk::RiskReport& r);

void write_portfolio_csv(std::ostream& out, const portfolio::OptimizedPortfolio& p);
void write_portfolio_json(std::ostream& out, const portfolio::OptimizedPortfolio& p);
struct PortfolioRow {
  std::string ticker;
  double es = 0.0;
  double weight = 0.0;
};
std::vector<PortfolioRow> read_portfolio_csv(std::istream& in);

void write_backtest_csv(std::ostream& out, const portfolio::BacktestReport& r);
struct BacktestRow {
  std::string start;
  std::string end;
  std::string book;
  double ret = 0.0;
  double risk = 0.0;
};
std::vector<BacktestRow> read_backtest_csv(std::istream& in);

}  // namespace edmnet::io
