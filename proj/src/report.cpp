#include "edmnet/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "edmnet/error.hpp"
#include "edmnet/text.hpp"
#include "json.hpp"

namespace edmnet::report {

namespace {

using Json = nlohmann::ordered_json;

std::string percent(double fraction) { return format_fixed(100.0 * fraction, 2); }

// Column-aligned plain-text table.
std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      const std::string pad(width[c] - r[c].size(), ' ');
      s += (c ? "  " : "") + (c ? pad + r[c] : r[c] + pad);
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + '\n';
  };
  std::string out = line(header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out += std::string(total + 2 * (width.size() - 1), '-') + '\n';
  for (const auto& r : rows) out += line(r);
  return out;
}

Json table_json(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json obj;
    for (std::size_t c = 0; c < header.size(); ++c) obj[header[c]] = r[c];
    arr.push_back(std::move(obj));
  }
  return arr;
}

}  // namespace

SummaryDocument render_summary(const SummaryInputs& in) {
  SummaryDocument doc;
  Json j;
  Json sections = Json::object();
  std::string text = "EDM network portfolio summary\n";

  auto omit = [&](const std::string& section, const std::string& artifact, const std::string& producer) {
    doc.notices.push_back(section + " omitted: " + artifact + " not found (run `" + producer + "`)");
  };

  if (in.stats) {
    auto rows = *in.stats;
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.theta < b.theta; });
    rows.erase(std::unique(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.theta == b.theta; }),
               rows.end());
    const std::vector<std::string> header{"threshold", "isolated", "average_degree", "diameter",
                                          "density", "average_clustering", "average_path_length"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& s : rows)
      cells.push_back({format_double(s.theta), std::to_string(s.isolated_count), format_fixed(s.average_degree, 5),
                       format_fixed(s.diameter, 5), format_fixed(s.density, 5), format_fixed(s.average_clustering, 5),
                       format_fixed(s.average_path_length, 5)});
    const std::string mode = rows.empty() ? "" : path_mode_name(rows.front().mode);
    text += "\nNetwork parameters by threshold (path metrics: " + mode + ")\n" + table(header, cells);
    sections["network_stats"] = {{"path_mode", mode}, {"rows", table_json(header, cells)}};
    doc.sections.push_back("network_stats");
  } else {
    omit("network stats", "stats.json", "stats");
  }

  if (in.centrality) {
    const std::size_t n = in.centrality->size();
    auto rows = *in.centrality;
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      return a.b != b.b ? a.b > b.b : a.ticker < b.ticker;
    });
    rows.resize(std::min(rows.size(), in.top_k));
    const std::vector<std::string> header{"rank", "ticker", "degree", "b", "b_n"};
    std::vector<std::vector<std::string>> cells;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const double bn = n >= 3 ? normalized_betweenness(rows[r].b, n) : 0.0;
      cells.push_back({std::to_string(r + 1), rows[r].ticker, std::to_string(rows[r].degree),
                       format_fixed(rows[r].b, 4), format_fixed(bn, 4)});
    }
    text += "\nTop " + std::to_string(rows.size()) + " by vertex betweenness centrality (n = " + std::to_string(n) +
            ")\n" + table(header, cells);
    sections["centrality"] = {{"n", n}, {"rows", table_json(header, cells)}};
    doc.sections.push_back("centrality");
  } else {
    omit("centrality", "centrality.csv", "centrality");
  }

  if (in.portfolio) {
    const auto& p = *in.portfolio;
    const std::vector<std::string> header{"ticker", "es_pct", "weight_pct"};
    std::vector<std::vector<std::string>> cells;
    double total = 0.0;
    for (const auto& r : p.rows) {
      cells.push_back({r.ticker, percent(r.es), percent(r.weight)});
      total += r.weight;
    }
    text += "\nPortfolio with the minimum risk (status: " + p.status + ")\n" + table(header, cells);
    text += "total weight " + percent(total) + "%, ES " + percent(p.objective) + "%, return " +
            percent(p.achieved_return) + "%\n";
    sections["portfolio"] = {{"status", p.status},
                             {"total_weight_pct", percent(total)},
                             {"objective_es_pct", percent(p.objective)},
                             {"achieved_return_pct", percent(p.achieved_return)},
                             {"rows", table_json(header, cells)}};
    doc.sections.push_back("portfolio");
  } else {
    omit("portfolio", "portfolio.csv", "optimize");
  }

  if (in.backtest) {
    const std::vector<std::string> header{"interval_start", "interval_end", "book", "return_pct", "risk_pct"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : *in.backtest) cells.push_back({r.start, r.end, r.book, percent(r.ret), percent(r.risk)});
    text += "\nBacktest by interval\n" + table(header, cells);
    sections["backtest"] = {{"rows", table_json(header, cells)}};
    doc.sections.push_back("backtest");
  } else if (in.backtest_requested) {
    omit("backtest", "backtest.csv", "backtest");
  }

  if (!doc.notices.empty()) {
    text += "\nNotices\n";
    for (const auto& n : doc.notices) text += "- " + n + '\n';
  }
  j["sections"] = std::move(sections);
  j["notices"] = doc.notices;
  doc.text = std::move(text);
  doc.json = j.dump(1) + '\n';
  return doc;
}

SummaryInputs load_summary_inputs(const std::filesystem::path& dir, bool backtest_requested, std::size_t top_k) {
  SummaryInputs in;
  in.backtest_requested = backtest_requested;
  in.top_k = top_k;
  auto open = [&](const char* name, std::ifstream& f) {
    const auto p = dir / name;
    if (!std::filesystem::exists(p)) return false;
    f.open(p);
    if (!f) fail(Errc::io, "cannot open " + p.string());
    return true;
  };
  if (std::ifstream f; open("stats.json", f)) in.stats = io::read_stats_json(f);
  if (std::ifstream f; open("centrality.csv", f)) in.centrality = io::read_centrality_csv(f);
  if (std::ifstream f; open("portfolio.csv", f)) {
    PortfolioSection p;
    p.rows = io::read_portfolio_csv(f);
    if (std::ifstream jf; open("portfolio.json", jf)) {
      try {
        const auto j = nlohmann::json::parse(jf);
        p.status = j.at("status").get<std::string>();
        p.objective = j.at("objective").get<double>();
        p.achieved_return = j.at("achieved_return").get<double>();
      } catch (const nlohmann::json::exception& e) {
        fail(Errc::parse, std::string("portfolio.json: ") + e.what());
      }
    }
    in.portfolio = std::move(p);
  }
  if (std::ifstream f; open("backtest.csv", f)) in.backtest = io::read_backtest_csv(f);
  return in;
}

}  // namespace edmnet::report
