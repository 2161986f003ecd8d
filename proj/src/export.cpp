#include "edmnet/export.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>

#include "edmnet/error.hpp"
#include "edmnet/text.hpp"
#include "json.hpp"

namespace edmnet::io {

namespace {

using Json = nlohmann::ordered_json;

// CSV reader for artifacts we wrote ourselves: comma-separated, no quoting.
class CsvReader {
 public:
  CsvReader(std::istream& in, std::string artifact) : in_(in), artifact_(std::move(artifact)) {}

  bool next(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      const auto view = trim(line);
      if (view.empty()) continue;
      fields = split(view, ',');
      return true;
    }
    return false;
  }

  void expect_header(const std::string& header) {
    std::vector<std::string> fields;
    if (!next(fields) || join(fields) != header) error("expected header '" + header + "'");
  }

  double number(const std::string& s) {
    double v = 0.0;
    if (!parse_double(s, v)) error("unparseable number '" + s + "'");
    return v;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::parse, artifact_ + ": " + what + " at line " + std::to_string(line_));
  }

  static std::string join(const std::vector<std::string>& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i];
    return s;
  }

 private:
  std::istream& in_;
  std::string artifact_;
  std::size_t line_ = 0;
};

Json parse_json(std::istream& in, const std::string& artifact) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, artifact + ": " + e.what());
  }
}

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

Json stats_object(const NetworkStats& s) {
  Json j;
  j["theta"] = s.theta;
  j["vertex_count"] = s.vertex_count;
  j["edge_count"] = s.edge_count;
  j["isolated_count"] = s.isolated_count;
  j["average_degree"] = s.average_degree;
  j["diameter"] = s.diameter;
  j["density"] = s.density;
  j["average_clustering"] = s.average_clustering;
  j["average_path_length"] = s.average_path_length;
  j["path_mode"] = path_mode_name(s.mode);
  return j;
}

NetworkStats stats_from(const Json& j) {
  NetworkStats s;
  s.theta = j.at("theta").get<double>();
  s.vertex_count = j.at("vertex_count").get<std::size_t>();
  s.edge_count = j.at("edge_count").get<std::size_t>();
  s.isolated_count = j.at("isolated_count").get<std::size_t>();
  s.average_degree = j.at("average_degree").get<double>();
  s.diameter = j.at("diameter").get<double>();
  s.density = j.at("density").get<double>();
  s.average_clustering = j.at("average_clustering").get<double>();
  s.average_path_length = j.at("average_path_length").get<double>();
  s.mode = parse_path_mode(j.at("path_mode").get<std::string>());
  return s;
}

}  // namespace

void write_returns_csv(std::ostream& out, const ReturnPanel& panel) {
  out << "date";
  for (const auto& t : panel.tickers) out << ',' << t;
  out << '\n';
  for (std::size_t t = 0; t < panel.observations(); ++t) {
    out << format_date(panel.dates[t]);
    for (std::size_t i = 0; i < panel.assets(); ++i) out << ',' << format_double(panel.returns(t, i));
    out << '\n';
  }
}

ReturnPanel read_returns_csv(std::istream& in) {
  CsvReader csv(in, "returns.csv");
  std::vector<std::string> f;
  if (!csv.next(f) || f.empty() || f[0] != "date") csv.error("expected header starting with 'date'");
  ReturnPanel p;
  p.tickers.assign(f.begin() + 1, f.end());
  std::vector<std::vector<double>> rows;
  while (csv.next(f)) {
    if (f.size() != p.tickers.size() + 1) csv.error("row width does not match header");
    Date d;
    if (!parse_date(f[0], d)) csv.error("unparseable date '" + f[0] + "'");
    p.dates.push_back(d);
    std::vector<double> row;
    for (std::size_t i = 1; i < f.size(); ++i) row.push_back(csv.number(f[i]));
    rows.push_back(std::move(row));
  }
  p.returns = Matrix(rows.size(), p.tickers.size());
  for (std::size_t t = 0; t < rows.size(); ++t)
    for (std::size_t i = 0; i < p.tickers.size(); ++i) p.returns(t, i) = rows[t][i];
  return p;
}

void write_edm_csv(std::ostream& out, const EdmMatrix& m) {
  out << "ticker";
  for (const auto& t : m.tickers) out << ',' << t;
  out << '\n';
  for (std::size_t i = 0; i < m.tickers.size(); ++i) {
    out << m.tickers[i];
    for (std::size_t j = 0; j < m.tickers.size(); ++j) out << ',' << format_double(m.values(i, j));
    out << '\n';
  }
}

EdmMatrix read_edm_csv(std::istream& in) {
  CsvReader csv(in, "edm.csv");
  std::vector<std::string> f;
  if (!csv.next(f) || f.empty() || f[0] != "ticker") csv.error("expected header starting with 'ticker'");
  EdmMatrix m;
  m.tickers.assign(f.begin() + 1, f.end());
  const std::size_t n = m.tickers.size();
  m.values = Matrix(n, n);
  m.tail_counts = Matrix(n, n);
  std::size_t row = 0;
  while (csv.next(f)) {
    if (row >= n) csv.error("more rows than tickers");
    if (f.size() != n + 1 || f[0] != m.tickers[row]) csv.error("row does not match header");
    for (std::size_t j = 0; j < n; ++j) m.values(row, j) = csv.number(f[j + 1]);
    ++row;
  }
  if (row != n) csv.error("expected " + std::to_string(n) + " rows");
  return m;
}

void write_edm_json(std::ostream& out, const EdmMatrix& m, const TailPolicy& policy) {
  const std::size_t n = m.tickers.size();
  Json j;
  j["tail_quantile"] = policy.quantile;
  j["min_tail"] = policy.min_tail;
  j["tickers"] = m.tickers;
  Json values = Json::array(), counts = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json vr = Json::array(), cr = Json::array();
    for (std::size_t k = 0; k < n; ++k) {
      vr.push_back(m.values(i, k));
      cr.push_back(static_cast<std::size_t>(m.tail_counts(i, k)));
    }
    values.push_back(std::move(vr));
    counts.push_back(std::move(cr));
  }
  j["values"] = std::move(values);
  j["tail_counts"] = std::move(counts);
  out << j.dump(1) << '\n';
}

void write_graph_dot(std::ostream& out, const ThresholdGraph& g, const GraphAnnotations& notes) {
  out << "graph edm {\n";
  out << "  graph [theta=" << format_double(g.theta) << "];\n";
  out << "  node [shape=ellipse];\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    out << "  " << dot_id(g.tickers[v]) << " [label=" << dot_id(g.tickers[v]);
    if (notes.partition) {
      const auto c = notes.partition->assignment[v];
      out << ", community=" << c << ", colorscheme=set312, color=" << (c % 12) + 1;
    }
    out << "];\n";
  }
  for (const auto& [u, v] : g.graph.edges())
    out << "  " << dot_id(g.tickers[u]) << " -- " << dot_id(g.tickers[v])
        << " [weight=" << format_double(g.weights(u, v)) << "];\n";
  out << "}\n";
}

void write_graph_json(std::ostream& out, const ThresholdGraph& g, const GraphAnnotations& notes) {
  Json j;
  j["theta"] = g.theta;
  Json nodes = Json::array();
  for (Vertex v = 0; v < g.size(); ++v) {
    Json node;
    node["id"] = v;
    node["ticker"] = g.tickers[v];
    node["degree"] = g.graph.degree(v);
    if (notes.centrality) {
      node["b"] = notes.centrality->b[v];
      node["b_n"] = notes.centrality->b_n[v];
    }
    node["community"] = notes.partition ? Json(notes.partition->assignment[v]) : Json(nullptr);
    nodes.push_back(std::move(node));
  }
  Json edges = Json::array();
  for (const auto& [u, v] : g.graph.edges()) {
    Json e;
    e["source"] = g.tickers[u];
    e["target"] = g.tickers[v];
    e["weight"] = g.weights(u, v);
    edges.push_back(std::move(e));
  }
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  out << j.dump(1) << '\n';
}

ThresholdGraph read_graph_json(std::istream& in) {
  const Json j = parse_json(in, "graph.json");
  try {
    ThresholdGraph g;
    g.theta = j.at("theta").get<double>();
    for (const auto& node : j.at("nodes")) g.tickers.push_back(node.at("ticker").get<std::string>());
    const std::size_t n = g.tickers.size();
    g.graph = Graph(n);
    g.weights = Matrix(n, n);
    auto index_of = [&](const std::string& t) {
      auto it = std::find(g.tickers.begin(), g.tickers.end(), t);
      if (it == g.tickers.end()) fail(Errc::parse, "graph.json: edge names unknown ticker " + t);
      return static_cast<Vertex>(it - g.tickers.begin());
    };
    for (const auto& e : j.at("edges")) {
      const Vertex u = index_of(e.at("source").get<std::string>());
      const Vertex v = index_of(e.at("target").get<std::string>());
      if (u == v || !g.graph.add_edge(u, v)) fail(Errc::parse, "graph.json: self-loop or repeated edge");
      g.weights(u, v) = g.weights(v, u) = e.at("weight").get<double>();
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("graph.json: ") + e.what());
  }
}

void write_stats_json(std::ostream& out, const StatsExport& stats) {
  Json j = stats_object(stats.main);
  if (stats.fit) {
    Json fit;
    fit["alpha_hat"] = stats.fit->alpha_hat;
    fit["slope"] = stats.fit->slope;
    fit["intercept"] = stats.fit->intercept;
    fit["r_squared"] = stats.fit->r_squared;
    Json support = Json::array();
    for (const auto& [k, s] : stats.fit->support) support.push_back(Json::array({k, s}));
    fit["support"] = std::move(support);
    j["power_law"] = std::move(fit);
  } else {
    j["power_law"] = nullptr;
  }
  Json sweep = Json::array();
  for (const auto& s : stats.sweep) sweep.push_back(stats_object(s));
  j["sweep"] = std::move(sweep);
  out << j.dump(1) << '\n';
}

std::vector<NetworkStats> read_stats_json(std::istream& in) {
  const Json j = parse_json(in, "stats.json");
  try {
    std::vector<NetworkStats> out{stats_from(j)};
    for (const auto& s : j.at("sweep")) out.push_back(stats_from(s));
    return out;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("stats.json: ") + e.what());
  }
}

void write_ccdf_csv(std::ostream& out, const DegreeSummary& summary) {
  out << "degree,survival\n";
  for (const auto& [k, s] : summary.ccdf_points) out << format_double(k) << ',' << format_double(s) << '\n';
}

std::string ccdf_file_name(double theta) { return "ccdf_" + format_double(theta) + ".csv"; }

void write_centrality_csv(std::ostream& out, const ThresholdGraph& g, const CentralityReport& c) {
  out << "ticker,degree,b,b_n\n";
  for (Vertex v = 0; v < g.size(); ++v)
    out << g.tickers[v] << ',' << g.graph.degree(v) << ',' << format_double(c.b[v]) << ','
        << format_double(c.b_n[v]) << '\n';
}

std::vector<CentralityRow> read_centrality_csv(std::istream& in) {
  CsvReader csv(in, "centrality.csv");
  csv.expect_header("ticker,degree,b,b_n");
  std::vector<CentralityRow> rows;
  std::vector<std::string> f;
  while (csv.next(f)) {
    if (f.size() != 4) csv.error("expected 4 fields");
    const double degree = csv.number(f[1]);
    if (degree < 0 || degree != std::floor(degree)) csv.error("degree must be a non-negative integer");
    rows.push_back({f[0], static_cast<std::size_t>(degree), csv.number(f[2]), csv.number(f[3])});
  }
  return rows;
}

void write_partition_csv(std::ostream& out, const std::vector<std::string>& tickers, const Partition& p) {
  out << "ticker,community\n";
  for (std::size_t v = 0; v < tickers.size(); ++v) out << tickers[v] << ',' << p.assignment[v] << '\n';
}

void write_community_dot(std::ostream& out, const CommunityGraph& cg) {
  std::set<std::size_t> shown;
  out << "graph communities {\n";
  out << "  node [shape=circle, fixedsize=true];\n";
  for (const auto& node : cg.nodes) {
    if (!node.displayed) continue;
    shown.insert(node.id);
    out << "  c" << node.id << " [label=\"" << node.id << "\", size=" << node.size
        << ", width=" << format_fixed(0.1 * static_cast<double>(node.size), 2) << "];\n";
  }
  for (const auto& e : cg.edges) {
    if (!shown.count(e.a) || !shown.count(e.b)) continue;
    out << "  c" << e.a << " -- c" << e.b << " [count=" << e.count
        << ", penwidth=" << format_fixed(0.5 * static_cast<double>(e.count), 2) << "];\n";
  }
  out << "}\n";
}

void write_communities_json(std::ostream& out, const PartitionChoice& choice, std::size_t level_count,
                            const CommunityGraph& cg) {
  Json j;
  j["levels"] = level_count;
  j["selected_level"] = choice.level;
  j["community_count"] = choice.partition.community_count;
  j["modularity"] = choice.partition.modularity;
  j["modularity_undefined"] = choice.warning;
  j["intra_edges"] = cg.intra_edges;
  Json nodes = Json::array();
  for (const auto& node : cg.nodes) nodes.push_back({{"id", node.id}, {"size", node.size}, {"displayed", node.displayed}});
  Json edges = Json::array();
  for (const auto& e : cg.edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"count", e.count}});
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  out << j.dump(1) << '\n';
}

void write_mis_csv(std::ostream& out, const std::vector<std::string>& tickers, const IndependentSet& s) {
  out << "ticker,selected,reason\n";
  for (std::size_t v = 0; v < tickers.size(); ++v) {
    const MisReason r = s.reasons[v];
    out << tickers[v] << ',' << (r == MisReason::member ? 1 : 0) << ',' << mis_reason_name(r) << '\n';
  }
}

std::vector<std::string> read_mis_members(std::istream& in) {
  CsvReader csv(in, "mis.csv");
  csv.expect_header("ticker,selected,reason");
  std::vector<std::string> members, f;
  while (csv.next(f)) {
    if (f.size() != 3 || (f[1] != "0" && f[1] != "1")) csv.error("malformed row");
    if (f[1] == "1") members.push_back(f[0]);
  }
  return members;
}

void write_risk_csv(std::ostream& out, const risk::RiskReport& r) {
  out << "ticker,var,es\n";
  for (std::size_t i = 0; i < r.tickers.size(); ++i)
    out << r.tickers[i] << ',' << format_double(r.var[i]) << ',' << format_double(r.es[i]) << '\n';
}

void write_heatmap_csv(std::ostream& out, const risk::RiskReport& r, const std::vector<std::string>& first) {
  std::vector<std::size_t> order;
  std::vector<bool> used(r.tickers.size(), false);
  for (const auto& t : first) {
    auto it = std::find(r.tickers.begin(), r.tickers.end(), t);
    if (it == r.tickers.end()) fail(Errc::lookup, "heatmap: " + t + " is not in the risk report");
    const auto i = static_cast<std::size_t>(it - r.tickers.begin());
    if (!used[i]) order.push_back(i);
    used[i] = true;
  }
  for (std::size_t i = 0; i < r.tickers.size(); ++i)
    if (!used[i]) order.push_back(i);

  out << "ticker";
  for (auto i : order) out << ',' << r.tickers[i];
  out << '\n';
  for (auto i : order) {
    out << r.tickers[i];
    for (auto k : order) out << ',' << format_double(r.heat(i, k));
    out << '\n';
  }
}

void write_risk_json(std::ostream& out, const risk::RiskReport& r) {
  const std::size_t n = r.tickers.size();
  Json j;
  j["alpha"] = r.alpha;
  j["q"] = r.q;
  j["tickers"] = r.tickers;
  j["var"] = r.var;
  j["es"] = r.es;
  Json dc = Json::array(), sl = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json a = Json::array(), b = Json::array();
    for (std::size_t k = 0; k < n; ++k) {
      a.push_back(r.delta_covar(i, k));
      b.push_back(r.slopes(i, k));
    }
    dc.push_back(std::move(a));
    sl.push_back(std::move(b));
  }
  j["delta_covar"] = std::move(dc);
  j["slopes"] = std::move(sl);
  j["warnings"] = r.warnings;
  out << j.dump(1) << '\n';
}

void write_portfolio_csv(std::ostream& out, const portfolio::OptimizedPortfolio& p) {
  out << "ticker,es,weight\n";
  const bool solved = p.solution.status == portfolio::Status::optimal;
  for (std::size_t i = 0; i < p.tickers.size(); ++i)
    out << p.tickers[i] << ',' << format_double(p.es[i]) << ','
        << (solved ? format_double(p.solution.weights[i]) : std::string("0")) << '\n';
}

void write_portfolio_json(std::ostream& out, const portfolio::OptimizedPortfolio& p) {
  Json j;
  j["status"] = portfolio::status_name(p.solution.status);
  j["objective"] = p.solution.objective;
  j["achieved_return"] = p.solution.achieved_return;
  j["iterations"] = p.solution.iterations;
  j["message"] = p.solution.message;
  j["alpha"] = p.alpha;
  j["cap"] = p.cap;
  j["min_return"] = p.min_return;
  j["return_horizon"] = "mean daily log-return";
  j["window_start"] = format_date(p.window_start);
  j["window_end"] = format_date(p.window_end);
  j["window_days"] = p.window_days;
  Json rows = Json::array();
  for (std::size_t i = 0; i < p.tickers.size(); ++i) {
    Json r;
    r["ticker"] = p.tickers[i];
    r["es"] = p.es[i];
    r["mean_return"] = p.mean_returns[i];
    r["weight"] = p.solution.status == portfolio::Status::optimal ? p.solution.weights[i] : 0.0;
    rows.push_back(std::move(r));
  }
  j["assets"] = std::move(rows);
  out << j.dump(1) << '\n';
}

std::vector<PortfolioRow> read_portfolio_csv(std::istream& in) {
  CsvReader csv(in, "portfolio.csv");
  csv.expect_header("ticker,es,weight");
  std::vector<PortfolioRow> rows;
  std::vector<std::string> f;
  while (csv.next(f)) {
    if (f.size() != 3) csv.error("expected 3 fields");
    rows.push_back({f[0], csv.number(f[1]), csv.number(f[2])});
  }
  return rows;
}

void write_backtest_csv(std::ostream& out, const portfolio::BacktestReport& r) {
  out << "interval_start,interval_end,book,return,risk\n";
  for (const auto& iv : r.intervals)
    for (const auto& book : r.books)
      out << format_date(iv.start) << ',' << format_date(iv.end) << ',' << book << ','
          << format_double(iv.returns.at(book)) << ',' << format_double(iv.risk.at(book)) << '\n';
}

std::vector<BacktestRow> read_backtest_csv(std::istream& in) {
  CsvReader csv(in, "backtest.csv");
  csv.expect_header("interval_start,interval_end,book,return,risk");
  std::vector<BacktestRow> rows;
  std::vector<std::string> f;
  while (csv.next(f)) {
    if (f.size() != 5) csv.error("expected 5 fields");
    rows.push_back({f[0], f[1], f[2], csv.number(f[3]), csv.number(f[4])});
  }
  return rows;
}

}  // namespace edmnet::io
