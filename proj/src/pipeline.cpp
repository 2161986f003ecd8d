#include "edmnet/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "edmnet/community.hpp"
#include "edmnet/edm.hpp"
#include "edmnet/export.hpp"
#include "edmnet/fixture.hpp"
#include "edmnet/ingest.hpp"
#include "edmnet/mis.hpp"
#include "edmnet/portfolio.hpp"
#include "edmnet/report.hpp"
#include "edmnet/risk.hpp"
#include "edmnet/synth.hpp"
#include "edmnet/text.hpp"
#include "json.hpp"

namespace edmnet::cli {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t stage_seed(std::uint64_t seed, std::string_view stage) {
  std::uint64_t z = (seed ^ fnv1a64(stage)) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------- config

namespace {

std::string normalize_key(std::string_view key) {
  std::string k(trim(key));
  std::replace(k.begin(), k.end(), '-', '_');
  return k;
}

double number_value(const std::string& key, std::string_view value) {
  double v = 0.0;
  if (!parse_double(trim(value), v) || !std::isfinite(v))
    fail(Errc::precondition, "config " + key + ": expected a number, got '" + std::string(value) + "'");
  return v;
}

std::uint64_t count_value(const std::string& key, std::string_view value) {
  const std::string s(trim(value));
  std::uint64_t v = 0;
  std::size_t used = 0;
  try {
    if (s.empty() || s[0] == '-') throw std::invalid_argument(s);
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    fail(Errc::precondition, "config " + key + ": expected a non-negative integer, got '" + s + "'");
  return v;
}

}  // namespace

void PipelineConfig::set(std::string_view raw_key, std::string_view raw_value) {
  const std::string key = normalize_key(raw_key);
  const std::string value(trim(raw_value));
  if (key == "prices") prices = value;
  else if (key == "prices_next") prices_next = value;
  else if (key == "index") index = value;
  else if (key == "out") out = value;
  else if (key == "tail_quantile") tail_quantile = number_value(key, value);
  else if (key == "min_tail") min_tail = count_value(key, value);
  else if (key == "theta") theta = number_value(key, value);
  else if (key == "alpha") alpha = number_value(key, value);
  else if (key == "q") q = number_value(key, value);
  else if (key == "cap") cap = number_value(key, value);
  else if (key == "min_return") min_return = number_value(key, value);
  else if (key == "interval") interval = count_value(key, value);
  else if (key == "seed") seed = count_value(key, value);
  else if (key == "top_k") top_k = count_value(key, value);
  else if (key == "path_mode") {
    try {
      path_mode = parse_path_mode(value);
    } catch (const Error&) {
      fail(Errc::precondition, "config path_mode: expected paper-compat or connected-only, got '" + value + "'");
    }
  } else if (key == "sweep") {
    std::vector<double> thetas;
    for (const auto& part : split(value, ','))
      if (!trim(part).empty()) thetas.push_back(number_value(key, part));
    sweep = std::move(thetas);
  } else if (key == "synth_law") synth_law = value;
  else if (key == "synth_alpha") synth_alpha = number_value(key, value);
  else if (key == "synth_phi") synth_phi = number_value(key, value);
  else if (key == "synth_count") synth_count = count_value(key, value);
  else fail(Errc::precondition, "unknown config key '" + std::string(raw_key) + "'");
}

void PipelineConfig::load_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::precondition, "cannot open config file " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto view = trim(line);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos)
      fail(Errc::precondition, path.string() + ":" + std::to_string(line_no) + ": expected 'key = value'");
    set(view.substr(0, eq), view.substr(eq + 1));
  }
}

namespace {

void check_theta(double theta) {
  require(theta <= 0.5, "theta exceeds 0.5");
  require(theta > -0.5, "theta must exceed -0.5");
}

}  // namespace

void PipelineConfig::validate() const {
  require(tail_quantile > 0.0 && tail_quantile < 1.0, "tail_quantile must lie in (0, 1)");
  require(min_tail >= 1, "min_tail must be at least 1");
  check_theta(theta);
  for (double t : sweep) check_theta(t);
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  require(q > 0.5 && q < 1.0, "q must lie in (0.5, 1)");
  require(cap > 0.0 && cap <= 1.0, "cap must lie in (0, 1]");
  require(interval >= 1, "interval must be at least 1");
  require(top_k >= 1, "top_k must be at least 1");
}

std::vector<std::pair<std::string, std::string>> PipelineConfig::echo() const {
  std::string sweep_text;
  for (std::size_t i = 0; i < sweep.size(); ++i) sweep_text += (i ? "," : "") + format_double(sweep[i]);
  return {
      {"prices", prices.string()},
      {"prices_next", prices_next.string()},
      {"index", index.string()},
      {"tail_quantile", format_double(tail_quantile)},
      {"min_tail", std::to_string(min_tail)},
      {"theta", format_double(theta)},
      {"alpha", format_double(alpha)},
      {"q", format_double(q)},
      {"cap", format_double(cap)},
      {"min_return", format_double(min_return)},
      {"interval", std::to_string(interval)},
      {"seed", std::to_string(seed)},
      {"path_mode", path_mode_name(path_mode)},
      {"sweep", sweep_text},
      {"top_k", std::to_string(top_k)},
  };
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = "edmnet";
  j["status"] = ok() ? "complete" : "failed";
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  j["config"] = std::move(cfg);
  auto inputs_json = nlohmann::ordered_json::array();
  for (const auto& [path, hash] : inputs) inputs_json.push_back({{"path", path}, {"fnv1a64", hash}});
  j["inputs"] = std::move(inputs_json);
  j["stages"] = stages;
  auto arts = nlohmann::ordered_json::array();
  for (const auto& a : artifacts) arts.push_back({{"name", a.name}, {"bytes", a.bytes}, {"fnv1a64", a.hash}});
  j["artifacts"] = std::move(arts);
  j["warnings"] = warnings;
  if (failure)
    j["error"] = {{"stage", failure->stage}, {"code", errc_name(failure->code)}, {"message", failure->message}};
  return j.dump(1) + '\n';
}

// ---------------------------------------------------------------- stages

namespace {

class Context {
 public:
  Context(const PipelineConfig& cfg, RunManifest& manifest) : cfg_(cfg), manifest_(manifest) {}

  const PipelineConfig& cfg() const { return cfg_; }

  void emit(const std::string& name, const std::string& content) {
    fs::create_directories(cfg_.out);
    const fs::path path = cfg_.out / name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << content;
    f.close();
    if (!f) fail(Errc::io, "cannot write " + path.string());
    ArtifactRecord rec{name, hash_hex(fnv1a64(content)), content.size()};
    auto it = std::find_if(manifest_.artifacts.begin(), manifest_.artifacts.end(),
                           [&](const ArtifactRecord& a) { return a.name == name; });
    if (it == manifest_.artifacts.end()) manifest_.artifacts.push_back(std::move(rec));
    else *it = std::move(rec);
  }

  template <class Writer>
  void emit_with(const std::string& name, Writer&& write) {
    std::ostringstream os;
    write(os);
    emit(name, os.str());
  }

  void warn(const std::string& text) {
    auto& w = manifest_.warnings;
    if (std::find(w.begin(), w.end(), text) == w.end()) w.push_back(text);
  }

  // Opens an upstream artifact or raises the dependency error naming its producer.
  std::ifstream upstream(const std::string& name, const std::string& producer) const {
    const fs::path path = cfg_.out / name;
    if (!fs::exists(path))
      fail(Errc::missing_artifact,
           "missing artifact " + path.string() + "; run the `" + producer + "` subcommand first");
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(Errc::io, "cannot open " + path.string());
    return f;
  }

  bool has(const std::string& name) const { return fs::exists(cfg_.out / name); }

  void record_input(const fs::path& path) {
    const std::string content = slurp(path);
    const std::string key = path.string();
    for (const auto& [p, h] : manifest_.inputs)
      if (p == key) return;
    manifest_.inputs.emplace_back(key, hash_hex(fnv1a64(content)));
  }

  static std::string slurp(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(Errc::precondition, "cannot open input " + path.string());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
  }

  std::vector<PriceRecord> read_input(const fs::path& path, const std::string& flag) {
    if (path.empty()) fail(Errc::precondition, "no input given for --" + flag);
    if (!fs::exists(path)) fail(Errc::precondition, "input file not found: " + path.string());
    record_input(path);
    return read_prices_file(path);
  }

 private:
  const PipelineConfig& cfg_;
  RunManifest& manifest_;
};

TailPolicy tail_policy(const PipelineConfig& c) { return {c.tail_quantile, c.min_tail}; }

void stage_returns(Context& ctx) {
  const auto records = ctx.read_input(ctx.cfg().prices, "prices");
  const ReturnPanel panel = log_returns(align_panel(records));
  ctx.emit_with("returns.csv", [&](std::ostream& os) { io::write_returns_csv(os, panel); });
}

ReturnPanel load_returns(Context& ctx) {
  auto f = ctx.upstream("returns.csv", "returns");
  return io::read_returns_csv(f);
}

EdmMatrix load_edm(Context& ctx) {
  auto f = ctx.upstream("edm.csv", "edm");
  return io::read_edm_csv(f);
}

ThresholdGraph load_graph(Context& ctx) {
  auto f = ctx.upstream("graph.json", "graph");
  return io::read_graph_json(f);
}

CentralityReport centrality_of(Context& ctx, const ThresholdGraph& g) {
  CentralityReport c = betweenness(g.graph);
  if (c.normalization_undefined)
    ctx.warn("centrality: normalized betweenness undefined for n = " + std::to_string(g.size()) + "; reported as 0");
  return c;
}

void stage_edm(Context& ctx) {
  const ReturnPanel panel = load_returns(ctx);
  const TailPolicy policy = tail_policy(ctx.cfg());
  const EdmMatrix m = edm_matrix(panel, policy);
  ctx.emit_with("edm.csv", [&](std::ostream& os) { io::write_edm_csv(os, m); });
  ctx.emit_with("edm.json", [&](std::ostream& os) { io::write_edm_json(os, m, policy); });
}

void emit_graph(Context& ctx, const ThresholdGraph& g, const CentralityReport& c, const Partition* p) {
  const io::GraphAnnotations notes{&c, p};
  ctx.emit_with("graph.json", [&](std::ostream& os) { io::write_graph_json(os, g, notes); });
  ctx.emit_with("graph.dot", [&](std::ostream& os) { io::write_graph_dot(os, g, notes); });
}

void stage_graph(Context& ctx) {
  const EdmMatrix m = load_edm(ctx);
  const ThresholdGraph g = build_graph(m, ctx.cfg().theta);
  emit_graph(ctx, g, centrality_of(ctx, g), nullptr);
}

void stage_stats(Context& ctx) {
  const ThresholdGraph main = load_graph(ctx);
  const EdmMatrix m = load_edm(ctx);
  const PathMode mode = ctx.cfg().path_mode;

  io::StatsExport out;
  out.main = network_stats(main, mode);
  auto ccdf = [&](const ThresholdGraph& g) {
    const DegreeSummary d = degree_stats(g.graph);
    ctx.emit_with(io::ccdf_file_name(g.theta), [&](std::ostream& os) { io::write_ccdf_csv(os, d); });
    return d;
  };
  const DegreeSummary main_degrees = ccdf(main);
  std::optional<PowerLawFit> fit;
  try {
    fit = fit_power_law(main_degrees);
  } catch (const Error& e) {
    if (e.code() != Errc::insufficient_support) throw;
    ctx.warn("stats: power-law fit skipped at theta " + format_double(main.theta) + ": " + e.what());
  }
  out.fit = fit ? &*fit : nullptr;

  std::set<double> done{main.theta};
  for (double theta : ctx.cfg().sweep) {
    const ThresholdGraph g = build_graph(m, theta);
    out.sweep.push_back(network_stats(g, mode));
    if (done.insert(theta).second) ccdf(g);
  }
  ctx.emit_with("stats.json", [&](std::ostream& os) { io::write_stats_json(os, out); });
}

void stage_centrality(Context& ctx) {
  const ThresholdGraph g = load_graph(ctx);
  const CentralityReport c = centrality_of(ctx, g);
  ctx.emit_with("centrality.csv", [&](std::ostream& os) { io::write_centrality_csv(os, g, c); });
}

void stage_communities(Context& ctx) {
  const ThresholdGraph g = load_graph(ctx);
  const auto levels = girvan_newman(g.graph);
  const PartitionChoice choice = select_partition(levels, g.graph);
  if (choice.warning) ctx.warn("communities: graph has no edges; modularity undefined, every vertex is its own community");
  const CommunityGraph cg = aggregate_communities(g.graph, choice.partition);
  ctx.emit_with("partition.csv", [&](std::ostream& os) { io::write_partition_csv(os, g.tickers, choice.partition); });
  ctx.emit_with("communities.dot", [&](std::ostream& os) { io::write_community_dot(os, cg); });
  ctx.emit_with("communities.json",
                [&](std::ostream& os) { io::write_communities_json(os, choice, levels.size(), cg); });
  // graph exports gain the community attribute
  emit_graph(ctx, g, centrality_of(ctx, g), &choice.partition);
}

void stage_mis(Context& ctx) {
  const ThresholdGraph g = load_graph(ctx);
  auto f = ctx.upstream("centrality.csv", "centrality");
  const auto rows = io::read_centrality_csv(f);
  std::vector<double> bn(g.size(), 0.0);
  for (const auto& r : rows) {
    auto it = std::find(g.tickers.begin(), g.tickers.end(), r.ticker);
    if (it == g.tickers.end()) fail(Errc::membership, "centrality.csv names " + r.ticker + ", which is not in the graph");
    bn[static_cast<std::size_t>(it - g.tickers.begin())] = r.b_n;
  }
  require(rows.size() == g.size(), "centrality.csv does not cover every vertex of graph.json");
  const IndependentSet s = greedy_mis(g.graph, g.tickers, bn);
  if (!s.excluded_isolated.empty())
    ctx.warn("mis: " + std::to_string(s.excluded_isolated.size()) + " isolated vertices excluded at theta " +
             format_double(g.theta));
  ctx.emit_with("mis.csv", [&](std::ostream& os) { io::write_mis_csv(os, g.tickers, s); });
}

std::vector<std::string> load_mis(Context& ctx) {
  auto f = ctx.upstream("mis.csv", "mis");
  return io::read_mis_members(f);
}

void stage_risk(Context& ctx) {
  const ReturnPanel panel = load_returns(ctx);
  const risk::RiskReport r = risk::risk_report(panel, ctx.cfg().alpha, ctx.cfg().q);
  for (const auto& w : r.warnings) ctx.warn("risk: " + w);
  std::vector<std::string> first;
  if (ctx.has("mis.csv")) first = load_mis(ctx);
  ctx.emit_with("risk.csv", [&](std::ostream& os) { io::write_risk_csv(os, r); });
  ctx.emit_with("heatmap.csv", [&](std::ostream& os) { io::write_heatmap_csv(os, r, first); });
  ctx.emit_with("risk.json", [&](std::ostream& os) { io::write_risk_json(os, r); });
}

void stage_optimize(Context& ctx) {
  const ReturnPanel panel = load_returns(ctx);
  const auto members = load_mis(ctx);
  const auto& c = ctx.cfg();
  const auto p = portfolio::optimize_portfolio(panel, members, c.alpha, c.cap, c.min_return);
  ctx.emit_with("portfolio.csv", [&](std::ostream& os) { io::write_portfolio_csv(os, p); });
  ctx.emit_with("portfolio.json", [&](std::ostream& os) { io::write_portfolio_json(os, p); });
  if (p.solution.status != portfolio::Status::optimal)
    fail(Errc::infeasible, "portfolio infeasible" + (p.solution.message.empty() ? "" : ": " + p.solution.message));
}

void stage_backtest(Context& ctx) {
  const auto& c = ctx.cfg();
  if (c.prices_next.empty()) fail(Errc::precondition, "backtest needs --prices-next");
  auto pf = ctx.upstream("portfolio.csv", "optimize");
  const auto rows = io::read_portfolio_csv(pf);
  const ReturnPanel universe = load_returns(ctx);

  auto records = ctx.read_input(c.prices_next, "prices-next");
  std::vector<std::string> index_tickers;
  if (!c.index.empty()) {
    for (auto rec : ctx.read_input(c.index, "index")) {
      rec.ticker = "index:" + rec.ticker;
      if (std::find(index_tickers.begin(), index_tickers.end(), rec.ticker) == index_tickers.end())
        index_tickers.push_back(rec.ticker);
      records.push_back(std::move(rec));
    }
  }
  const PricePanel prices = align_panel(records);

  std::vector<portfolio::Book> books;
  portfolio::Book mis{"mis", {}};
  for (const auto& r : rows) mis.weights[r.ticker] = r.weight;
  books.push_back(std::move(mis));
  portfolio::Book equal{"universe", {}};
  for (const auto& t : universe.tickers) equal.weights[t] = 1.0 / static_cast<double>(universe.assets());
  books.push_back(std::move(equal));
  for (const auto& t : index_tickers) books.push_back({t, {{t, 1.0}}});

  const auto report = portfolio::backtest(prices, books, c.interval);
  const std::size_t steps = prices.dates.size() - 1;
  if (steps % c.interval != 0)
    ctx.warn("backtest: trailing " + std::to_string(steps % c.interval) + " daily steps dropped (interval " +
             std::to_string(c.interval) + ")");
  ctx.emit_with("backtest.csv", [&](std::ostream& os) { io::write_backtest_csv(os, report); });
}

void stage_summary(Context& ctx) {
  const auto& c = ctx.cfg();
  const auto inputs = report::load_summary_inputs(c.out, !c.prices_next.empty(), c.top_k);
  const auto doc = report::render_summary(inputs);
  for (const auto& n : doc.notices) ctx.warn("summary: " + n);
  ctx.emit("summary.txt", doc.text);
  ctx.emit("summary.json", doc.json);
}

void stage_synth(Context& ctx) {
  const auto& c = ctx.cfg();
  synth::SyntheticSpec spec;
  spec.alpha = c.synth_alpha;
  spec.seed = stage_seed(c.seed, "synth");
  if (c.synth_law == "uniform") spec.angle_law = synth::AngleLaw::uniform();
  else if (c.synth_law == "axes") spec.angle_law = synth::AngleLaw::axes();
  else if (c.synth_law == "point") spec.angle_law = synth::AngleLaw::point_mass(c.synth_phi);
  else fail(Errc::precondition, "synth_law must be uniform, axes or point");
  const auto batch = synth::sample_mrv(spec, c.synth_count);
  ctx.emit_with("synth.csv", [&](std::ostream& os) { synth::write_csv(os, batch); });
  ctx.warn("synth: analytic EDM " + format_double(synth::analytic_edm(spec)));
}

void stage_fixture(Context& ctx) {
  synth::FixtureSpec spec;
  spec.seed = stage_seed(ctx.cfg().seed, "fixture");
  const auto fx = synth::generate_fixture(spec);
  ctx.emit_with("prices.csv", [&](std::ostream& os) { synth::write_prices_csv(os, fx.prices); });
  ctx.emit_with("prices_next.csv", [&](std::ostream& os) { synth::write_prices_csv(os, fx.prices_next); });
  ctx.emit_with("index.csv", [&](std::ostream& os) { synth::write_prices_csv(os, fx.index); });
}

using StageFn = void (*)(Context&);

const std::vector<std::pair<std::string, StageFn>>& registry() {
  static const std::vector<std::pair<std::string, StageFn>> stages{
      {"returns", stage_returns},   {"edm", stage_edm},
      {"graph", stage_graph},       {"stats", stage_stats},
      {"centrality", stage_centrality}, {"communities", stage_communities},
      {"mis", stage_mis},           {"risk", stage_risk},
      {"optimize", stage_optimize}, {"backtest", stage_backtest},
      {"summary", stage_summary},   {"synth", stage_synth},
      {"fixture", stage_fixture},
  };
  return stages;
}

StageFn find_stage(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn;
  return nullptr;
}

// Runs `names` in order, stopping at the first failure.
RunManifest execute(const PipelineConfig& config, const std::vector<std::string>& names) {
  RunManifest m;
  m.config = config.echo();
  std::string current = "config";
  try {
    config.validate();
    Context ctx(config, m);
    for (const auto& name : names) {
      current = name;
      const StageFn fn = find_stage(name);
      if (!fn) fail(Errc::precondition, "unknown subcommand '" + name + "'");
      fn(ctx);
      m.stages.push_back(name);
    }
  } catch (const Error& e) {
    m.failure = Failure{current, e.code(), e.what()};
  } catch (const fs::filesystem_error& e) {
    m.failure = Failure{current, Errc::io, e.what()};
  }
  return m;
}

}  // namespace

const std::vector<std::string>& stage_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

RunManifest run_pipeline(const PipelineConfig& config) {
  std::vector<std::string> names{"returns", "edm", "graph", "stats", "centrality", "communities", "mis", "risk",
                                 "optimize"};
  if (!config.prices_next.empty()) names.push_back("backtest");
  names.push_back("summary");
  RunManifest m = execute(config, names);
  // Config errors leave the output directory untouched.
  if (m.failure && m.failure->stage == "config") return m;
  try {
    fs::create_directories(config.out);
    std::ofstream f(config.out / "manifest.json", std::ios::binary | std::ios::trunc);
    f << m.to_json();
    if (!f && m.ok()) m.failure = Failure{"manifest", Errc::io, "cannot write manifest.json"};
  } catch (const fs::filesystem_error& e) {
    if (m.ok()) m.failure = Failure{"manifest", Errc::io, e.what()};
  }
  return m;
}

RunManifest run_stage(const PipelineConfig& config, const std::string& stage) {
  if (!find_stage(stage)) {
    RunManifest m;
    m.config = config.echo();
    m.failure = Failure{stage, Errc::precondition, "unknown subcommand '" + stage + "'"};
    return m;
  }
  return execute(config, {stage});
}

}  // namespace edmnet::cli
