#include "edmnet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <set>

#include "edmnet/error.hpp"
#include "edmnet/text.hpp"

namespace edmnet {

namespace {

bool parse_uint(std::string_view s, unsigned& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

[[noreturn]] void parse_error(const std::string& what, std::size_t line) {
  fail(Errc::parse, what + " at line " + std::to_string(line));
}

}  // namespace

bool parse_date(std::string_view text, Date& out) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return false;
  unsigned y = 0, m = 0, d = 0;
  if (!parse_uint(text.substr(0, 4), y) || !parse_uint(text.substr(5, 2), m) ||
      !parse_uint(text.substr(8, 2), d))
    return false;
  Date candidate{std::chrono::year{static_cast<int>(y)}, std::chrono::month{m}, std::chrono::day{d}};
  if (!candidate.ok()) return false;
  out = candidate;
  return true;
}

std::string format_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

std::vector<PriceRecord> parse_prices(std::istream& in) {
  std::vector<PriceRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    view = trim(view);
    if (view.empty()) continue;
    if (!saw_header) {
      if (view != "date,ticker,adj_close") parse_error("expected header 'date,ticker,adj_close'", line_no);
      saw_header = true;
      continue;
    }
    auto fields = split(view, ',');
    for (auto& f : fields) f = std::string(trim(f));
    if (fields.size() != 3) parse_error("expected 3 fields, got " + std::to_string(fields.size()), line_no);

    PriceRecord rec;
    if (!parse_date(fields[0], rec.date)) parse_error("unparseable date '" + std::string(fields[0]) + "'", line_no);
    if (fields[1].empty()) parse_error("empty ticker", line_no);
    rec.ticker = fields[1];
    const std::string_view px = fields[2];
    auto [ptr, ec] = std::from_chars(px.data(), px.data() + px.size(), rec.adj_close);
    if (ec != std::errc{} || ptr != px.data() + px.size() || !std::isfinite(rec.adj_close))
      parse_error("unparseable price '" + std::string(px) + "'", line_no);
    if (rec.adj_close <= 0.0) parse_error("non-positive price", line_no);
    records.push_back(std::move(rec));
  }
  if (!saw_header) parse_error("missing header 'date,ticker,adj_close'", std::max<std::size_t>(line_no, 1));
  return records;
}

std::vector<PriceRecord> read_prices_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io, "cannot open price file " + path.string());
  try {
    return parse_prices(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

PricePanel align_panel(const std::vector<PriceRecord>& records, AlignmentPolicy policy) {
  std::map<std::string, std::map<Date, double>> by_ticker;
  std::set<Date> all_dates;
  for (const auto& r : records) {
    auto [it, inserted] = by_ticker[r.ticker].emplace(r.date, r.adj_close);
    if (!inserted)
      fail(Errc::ambiguity, "duplicate observation for " + r.ticker + " on " + format_date(r.date));
    all_dates.insert(r.date);
  }
  const bool has_series = std::any_of(by_ticker.begin(), by_ticker.end(),
                                      [](const auto& kv) { return kv.second.size() >= 2; });
  if (!has_series) fail(Errc::alignment, "no ticker has at least 2 dates");

  if (policy.kind == AlignmentPolicy::Kind::drop_sparse) {
    require(policy.min_fraction >= 0.0 && policy.min_fraction <= 1.0, "drop-sparse fraction must lie in [0, 1]");
    const double total = static_cast<double>(all_dates.size());
    std::erase_if(by_ticker, [&](const auto& kv) {
      return static_cast<double>(kv.second.size()) < policy.min_fraction * total;
    });
    if (by_ticker.empty()) fail(Errc::alignment, "drop-sparse removed every ticker");
  }

  std::vector<Date> common;
  for (const auto& d : all_dates) {
    const bool everywhere =
        std::all_of(by_ticker.begin(), by_ticker.end(), [&](const auto& kv) { return kv.second.contains(d); });
    if (everywhere) common.push_back(d);
  }
  if (common.empty()) fail(Errc::alignment, "empty date intersection");
  if (common.size() < 2)
    fail(Errc::alignment, "date intersection has " + std::to_string(common.size()) + " day; need at least 2");

  PricePanel panel;
  panel.dates = common;
  panel.prices = Matrix(common.size(), by_ticker.size());
  std::size_t col = 0;
  for (const auto& [ticker, series] : by_ticker) {  // std::map iterates lexicographically
    panel.tickers.push_back(ticker);
    for (std::size_t t = 0; t < common.size(); ++t) panel.prices(t, col) = series.at(common[t]);
    ++col;
  }
  return panel;
}

ReturnPanel log_returns(const PricePanel& panel) {
  require(panel.dates.size() >= 2, "price panel needs at least 2 dates");
  ReturnPanel out;
  out.tickers = panel.tickers;
  out.dates.assign(panel.dates.begin() + 1, panel.dates.end());
  out.returns = Matrix(panel.dates.size() - 1, panel.tickers.size());
  for (std::size_t t = 0; t + 1 < panel.dates.size(); ++t)
    for (std::size_t i = 0; i < panel.tickers.size(); ++i)
      out.returns(t, i) = std::log(panel.prices(t + 1, i)) - std::log(panel.prices(t, i));
  return out;
}

ReturnPanel select_columns(const ReturnPanel& panel, const std::vector<std::string>& tickers) {
  ReturnPanel out;
  out.dates = panel.dates;
  out.tickers = tickers;
  out.returns = Matrix(panel.observations(), tickers.size());
  for (std::size_t k = 0; k < tickers.size(); ++k) {
    auto it = std::find(panel.tickers.begin(), panel.tickers.end(), tickers[k]);
    if (it == panel.tickers.end()) fail(Errc::lookup, "ticker " + tickers[k] + " not in return panel");
    const auto src = static_cast<std::size_t>(it - panel.tickers.begin());
    for (std::size_t t = 0; t < panel.observations(); ++t) out.returns(t, k) = panel.returns(t, src);
  }
  return out;
}

}  // namespace edmnet
