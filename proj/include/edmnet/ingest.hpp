#pragma once

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "edmnet/matrix.hpp"

namespace edmnet {

using Date = std::chrono::year_month_day;

/// Parses a strict ISO-8601 `YYYY-MM-DD` day; returns false on malformed or
/// invalid calendar days.
bool parse_date(std::string_view text, Date& out);
std::string format_date(const Date& d);

struct PriceRecord {
  Date date;
  std::string ticker;
  double adj_close = 0.0;
};

struct PricePanel {
  std::vector<Date> dates;           // strictly increasing
  std::vector<std::string> tickers;  // lexicographic
  Matrix prices;                     // dates x tickers
};

struct ReturnPanel {
  std::vector<Date> dates;  // later day of each consecutive pair
  std::vector<std::string> tickers;
  Matrix returns;

  std::size_t assets() const noexcept { return tickers.size(); }
  std::size_t observations() const noexcept { return dates.size(); }
};

struct AlignmentPolicy {
  enum class Kind { intersect, drop_sparse };
  Kind kind = Kind::intersect;
  // drop_sparse: tickers observed on fewer than this fraction of all dates go first.
  double min_fraction = 0.0;

  static AlignmentPolicy intersect() { return {}; }
  static AlignmentPolicy drop_sparse(double fraction) { return {Kind::drop_sparse, fraction}; }
};

/// Reads long-format `date,ticker,adj_close` CSV. Errors carry the 1-based
/// line number of the offending row.
std::vector<PriceRecord> parse_prices(std::istream& in);
std::vector<PriceRecord> read_prices_file(const std::filesystem::path& path);

PricePanel align_panel(const std::vector<PriceRecord>& records,
                       AlignmentPolicy policy = AlignmentPolicy::intersect());

ReturnPanel log_returns(const PricePanel& panel);

/// Restricts a return panel to the given tickers (in the given order).
ReturnPanel select_columns(const ReturnPanel& panel, const std::vector<std::string>& tickers);

}  // namespace edmnet
