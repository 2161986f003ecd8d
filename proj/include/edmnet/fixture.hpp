#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "edmnet/ingest.hpp"

namespace edmnet::synth {

// Sector factor market: each daily log-return is
//   scale * (beta_i M_t + gamma_i S_{sector(i),t} + E_{i,t}) + drift_i
// with M, S, E independent symmetric Pareto shocks of a common tail index, so
// pairs share extremes only through the factors they load on.
struct FixtureSpec {
  std::size_t tickers = 50;
  std::size_t sectors = 5;
  std::size_t days = 242;       // estimation prices (days - 1 returns)
  std::size_t next_days = 61;   // follow-on prices, six 10-step blocks
  double tail_index = 3.0;
  double scale = 0.008;
  std::uint64_t seed = 0;
  void validate() const;
};

struct Fixture {
  std::vector<PriceRecord> prices;
  std::vector<PriceRecord> prices_next;
  std::vector<PriceRecord> index;  // single "MKT" series over both periods
  std::vector<double> beta;
  std::vector<double> gamma;
};

Fixture generate_fixture(const FixtureSpec& spec);

/// Long-format `date,ticker,adj_close`, rows ordered by date then ticker.
void write_prices_csv(std::ostream& out, const std::vector<PriceRecord>& records);

}  // namespace edmnet::synth
