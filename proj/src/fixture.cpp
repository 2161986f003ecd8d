#include "edmnet/fixture.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "edmnet/error.hpp"
#include "edmnet/text.hpp"

namespace edmnet::synth {

namespace {

using namespace std::chrono;

std::vector<Date> business_days(Date first, std::size_t count) {
  std::vector<Date> out;
  sys_days d{first};
  while (out.size() < count) {
    const weekday wd{d};
    if (wd != Saturday && wd != Sunday) out.emplace_back(d);
    d += days{1};
  }
  return out;
}

std::string ticker_name(std::size_t sector, std::size_t k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%c%02zu", static_cast<char>('A' + sector), k + 1);
  return buf;
}

}  // namespace

void FixtureSpec::validate() const {
  require(tickers >= 2, "fixture needs at least 2 tickers");
  require(sectors >= 1 && sectors <= 26 && sectors <= tickers, "sector count must lie in [1, min(26, tickers)]");
  require(days >= 2 && next_days >= 2, "fixture periods need at least 2 days");
  require(tail_index > 0.0, "tail index must be positive");
  require(scale > 0.0, "scale must be positive");
}

Fixture generate_fixture(const FixtureSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  auto unit = [&rng] { return 1.0 - std::generate_canonical<double, 64>(rng); };
  // Symmetric Pareto on |z| >= 1, centred so typical days are small.
  auto shock = [&] {
    const double magnitude = std::pow(unit(), -1.0 / spec.tail_index) - 1.0;
    return (rng() & 1U) ? magnitude : -magnitude;
  };

  const std::size_t n = spec.tickers;
  Fixture fx;
  std::vector<std::size_t> sector(n);
  std::vector<std::string> names(n);
  std::vector<double> drift(n), price(n);
  std::vector<std::size_t> seen(spec.sectors, 0);
  for (std::size_t i = 0; i < n; ++i) {
    sector[i] = i % spec.sectors;
    names[i] = ticker_name(sector[i], seen[sector[i]]++);
    fx.beta.push_back(0.15 + 0.85 * unit());
    fx.gamma.push_back(0.1 + 0.9 * unit());
    drift[i] = 0.0012 * (unit() - 0.3);
    price[i] = 5.0 + 45.0 * unit();
  }
  double index_level = 3000.0;

  const auto run = [&](Date first, std::size_t count, std::vector<PriceRecord>& out, bool emit_first) {
    const auto dates = business_days(first, count);
    std::vector<double> s(spec.sectors);
    for (std::size_t t = 0; t < dates.size(); ++t) {
      if (t > 0 || !emit_first) {
        const double m = shock();
        for (auto& v : s) v = shock();
        for (std::size_t i = 0; i < n; ++i) {
          const double r = spec.scale * (fx.beta[i] * m + fx.gamma[i] * s[sector[i]] + shock()) + drift[i];
          price[i] *= std::exp(r);
        }
        index_level *= std::exp(spec.scale * 0.6 * m + 0.0002);
      }
      for (std::size_t i = 0; i < n; ++i) out.push_back({dates[t], names[i], price[i]});
      fx.index.push_back({dates[t], "MKT", index_level});
    }
  };
  run(Date{year{2023}, January, day{3}}, spec.days, fx.prices, true);
  run(Date{year{2024}, January, day{2}}, spec.next_days, fx.prices_next, false);

  const auto by_date_ticker = [](const PriceRecord& a, const PriceRecord& b) {
    return sys_days{a.date} != sys_days{b.date} ? sys_days{a.date} < sys_days{b.date} : a.ticker < b.ticker;
  };
  std::sort(fx.prices.begin(), fx.prices.end(), by_date_ticker);
  std::sort(fx.prices_next.begin(), fx.prices_next.end(), by_date_ticker);
  return fx;
}

void write_prices_csv(std::ostream& out, const std::vector<PriceRecord>& records) {
  out << "date,ticker,adj_close\n";
  for (const auto& r : records) out << format_date(r.date) << ',' << r.ticker << ',' << format_fixed(r.adj_close, 6) << '\n';
}

}  // namespace edmnet::synth
