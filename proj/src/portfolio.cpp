#include "edmnet/portfolio.hpp"

#include <algorithm>
#include <cmath>

#include "edmnet/error.hpp"
#include "edmnet/text.hpp"
#include "edmnet/risk.hpp"
#include "edmnet/simplex.hpp"

namespace edmnet::portfolio {

const char* status_name(Status s) { return s == Status::optimal ? "optimal" : "infeasible"; }

void LpProblem::validate() const {
  require(cost.size() == returns.size(), "cost and return vectors differ in length");
  require(!cost.empty(), "portfolio needs at least one asset");
  require(floor >= 0.0 && floor < cap && cap <= 1.0, "weight bounds must satisfy 0 <= floor < cap <= 1");
  require(budget > 0.0, "budget must be positive");
}

PortfolioSolution simplex_solve(const LpProblem& p) {
  p.validate();
  const std::size_t n = p.cost.size();
  PortfolioSolution out;
  if (static_cast<double>(n) * p.cap < p.budget - 1e-12) {
    out.message = std::to_string(n) + " assets at cap " + format_double(p.cap) + " cannot reach the budget";
    return out;
  }

  // Columns: n weights, then the surplus s of the return row (returns'w - s = min_return).
  lp::LinearProgram prog;
  prog.a = Matrix(2, n + 1);
  prog.b = {p.budget, p.min_return};
  prog.c.assign(n + 1, 0.0);
  prog.lower.assign(n + 1, p.floor);
  prog.upper.assign(n + 1, p.cap);
  prog.lower[n] = 0.0;
  prog.upper[n] = lp::kInf;
  for (std::size_t i = 0; i < n; ++i) {
    prog.a(0, i) = 1.0;
    prog.a(1, i) = p.returns[i];
    prog.c[i] = p.cost[i];
  }
  prog.a(1, n) = -1.0;

  const auto res = lp::solve(prog);
  out.iterations = res.iterations;
  if (res.status != lp::Status::optimal) {
    out.message = res.status == lp::Status::infeasible ? "return floor unattainable under the weight bounds"
                                                       : std::string("solver ended ") + lp::status_name(res.status);
    return out;
  }
  out.status = Status::optimal;
  out.weights.assign(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    out.objective += out.weights[i] * p.cost[i];
    out.achieved_return += out.weights[i] * p.returns[i];
  }
  return out;
}

OptimizedPortfolio optimize_portfolio(const ReturnPanel& panel, const std::vector<std::string>& members,
                                      double alpha, double cap, double min_return) {
  require(panel.observations() >= 1, "return panel is empty");
  const ReturnPanel sub = select_columns(panel, members);

  OptimizedPortfolio out;
  out.tickers = members;
  out.alpha = alpha;
  out.cap = cap;
  out.min_return = min_return;
  out.window_start = panel.dates.front();
  out.window_end = panel.dates.back();
  out.window_days = panel.observations();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto losses = risk::losses_of(sub, i);
    try {
      out.es.push_back(risk::es(losses, alpha));
    } catch (const Error& e) {
      throw Error(e.code(), "ES(" + members[i] + "): " + e.what());
    }
    double mean = 0.0;
    for (std::size_t t = 0; t < sub.observations(); ++t) mean += sub.returns(t, i);
    out.mean_returns.push_back(mean / static_cast<double>(sub.observations()));
  }

  require(cap > 0.0 && cap <= 1.0, "cap must lie in (0, 1]");
  const auto needed = static_cast<std::size_t>(std::ceil(1.0 / cap - 1e-9));
  if (members.size() < needed) {
    out.solution.message = "only " + std::to_string(members.size()) + " MIS members; cap " + format_double(cap) +
                           " needs at least " + std::to_string(needed);
    return out;
  }
  LpProblem lp{out.es, out.mean_returns, cap, 0.0, 1.0, min_return};
  out.solution = simplex_solve(lp);
  return out;
}

BacktestReport backtest(const PricePanel& prices, const std::vector<Book>& books, std::size_t interval_length) {
  require(interval_length >= 1, "interval length must be positive");
  if (prices.dates.size() < interval_length + 1)
    fail(Errc::segmentation, "price panel spans " + std::to_string(prices.dates.size()) + " days; need " +
                                 std::to_string(interval_length + 1));

  struct Resolved {
    std::vector<std::size_t> columns;
    std::vector<double> weights;
  };
  std::vector<Resolved> resolved;
  BacktestReport rep;
  rep.interval_length = interval_length;
  for (const auto& book : books) {
    Resolved r;
    for (const auto& [ticker, w] : book.weights) {
      auto it = std::find(prices.tickers.begin(), prices.tickers.end(), ticker);
      if (it == prices.tickers.end()) fail(Errc::lookup, "book " + book.name + ": ticker " + ticker + " has no prices");
      r.columns.push_back(static_cast<std::size_t>(it - prices.tickers.begin()));
      r.weights.push_back(w);
    }
    resolved.push_back(std::move(r));
    rep.books.push_back(book.name);
  }

  const std::size_t blocks = (prices.dates.size() - 1) / interval_length;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t s = b * interval_length;
    const std::size_t e = s + interval_length;
    IntervalResult iv;
    iv.start = prices.dates[s];
    iv.end = prices.dates[e];
    for (std::size_t k = 0; k < books.size(); ++k) {
      const auto& r = resolved[k];
      auto value_at = [&](std::size_t t) {
        double v = 0.0;
        for (std::size_t a = 0; a < r.columns.size(); ++a)
          v += r.weights[a] * prices.prices(t, r.columns[a]) / prices.prices(s, r.columns[a]);
        return v;
      };
      double total = 0.0;
      for (std::size_t a = 0; a < r.columns.size(); ++a)
        total += r.weights[a] * (prices.prices(e, r.columns[a]) / prices.prices(s, r.columns[a]) - 1.0);

      std::vector<double> daily;
      for (std::size_t t = s + 1; t <= e; ++t) {
        const double prev = value_at(t - 1);
        const double cur = value_at(t);
        daily.push_back(prev > 0.0 && cur > 0.0 ? std::log(cur / prev) : 0.0);
      }
      double risk = 0.0;
      if (daily.size() >= 2) {
        double mean = 0.0;
        for (double d : daily) mean += d;
        mean /= static_cast<double>(daily.size());
        double ss = 0.0;
        for (double d : daily) ss += (d - mean) * (d - mean);
        risk = std::sqrt(ss / static_cast<double>(daily.size() - 1));
      }
      iv.returns[books[k].name] = total;
      iv.risk[books[k].name] = risk;
    }
    rep.intervals.push_back(std::move(iv));
  }
  return rep;
}

}  // namespace edmnet::portfolio
