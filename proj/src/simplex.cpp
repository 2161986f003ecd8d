#include "edmnet/simplex.hpp"

#include <algorithm>
#include <cmath>

#include "edmnet/error.hpp"

namespace edmnet::lp {

const char* status_name(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::iteration_limit: return "iteration-limit";
  }
  return "unknown";
}

namespace {

enum class Where { basic, at_lower, at_upper };

// Dense Gauss-Jordan inverse with partial pivoting; false when singular.
bool invert(Matrix m, Matrix& inv) {
  const std::size_t n = m.rows();
  inv = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (std::abs(m(piv, col)) < 1e-14) return false;
    if (piv != col)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(m(piv, k), m(col, k));
        std::swap(inv(piv, k), inv(col, k));
      }
    const double d = m(col, col);
    for (std::size_t k = 0; k < n; ++k) {
      m(col, k) /= d;
      inv(col, k) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0.0) continue;
      const double f = m(r, col);
      for (std::size_t k = 0; k < n; ++k) {
        m(r, k) -= f * m(col, k);
        inv(r, k) -= f * inv(col, k);
      }
    }
  }
  return true;
}

class Tableau {
 public:
  Tableau(const LinearProgram& p, const Options& opt) : p_(p), opt_(opt), m_(p.b.size()), n_(p.c.size()) {
    const std::size_t total = n_ + m_;
    lower_ = p.lower;
    upper_ = p.upper;
    lower_.resize(total, 0.0);
    upper_.resize(total, kInf);
    x_.assign(total, 0.0);
    where_.assign(total, Where::at_lower);
    art_sign_.assign(m_, 1.0);

    for (std::size_t j = 0; j < n_; ++j) {
      if (std::isfinite(lower_[j])) {
        x_[j] = lower_[j];
      } else {
        x_[j] = upper_[j];
        where_[j] = Where::at_upper;
      }
    }
    std::vector<double> residual = p.b;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) residual[i] -= p.a(i, j) * x_[j];
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      art_sign_[i] = residual[i] < 0.0 ? -1.0 : 1.0;
      basis_[i] = n_ + i;
      where_[n_ + i] = Where::basic;
      x_[n_ + i] = std::abs(residual[i]);
    }
    max_iter_ = opt.max_iterations ? opt.max_iterations : 200000 + 200 * total;
  }

  Result run() {
    Result res;
    // Phase 1: minimise the sum of artificials.
    std::vector<double> cost(n_ + m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) cost[n_ + i] = 1.0;
    Status st = optimise(cost);
    res.iterations = iterations_;
    if (st == Status::iteration_limit) return finish(res, st);

    double infeasibility = 0.0;
    for (std::size_t i = 0; i < m_; ++i) infeasibility += x_[n_ + i];
    double scale = 1.0;
    for (double v : p_.b) scale = std::max(scale, std::abs(v));
    if (infeasibility > opt_.feasibility_tol * scale) return finish(res, Status::infeasible);

    evict_artificials();
    for (std::size_t i = 0; i < m_; ++i) {
      upper_[n_ + i] = 0.0;
      if (where_[n_ + i] != Where::basic) {
        x_[n_ + i] = 0.0;
        where_[n_ + i] = Where::at_lower;
      }
    }
    cost.assign(n_ + m_, 0.0);
    std::copy(p_.c.begin(), p_.c.end(), cost.begin());
    st = optimise(cost);
    res.iterations = iterations_;
    if (st == Status::optimal) res.duals = duals_;
    return finish(res, st);
  }

 private:
  double column(std::size_t row, std::size_t j) const {
    if (j < n_) return p_.a(row, j);
    return row == j - n_ ? art_sign_[row] : 0.0;
  }

  bool refresh() {
    Matrix basis_matrix(m_, m_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t k = 0; k < m_; ++k) basis_matrix(i, k) = column(i, basis_[k]);
    if (!invert(basis_matrix, binv_)) return false;
    std::vector<double> rhs = p_.b;
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      if (where_[j] == Where::basic || x_[j] == 0.0) continue;
      for (std::size_t i = 0; i < m_; ++i) rhs[i] -= column(i, j) * x_[j];
    }
    for (std::size_t r = 0; r < m_; ++r) {
      double v = 0.0;
      for (std::size_t i = 0; i < m_; ++i) v += binv_(r, i) * rhs[i];
      x_[basis_[r]] = v;
    }
    return true;
  }

  std::vector<double> ftran(std::size_t j) const {
    std::vector<double> w(m_, 0.0);
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t i = 0; i < m_; ++i) w[r] += binv_(r, i) * column(i, j);
    return w;
  }

  Status optimise(const std::vector<double>& cost) {
    const std::size_t total = n_ + m_;
    while (true) {
      if (!refresh()) return Status::infeasible;
      duals_.assign(m_, 0.0);
      for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t r = 0; r < m_; ++r) duals_[i] += cost[basis_[r]] * binv_(r, i);

      // Bland: lowest-index improving variable enters.
      std::size_t entering = total;
      double direction = 0.0;
      for (std::size_t j = 0; j < total; ++j) {
        if (where_[j] == Where::basic || upper_[j] - lower_[j] <= 0.0) continue;
        double d = cost[j];
        if (j < n_) {
          for (std::size_t i = 0; i < m_; ++i) d -= duals_[i] * p_.a(i, j);
        } else {
          d -= duals_[j - n_] * art_sign_[j - n_];
        }
        if (where_[j] == Where::at_lower && d < -opt_.optimality_tol) {
          entering = j;
          direction = 1.0;
          break;
        }
        if (where_[j] == Where::at_upper && d > opt_.optimality_tol) {
          entering = j;
          direction = -1.0;
          break;
        }
      }
      if (entering == total) return Status::optimal;
      if (iterations_ >= max_iter_) return Status::iteration_limit;
      ++iterations_;

      const auto w = ftran(entering);
      double step = upper_[entering] - lower_[entering];
      std::size_t leave_row = m_;
      for (std::size_t r = 0; r < m_; ++r) {
        const std::size_t k = basis_[r];
        const double rate = -direction * w[r];
        double limit = kInf;
        if (rate < -opt_.pivot_tol) {
          limit = std::max(0.0, x_[k] - lower_[k]) / -rate;
        } else if (rate > opt_.pivot_tol && std::isfinite(upper_[k])) {
          limit = std::max(0.0, upper_[k] - x_[k]) / rate;
        }
        if (limit < step - 1e-15 ||
            (leave_row < m_ && std::abs(limit - step) <= 1e-15 && k < basis_[leave_row])) {
          step = limit;
          leave_row = r;
        }
      }
      if (!std::isfinite(step)) return Status::unbounded;

      x_[entering] += direction * step;
      if (leave_row == m_) {
        where_[entering] = direction > 0.0 ? Where::at_upper : Where::at_lower;
        x_[entering] = direction > 0.0 ? upper_[entering] : lower_[entering];
        continue;
      }
      const std::size_t leaving = basis_[leave_row];
      const double rate = -direction * w[leave_row];
      if (rate < 0.0) {
        where_[leaving] = Where::at_lower;
        x_[leaving] = lower_[leaving];
      } else {
        where_[leaving] = Where::at_upper;
        x_[leaving] = upper_[leaving];
      }
      basis_[leave_row] = entering;
      where_[entering] = Where::basic;
    }
  }

  // Swap zero-valued basic artificials for structural columns where possible.
  void evict_artificials() {
    if (!refresh()) return;
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (where_[j] == Where::basic) continue;
        double pivot = 0.0;
        for (std::size_t i = 0; i < m_; ++i) pivot += binv_(r, i) * p_.a(i, j);
        if (std::abs(pivot) > 1e-9) {
          const std::size_t art = basis_[r];
          where_[art] = Where::at_lower;
          x_[art] = 0.0;
          basis_[r] = j;
          where_[j] = Where::basic;
          if (!refresh()) return;
          break;
        }
      }
    }
  }

  Result& finish(Result& res, Status st) {
    res.status = st;
    res.x.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(n_));
    for (std::size_t j = 0; j < n_; ++j) {
      if (std::abs(res.x[j] - lower_[j]) <= opt_.feasibility_tol) res.x[j] = lower_[j];
      if (std::isfinite(upper_[j]) && std::abs(res.x[j] - upper_[j]) <= opt_.feasibility_tol) res.x[j] = upper_[j];
    }
    res.objective = 0.0;
    for (std::size_t j = 0; j < n_; ++j) res.objective += p_.c[j] * res.x[j];
    return res;
  }

  const LinearProgram& p_;
  const Options& opt_;
  std::size_t m_;
  std::size_t n_;
  std::vector<double> lower_, upper_, x_, art_sign_, duals_;
  std::vector<Where> where_;
  std::vector<std::size_t> basis_;
  Matrix binv_;
  std::size_t iterations_ = 0;
  std::size_t max_iter_ = 0;
};

}  // namespace

Result solve(const LinearProgram& problem, const Options& options) {
  const std::size_t m = problem.b.size();
  const std::size_t n = problem.c.size();
  require(problem.a.rows() == m && (m == 0 || problem.a.cols() == n), "constraint matrix shape mismatch");
  require(problem.lower.size() == n && problem.upper.size() == n, "bound vectors must match variable count");
  for (std::size_t j = 0; j < n; ++j) {
    require(std::isfinite(problem.lower[j]) || std::isfinite(problem.upper[j]),
            "free variables are not supported");
    require(problem.lower[j] <= problem.upper[j], "lower bound exceeds upper bound");
  }
  Tableau t(problem, options);
  return t.run();
}

}  // namespace edmnet::lp
