#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "edmnet/matrix.hpp"

namespace edmnet::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// min c'x  subject to  A x = b,  lower <= x <= upper.
/// Every variable needs at least one finite bound.
struct LinearProgram {
  Matrix a;
  std::vector<double> b;
  std::vector<double> c;
  std::vector<double> lower;
  std::vector<double> upper;
};

enum class Status { optimal, infeasible, unbounded, iteration_limit };
const char* status_name(Status s);

struct Options {
  double optimality_tol = 1e-9;  // reduced-cost threshold
  double feasibility_tol = 1e-9;
  double pivot_tol = 1e-11;
  std::size_t max_iterations = 0;  // 0: automatic
};

struct Result {
  Status status = Status::infeasible;
  std::vector<double> x;
  double objective = 0.0;
  std::vector<double> duals;  // simplex multipliers c_B' B^-1 of the final basis
  std::size_t iterations = 0;  // phase 1 + phase 2 pivots and bound flips
};

/// Two-phase primal simplex over bounded variables with Bland's rule for both
/// the entering and the leaving choice. Values within the feasibility
/// tolerance of a bound are snapped onto it.
Result solve(const LinearProgram& problem, const Options& options = {});

}  // namespace edmnet::lp
