#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "metricsat/rational.hpp"

namespace metricsat::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::vector<std::pair<std::size_t, Rational>> terms;
  Relation relation;
  Rational rhs;
};

/// maximize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;

  void add(std::vector<std::pair<std::size_t, Rational>> terms,
           Relation relation, Rational rhs) {
    constraints.push_back({std::move(terms), relation, std::move(rhs)});
  }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

/// Two-phase primal simplex over exact rationals with Bland's rule, so it
/// terminates without cycling.
Solution solve(const LinearProgram &program);

} // namespace metricsat::lp
