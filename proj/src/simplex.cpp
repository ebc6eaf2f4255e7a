#include "metricsat/simplex.hpp"

#include <optional>

#include "metricsat/errors.hpp"

namespace metricsat::lp {
namespace {

/// Dense tableau. Row i reads  sum_j a[i][j] x_j = rhs[i]  with basis[i]
/// basic; reduced[j] holds the reduced objective coefficient of column j and
/// `value` the objective at the current basic solution.
struct Tableau {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  std::vector<std::size_t> basis;
  std::vector<Rational> reduced;
  Rational value;
  std::size_t pivots = 0;

  std::size_t rows() const { return a.size(); }
  std::size_t cols() const { return reduced.size(); }

  void pivot(std::size_t row, std::size_t col) {
    ++pivots;
    const Rational p = a[row][col];
    for (auto &x : a[row])
      if (x != 0)
        x /= p;
    rhs[row] /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == row || a[i][col] == 0)
        continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < cols(); ++j)
        if (a[row][j] != 0)
          a[i][j] -= f * a[row][j];
      rhs[i] -= f * rhs[row];
    }
    if (reduced[col] != 0) {
      const Rational f = reduced[col];
      for (std::size_t j = 0; j < cols(); ++j)
        if (a[row][j] != 0)
          reduced[j] -= f * a[row][j];
      value += f * rhs[row];
    }
    basis[row] = col;
  }

  /// Maximises over columns [0, usable). Returns false if unbounded.
  bool optimise(std::size_t usable) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < usable; ++j)
        if (reduced[j] > 0) {
          enter = j;
          break;
        }
      if (!enter)
        return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a[i][*enter] <= 0)
          continue;
        Rational ratio = rhs[i] / a[i][*enter];
        if (!leave || ratio < best ||
            (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave)
        return false;
      pivot(*leave, *enter);
    }
  }
};

} // namespace

Solution solve(const LinearProgram &program) {
  const std::size_t n = program.num_vars;
  if (!program.objective.empty() && program.objective.size() != n)
    throw SizeMismatch(program.objective.size(), n);

  // Normalise to nonnegative right-hand sides.
  std::vector<Constraint> rows = program.constraints;
  std::size_t slack_count = 0, artificial_count = 0;
  for (auto &row : rows) {
    for (auto &[var, coeff] : row.terms)
      if (var >= n)
        throw IndexOutOfRange(var, n);
    if (row.rhs < 0) {
      row.rhs = -row.rhs;
      for (auto &term : row.terms)
        term.second = -term.second;
      if (row.relation == Relation::LessEqual)
        row.relation = Relation::GreaterEqual;
      else if (row.relation == Relation::GreaterEqual)
        row.relation = Relation::LessEqual;
    }
    if (row.relation != Relation::Equal)
      ++slack_count;
    if (row.relation != Relation::LessEqual)
      ++artificial_count;
  }

  const std::size_t m = rows.size();
  const std::size_t first_slack = n;
  const std::size_t first_artificial = n + slack_count;
  const std::size_t total = first_artificial + artificial_count;

  Tableau t;
  t.a.assign(m, std::vector<Rational>(total));
  t.rhs.resize(m);
  t.basis.resize(m);
  t.reduced.assign(total, Rational(0));

  std::size_t next_slack = first_slack, next_artificial = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto &[var, coeff] : rows[i].terms)
      t.a[i][var] += coeff;
    t.rhs[i] = rows[i].rhs;
    switch (rows[i].relation) {
    case Relation::LessEqual:
      t.a[i][next_slack] = 1;
      t.basis[i] = next_slack++;
      break;
    case Relation::GreaterEqual:
      t.a[i][next_slack++] = -1;
      [[fallthrough]];
    case Relation::Equal:
      t.a[i][next_artificial] = 1;
      t.basis[i] = next_artificial++;
      break;
    }
  }

  // Phase 1: maximise -(sum of artificials).
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < first_artificial)
      continue;
    for (std::size_t j = 0; j < first_artificial; ++j)
      t.reduced[j] += t.a[i][j];
    t.value -= t.rhs[i];
  }
  t.optimise(first_artificial);

  Solution out;
  if (t.value != 0) {
    out.status = Status::Infeasible;
    out.pivots = t.pivots;
    return out;
  }

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows();) {
    if (t.basis[i] < first_artificial) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < first_artificial; ++j)
      if (t.a[i][j] != 0) {
        col = j;
        break;
      }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
      t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2 on the original objective; artificial columns stay out.
  t.reduced.assign(total, Rational(0));
  t.value = 0;
  for (std::size_t j = 0; j < program.objective.size(); ++j)
    t.reduced[j] = program.objective[j];
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const std::size_t b = t.basis[i];
    if (b >= program.objective.size() || program.objective[b] == 0)
      continue;
    const Rational cb = program.objective[b];
    for (std::size_t j = 0; j < total; ++j)
      if (t.a[i][j] != 0)
        t.reduced[j] -= cb * t.a[i][j];
    t.value += cb * t.rhs[i];
  }
  const bool bounded = t.optimise(first_artificial);
  out.pivots = t.pivots;
  if (!bounded) {
    out.status = Status::Unbounded;
    return out;
  }
  out.status = Status::Optimal;
  out.value = t.value;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basis[i] < n)
      out.x[t.basis[i]] = t.rhs[i];
  return out;
}

} // namespace metricsat::lp
