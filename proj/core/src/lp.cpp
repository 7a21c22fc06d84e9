#include "cquant/lp.hpp"

#include <string>
#include <utility>

namespace cquant {

LinearProgram::LinearProgram(std::size_t n, ObjectiveSense s)
    : sense(s), objective(n), lower(n, Rational(0)), upper(n) {}

void LinearProgram::add_row(Vector coeffs, RowSense s, Rational rhs_value) {
  rows.push_back(std::move(coeffs));
  row_senses.push_back(s);
  rhs.push_back(std::move(rhs_value));
}

void LinearProgram::set_bounds(std::size_t j, std::optional<Rational> lo,
                               std::optional<Rational> hi) {
  lower.at(j) = std::move(lo);
  upper.at(j) = std::move(hi);
}

namespace {

void check_well_formed(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  if (lp.lower.size() != n || lp.upper.size() != n) {
    throw Error(ErrorCode::MalformedProgram, "bound vectors do not match objective length");
  }
  if (lp.row_senses.size() != lp.rows.size() || lp.rhs.size() != lp.rows.size()) {
    throw Error(ErrorCode::MalformedProgram, "row sense / rhs count mismatch");
  }
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (lp.rows[i].size() != n) {
      throw Error(ErrorCode::MalformedProgram, "row " + std::to_string(i) + " has wrong length");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.lower[j] && lp.upper[j] && *lp.lower[j] > *lp.upper[j]) {
      throw Error(ErrorCode::MalformedProgram,
                  "variable " + std::to_string(j) + " has lower bound above upper bound");
    }
  }
}

// Bounded-variable primal simplex on the tableau of
//   A x + s + diag(sigma) a = b,
// with structural x, one slack per row (sign fixed by the row sense) and one
// artificial per row. Column order: x (n), s (m), a (m).
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : n_(lp.num_vars()), m_(lp.num_rows()) {
    const std::size_t total = n_ + 2 * m_;
    lo_.resize(total);
    hi_.resize(total);
    x_.assign(total, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) {
      lo_[j] = lp.lower[j];
      hi_[j] = lp.upper[j];
      if (lo_[j]) x_[j] = *lo_[j];
      else if (hi_[j]) x_[j] = *hi_[j];
    }
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t s = n_ + i;
      switch (lp.row_senses[i]) {
        case RowSense::LessEqual: lo_[s] = Rational(0); break;
        case RowSense::GreaterEqual: hi_[s] = Rational(0); break;
        case RowSense::Equal: lo_[s] = Rational(0); hi_[s] = Rational(0); break;
      }
      lo_[n_ + m_ + i] = Rational(0);
    }
    table_.assign(m_, Vector(total));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational residual = lp.rhs[i];
      for (std::size_t j = 0; j < n_; ++j) {
        if (!lp.rows[i][j].is_zero() && !x_[j].is_zero()) residual -= lp.rows[i][j] * x_[j];
      }
      const Rational sigma = residual.sign() < 0 ? Rational(-1) : Rational(1);
      for (std::size_t j = 0; j < n_; ++j) table_[i][j] = sigma * lp.rows[i][j];
      table_[i][n_ + i] = sigma;
      table_[i][n_ + m_ + i] = Rational(1);
      basis_[i] = n_ + m_ + i;
      x_[basis_[i]] = residual.abs();
    }
  }

  // Returns false when the objective is unbounded below.
  bool minimize(const Vector& cost) {
    const std::size_t total = x_.size();
    Vector d(total);
    while (true) {
      reduced_costs(cost, d);
      std::size_t enter = total;
      int dir = 0;
      for (std::size_t j = 0; j < total; ++j) {
        if (is_basic(j) || d[j].is_zero()) continue;
        if (d[j].sign() < 0 && (!hi_[j] || x_[j] < *hi_[j])) {
          enter = j;
          dir = 1;
          break;
        }
        if (d[j].sign() > 0 && (!lo_[j] || x_[j] > *lo_[j])) {
          enter = j;
          dir = -1;
          break;
        }
      }
      if (enter == total) return true;

      // Ratio test; ties go to the smallest variable index.
      std::optional<Rational> step;
      std::size_t leave_var = total;
      std::size_t leave_row = m_;
      bool leave_at_upper = false;
      auto offer = [&](Rational t, std::size_t var, std::size_t row, bool at_upper) {
        if (!step || t < *step || (t == *step && var < leave_var)) {
          step = std::move(t);
          leave_var = var;
          leave_row = row;
          leave_at_upper = at_upper;
        }
      };
      if (lo_[enter] && hi_[enter]) offer(*hi_[enter] - *lo_[enter], enter, m_, dir > 0);
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& a = table_[i][enter];
        if (a.is_zero()) continue;
        const std::size_t b = basis_[i];
        // x_b moves by -dir * a * t.
        if ((dir > 0) == (a.sign() > 0)) {
          if (lo_[b]) offer((x_[b] - *lo_[b]) / a.abs(), b, i, false);
        } else {
          if (hi_[b]) offer((*hi_[b] - x_[b]) / a.abs(), b, i, true);
        }
      }
      if (!step) return false;

      const Rational delta = dir > 0 ? *step : -*step;
      if (!delta.is_zero()) {
        for (std::size_t i = 0; i < m_; ++i) {
          if (!table_[i][enter].is_zero()) x_[basis_[i]] -= delta * table_[i][enter];
        }
        x_[enter] += delta;
      }
      ++pivots_;
      if (leave_row == m_) continue;  // bound flip of the entering variable

      x_[leave_var] = leave_at_upper ? *hi_[leave_var] : *lo_[leave_var];
      pivot(leave_row, enter);
    }
  }

  void fix_artificials() {
    for (std::size_t i = 0; i < m_; ++i) hi_[n_ + m_ + i] = Rational(0);
  }

  [[nodiscard]] Rational objective(const Vector& cost) const {
    Rational v;
    for (std::size_t j = 0; j < x_.size(); ++j) {
      if (!cost[j].is_zero()) v += cost[j] * x_[j];
    }
    return v;
  }

  // y_i = c_B^T B^{-1} e_i; B^{-1} is read off the slack columns.
  [[nodiscard]] Vector row_duals(const Vector& cost) const {
    Vector y(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& cb = cost[basis_[i]];
        if (!cb.is_zero() && !table_[i][n_ + r].is_zero()) y[r] += cb * table_[i][n_ + r];
      }
    }
    return y;
  }

  void reduced_costs(const Vector& cost, Vector& d) const {
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (!table_[i][j].is_zero()) d[j] -= cb * table_[i][j];
      }
    }
  }

  [[nodiscard]] const Vector& values() const { return x_; }
  [[nodiscard]] std::size_t pivots() const { return pivots_; }
  [[nodiscard]] std::size_t columns() const { return x_.size(); }

 private:
  [[nodiscard]] bool is_basic(std::size_t j) const {
    for (std::size_t b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / table_[row][col];
    for (auto& v : table_[row]) {
      if (!v.is_zero()) v *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || table_[i][col].is_zero()) continue;
      const Rational f = table_[i][col];
      for (std::size_t j = 0; j < table_[i].size(); ++j) {
        if (!table_[row][j].is_zero()) table_[i][j] -= f * table_[row][j];
      }
    }
    basis_[row] = col;
  }

  std::size_t n_;
  std::size_t m_;
  Matrix table_;
  std::vector<std::size_t> basis_;
  std::vector<std::optional<Rational>> lo_;
  std::vector<std::optional<Rational>> hi_;
  Vector x_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpOutcome simplex_solve(const LinearProgram& lp) {
  check_well_formed(lp);
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.num_rows();
  Tableau tab(lp);
  LpOutcome out;

  Vector phase1(tab.columns());
  for (std::size_t i = 0; i < m; ++i) phase1[n + m + i] = Rational(1);
  tab.minimize(phase1);
  if (!tab.objective(phase1).is_zero()) {
    out.status = LpStatus::Infeasible;
    out.pivots = tab.pivots();
    return out;
  }
  tab.fix_artificials();

  const bool maximize = lp.sense == ObjectiveSense::Maximize;
  Vector cost(tab.columns());
  for (std::size_t j = 0; j < n; ++j) cost[j] = maximize ? -lp.objective[j] : lp.objective[j];
  const bool bounded = tab.minimize(cost);
  out.pivots = tab.pivots();
  out.primal.assign(tab.values().begin(), tab.values().begin() + static_cast<std::ptrdiff_t>(n));
  if (!bounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.value = tab.objective(cost);
  out.row_duals = tab.row_duals(cost);
  Vector d(tab.columns());
  tab.reduced_costs(cost, d);
  out.reduced_costs.assign(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(n));
  if (maximize) {
    out.value = -out.value;
    for (auto& y : out.row_duals) y = -y;
    for (auto& r : out.reduced_costs) r = -r;
  }
  return out;
}

bool verify_certificate(const LinearProgram& lp, const LpOutcome& outcome) {
  if (outcome.status != LpStatus::Optimal) return false;
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.num_rows();
  if (outcome.primal.size() != n || outcome.row_duals.size() != m ||
      outcome.reduced_costs.size() != n) {
    return false;
  }
  // Work in minimization form: flip signs for a maximization.
  const int s = lp.sense == ObjectiveSense::Maximize ? -1 : 1;
  const Rational sr(s);
  const auto& x = outcome.primal;

  for (std::size_t j = 0; j < n; ++j) {
    if (lp.lower[j] && x[j] < *lp.lower[j]) return false;
    if (lp.upper[j] && x[j] > *lp.upper[j]) return false;
  }
  Rational primal_value = dot(lp.objective, x);
  if (primal_value != outcome.value) return false;

  Rational dual_value;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational ax = dot(lp.rows[i], x);
    const Rational y = sr * outcome.row_duals[i];
    const Rational slack = lp.rhs[i] - ax;
    switch (lp.row_senses[i]) {
      case RowSense::LessEqual:
        if (slack.sign() < 0 || y.sign() > 0) return false;
        break;
      case RowSense::GreaterEqual:
        if (slack.sign() > 0 || y.sign() < 0) return false;
        break;
      case RowSense::Equal:
        if (!slack.is_zero()) return false;
        break;
    }
    if (!y.is_zero() && !slack.is_zero()) return false;
    dual_value += y * lp.rhs[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational col_y;
    for (std::size_t i = 0; i < m; ++i) col_y += lp.rows[i][j] * outcome.row_duals[i];
    if (col_y + outcome.reduced_costs[j] != lp.objective[j]) return false;
    const Rational d = sr * outcome.reduced_costs[j];
    if (d.is_zero()) continue;
    if (d.sign() > 0) {
      if (!lp.lower[j] || x[j] != *lp.lower[j]) return false;
    } else {
      if (!lp.upper[j] || x[j] != *lp.upper[j]) return false;
    }
    dual_value += d * x[j];
  }
  return sr * primal_value == dual_value;
}

LinearProgram build_lp(const DataCloud& cloud, const QuantileLevel& level, const Vector& w) {
  const Vector a = project_data(cloud, w);
  const std::size_t n = a.size();
  LinearProgram lp(2 * n, ObjectiveSense::Maximize);
  Vector balance(2 * n);
  const Rational q = Rational(1) - level.p();
  for (std::size_t i = 0; i < n; ++i) {
    lp.objective[i] = a[i];
    lp.objective[n + i] = -a[i];
    lp.set_bounds(i, Rational(0), level.p());
    lp.set_bounds(n + i, Rational(0), q);
    balance[i] = Rational(1);
    balance[n + i] = Rational(-1);
  }
  lp.add_row(std::move(balance), RowSense::Equal, Rational(0));
  return lp;
}

LinearProgram build_lp_dual(const DataCloud& cloud, const QuantileLevel& level, const Vector& w) {
  const Vector a = project_data(cloud, w);
  const std::size_t n = a.size();
  LinearProgram lp(2 * n + 1, ObjectiveSense::Minimize);
  lp.set_free(0);
  const Rational q = Rational(1) - level.p();
  for (std::size_t i = 0; i < n; ++i) {
    lp.objective[1 + i] = level.p();
    lp.objective[1 + n + i] = q;
    Vector row(2 * n + 1);
    row[0] = Rational(1);
    row[1 + i] = Rational(1);
    row[1 + n + i] = Rational(-1);
    lp.add_row(std::move(row), RowSense::Equal, a[i]);
  }
  return lp;
}

}  // namespace cquant
