#include "mhodge/simplex.hpp"

#include <vector>

#include "mhodge/error.hpp"

namespace mhodge {

namespace {

// Tableau simplex, Bland's rule (smallest eligible index), guaranteed to
// terminate. `basis[r]` is the variable owning row r; the tableau keeps
// rows [A | b] with basic columns reduced to unit vectors.
struct Tableau {
  Eigen::Index m, n;
  RatMat tab;  // m x (n+1)
  std::vector<Eigen::Index> basis;

  Tableau(Eigen::Index rows, Eigen::Index cols) : m(rows), n(cols), tab(rows, cols + 1) {
    tab.setZero();
    basis.assign(static_cast<std::size_t>(rows), -1);
  }

  Rat rhs(Eigen::Index r) const { return tab(r, n); }

  void pivot(Eigen::Index row, Eigen::Index col) {
    Rat inv = tab(row, col);
    tab.row(row) /= inv;
    for (Eigen::Index r = 0; r < m; ++r) {
      if (r == row || tab(r, col) == 0) continue;
      Rat f = tab(r, col);
      tab.row(r) -= (f * tab.row(row)).eval();
    }
    basis[static_cast<std::size_t>(row)] = col;
  }

  // Maximizes cost.x from the current feasible basis; returns false when
  // unbounded.
  bool run(const RatVec& cost) {
    while (true) {
      RatVec reduced = cost;
      for (Eigen::Index r = 0; r < m; ++r) {
        Eigen::Index bv = basis[static_cast<std::size_t>(r)];
        const Rat cb = cost(bv);
        if (cb == 0) continue;
        for (Eigen::Index c = 0; c < n; ++c) reduced(c) -= cb * tab(r, c);
      }
      Eigen::Index enter = -1;
      for (Eigen::Index c = 0; c < n; ++c)
        if (reduced(c) > 0) {
          enter = c;
          break;
        }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Rat best;
      for (Eigen::Index r = 0; r < m; ++r) {
        if (tab(r, enter) <= 0) continue;
        Rat ratio = rhs(r) / tab(r, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
          best = ratio;
          leave = r;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_maximize(const RatMat& a, const RatVec& b, const RatVec& c) {
  const Eigen::Index m = a.rows(), n = a.cols();
  LpResult res;

  // Phase 1: one artificial variable per row, minimize their sum.
  Tableau t1(m, n + m);
  t1.tab.block(0, 0, m, n) = a;
  t1.tab.col(n + m) = b;
  for (Eigen::Index r = 0; r < m; ++r) {
    if (t1.tab(r, n + m) < 0) t1.tab.row(r) = -t1.tab.row(r);
    t1.tab(r, n + r) = 1;
    t1.basis[static_cast<std::size_t>(r)] = n + r;
  }
  RatVec cost1(n + m);
  cost1.setZero();
  for (Eigen::Index r = 0; r < m; ++r) cost1(n + r) = -1;
  MHODGE_CHECK(t1.run(cost1), "phase 1 unbounded");
  Rat art_sum = 0;
  for (Eigen::Index r = 0; r < m; ++r)
    if (t1.basis[static_cast<std::size_t>(r)] >= n) art_sum += t1.rhs(r);
  if (art_sum != 0) {
    res.status = LpStatus::infeasible;
    return res;
  }
  // Drive remaining artificials out; rows that cannot pivot are redundant.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index r = 0; r < m; ++r) {
    if (t1.basis[static_cast<std::size_t>(r)] < n) {
      keep.push_back(r);
      continue;
    }
    Eigen::Index enter = -1;
    for (Eigen::Index col = 0; col < n; ++col)
      if (t1.tab(r, col) != 0) {
        enter = col;
        break;
      }
    if (enter >= 0) {
      t1.pivot(r, enter);
      keep.push_back(r);
    }
  }

  // Phase 2 on original columns only.
  Tableau t2(static_cast<Eigen::Index>(keep.size()), n);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    t2.tab.block(static_cast<Eigen::Index>(i), 0, 1, n) = t1.tab.block(keep[i], 0, 1, n);
    t2.tab(static_cast<Eigen::Index>(i), n) = t1.tab(keep[i], n + m);
    t2.basis[i] = t1.basis[static_cast<std::size_t>(keep[i])];
  }
  if (!t2.run(c)) {
    res.status = LpStatus::unbounded;
    return res;
  }
  res.status = LpStatus::optimal;
  res.x = RatVec(n);
  res.x.setZero();
  for (Eigen::Index r = 0; r < t2.m; ++r) res.x(t2.basis[static_cast<std::size_t>(r)]) = t2.rhs(r);
  res.objective = (c.transpose() * res.x)(0, 0);
  return res;
}

int LpBuilder::add_free_variable() {
  is_free_.push_back(true);
  return num_vars_++;
}

int LpBuilder::add_nonneg_variable() {
  is_free_.push_back(false);
  return num_vars_++;
}

void LpBuilder::add_constraint(const std::vector<std::pair<int, Rat>>& row, int cmp, const Rat& rhs) {
  rows_.push_back(RowRec{row, cmp, rhs});
}

void LpBuilder::set_objective(const std::vector<std::pair<int, Rat>>& obj) { objective_ = obj; }

LpResult LpBuilder::solve() const {
  // Column layout: a free variable i becomes a difference of two columns.
  std::vector<int> col_of(static_cast<std::size_t>(num_vars_));
  int ncols = 0;
  for (int i = 0; i < num_vars_; ++i) {
    col_of[static_cast<std::size_t>(i)] = ncols;
    ncols += is_free_[static_cast<std::size_t>(i)] ? 2 : 1;
  }
  int nslack = 0;
  for (const auto& row : rows_)
    if (row.cmp != 0) ++nslack;

  RatMat a(static_cast<Eigen::Index>(rows_.size()), ncols + nslack);
  a.setZero();
  RatVec b(static_cast<Eigen::Index>(rows_.size()));
  int slack = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [var, coef] : rows_[r].terms) {
      int c = col_of[static_cast<std::size_t>(var)];
      a(static_cast<Eigen::Index>(r), c) += coef;
      if (is_free_[static_cast<std::size_t>(var)]) a(static_cast<Eigen::Index>(r), c + 1) -= coef;
    }
    b(static_cast<Eigen::Index>(r)) = rows_[r].rhs;
    if (rows_[r].cmp < 0)
      a(static_cast<Eigen::Index>(r), ncols + slack++) = 1;  // row + s = rhs
    else if (rows_[r].cmp > 0)
      a(static_cast<Eigen::Index>(r), ncols + slack++) = -1;  // row - s = rhs
  }
  RatVec c(ncols + nslack);
  c.setZero();
  for (const auto& [var, coef] : objective_) {
    int col = col_of[static_cast<std::size_t>(var)];
    c(col) += coef;
    if (is_free_[static_cast<std::size_t>(var)]) c(col + 1) -= coef;
  }
  LpResult inner = lp_maximize(a, b, c);
  if (inner.status != LpStatus::optimal) return inner;
  LpResult out;
  out.status = LpStatus::optimal;
  out.objective = inner.objective;
  out.x = RatVec(num_vars_);
  for (int i = 0; i < num_vars_; ++i) {
    int col = col_of[static_cast<std::size_t>(i)];
    out.x(i) = is_free_[static_cast<std::size_t>(i)] ? Rat(inner.x(col) - inner.x(col + 1)) : inner.x(col);
  }
  return out;
}

}  // namespace mhodge
