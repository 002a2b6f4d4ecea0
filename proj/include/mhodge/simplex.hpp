#pragma once

// Small dense simplex over exact rationals with Bland's rule. Problem
// sizes are tiny (at most a few dozen variables), so no effort is spent
// on sparsity or revised-simplex bookkeeping.

#include "mhodge/scalars.hpp"

namespace mhodge {

enum class LpStatus { infeasible, optimal, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat objective;
  RatVec x;
};

// maximize c.x subject to a x = b, x >= 0.
LpResult lp_maximize(const RatMat& a, const RatVec& b, const RatVec& c);

// Incremental builder for LPs in general form; free variables are split
// and inequality rows get slacks before handing off to lp_maximize.
class LpBuilder {
 public:
  // Returns the index of a new variable (free or non-negative).
  int add_free_variable();
  int add_nonneg_variable();

  // row . vars (comparison) rhs, with comparison -1,0,+1 for <=, ==, >=.
  void add_constraint(const std::vector<std::pair<int, Rat>>& row, int cmp, const Rat& rhs);

  void set_objective(const std::vector<std::pair<int, Rat>>& obj);

  LpResult solve() const;

 private:
  struct RowRec {
    std::vector<std::pair<int, Rat>> terms;
    int cmp = 0;
    Rat rhs;
  };
  int num_vars_ = 0;
  std::vector<bool> is_free_;
  std::vector<RowRec> rows_;
  std::vector<std::pair<int, Rat>> objective_;
};

}  // namespace mhodge
