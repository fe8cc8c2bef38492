#include "efcheck/lp.hpp"

#include <stdexcept>
#include <utility>

namespace efcheck {

std::string lp_status_name(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "OPTIMAL";
    case LPStatus::Unbounded: return "UNBOUNDED";
    case LPStatus::Infeasible: return "INFEASIBLE";
  }
  return "?";
}

namespace {

// Dense two-phase tableau. Structural columns come first (free variables
// split into a positive and a negative part), then slack/surplus columns,
// then phase-1 artificials. The rhs is kept nonnegative throughout.
class SimplexTableau {
 public:
  explicit SimplexTableau(const HPolyhedron& set) : set_(set) {
    const std::size_t n = set.dim();
    col_of_pos_.resize(n);
    col_of_neg_.assign(n, SIZE_MAX);
    for (std::size_t v = 0; v < n; ++v) {
      col_of_pos_[v] = add_column();
      if (!set.nonneg[v]) col_of_neg_[v] = add_column();
    }
    struct_cols_ = ncols_;

    for (const auto& c : set.constraints) add_row(c);
    slack_end_ = ncols_;

    // Artificials for rows that did not get a basic slack.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] != SIZE_MAX) continue;
      std::size_t a = add_column();
      artificial_.resize(ncols_, false);
      artificial_[a] = true;
      rows_[r].resize(ncols_);
      rows_[r][a] = 1;
      basis_[r] = a;
    }
    for (auto& row : rows_) row.resize(ncols_);
    artificial_.resize(ncols_, false);
    iteration_cap_ = 10 * (rows_.size() + ncols_) * (rows_.size() + ncols_);
  }

  // Minimizes the phase-1 objective (sum of artificials). Returns false on
  // infeasibility.
  bool phase1() {
    Vector cost(ncols_);
    for (std::size_t j = 0; j < ncols_; ++j)
      if (artificial_[j]) cost[j] = 1;
    setup_cost_row(cost);
    run_simplex(/*detect_unbounded=*/false);
    Rational v;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (artificial_[basis_[r]]) v += rhs_[r];
    if (!v.is_zero()) return false;
    evict_artificials();
    return true;
  }

  // Minimizes `objective` over the structural columns. Assumes phase1()
  // succeeded. Returns true when optimal, false when unbounded.
  bool phase2(const Vector& objective_on_vars) {
    Vector cost(ncols_);
    for (std::size_t v = 0; v < set_.dim(); ++v) {
      cost[col_of_pos_[v]] = objective_on_vars[v];
      if (col_of_neg_[v] != SIZE_MAX) cost[col_of_neg_[v]] = -objective_on_vars[v];
    }
    setup_cost_row(cost);
    return run_simplex(/*detect_unbounded=*/true);
  }

  Vector current_point() const {
    Vector x(set_.dim());
    Vector col_val(ncols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) col_val[basis_[r]] = rhs_[r];
    for (std::size_t v = 0; v < set_.dim(); ++v) {
      x[v] = col_val[col_of_pos_[v]];
      if (col_of_neg_[v] != SIZE_MAX) x[v] -= col_val[col_of_neg_[v]];
    }
    return x;
  }

  Vector unbounded_ray() const {
    Vector d(ncols_);
    d[unbounded_col_] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) d[basis_[r]] = -rows_[r][unbounded_col_];
    Vector ray(set_.dim());
    for (std::size_t v = 0; v < set_.dim(); ++v) {
      ray[v] = d[col_of_pos_[v]];
      if (col_of_neg_[v] != SIZE_MAX) ray[v] -= d[col_of_neg_[v]];
    }
    return ray;
  }

 private:
  std::size_t add_column() {
    ++ncols_;
    return ncols_ - 1;
  }

  void add_row(const LinearConstraint& c) {
    Vector row(ncols_);
    for (std::size_t v = 0; v < set_.dim(); ++v) {
      if (c.coeffs[v].is_zero()) continue;
      row[col_of_pos_[v]] = c.coeffs[v];
      if (col_of_neg_[v] != SIZE_MAX) row[col_of_neg_[v]] = -c.coeffs[v];
    }
    Rational rhs = c.rhs;
    Relation rel = c.rel;
    if (rhs.sign() < 0) {
      for (auto& e : row) e = -e;
      rhs = -rhs;
      if (rel == Relation::LE)
        rel = Relation::GE;
      else if (rel == Relation::GE)
        rel = Relation::LE;
    }
    std::size_t basic = SIZE_MAX;
    if (rel == Relation::LE) {
      std::size_t s = add_column();
      row.resize(ncols_);
      row[s] = 1;
      basic = s;  // slack starts basic
    } else if (rel == Relation::GE) {
      std::size_t s = add_column();
      row.resize(ncols_);
      row[s] = -1;  // surplus; artificial assigned later
    }
    for (auto& r : rows_) r.resize(ncols_);
    artificial_.resize(ncols_, false);
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(rhs));
    basis_.push_back(basic);
  }

  // cost_row_[j] = c_j reduced against the current basis; basis columns read 0.
  void setup_cost_row(const Vector& cost) {
    cost_row_ = cost;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational cb = cost[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (!rows_[r][j].is_zero()) cost_row_[j] -= cb * rows_[r][j];
      }
    }
  }

  void pivot(std::size_t prow, std::size_t pcol) {
    auto& prow_vec = rows_[prow];
    const Rational inv = prow_vec[pcol].reciprocal();
    std::vector<std::size_t> nz;
    nz.reserve(ncols_ / 2);
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (prow_vec[j].is_zero()) continue;
      prow_vec[j] *= inv;
      nz.push_back(j);
    }
    rhs_[prow] *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == prow) continue;
      const Rational f = rows_[r][pcol];
      if (f.is_zero()) continue;
      for (std::size_t j : nz) rows_[r][j] -= f * prow_vec[j];
      rhs_[r] -= f * rhs_[prow];
    }
    const Rational fc = cost_row_[pcol];
    if (!fc.is_zero()) {
      for (std::size_t j : nz) cost_row_[j] -= fc * prow_vec[j];
    }
    basis_[prow] = pcol;
  }

  // Bland's rule: entering = least column index with negative reduced cost;
  // leaving = least basic column index among the minimum-ratio rows.
  bool run_simplex(bool detect_unbounded) {
    std::size_t iters = 0;
    for (;;) {
      std::size_t enter = SIZE_MAX;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (cost_row_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == SIZE_MAX) return true;

      std::size_t leave = SIZE_MAX;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][enter].sign() <= 0) continue;
        Rational ratio = rhs_[r] / rows_[r][enter];
        if (leave == SIZE_MAX || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == SIZE_MAX) {
        if (detect_unbounded) {
          unbounded_col_ = enter;
          return false;
        }
        throw std::logic_error("simplex: phase-1 objective unbounded below");
      }
      pivot(leave, enter);
      if (++iters > iteration_cap_) throw std::runtime_error("simplex: iteration cap exceeded");
    }
  }

  // Pivots basic artificials out; drops rows that turn out dependent.
  void evict_artificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (!artificial_[basis_[r]]) {
        ++r;
        continue;
      }
      std::size_t pcol = SIZE_MAX;
      for (std::size_t j = 0; j < slack_end_; ++j) {
        if (!rows_[r][j].is_zero()) {
          pcol = j;
          break;
        }
      }
      if (pcol == SIZE_MAX) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        continue;
      }
      pivot(r, pcol);
      ++r;
    }
    // Never let an artificial re-enter: blank its columns.
    for (auto& row : rows_) {
      for (std::size_t j = slack_end_; j < ncols_; ++j)
        if (artificial_[j]) row[j] = Rational();
    }
  }

  const HPolyhedron& set_;
  std::vector<Vector> rows_;
  Vector rhs_;
  Vector cost_row_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> col_of_pos_;
  std::vector<std::size_t> col_of_neg_;
  std::vector<bool> artificial_;
  std::size_t ncols_ = 0;
  std::size_t struct_cols_ = 0;
  std::size_t slack_end_ = 0;
  std::size_t unbounded_col_ = SIZE_MAX;
  std::size_t iteration_cap_ = 0;
};

}  // namespace

LPOutcome solve(const LPProblem& p) {
  if (p.objective.size() != p.feasible_set.dim())
    throw std::invalid_argument("solve: objective dimension mismatch");

  SimplexTableau tab(p.feasible_set);
  if (!tab.phase1()) return {LPStatus::Infeasible, {}, {}, {}};

  Vector obj = p.objective;
  if (p.sense == Sense::Max)
    for (auto& c : obj) c = -c;

  if (!tab.phase2(obj)) {
    LPOutcome out;
    out.status = LPStatus::Unbounded;
    out.point = tab.current_point();
    out.ray = tab.unbounded_ray();
    return out;
  }
  LPOutcome out;
  out.status = LPStatus::Optimal;
  out.point = tab.current_point();
  out.value = dot(p.objective, *out.point);
  return out;
}

LPOutcome maximize(const HPolyhedron& set, const Vector& objective) {
  return solve({objective, Sense::Max, set});
}

LPOutcome minimize(const HPolyhedron& set, const Vector& objective) {
  return solve({objective, Sense::Min, set});
}

bool is_feasible(const HPolyhedron& set) {
  SimplexTableau tab(set);
  return tab.phase1();
}

}  // namespace efcheck
