#pragma once

#include <optional>

#include "efcheck/polyhedron.hpp"

namespace efcheck {

enum class Sense { Min, Max };

struct LPProblem {
  Vector objective;
  Sense sense = Sense::Min;
  HPolyhedron feasible_set;
};

enum class LPStatus { Optimal, Unbounded, Infeasible };

std::string lp_status_name(LPStatus s);

/// Exact outcome. Optimal carries value = objective . point; Unbounded
/// carries a feasible starting point plus an improving recession ray.
struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  std::optional<Rational> value;
  std::optional<Vector> point;
  std::optional<Vector> ray;
};

/// Two-phase primal simplex over the rationals with Bland's anti-cycling
/// rule. Equality rows are kept as single rows (phase 1 supplies their
/// artificials); free variables are split internally.
LPOutcome solve(const LPProblem& p);

LPOutcome maximize(const HPolyhedron& set, const Vector& objective);
LPOutcome minimize(const HPolyhedron& set, const Vector& objective);

/// Phase-1 feasibility only.
bool is_feasible(const HPolyhedron& set);

}  // namespace efcheck
