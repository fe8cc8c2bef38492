#pragma once

#include <cstdint>

#include "efcheck/polyhedron.hpp"

namespace efcheck {

inline constexpr std::uint64_t kDefaultBasisLimit = 2'000'000;

/// Brute-force basic-solution enumeration: every dim-subset of the rows
/// (equalities, inequalities taken tight, nonnegativity flags taken tight)
/// is solved and kept when feasible. Adequate for desk-scale inputs; the
/// `limit` guards the C(#rows, dim) blowup. Rays are enumerated from the
/// recession cone when the input is unbounded. Infeasible input yields an
/// empty description. Output is sorted, duplicates merged exactly.
VPolytope enumerate_vertices(const HPolyhedron& p, std::uint64_t limit = kDefaultBasisLimit);

/// LP feasibility test for z in conv(points): nonnegative weights summing
/// to one whose combination reproduces z exactly.
bool in_convex_hull(const Vector& z, const std::vector<Vector>& points);

}  // namespace efcheck
