#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efcheck/polyhedron.hpp"

namespace efcheck {

enum class ProjectionKind { Polyhedron, FullSpace, Empty };

std::string projection_kind_name(ProjectionKind k);

/// Projection of an H-polyhedron onto a subset of its variables.
/// FullSpace means no constraint (and no nonnegativity flag) survives on
/// the kept variables, i.e. the projection is all of R^p.
struct ProjectionResult {
  ProjectionKind kind = ProjectionKind::Empty;
  VarSpace space;  // surviving variables, original order
  std::optional<HPolyhedron> description;  // present iff kind == Polyhedron
};

/// Fourier-Motzkin elimination of `drop_vars`, exact over the rationals.
/// Equalities are expanded to inequality pairs internally. After each
/// eliminated variable the intermediate system is pruned with the LP
/// redundancy test; without that the pairwise combination step blows up
/// even at small sizes. Output constraints are canonically sorted.
ProjectionResult fm_eliminate(const HPolyhedron& p, const std::vector<std::string>& drop_vars);

/// Drops every variable outside `keep`.
ProjectionResult project_onto_block(const HPolyhedron& p, Block keep);

/// Rebuilds an HPolyhedron from a projection result, turning FullSpace
/// into an all-free unconstrained description. Throws on Empty.
HPolyhedron as_polyhedron(const ProjectionResult& r);

}  // namespace efcheck
