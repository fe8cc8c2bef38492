#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efcheck/linalg.hpp"

namespace efcheck {

enum class Block { X, W, UAux };

std::string block_name(Block b);
Block block_from_name(std::string_view s);

/// Ordered, named variable space. Every variable carries a block label so
/// that (x, w) splits and auxiliary variables survive serialization.
struct VarSpace {
  std::vector<std::string> names;
  std::vector<Block> blocks;

  static VarSpace make(std::vector<std::string> names, std::vector<Block> blocks);
  static VarSpace single_block(std::vector<std::string> names, Block b);

  std::size_t size() const { return names.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::vector<std::size_t> indices_of(Block b) const;

  bool operator==(const VarSpace&) const = default;
};

/// True when both spaces list the same variable names in the same order
/// (block labels are ignored; point-set comparisons do not care about them).
bool same_names(const VarSpace& a, const VarSpace& b);

enum class Relation { LE, EQ, GE };

std::string relation_symbol(Relation r);

struct LinearConstraint {
  Vector coeffs;
  Relation rel = Relation::LE;
  Rational rhs;

  bool operator==(const LinearConstraint&) const = default;
};

LinearConstraint le(Vector coeffs, Rational rhs);
LinearConstraint eq(Vector coeffs, Rational rhs);
LinearConstraint ge(Vector coeffs, Rational rhs);

/// Inequality/equality description of a polyhedron. Nonnegativity is kept
/// as a per-variable flag rather than as rows, so row counts stay
/// comparable with hand counts; LP and elimination kernels fold the flags
/// in themselves.
struct HPolyhedron {
  VarSpace space;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> nonneg;

  static HPolyhedron over(VarSpace space);

  std::size_t dim() const { return space.size(); }
  HPolyhedron& add(LinearConstraint c);
  HPolyhedron& set_nonneg(std::string_view name, bool value = true);
  HPolyhedron& set_all_nonneg();
  bool any_nonneg() const;
};

/// Product P x Q over the concatenated spaces. Variable names must be
/// disjoint.
HPolyhedron product(const HPolyhedron& p, const HPolyhedron& q);

/// Vertex (+ ray) description. Rays are canonicalized so that no two are
/// positive multiples of each other.
struct VPolytope {
  VarSpace space;
  std::vector<Vector> vertices;
  std::vector<Vector> rays;
};

/// Exact membership test; throws on dimension mismatch.
bool contains_point(const HPolyhedron& p, const Vector& z);

struct SubsetResult {
  bool holds = false;
  std::optional<Vector> witness;  // point of P violating some constraint of Q
  std::string note;
};

/// P subseteq Q, decided by one LP per constraint of Q. An infeasible P is
/// vacuously contained (with a note saying so).
SubsetResult is_subset(const HPolyhedron& p, const HPolyhedron& q);

/// Mutual containment. Requires same variable names in the same order.
bool equals(const HPolyhedron& p, const HPolyhedron& q);

struct RedundancyRemoval {
  HPolyhedron reduced;
  std::vector<std::size_t> removed_indices;  // indices into the input's rows
  std::vector<LinearConstraint> removed;
};

/// Drops rows that are implied by the rest, one at a time to a fixpoint.
/// The reduced description defines exactly the same point set. Throws on
/// infeasible input.
RedundancyRemoval remove_redundant(const HPolyhedron& p);

struct Boundedness {
  bool bounded = false;
  std::optional<Vector> direction;  // an unbounded recession direction
};

/// Coordinate-wise max/min LPs. Throws on infeasible input.
Boundedness is_bounded(const HPolyhedron& p);

}  // namespace efcheck
