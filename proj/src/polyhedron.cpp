#include "efcheck/polyhedron.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "efcheck/lp.hpp"

namespace efcheck {

std::string block_name(Block b) {
  switch (b) {
    case Block::X: return "X";
    case Block::W: return "W";
    case Block::UAux: return "U_AUX";
  }
  return "?";
}

Block block_from_name(std::string_view s) {
  if (s == "X") return Block::X;
  if (s == "W") return Block::W;
  if (s == "U_AUX") return Block::UAux;
  throw std::invalid_argument("unknown block label: " + std::string(s));
}

VarSpace VarSpace::make(std::vector<std::string> names, std::vector<Block> blocks) {
  if (names.size() != blocks.size()) throw std::invalid_argument("VarSpace: size mismatch");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw std::invalid_argument("VarSpace: duplicate name " + n);
  }
  VarSpace s;
  s.names = std::move(names);
  s.blocks = std::move(blocks);
  return s;
}

VarSpace VarSpace::single_block(std::vector<std::string> names, Block b) {
  std::vector<Block> blocks(names.size(), b);
  return make(std::move(names), std::move(blocks));
}

std::optional<std::size_t> VarSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> VarSpace::indices_of(Block b) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i] == b) out.push_back(i);
  return out;
}

bool same_names(const VarSpace& a, const VarSpace& b) { return a.names == b.names; }

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::LE: return "<=";
    case Relation::EQ: return "=";
    case Relation::GE: return ">=";
  }
  return "?";
}

LinearConstraint le(Vector coeffs, Rational rhs) { return {std::move(coeffs), Relation::LE, std::move(rhs)}; }
LinearConstraint eq(Vector coeffs, Rational rhs) { return {std::move(coeffs), Relation::EQ, std::move(rhs)}; }
LinearConstraint ge(Vector coeffs, Rational rhs) { return {std::move(coeffs), Relation::GE, std::move(rhs)}; }

HPolyhedron HPolyhedron::over(VarSpace space) {
  HPolyhedron p;
  p.nonneg.assign(space.size(), false);
  p.space = std::move(space);
  return p;
}

HPolyhedron& HPolyhedron::add(LinearConstraint c) {
  if (c.coeffs.size() != dim()) throw std::invalid_argument("HPolyhedron::add: dimension mismatch");
  constraints.push_back(std::move(c));
  return *this;
}

HPolyhedron& HPolyhedron::set_nonneg(std::string_view name, bool value) {
  auto idx = space.index_of(name);
  if (!idx) throw std::invalid_argument("HPolyhedron: unknown variable " + std::string(name));
  nonneg[*idx] = value;
  return *this;
}

HPolyhedron& HPolyhedron::set_all_nonneg() {
  nonneg.assign(dim(), true);
  return *this;
}

bool HPolyhedron::any_nonneg() const {
  return std::find(nonneg.begin(), nonneg.end(), true) != nonneg.end();
}

HPolyhedron product(const HPolyhedron& p, const HPolyhedron& q) {
  std::vector<std::string> names = p.space.names;
  for (const auto& n : q.space.names) {
    if (p.space.index_of(n)) throw std::invalid_argument("product: variable name clash on " + n);
    names.push_back(n);
  }
  std::vector<Block> blocks = p.space.blocks;
  blocks.insert(blocks.end(), q.space.blocks.begin(), q.space.blocks.end());
  HPolyhedron out = HPolyhedron::over(VarSpace::make(std::move(names), std::move(blocks)));
  const std::size_t np = p.dim();
  for (const auto& c : p.constraints) {
    Vector coeffs = c.coeffs;
    coeffs.resize(out.dim());
    out.add({std::move(coeffs), c.rel, c.rhs});
  }
  for (const auto& c : q.constraints) {
    Vector coeffs(out.dim());
    for (std::size_t i = 0; i < q.dim(); ++i) coeffs[np + i] = c.coeffs[i];
    out.add({std::move(coeffs), c.rel, c.rhs});
  }
  for (std::size_t i = 0; i < np; ++i) out.nonneg[i] = p.nonneg[i];
  for (std::size_t i = 0; i < q.dim(); ++i) out.nonneg[np + i] = q.nonneg[i];
  return out;
}

bool contains_point(const HPolyhedron& p, const Vector& z) {
  if (z.size() != p.dim()) throw std::invalid_argument("contains_point: dimension mismatch");
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (p.nonneg[i] && z[i].sign() < 0) return false;
  for (const auto& c : p.constraints) {
    const Rational lhs = dot(c.coeffs, z);
    switch (c.rel) {
      case Relation::LE:
        if (lhs > c.rhs) return false;
        break;
      case Relation::EQ:
        if (lhs != c.rhs) return false;
        break;
      case Relation::GE:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

// A point of `p` strictly violating "coeffs rel rhs", built from an LP
// outcome that certified the violation.
Vector violation_point(const LPOutcome& out, const Vector& coeffs, const Rational& rhs) {
  if (out.status == LPStatus::Optimal) return *out.point;
  // Unbounded: walk far enough along the improving ray.
  const Vector& p0 = *out.point;
  const Vector& r = *out.ray;
  const Rational c0 = dot(coeffs, p0);
  const Rational cr = dot(coeffs, r);
  Rational t0 = (rhs - c0) / cr;
  if (t0.sign() < 0) t0 = Rational(0);
  const Rational t = t0 + 1;
  Vector z(p0.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = p0[i] + t * r[i];
  return z;
}

// Checks one constraint of Q against all of P. Returns violation witness,
// or nullopt when P satisfies it everywhere.
std::optional<Vector> check_constraint_over(const HPolyhedron& p, const LinearConstraint& c) {
  if (c.rel == Relation::LE || c.rel == Relation::EQ) {
    LPOutcome hi = maximize(p, c.coeffs);
    if (hi.status == LPStatus::Unbounded || (hi.status == LPStatus::Optimal && *hi.value > c.rhs))
      return violation_point(hi, c.coeffs, c.rhs);
  }
  if (c.rel == Relation::GE || c.rel == Relation::EQ) {
    LPOutcome lo = minimize(p, c.coeffs);
    if (lo.status == LPStatus::Unbounded || (lo.status == LPStatus::Optimal && *lo.value < c.rhs))
      return violation_point(lo, c.coeffs, c.rhs);
  }
  return std::nullopt;
}

}  // namespace

SubsetResult is_subset(const HPolyhedron& p, const HPolyhedron& q) {
  if (!same_names(p.space, q.space)) throw std::invalid_argument("is_subset: variable spaces differ");
  if (!is_feasible(p)) return {true, std::nullopt, "left side is infeasible; containment holds vacuously"};

  for (const auto& c : q.constraints) {
    if (auto w = check_constraint_over(p, c)) return {false, std::move(w), {}};
  }
  for (std::size_t i = 0; i < q.dim(); ++i) {
    if (!q.nonneg[i] || p.nonneg[i]) continue;
    Vector e(q.dim());
    e[i] = 1;
    if (auto w = check_constraint_over(p, ge(std::move(e), 0)))
      return {false, std::move(w), "violates nonnegativity of " + q.space.names[i]};
  }
  return {true, std::nullopt, {}};
}

bool equals(const HPolyhedron& p, const HPolyhedron& q) {
  return is_subset(p, q).holds && is_subset(q, p).holds;
}

namespace {

bool constraint_implied_by(const HPolyhedron& rest, const LinearConstraint& c) {
  return !check_constraint_over(rest, c).has_value();
}

}  // namespace

RedundancyRemoval remove_redundant(const HPolyhedron& p) {
  if (!is_feasible(p)) throw std::invalid_argument("remove_redundant: infeasible input");

  RedundancyRemoval out;
  out.reduced = p;
  std::vector<std::size_t> original_index(p.constraints.size());
  for (std::size_t i = 0; i < original_index.size(); ++i) original_index[i] = i;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.reduced.constraints.size(); ++i) {
      HPolyhedron rest = out.reduced;
      rest.constraints.erase(rest.constraints.begin() + static_cast<std::ptrdiff_t>(i));
      if (!constraint_implied_by(rest, out.reduced.constraints[i])) continue;
      out.removed_indices.push_back(original_index[i]);
      out.removed.push_back(out.reduced.constraints[i]);
      out.reduced = std::move(rest);
      original_index.erase(original_index.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  return out;
}

Boundedness is_bounded(const HPolyhedron& p) {
  if (!is_feasible(p)) throw std::invalid_argument("is_bounded: infeasible input");
  for (std::size_t i = 0; i < p.dim(); ++i) {
    Vector e(p.dim());
    e[i] = 1;
    LPOutcome hi = maximize(p, e);
    if (hi.status == LPStatus::Unbounded) return {false, hi.ray};
    if (p.nonneg[i]) continue;  // flag already bounds x_i below
    LPOutcome lo = minimize(p, e);
    if (lo.status == LPStatus::Unbounded) return {false, lo.ray};
  }
  return {true, std::nullopt};
}

}  // namespace efcheck
