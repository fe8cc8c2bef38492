#include "efcheck/projection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "efcheck/lp.hpp"

namespace efcheck {

std::string projection_kind_name(ProjectionKind k) {
  switch (k) {
    case ProjectionKind::Polyhedron: return "polyhedron";
    case ProjectionKind::FullSpace: return "full_space";
    case ProjectionKind::Empty: return "empty";
  }
  return "?";
}

namespace {

struct Row {
  Vector coeffs;
  Rational rhs;
};

// Scale so the first nonzero coefficient has absolute value 1.
void normalize_row(Row& r) {
  for (const auto& c : r.coeffs) {
    if (c.is_zero()) continue;
    const Rational s = c.abs().reciprocal();
    for (auto& x : r.coeffs) x *= s;
    r.rhs *= s;
    return;
  }
}

// Returns false when an inconsistent 0 <= negative row shows up.
bool syntactic_cleanup(std::vector<Row>& rows) {
  std::map<Vector, Rational> best;
  for (auto& r : rows) {
    if (is_zero_vector(r.coeffs)) {
      if (r.rhs.sign() < 0) return false;
      continue;
    }
    normalize_row(r);
    auto it = best.find(r.coeffs);
    if (it == best.end())
      best.emplace(r.coeffs, r.rhs);
    else if (r.rhs < it->second)
      it->second = r.rhs;
  }
  rows.clear();
  for (auto& [coeffs, rhs] : best) rows.push_back({coeffs, rhs});
  return true;
}

HPolyhedron to_poly(const VarSpace& space, const std::vector<bool>& nonneg,
                    const std::vector<Row>& rows) {
  HPolyhedron p = HPolyhedron::over(space);
  p.nonneg = nonneg;
  for (const auto& r : rows) p.add(le(r.coeffs, r.rhs));
  return p;
}

void drop_column(VarSpace& space, std::vector<bool>& nonneg, std::vector<Row>& rows,
                 std::size_t col) {
  space.names.erase(space.names.begin() + static_cast<std::ptrdiff_t>(col));
  space.blocks.erase(space.blocks.begin() + static_cast<std::ptrdiff_t>(col));
  nonneg.erase(nonneg.begin() + static_cast<std::ptrdiff_t>(col));
  for (auto& r : rows) r.coeffs.erase(r.coeffs.begin() + static_cast<std::ptrdiff_t>(col));
}

}  // namespace

ProjectionResult fm_eliminate(const HPolyhedron& p, const std::vector<std::string>& drop_vars) {
  std::set<std::size_t> drop;
  for (const auto& name : drop_vars) {
    auto idx = p.space.index_of(name);
    if (!idx) throw std::invalid_argument("fm_eliminate: unknown variable " + name);
    drop.insert(*idx);
  }

  VarSpace space = p.space;
  std::vector<bool> nonneg = p.nonneg;

  auto surviving_space = [&] {
    VarSpace out;
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (drop.count(i)) continue;
      out.names.push_back(p.space.names[i]);
      out.blocks.push_back(p.space.blocks[i]);
    }
    return out;
  };

  if (!is_feasible(p)) return {ProjectionKind::Empty, surviving_space(), std::nullopt};

  // All-LE working form; equalities become pairs here and stay pairs.
  std::vector<Row> rows;
  for (const auto& c : p.constraints) {
    if (c.rel == Relation::LE || c.rel == Relation::EQ) rows.push_back({c.coeffs, c.rhs});
    if (c.rel == Relation::GE || c.rel == Relation::EQ) {
      Vector neg(c.coeffs.size());
      for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -c.coeffs[i];
      rows.push_back({std::move(neg), -c.rhs});
    }
  }

  std::vector<std::size_t> pending(drop.begin(), drop.end());
  while (!pending.empty()) {
    // Pick the variable with the smallest positive x negative row product.
    std::size_t chosen = 0;
    std::size_t best_score = SIZE_MAX;
    for (std::size_t k = 0; k < pending.size(); ++k) {
      const std::size_t v = pending[k];
      std::size_t pos = 0, neg = nonneg[v] ? 1 : 0;
      for (const auto& r : rows) {
        if (r.coeffs[v].sign() > 0) ++pos;
        if (r.coeffs[v].sign() < 0) ++neg;
      }
      const std::size_t score = pos * neg;
      if (score < best_score) {
        best_score = score;
        chosen = k;
      }
    }
    const std::size_t v = pending[chosen];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(chosen));

    if (nonneg[v]) {
      Row r;
      r.coeffs.assign(space.size(), Rational());
      r.coeffs[v] = -1;
      rows.push_back(std::move(r));
      nonneg[v] = false;
    }

    std::vector<Row> pos, neg, zero;
    for (auto& r : rows) {
      const int s = r.coeffs[v].sign();
      if (s > 0)
        pos.push_back(std::move(r));
      else if (s < 0)
        neg.push_back(std::move(r));
      else
        zero.push_back(std::move(r));
    }
    rows = std::move(zero);
    for (const auto& rp : pos) {
      const Rational sp = rp.coeffs[v].reciprocal();
      for (const auto& rn : neg) {
        const Rational sn = (-rn.coeffs[v]).reciprocal();
        Row combined;
        combined.coeffs.resize(space.size());
        for (std::size_t i = 0; i < space.size(); ++i)
          combined.coeffs[i] = sp * rp.coeffs[i] + sn * rn.coeffs[i];
        combined.rhs = sp * rp.rhs + sn * rn.rhs;
        combined.coeffs[v] = Rational();  // cancels exactly; keep it exact
        rows.push_back(std::move(combined));
      }
    }

    if (!syntactic_cleanup(rows)) return {ProjectionKind::Empty, surviving_space(), std::nullopt};

    // Retire the column, then LP-prune what the combination step produced.
    drop_column(space, nonneg, rows, v);
    for (auto& d : pending)
      if (d > v) --d;

    HPolyhedron current = to_poly(space, nonneg, rows);
    RedundancyRemoval pruned = remove_redundant(current);
    rows.clear();
    for (const auto& c : pruned.reduced.constraints) rows.push_back({c.coeffs, c.rhs});
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
    return a.rhs < b.rhs;
  });

  ProjectionResult out;
  out.space = space;
  const bool any_flag = std::find(nonneg.begin(), nonneg.end(), true) != nonneg.end();
  if (rows.empty() && !any_flag) {
    out.kind = ProjectionKind::FullSpace;
  } else {
    out.kind = ProjectionKind::Polyhedron;
    out.description = to_poly(space, nonneg, rows);
  }
  return out;
}

ProjectionResult project_onto_block(const HPolyhedron& p, Block keep) {
  std::vector<std::string> drop;
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (p.space.blocks[i] != keep) drop.push_back(p.space.names[i]);
  return fm_eliminate(p, drop);
}

HPolyhedron as_polyhedron(const ProjectionResult& r) {
  switch (r.kind) {
    case ProjectionKind::Polyhedron: return *r.description;
    case ProjectionKind::FullSpace: return HPolyhedron::over(r.space);
    case ProjectionKind::Empty: break;
  }
  throw std::invalid_argument("as_polyhedron: projection is empty");
}

}  // namespace efcheck
