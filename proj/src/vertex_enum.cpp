#include "efcheck/vertex_enum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "efcheck/linalg.hpp"
#include "efcheck/lp.hpp"

namespace efcheck {

namespace {

struct TightRow {
  Vector coeffs;
  Rational rhs;
};

std::vector<TightRow> candidate_rows(const HPolyhedron& p) {
  std::vector<TightRow> rows;
  for (const auto& c : p.constraints) rows.push_back({c.coeffs, c.rhs});
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (!p.nonneg[i]) continue;
    Vector e(p.dim());
    e[i] = 1;
    rows.push_back({std::move(e), Rational()});
  }
  return rows;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (r > cap) return cap + 1;
    r = r * (n - i) / (i + 1);
  }
  return r;
}

// Calls fn on every k-subset of [0, n), in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool is_recession_direction(const HPolyhedron& p, const Vector& d) {
  if (is_zero_vector(d)) return false;
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (p.nonneg[i] && d[i].sign() < 0) return false;
  for (const auto& c : p.constraints) {
    const int s = dot(c.coeffs, d).sign();
    if (c.rel == Relation::LE && s > 0) return false;
    if (c.rel == Relation::GE && s < 0) return false;
    if (c.rel == Relation::EQ && s != 0) return false;
  }
  return true;
}

// Positive scaling so the first nonzero entry has absolute value 1; rays
// that are positive multiples of each other collapse to the same vector.
Vector canonical_ray(const Vector& d) {
  for (const auto& c : d) {
    if (c.is_zero()) continue;
    return scale(c.abs().reciprocal(), d);
  }
  return d;
}

std::vector<Vector> enumerate_rays(const HPolyhedron& p, const std::vector<TightRow>& rows,
                                   std::uint64_t limit) {
  const std::size_t d = p.dim();
  if (d == 0) return {};
  const std::size_t k = d - 1;
  if (binomial_capped(rows.size(), k, limit) > limit)
    throw std::runtime_error("enumerate_vertices: ray basis count exceeds limit");

  std::set<Vector> found;
  for_each_subset(rows.size(), k, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector> sel;
    for (std::size_t i : idx) sel.push_back(rows[i].coeffs);
    Matrix a = sel.empty() ? Matrix(0, d) : Matrix::from_rows(sel);
    if (sel.empty() && d != 1) return;
    auto sol = solve_linear_system(a, Vector(sel.size()));
    if (sol.null_basis.size() != 1) return;
    const Vector& r = sol.null_basis[0];
    for (int sign = 0; sign < 2; ++sign) {
      Vector dir = sign ? scale(Rational(-1), r) : r;
      if (is_recession_direction(p, dir)) found.insert(canonical_ray(dir));
    }
  });
  return {found.begin(), found.end()};
}

}  // namespace

VPolytope enumerate_vertices(const HPolyhedron& p, std::uint64_t limit) {
  VPolytope out;
  out.space = p.space;
  if (!is_feasible(p)) return out;

  const std::vector<TightRow> rows = candidate_rows(p);
  const std::size_t d = p.dim();
  if (binomial_capped(rows.size(), d, limit) > limit)
    throw std::runtime_error("enumerate_vertices: candidate basis count exceeds limit");

  std::set<Vector> found;
  for_each_subset(rows.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector> sel;
    Vector rhs;
    for (std::size_t i : idx) {
      sel.push_back(rows[i].coeffs);
      rhs.push_back(rows[i].rhs);
    }
    auto sol = solve_linear_system(Matrix::from_rows(sel), rhs);
    if (sol.kind != SolveKind::Unique) return;
    if (contains_point(p, sol.particular)) found.insert(sol.particular);
  });
  out.vertices.assign(found.begin(), found.end());

  if (!is_bounded(p).bounded) out.rays = enumerate_rays(p, rows, limit);
  return out;
}

bool in_convex_hull(const Vector& z, const std::vector<Vector>& points) {
  if (points.empty()) return false;
  const std::size_t d = z.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < points.size(); ++i) names.push_back("l" + std::to_string(i));
  auto weights = HPolyhedron::over(VarSpace::single_block(std::move(names), Block::UAux));
  weights.set_all_nonneg();
  weights.add(eq(Vector(points.size(), Rational(1)), 1));
  for (std::size_t c = 0; c < d; ++c) {
    Vector coeffs(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].size() != d) throw std::invalid_argument("in_convex_hull: dimension mismatch");
      coeffs[i] = points[i][c];
    }
    weights.add(eq(std::move(coeffs), z[c]));
  }
  return is_feasible(weights);
}

}  // namespace efcheck
