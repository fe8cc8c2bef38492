#include "efcheck/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace efcheck {

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector subtract(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("subtract: dimension mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scale(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string vec_str(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<Vector> rws;
  for (const auto& r : rows) rws.emplace_back(r);
  return from_rows(rws);
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::diagonal(const Vector& diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !x[c].is_zero()) acc += at(r, c) * x[c];
    }
    y[r] = acc;
  }
  return y;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !at(r, c).is_zero()) return false;
  return true;
}

namespace {

// Reduced row echelon form of [a | b] (b may be empty for rank-only use).
// Returns pivot column per pivot row.
std::vector<std::size_t> rref(Matrix& a, Vector* b) {
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
      if (b) std::swap((*b)[sel], (*b)[pivot_row]);
    }
    const Rational inv = a.at(pivot_row, col).reciprocal();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(pivot_row, c) *= inv;
    if (b) (*b)[pivot_row] *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a.at(r, col).is_zero()) continue;
      const Rational f = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(pivot_row, c);
      if (b) (*b)[r] -= f * (*b)[pivot_row];
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  return pivot_cols;
}

}  // namespace

SolutionSet solve_linear_system(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear_system: dimension mismatch");
  Matrix m = a;
  Vector rhs = b;
  const std::vector<std::size_t> pivot_cols = rref(m, &rhs);

  for (std::size_t r = pivot_cols.size(); r < m.rows(); ++r) {
    if (!rhs[r].is_zero()) return {SolveKind::Inconsistent, {}, {}};
  }

  SolutionSet out;
  out.particular.assign(a.cols(), Rational());
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) out.particular[pivot_cols[r]] = rhs[r];

  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector dir(a.cols());
    dir[free_col] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) dir[pivot_cols[r]] = -m.at(r, free_col);
    out.null_basis.push_back(std::move(dir));
  }
  out.kind = out.null_basis.empty() ? SolveKind::Unique : SolveKind::Parametric;
  return out;
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return rref(m, nullptr).size();
}

}  // namespace efcheck
