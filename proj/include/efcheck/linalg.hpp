#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "efcheck/rational.hpp"

namespace efcheck {

using Vector = std::vector<Rational>;

Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Rational& s, const Vector& v);
bool is_zero_vector(const Vector& v);
std::string vec_str(const Vector& v);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix diagonal(const Vector& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector apply(const Vector& x) const;  // A * x
  Matrix transposed() const;
  bool is_diagonal() const;

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

enum class SolveKind { Unique, Parametric, Inconsistent };

/// Solution set of A x = b. `particular` sets all free variables to zero;
/// `null_basis` holds one vector per free variable, so the full set is
/// particular + span(null_basis).
struct SolutionSet {
  SolveKind kind = SolveKind::Inconsistent;
  Vector particular;
  std::vector<Vector> null_basis;
};

/// Exact Gauss-Jordan elimination, first-nonzero pivot per column.
SolutionSet solve_linear_system(const Matrix& a, const Vector& b);

/// Exact row rank over the rationals.
std::size_t rank(const Matrix& a);

}  // namespace efcheck
