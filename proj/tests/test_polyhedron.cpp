#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "efcheck/lp.hpp"
#include "efcheck/polyhedron.hpp"

using namespace efcheck;

namespace {

// {x in R^3_>= : x1-x2+x3=6; x1+x2>=3; x1+x3<=7; x2+x3>=6; x1<=2}
HPolyhedron xbar() {
  auto p = HPolyhedron::over(VarSpace::single_block({"x1", "x2", "x3"}, Block::X));
  p.set_all_nonneg();
  p.add(eq({1, -1, 1}, 6));
  p.add(ge({1, 1, 0}, 3));
  p.add(le({1, 0, 1}, 7));
  p.add(ge({0, 1, 1}, 6));
  p.add(le({1, 0, 0}, 2));
  return p;
}

// {w in R^5_>= : w1+w2=5; w1-w2=1; w3+w4+w5=0}
HPolyhedron ubar() {
  auto p = HPolyhedron::over(VarSpace::single_block({"w1", "w2", "w3", "w4", "w5"}, Block::W));
  p.set_all_nonneg();
  p.add(eq({1, 1, 0, 0, 0}, 5));
  p.add(eq({1, -1, 0, 0, 0}, 1));
  p.add(eq({0, 0, 1, 1, 1}, 0));
  return p;
}

HPolyhedron interval(const Rational& lo, const Rational& hi) {
  auto p = HPolyhedron::over(VarSpace::single_block({"x"}, Block::X));
  p.add(ge({1}, lo));
  p.add(le({1}, hi));
  return p;
}

HPolyhedron unit_square() {
  auto p = HPolyhedron::over(VarSpace::single_block({"x1", "x2"}, Block::X));
  p.set_all_nonneg();
  p.add(le({1, 0}, 1));
  p.add(le({0, 1}, 1));
  return p;
}

// {w in R^3_>= : 18w1-w2<=23; 59w1+w3<=84}
HPolyhedron p2_example() {
  auto p = HPolyhedron::over(VarSpace::single_block({"w1", "w2", "w3"}, Block::W));
  p.set_all_nonneg();
  p.add(le({18, -1, 0}, 23));
  p.add(le({59, 0, 1}, 84));
  return p;
}

bool is_recession_direction(const HPolyhedron& p, const Vector& d) {
  if (is_zero_vector(d)) return false;
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (p.nonneg[i] && d[i].sign() < 0) return false;
  for (const auto& c : p.constraints) {
    const Rational v = dot(c.coeffs, d);
    if (c.rel == Relation::LE && v.sign() > 0) return false;
    if (c.rel == Relation::GE && v.sign() < 0) return false;
    if (c.rel == Relation::EQ && !v.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("contains_point on the single-point descriptions") {
  CHECK(contains_point(xbar(), {2, 1, 5}));
  CHECK_FALSE(contains_point(xbar(), {0, 0, 0}));
  CHECK(contains_point(ubar(), {3, 2, 0, 0, 0}));
  CHECK_FALSE(contains_point(ubar(), {3, 2, 0, 0, 1}));
  CHECK_THROWS_AS(contains_point(xbar(), {1, 2}), std::invalid_argument);
}

TEST_CASE("is_subset basics") {
  CHECK(is_subset(interval(0, 1), interval(0, 2)).holds);

  auto r = is_subset(interval(0, 3), interval(0, 2));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(contains_point(interval(0, 3), *r.witness));
  CHECK_FALSE(contains_point(interval(0, 2), *r.witness));
  CHECK((*r.witness)[0] == Rational(3));

  CHECK_THROWS_AS(is_subset(interval(0, 1), unit_square()), std::invalid_argument);
}

TEST_CASE("is_subset: infeasible left side is vacuous") {
  auto empty = interval(2, 1);
  auto r = is_subset(empty, interval(0, 1));
  CHECK(r.holds);
  CHECK(!r.note.empty());
}

TEST_CASE("is_subset: witness from unbounded side") {
  auto half_line = HPolyhedron::over(VarSpace::single_block({"x"}, Block::X));
  half_line.set_all_nonneg();
  auto r = is_subset(half_line, interval(0, 10));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK((*r.witness)[0] > Rational(10));
}

TEST_CASE("equals across different descriptions") {
  auto a = interval(0, 1);
  auto b = HPolyhedron::over(VarSpace::single_block({"x"}, Block::X));
  b.set_all_nonneg();
  b.add(le({2}, 2));
  CHECK(equals(a, b));
  CHECK_FALSE(equals(a, interval(0, 2)));
}

TEST_CASE("equals ignores block labels") {
  auto a = interval(0, 1);
  auto b = HPolyhedron::over(VarSpace::single_block({"x"}, Block::W));
  b.add(ge({1}, 0));
  b.add(le({1}, 1));
  CHECK(equals(a, b));
}

TEST_CASE("remove_redundant drops the slack bound") {
  auto p = HPolyhedron::over(VarSpace::single_block({"x"}, Block::X));
  p.set_all_nonneg();
  p.add(le({1}, 1));
  p.add(le({1}, 2));
  auto r = remove_redundant(p);
  REQUIRE(r.removed_indices.size() == 1);
  CHECK(r.removed_indices[0] == 1);
  CHECK(equals(p, r.reduced));
  CHECK(r.reduced.constraints.size() == 1);
}

TEST_CASE("remove_redundant keeps an irredundant description") {
  auto r = remove_redundant(xbar());
  // every row of this description is needed except none; set must be unchanged
  CHECK(equals(xbar(), r.reduced));
  for (std::size_t idx : r.removed_indices) CHECK(idx < xbar().constraints.size());
}

TEST_CASE("remove_redundant rejects infeasible input") {
  CHECK_THROWS_AS(remove_redundant(interval(2, 1)), std::invalid_argument);
}

TEST_CASE("duplicate rows: exactly one survives") {
  auto p = interval(0, 1);
  p.add(le({1}, 1));  // duplicate of the upper bound
  auto r = remove_redundant(p);
  CHECK(r.removed_indices.size() == 1);
  CHECK(equals(p, r.reduced));
}

TEST_CASE("is_bounded") {
  CHECK(is_bounded(unit_square()).bounded);
  CHECK(is_bounded(ubar()).bounded);

  auto r = is_bounded(p2_example());
  CHECK_FALSE(r.bounded);
  REQUIRE(r.direction.has_value());
  CHECK(is_recession_direction(p2_example(), *r.direction));
  CHECK((*r.direction)[1].sign() > 0);  // w2 escapes

  CHECK_THROWS_AS(is_bounded(interval(2, 1)), std::invalid_argument);
}

TEST_CASE("product concatenates spaces and rows") {
  auto prod = product(interval(0, 1), p2_example());
  CHECK(prod.dim() == 4);
  CHECK(prod.constraints.size() == 4);
  CHECK(contains_point(prod, {Rational(1, 2), 0, 0, 0}));
  CHECK_FALSE(contains_point(prod, {2, 0, 0, 0}));
  CHECK_THROWS_AS(product(interval(0, 1), interval(0, 1)), std::invalid_argument);
}

TEST_CASE("is_subset is reflexive and transitive on small corpus") {
  std::vector<HPolyhedron> corpus = {interval(0, 1), interval(0, 2), interval(-1, 3)};
  for (const auto& p : corpus) CHECK(is_subset(p, p).holds);
  // 0..1 within 0..2 within -1..3
  CHECK(is_subset(corpus[0], corpus[1]).holds);
  CHECK(is_subset(corpus[1], corpus[2]).holds);
  CHECK(is_subset(corpus[0], corpus[2]).holds);
}
