#include <doctest.h>

#include <random>

#include "wittkit/umrows.hpp"

#include "helpers.hpp"

using namespace wittkit;
using th::el;
using th::els;

TEST_CASE("construction re-checks the cofactor certificate") {
  auto sphere = th::sphere_ring();
  CHECK_NOTHROW(UnimodularRow(sphere, els(sphere, {"x", "y", "z"}),
                              els(sphere, {"x", "y", "z"})));
  CHECK_THROWS_AS(UnimodularRow(sphere, els(sphere, {"x", "y", "z"}),
                                els(sphere, {"x", "y", "0"})),
                  Error);
  CHECK_THROWS_AS(UnimodularRow(sphere, els(sphere, {"x", "y"}),
                                els(sphere, {"x", "y", "z"})),
                  Error); // length mismatch
}

TEST_CASE("check_unimodular decides membership of 1") {
  auto sphere = th::sphere_ring();
  auto row = check_unimodular(sphere, els(sphere, {"x", "y", "z"}));
  REQUIRE(row.has_value());
  CHECK(row->cofactors() == els(sphere, {"x", "y", "z"}));

  auto free2 = th::free_ring(Field::rationals(), {"x", "y"});
  CHECK(!check_unimodular(free2, els(free2, {"x", "y"})).has_value());

  // pi_{1,4} over an arbitrary ring: cofactors e_1
  auto pi = check_unimodular(sphere, els(sphere, {"1", "0", "0", "0"}));
  REQUIRE(pi.has_value());
  CHECK(pi->cofactors() == els(sphere, {"1", "0", "0", "0"}));
}

TEST_CASE("standard rows and columns") {
  auto ring = th::sphere_ring();
  UnimodularRow pi4 = UnimodularRow::standard(ring, 3, 4);
  CHECK(pi4.entries() == els(ring, {"0", "0", "0", "1"}));
  CHECK(pi4.cofactors() == els(ring, {"0", "0", "0", "1"}));
  UnimodularColumn e4 = UnimodularColumn::standard(ring, 3, 4);
  CHECK(e4.entries() == els(ring, {"0", "0", "0", "1"}));
  CHECK_THROWS_AS(UnimodularRow::standard(ring, 4, 4), Error);

  // standard_row(1,3) with any section whose first entry is 1
  RowWithSection rs(ring, els(ring, {"1", "0", "0"}), els(ring, {"1", "y", "z"}));
  CHECK(rs.row() == UnimodularRow::standard(ring, 0, 3));
}

TEST_CASE("row with section requires the dot product to be 1") {
  auto sphere = th::sphere_ring();
  RowWithSection rs(sphere, els(sphere, {"x", "y", "z"}), els(sphere, {"x", "y", "z"}));
  CHECK(rs.size() == 3);
  CHECK(rs.row().entries() == els(sphere, {"x", "y", "z"}));
  CHECK(rs.section().entries() == els(sphere, {"x", "y", "z"}));
  CHECK_THROWS_AS(RowWithSection(sphere, els(sphere, {"x", "y", "z"}),
                                 els(sphere, {"x", "y", "y"})),
                  Error);
}

TEST_CASE("right action on rows transports the certificate") {
  auto sphere = th::sphere_ring();
  UnimodularRow v(sphere, els(sphere, {"x", "y", "z"}), els(sphere, {"x", "y", "z"}));

  // v * I = v, matrix overload with explicit inverse
  MatrixOverRing id = MatrixOverRing::identity(sphere, 3);
  CHECK(v.act_right(id, id) == v);

  // v * E_31(1) = (x + z, y, z)   (1-based indices; entry at row 3, col 1)
  ElementaryProduct e31(sphere, 3);
  e31.append(ElementaryGenerator(ElementaryGenerator::Kind::linear, 2, 0,
                                 RingElement::one(sphere), 3));
  UnimodularRow moved = v.act_right(e31);
  CHECK(moved.entries() == els(sphere, {"x + z", "y", "z"}));

  // pi_{1,4} * g = first row of g
  std::mt19937 g(20240917);
  ElementaryProduct word = th::random_linear_word(g, sphere, 4, 6);
  UnimodularRow pi1 = UnimodularRow::standard(sphere, 0, 4);
  CHECK(pi1.act_right(word).entries() == word.evaluate().row(0));

  // a wrong inverse is rejected
  MatrixOverRing m = e31.evaluate();
  CHECK_THROWS_AS(v.act_right(m, m), Error); // m is not its own inverse
}

TEST_CASE("action compatibility and preserved unimodularity") {
  auto sphere = th::sphere_ring();
  std::mt19937 g(20240918);
  UnimodularRow v(sphere, els(sphere, {"x", "y", "z"}), els(sphere, {"x", "y", "z"}));
  for (int t = 0; t < 6; ++t) {
    ElementaryProduct a = th::random_linear_word(g, sphere, 3, 4);
    ElementaryProduct b = th::random_linear_word(g, sphere, 3, 4);
    UnimodularRow lhs = v.act_right(a).act_right(b);
    UnimodularRow rhs = v.act_right(a.concat(b));
    CHECK(lhs == rhs);
    // the transported certificate is re-verified by the constructor, and an
    // independent membership check confirms unimodularity survives
    CHECK(check_unimodular(sphere, lhs.entries()).has_value());
  }
}

TEST_CASE("left action on columns mirrors the row action") {
  auto sphere = th::sphere_ring();
  UnimodularColumn w(sphere, els(sphere, {"x", "y", "z"}), els(sphere, {"x", "y", "z"}));
  MatrixOverRing id = MatrixOverRing::identity(sphere, 3);
  CHECK(w.act_left(id, id) == w);

  // g * e_n = last column of g
  std::mt19937 g(20240919);
  ElementaryProduct word = th::random_linear_word(g, sphere, 4, 6);
  UnimodularColumn e4 = UnimodularColumn::standard(sphere, 3, 4);
  CHECK(e4.act_left(word).entries() == word.evaluate().col(3));

  // transpose duality: (v * g)^t = g^t * v^t
  ElementaryProduct word3 = th::random_linear_word(g, sphere, 3, 5);
  MatrixOverRing m = word3.evaluate();
  MatrixOverRing m_inv = word3.inverse().evaluate();
  UnimodularRow v(sphere, els(sphere, {"x", "y", "z"}), els(sphere, {"x", "y", "z"}));
  UnimodularColumn vt(sphere, v.entries(), v.cofactors());
  CHECK(v.act_right(m, m_inv).entries() ==
        vt.act_left(m.transpose(), m_inv.transpose()).entries());
}

TEST_CASE("power_last recomputes a valid section") {
  auto sphere = th::sphere_ring();
  RowWithSection rs(sphere, els(sphere, {"x", "y", "z"}), els(sphere, {"x", "y", "z"}));

  RowWithSection same = power_last(rs, 1);
  CHECK(same.v() == rs.v());

  RowWithSection squared = power_last(rs, 2);
  CHECK(squared.v() == els(sphere, {"x", "y", "z^2"}));
  // the section identity holds by RowWithSection's constructor, but assert
  // the dot product explicitly anyway
  RingElement dot = RingElement::zero(sphere);
  for (std::size_t i = 0; i < 3; ++i)
    dot = dot + squared.v()[i] * squared.w()[i];
  CHECK(dot.is_one());

  RowWithSection pi3(sphere, els(sphere, {"0", "0", "1"}), els(sphere, {"0", "0", "1"}));
  CHECK(power_last(pi3, 5).v() == pi3.v());
}

TEST_CASE("verify_elementary_reduction compares the moved row to the target") {
  auto sphere = th::sphere_ring();
  UnimodularRow v(sphere, els(sphere, {"x + z", "y", "z"}),
                  check_unimodular(sphere, els(sphere, {"x + z", "y", "z"}))->cofactors());
  UnimodularRow target(sphere, els(sphere, {"x", "y", "z"}), els(sphere, {"x", "y", "z"}));

  ElementaryProduct empty(sphere, 3);
  CHECK(verify_elementary_reduction(v, empty, v));

  ElementaryProduct e31_neg(sphere, 3);
  e31_neg.append(ElementaryGenerator(ElementaryGenerator::Kind::linear, 2, 0,
                                     -RingElement::one(sphere), 3));
  CHECK(verify_elementary_reduction(v, e31_neg, target));
  CHECK(!verify_elementary_reduction(v, empty, target));
}

TEST_CASE("best-effort reduction: explicit success and harmless failure") {
  // over Q[x] the row (x, 1-x) reduces: 1 - v_1 = 1 - x lies in (1 - x)
  auto free1 = th::free_ring(Field::rationals(), {"x"});
  UnimodularRow v(free1, els(free1, {"x", "1 - x"}), els(free1, {"1", "1"}));
  auto result = best_effort_reduction(v);
  REQUIRE(result.has_value());
  CHECK(result->second == UnimodularRow::standard(free1, 1, 2));
  CHECK(verify_elementary_reduction(v, result->first, result->second));

  // on the sphere, (x,y,z) has no greedy patch: 1 - x is not in (y, z), etc.
  auto sphere = th::sphere_ring();
  UnimodularRow s(sphere, els(sphere, {"x", "y", "z"}), els(sphere, {"x", "y", "z"}));
  CHECK(!best_effort_reduction(s).has_value());
}
