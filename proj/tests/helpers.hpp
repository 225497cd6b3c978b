#pragma once

// Shared fixtures for the unit tests: frequently used rings, terse element
// and matrix builders, and a seeded RNG so every run is reproducible.

#include <random>
#include <string>
#include <vector>

#include "wittkit/io.hpp"
#include "wittkit/ring.hpp"

namespace th {

using namespace wittkit;

inline RingPtr free_ring(const Field& f, const std::vector<std::string>& vars,
                         MonomialOrder order = MonomialOrder::grevlex) {
  return RingPresentation::polynomial_ring(make_context(f, vars, order));
}

inline RingPtr quotient_ring(const Field& f, const std::vector<std::string>& vars,
                             const std::vector<std::string>& rels,
                             MonomialOrder order = MonomialOrder::grevlex) {
  auto ctx = make_context(f, vars, order);
  std::vector<Polynomial> ps;
  for (const auto& r : rels) ps.push_back(Polynomial::parse(ctx, r));
  return RingPresentation::make(ctx, ps);
}

// Q[x,y,z] / (x^2 + y^2 + z^2 - 1)
inline RingPtr sphere_ring() {
  return quotient_ring(Field::rationals(), {"x", "y", "z"},
                       {"x^2 + y^2 + z^2 - 1"});
}

// Q[x1..x3, y1..y3] / (x1*y1 + x2*y2 + x3*y3 - 1)
inline RingPtr s5_ring() {
  return quotient_ring(Field::rationals(), {"x1", "x2", "x3", "y1", "y2", "y3"},
                       {"x1*y1 + x2*y2 + x3*y3 - 1"});
}

// Q[a,b,c,p,q,r] / (a*p + b*q + c*r - 1): a generic length-3 row with section
inline RingPtr section_ring() {
  return quotient_ring(Field::rationals(), {"a", "b", "c", "p", "q", "r"},
                       {"a*p + b*q + c*r - 1"});
}

inline RingElement el(const RingPtr& ring, const std::string& text) {
  return RingElement::parse(ring, text);
}

inline std::vector<RingElement> els(const RingPtr& ring,
                                    const std::vector<std::string>& texts) {
  std::vector<RingElement> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(el(ring, t));
  return out;
}

inline MatrixOverRing mat(const RingPtr& ring,
                          const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<RingElement>> parsed;
  parsed.reserve(rows.size());
  for (const auto& row : rows) parsed.push_back(els(ring, row));
  return MatrixOverRing::from_rows(ring, parsed);
}

inline std::mt19937 rng(std::uint32_t seed) { return std::mt19937(seed); }

// Random polynomial: up to `terms` terms of total degree <= deg, integer
// coefficients in [-3, 3].
inline Polynomial random_poly(std::mt19937& g, const ContextPtr& ctx,
                              std::uint32_t deg, std::size_t terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::uint32_t> degree(0, deg);
  std::uniform_int_distribution<std::size_t> var(0, ctx->nvars() - 1);
  Polynomial acc = Polynomial::zero(ctx);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m = Monomial::one(ctx->nvars());
    std::uint32_t d = degree(g);
    for (std::uint32_t k = 0; k < d; ++k)
      m = m * Monomial::variable(ctx->nvars(), var(g));
    int c = coeff(g);
    if (c == 0) continue;
    acc = acc + Polynomial::term(ctx, m, Coefficient::from_integer(ctx->field(), c));
  }
  return acc;
}

inline RingElement random_element(std::mt19937& g, const RingPtr& ring,
                                  std::uint32_t deg, std::size_t terms) {
  return RingElement(ring, random_poly(g, ring->context(), deg, terms));
}

inline MatrixOverRing random_matrix(std::mt19937& g, const RingPtr& ring,
                                    std::size_t n, std::uint32_t deg,
                                    std::size_t terms) {
  MatrixOverRing m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, random_element(g, ring, deg, terms));
  return m;
}

// Random alternating matrix of even size n.
inline AlternatingMatrix random_alternating(std::mt19937& g, const RingPtr& ring,
                                            std::size_t n, std::uint32_t deg,
                                            std::size_t terms) {
  MatrixOverRing m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      RingElement v = random_element(g, ring, deg, terms);
      m.set(i, j, v);
      m.set(j, i, -v);
    }
  }
  return AlternatingMatrix(std::move(m));
}

// Random word of linear elementary generators with small integer lambdas.
inline ElementaryProduct random_linear_word(std::mt19937& g, const RingPtr& ring,
                                            std::size_t rank, std::size_t length) {
  std::uniform_int_distribution<std::size_t> idx(0, rank - 1);
  std::uniform_int_distribution<long> lam(-2, 2);
  ElementaryProduct word(ring, rank);
  for (std::size_t k = 0; k < length; ++k) {
    std::size_t i = idx(g), j = idx(g);
    if (i == j) continue;
    long l = lam(g);
    if (l == 0) continue;
    word.append(ElementaryGenerator(ElementaryGenerator::Kind::linear, i, j,
                                    RingElement::from_integer(ring, l), rank));
  }
  return word;
}

} // namespace th
