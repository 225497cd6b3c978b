#pragma once

#include <vector>

#include <gmpxx.h>

#include "wittkit/matrix.hpp"

namespace wittkit {

// The symplectic pairing used throughout: index i is paired with i^1
// (0 <-> 1, 2 <-> 3, ...), and the standard form has sign(i) at (i^1, i),
// i.e. +1 when i is odd, -1 when i is even.
inline std::size_t symplectic_partner(std::size_t i) { return i ^ 1; }
inline int symplectic_sign(std::size_t i) { return (i % 2 == 1) ? 1 : -1; }

// One generator of an elementary group at a fixed ambient rank:
//   linear      E i j lam:  I + lam*e_ij                       (i != j)
//   symplectic  SE i j lam: the elementary symplectic transvection
//     long  (j == partner(i)): I + lam*e_ij
//     short (otherwise):       I + lam*e_ij - s(i)s(j)*lam*e_(partner(j), partner(i))
// Symplectic generators satisfy g^T psi g = psi for the standard form.
struct ElementaryGenerator {
  enum class Kind { linear, symplectic };

  Kind kind;
  std::size_t i, j; // 0-based, i != j
  RingElement lambda;
  std::size_t rank;

  ElementaryGenerator(Kind k, std::size_t i_, std::size_t j_, RingElement lam,
                      std::size_t rank_);

  MatrixOverRing to_matrix() const;
  ElementaryGenerator inverse() const { // negate lambda
    return ElementaryGenerator(kind, i, j, -lambda, rank);
  }
  ElementaryGenerator lifted(std::size_t new_rank) const;
};

// Word in elementary generators; evaluate() multiplies left to right.
class ElementaryProduct {
public:
  ElementaryProduct(RingPtr ring, std::size_t rank);
  ElementaryProduct(RingPtr ring, std::size_t rank,
                    std::vector<ElementaryGenerator> word);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ElementaryGenerator>& word() const { return word_; }
  bool empty() const { return word_.empty(); }

  void append(const ElementaryGenerator& g);
  ElementaryProduct inverse() const;            // reversed word, negated lambdas
  ElementaryProduct lifted(std::size_t n) const; // same word at a larger rank
  ElementaryProduct concat(const ElementaryProduct& o) const;

  MatrixOverRing evaluate() const;
  // right-multiply a row vector / left-multiply a column vector without
  // materializing the full product matrix.
  std::vector<RingElement> apply_right(std::vector<RingElement> row) const;
  std::vector<RingElement> apply_left(std::vector<RingElement> col) const;

private:
  RingPtr ring_;
  std::size_t rank_;
  std::vector<ElementaryGenerator> word_;
};

// Row operation over the integers: row i += lambda * row j, at the moment
// it was applied during the reduction.
struct IntegerElementaryMove {
  std::size_t i, j;
  mpz_class lambda;
};

// Factors a square integer matrix of determinant 1 into a product of
// elementary transvections (SL_n(Z) = E_n(Z) via Euclidean row reduction).
// Throws Error when the matrix is not square or det != 1.  The returned
// word multiplies out to the input, leftmost factor first.
std::vector<IntegerElementaryMove> factor_integer_sl(
    const std::vector<std::vector<long long>>& a);

// Materializes an integer word over a presented ring.
ElementaryProduct to_elementary_product(const std::vector<IntegerElementaryMove>& moves,
                                        const RingPtr& ring, std::size_t rank);

// Determinant of an integer matrix (exact, fraction-free).
mpz_class integer_det(const std::vector<std::vector<long long>>& a);

} // namespace wittkit
