#pragma once

#include <vector>

#include "wittkit/ring.hpp"

namespace wittkit {

// Dense matrix over a presented ring.  Entries are stored in normal form.
// The 0x0 matrix is allowed; it is the neutral element for orthogonal sums.
class MatrixOverRing {
public:
  MatrixOverRing(RingPtr ring, std::size_t rows, std::size_t cols); // zeros
  static MatrixOverRing identity(const RingPtr& ring, std::size_t n);
  static MatrixOverRing from_rows(const RingPtr& ring,
                                  const std::vector<std::vector<RingElement>>& rows);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const RingElement& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const RingElement& v);
  void insert_block(std::size_t r0, std::size_t c0, const MatrixOverRing& b);

  std::vector<RingElement> row(std::size_t i) const;
  std::vector<RingElement> col(std::size_t j) const;

  MatrixOverRing operator+(const MatrixOverRing& o) const;
  MatrixOverRing operator-(const MatrixOverRing& o) const;
  MatrixOverRing operator*(const MatrixOverRing& o) const;
  MatrixOverRing operator-() const;
  MatrixOverRing scale(const RingElement& c) const;
  MatrixOverRing transpose() const;

  bool operator==(const MatrixOverRing& o) const;
  bool operator!=(const MatrixOverRing& o) const { return !(*this == o); }

  // Exact determinant.  Over a free polynomial ring this runs fraction-free
  // Bareiss elimination (exact divisions only); over a proper quotient,
  // where pivots may be zero divisors, it falls back to division-free
  // Laplace expansion memoized on column subsets.
  RingElement det() const;

private:
  void check_same_shape(const MatrixOverRing& o) const;
  RingElement det_bareiss() const;
  RingElement det_expansion() const;

  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<RingElement> ent_; // row-major
};

// Invertible-or-not alternating matrix: even size, zero diagonal,
// skew-symmetric.  Construction rejects anything else.
class AlternatingMatrix {
public:
  explicit AlternatingMatrix(MatrixOverRing m);

  const MatrixOverRing& matrix() const { return m_; }
  const RingPtr& ring() const { return m_.ring(); }
  std::size_t size() const { return m_.rows(); }

  bool operator==(const AlternatingMatrix& o) const { return m_ == o.m_; }
  bool operator!=(const AlternatingMatrix& o) const { return m_ != o.m_; }

private:
  MatrixOverRing m_;
};

// Pfaffian via division-free expansion along the first remaining index,
// memoized on index subsets; Pf of the 0x0 matrix is 1, and
// Pf([[0,a],[-a,0]]) = a fixes the sign convention.
RingElement pfaffian(const AlternatingMatrix& a);

// Block-diagonal (orthogonal) sum.
AlternatingMatrix orth_sum(const AlternatingMatrix& a, const AlternatingMatrix& b);
MatrixOverRing orth_sum(const MatrixOverRing& a, const MatrixOverRing& b);

// Checks phi^T * m * phi == n entrywise (all entries compared in normal
// form).  m must be square; phi maps accordingly.
bool verify_congruence(const MatrixOverRing& m, const MatrixOverRing& n,
                       const MatrixOverRing& phi);

} // namespace wittkit
