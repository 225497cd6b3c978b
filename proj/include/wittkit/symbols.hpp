#pragma once

#include "wittkit/matrix.hpp"
#include "wittkit/umrows.hpp"

namespace wittkit {

// S_r(v, w) built by the recursion
//   S_0(v,w) = (v_0),
//   S_r(v,w) = [[ v_0*I, S_{r-1}(v',w') ], [ -S_{r-1}(w',v')^T, w_0*I ]]
// for v = (v_0, v'), w = (w_0, w').  No section is required: the identity
// S_r(v,w) * S_r(w,v)^T = (v·w) * I holds for arbitrary v, w and is
// re-checked at construction for r <= 3.
struct SuslinMatrix {
  std::size_t order; // r; the matrix is 2^r x 2^r
  std::vector<RingElement> v, w;
  MatrixOverRing matrix;
};

SuslinMatrix suslin_matrix(const RingPtr& ring, const std::vector<RingElement>& v,
                           const std::vector<RingElement>& w);

// The 4x4 alternating Vaserstein representative of a length-3 row with
// section: upper triangle (a_1, a_2, a_3, b_3, -b_2, b_1) read row by row,
// so that Pf = a_1 b_1 + a_2 b_2 + a_3 b_3 = 1; V(pi_1, e_1) is the
// standard form.  Pf = 1 is re-checked at construction.
struct VasersteinMatrix {
  RowWithSection source;
  AlternatingMatrix matrix;
};

VasersteinMatrix vaserstein_symbol(const RowWithSection& rs);

// For v = (a, b, c) with section (p, q, r): a 3x3 matrix with first row
// (a, b, c^2) and determinant 1.  Both postconditions are verified before
// returning; a verification failure throws (it would mean the construction
// is wrong, not the input).
MatrixOverRing factorial_completion_3(const RowWithSection& rs);

// Entrywise application of a ring homomorphism.
MatrixOverRing pushforward(const RingHom& h, const MatrixOverRing& m);

} // namespace wittkit
