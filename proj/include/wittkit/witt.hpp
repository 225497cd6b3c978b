#pragma once

#include <cstdint>

#include "wittkit/elementary.hpp"
#include "wittkit/matrix.hpp"
#include "wittkit/umrows.hpp"

namespace wittkit {

// psi_{2n}: the standard alternating form, built literally by the recursion
// psi_{2n+2} = psi_{2n} ⊥ psi_2 with psi_2 = [[0,1],[-1,0]]; Pf = 1.
struct PsiMatrix {
  std::size_t half_rank; // n
  AlternatingMatrix matrix;
};

PsiMatrix psi_matrix(const RingPtr& ring, std::size_t half_rank);

// Alternating matrix whose Pfaffian is certified to be a unit (the inverse
// is stored).  Pf = 1 representatives generate the smaller subgroup.
class WittRepresentative {
public:
  explicit WittRepresentative(AlternatingMatrix m);

  const AlternatingMatrix& matrix() const { return mat_; }
  const RingPtr& ring() const { return mat_.ring(); }
  std::size_t rank() const { return mat_.size(); }
  const RingElement& pfaffian_value() const { return pf_; }
  const RingElement& pfaffian_inverse() const { return pf_inv_; }
  bool pfaffian_is_one() const { return pf_.is_one(); }

private:
  AlternatingMatrix mat_;
  RingElement pf_;
  RingElement pf_inv_;
};

// Stabilization witness for M ~ N: a level l >= 0 and a word E of rank
// rank(M) + rank(N) + 2l.
struct WittWitness {
  std::size_t level;
  ElementaryProduct word;
};

// A matrix claimed (and checked) to have determinant 1.
class SLWitness {
public:
  explicit SLWitness(MatrixOverRing sigma);
  const MatrixOverRing& sigma() const { return sigma_; }

private:
  MatrixOverRing sigma_;
};

// phi^T psi_{2n} phi; no invertibility requirement (Pf = det(phi) holds for
// arbitrary square phi of even rank).
AlternatingMatrix hyperbolic_matrix(const MatrixOverRing& phi);
// Same, packaged with the Pfaffian unit certificate; requires det(phi) to
// be a unit.
WittRepresentative hyperbolic(const MatrixOverRing& phi);

// Checks M ⊥ psi_{2n+2l} == E^T (N ⊥ psi_{2m+2l}) E where 2m = rank(M),
// 2n = rank(N), and E is the witness word of rank 2m+2n+2l.  On success the
// Pfaffians of M and N are asserted equal (an inequality would be a bug,
// since det-1 congruence and psi-padding both preserve the Pfaffian).
bool verify_witt_equiv(const WittRepresentative& m, const WittRepresentative& n,
                       const WittWitness& wit);

// Checks M ⊥ psi == E^T sigma_s^T (N ⊥ psi) sigma_s E with sigma_s the
// SL witness padded by the identity up to the stabilized rank: equality in
// the quotient where determinant-1 twists are free.
bool verify_wsl_equiv(const WittRepresentative& m, const WittRepresentative& n,
                      const WittWitness& wit, const SLWitness& sl);

// SE generator against the standard form at the given even rank.
ElementaryGenerator elementary_symplectic(std::size_t i, std::size_t j,
                                          const RingElement& lambda, std::size_t rank);

enum class GeneratorSet { linear, symplectic, both };

// Orbit partition of the nonzero vectors of F_p^n under right action of all
// E (and/or SE) generators with every lambda in F_p.  Deterministic: vectors
// are scanned in lexicographic order, so each representative is the
// lexicographically least element of its orbit.
struct OrbitReport {
  std::size_t total; // |Um_n(F_p)| = p^n - 1
  std::vector<std::vector<std::uint32_t>> representatives;
  std::vector<std::size_t> sizes;
};

OrbitReport orbit_bruteforce(std::uint32_t p, std::size_t n, GeneratorSet gens);

// The full conclusion of the transitivity statement for one instance:
// psi^T chi psi == chi and the first row of psi equals v.
bool verify_transitivity_certificate(const UnimodularRow& v,
                                     const WittRepresentative& chi,
                                     const MatrixOverRing& psi);

} // namespace wittkit
