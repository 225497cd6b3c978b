#pragma once

#include <optional>
#include <vector>

#include "wittkit/polynomial.hpp"

namespace wittkit {

// Multivariate division: p = sum quotients[i] * basis[i] + remainder, with
// no term of the remainder divisible by any leading monomial of the basis.
struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
Division divide(const Polynomial& p, const std::vector<Polynomial>& basis);

// Full normal form (the remainder of divide).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis);

// The reduced Groebner basis of the ideal generated by gens: monic,
// auto-reduced, sorted ascending by leading monomial.  This output is
// canonical — it depends only on the ideal, the variables and the order —
// so equal ideals always produce byte-identical bases.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens);

// Decides membership of target in the ideal generated by gens inside the
// ambient polynomial ring and, on success, returns cofactors c with
// target = sum c[i] * gens[i].  The identity is re-expanded and verified
// before returning; a failure of that check would be a library bug and
// throws Error.
std::optional<std::vector<Polynomial>> ideal_cofactors(
    const Polynomial& target, const std::vector<Polynomial>& gens);

} // namespace wittkit
