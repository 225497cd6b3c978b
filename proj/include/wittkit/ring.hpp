#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittkit/groebner.hpp"
#include "wittkit/polynomial.hpp"

namespace wittkit {

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

// Finitely presented commutative ring k[x_1..x_n] / (relations).  The
// reduced Groebner basis of the relation ideal is computed once at
// construction and reused for every normal form.  A presentation of the
// zero ring (the ideal contains 1) is rejected with ZeroRingError.
class RingPresentation {
public:
  static RingPtr make(ContextPtr ctx, std::vector<Polynomial> relations);
  static RingPtr polynomial_ring(ContextPtr ctx); // no relations

  const ContextPtr& context() const { return ctx_; }
  const Field& field() const { return ctx_->field(); }
  std::size_t nvars() const { return ctx_->nvars(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const std::vector<Polynomial>& groebner() const { return gb_; }
  bool is_free() const { return gb_.empty(); }

  // Canonical representative of p modulo the relation ideal.
  Polynomial normal_form(const Polynomial& p) const;

  // Same context and same relation ideal (compared via the canonical
  // reduced Groebner bases).
  bool same_ring(const RingPresentation& o) const;

private:
  RingPresentation(ContextPtr ctx, std::vector<Polynomial> rels,
                   std::vector<Polynomial> gb)
      : ctx_(std::move(ctx)), relations_(std::move(rels)), gb_(std::move(gb)) {}

  ContextPtr ctx_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> gb_;
};

// Residue class in a presented ring, stored as its canonical normal form.
class RingElement {
public:
  RingElement(RingPtr ring, const Polynomial& p);

  static RingElement zero(const RingPtr& ring);
  static RingElement one(const RingPtr& ring);
  static RingElement from_integer(const RingPtr& ring, long v);
  static RingElement parse(const RingPtr& ring, const std::string& text);

  const RingPtr& ring() const { return ring_; }
  const Polynomial& poly() const { return poly_; }

  bool is_zero() const { return poly_.is_zero(); }
  bool is_one() const { return poly_.is_one(); }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  RingElement pow(std::uint64_t e) const;
  RingElement scale(const Coefficient& c) const;

  bool operator==(const RingElement& o) const;
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  std::string to_string() const { return poly_.to_string(); }

private:
  void check_compatible(const RingElement& o) const;

  RingPtr ring_;
  Polynomial poly_;
};

// Membership of target in the ideal generated by gens inside the presented
// ring; on success returns cofactors c with sum c[i]*gens[i] == target in
// the ring.  The witness identity is verified before returning.
std::optional<std::vector<RingElement>> ideal_membership_with_cofactors(
    const RingElement& target, const std::vector<RingElement>& gens);

// Inverse of u when u is a unit (decided by membership of 1 in (u)).
std::optional<RingElement> unit_inverse(const RingElement& u);

// Ring homomorphism determined by images of the source generators.
// Construction verifies that every source relation maps to zero; anything
// else throws Error.  Ground fields must agree.
class RingHom {
public:
  RingHom(RingPtr source, RingPtr target, std::vector<RingElement> images);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<RingElement>& images() const { return images_; }

  RingElement apply(const RingElement& x) const;

private:
  RingPtr source_;
  RingPtr target_;
  std::vector<RingElement> images_;
};

} // namespace wittkit
