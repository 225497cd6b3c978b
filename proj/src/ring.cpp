#include "wittkit/ring.hpp"

#include "wittkit/errors.hpp"

namespace wittkit {

RingPtr RingPresentation::make(ContextPtr ctx, std::vector<Polynomial> relations) {
  for (const auto& r : relations)
    if (r.context() != ctx && *r.context() != *ctx)
      throw IncompatibleError("relation over a different context");
  std::vector<Polynomial> gb = groebner_basis(relations);
  if (gb.size() == 1 && gb[0].is_one())
    throw ZeroRingError("the relations generate the unit ideal (zero ring)");
  return RingPtr(new RingPresentation(std::move(ctx), std::move(relations), std::move(gb)));
}

RingPtr RingPresentation::polynomial_ring(ContextPtr ctx) {
  return make(std::move(ctx), {});
}

Polynomial RingPresentation::normal_form(const Polynomial& p) const {
  if (p.context() != ctx_ && *p.context() != *ctx_)
    throw IncompatibleError("normal form of a polynomial over a different context");
  return gb_.empty() ? p : reduce(p, gb_);
}

bool RingPresentation::same_ring(const RingPresentation& o) const {
  if (this == &o) return true;
  if (*ctx_ != *o.ctx_) return false;
  if (gb_.size() != o.gb_.size()) return false;
  for (std::size_t i = 0; i < gb_.size(); ++i)
    if (gb_[i] != o.gb_[i]) return false;
  return true;
}

RingElement::RingElement(RingPtr ring, const Polynomial& p)
    : ring_(std::move(ring)), poly_(ring_->normal_form(p)) {}

RingElement RingElement::zero(const RingPtr& ring) {
  return RingElement(ring, Polynomial::zero(ring->context()));
}

RingElement RingElement::one(const RingPtr& ring) {
  return RingElement(ring, Polynomial::from_integer(ring->context(), 1));
}

RingElement RingElement::from_integer(const RingPtr& ring, long v) {
  return RingElement(ring, Polynomial::from_integer(ring->context(), v));
}

RingElement RingElement::parse(const RingPtr& ring, const std::string& text) {
  return RingElement(ring, Polynomial::parse(ring->context(), text));
}

void RingElement::check_compatible(const RingElement& o) const {
  if (ring_ != o.ring_ && !ring_->same_ring(*o.ring_))
    throw IncompatibleError("ring elements from different rings");
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_compatible(o);
  return RingElement(ring_, poly_ + o.poly_);
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_compatible(o);
  return RingElement(ring_, poly_ - o.poly_);
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_compatible(o);
  return RingElement(ring_, poly_ * o.poly_);
}

RingElement RingElement::operator-() const { return RingElement(ring_, -poly_); }

RingElement RingElement::pow(std::uint64_t e) const {
  RingElement acc = one(ring_);
  RingElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

RingElement RingElement::scale(const Coefficient& c) const {
  return RingElement(ring_, poly_.scale(c));
}

bool RingElement::operator==(const RingElement& o) const {
  if (ring_ != o.ring_ && !ring_->same_ring(*o.ring_)) return false;
  return poly_ == o.poly_; // both sides are normal forms
}

std::optional<std::vector<RingElement>> ideal_membership_with_cofactors(
    const RingElement& target, const std::vector<RingElement>& gens) {
  const RingPtr& ring = target.ring();
  std::vector<Polynomial> ambient;
  ambient.reserve(gens.size() + ring->relations().size());
  for (const auto& g : gens) {
    if (g.ring() != ring && !g.ring()->same_ring(*ring))
      throw IncompatibleError("generator from a different ring");
    ambient.push_back(g.poly());
  }
  for (const auto& r : ring->relations()) ambient.push_back(r);

  auto cof = ideal_cofactors(target.poly(), ambient);
  if (!cof) return std::nullopt;

  std::vector<RingElement> out;
  out.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    out.emplace_back(ring, (*cof)[i]);

  // Verify the witness inside the ring before handing it out.
  RingElement check = RingElement::zero(ring);
  for (std::size_t i = 0; i < gens.size(); ++i) check = check + out[i] * gens[i];
  if (check != target)
    throw Error("internal: ring membership cofactors failed re-expansion");
  return out;
}

std::optional<RingElement> unit_inverse(const RingElement& u) {
  auto cof = ideal_membership_with_cofactors(RingElement::one(u.ring()), {u});
  if (!cof) return std::nullopt;
  return (*cof)[0];
}

RingHom::RingHom(RingPtr source, RingPtr target, std::vector<RingElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (source_->field() != target_->field())
    throw IncompatibleError("homomorphism between rings over different fields");
  if (images_.size() != source_->nvars())
    throw Error("homomorphism needs one image per source variable");
  for (const auto& im : images_)
    if (im.ring() != target_ && !im.ring()->same_ring(*target_))
      throw IncompatibleError("homomorphism image lies in a different ring");

  std::vector<Polynomial> image_polys;
  image_polys.reserve(images_.size());
  for (const auto& im : images_) image_polys.push_back(im.poly());
  for (const auto& rel : source_->relations()) {
    Polynomial mapped = rel.substitute(target_->context(), image_polys);
    if (!target_->normal_form(mapped).is_zero())
      throw Error("relation does not map to zero: " + rel.to_string());
  }
}

RingElement RingHom::apply(const RingElement& x) const {
  if (x.ring() != source_ && !x.ring()->same_ring(*source_))
    throw IncompatibleError("homomorphism applied to an element of a different ring");
  std::vector<Polynomial> image_polys;
  image_polys.reserve(images_.size());
  for (const auto& im : images_) image_polys.push_back(im.poly());
  return RingElement(target_, x.poly().substitute(target_->context(), image_polys));
}

} // namespace wittkit
