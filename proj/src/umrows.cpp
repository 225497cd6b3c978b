#include "wittkit/umrows.hpp"

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {

void check_entries(const RingPtr& ring, const std::vector<RingElement>& entries) {
  if (entries.empty()) throw Error("unimodular row/column must be nonempty");
  for (const auto& e : entries)
    if (e.ring() != ring && !e.ring()->same_ring(*ring))
      throw IncompatibleError("entry from a different ring");
}

// Certificate soundness: sum c_i v_i must normal-form to 1.
void check_certificate(const RingPtr& ring, const std::vector<RingElement>& v,
                       const std::vector<RingElement>& c) {
  if (c.size() != v.size()) throw Error("certificate length mismatch");
  RingElement acc = RingElement::zero(ring);
  for (std::size_t i = 0; i < v.size(); ++i) acc = acc + c[i] * v[i];
  if (!acc.is_one()) throw Error("cofactor certificate does not sum to 1");
}

std::vector<RingElement> standard_entries(const RingPtr& ring, std::size_t i,
                                          std::size_t n) {
  if (n == 0 || i >= n) throw Error("standard row/column index out of range");
  std::vector<RingElement> e(n, RingElement::zero(ring));
  e[i] = RingElement::one(ring);
  return e;
}

MatrixOverRing row_times(const RingPtr& ring, const std::vector<RingElement>& v,
                         const MatrixOverRing& g) {
  MatrixOverRing r(ring, 1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) r.set(0, j, v[j]);
  return r * g;
}

} // namespace

UnimodularRow::UnimodularRow(RingPtr ring, std::vector<RingElement> entries,
                             std::vector<RingElement> cofactors)
    : ring_(std::move(ring)), entries_(std::move(entries)),
      cofactors_(std::move(cofactors)) {
  check_entries(ring_, entries_);
  check_certificate(ring_, entries_, cofactors_);
}

std::optional<UnimodularRow> UnimodularRow::check(
    const RingPtr& ring, const std::vector<RingElement>& entries) {
  check_entries(ring, entries);
  auto cof = ideal_membership_with_cofactors(RingElement::one(ring), entries);
  if (!cof) return std::nullopt;
  return UnimodularRow(ring, entries, *cof);
}

UnimodularRow UnimodularRow::standard(const RingPtr& ring, std::size_t i,
                                      std::size_t n) {
  auto e = standard_entries(ring, i, n);
  return UnimodularRow(ring, e, e);
}

UnimodularRow UnimodularRow::act_right(const MatrixOverRing& g,
                                       const MatrixOverRing& g_inv) const {
  if (g.rows() != size() || g.cols() != size() || g_inv.rows() != size() ||
      g_inv.cols() != size())
    throw Error("action matrix shape mismatch");
  if (g * g_inv != MatrixOverRing::identity(ring_, size()))
    throw Error("supplied inverse is not an inverse");
  MatrixOverRing vg = row_times(ring_, entries_, g);
  // transported certificate: (v g) · (g^{-1} c) = v c = 1
  MatrixOverRing ccol(ring_, size(), 1);
  for (std::size_t i = 0; i < size(); ++i) ccol.set(i, 0, cofactors_[i]);
  MatrixOverRing gc = g_inv * ccol;
  std::vector<RingElement> new_v, new_c;
  for (std::size_t i = 0; i < size(); ++i) {
    new_v.push_back(vg.at(0, i));
    new_c.push_back(gc.at(i, 0));
  }
  return UnimodularRow(ring_, std::move(new_v), std::move(new_c));
}

UnimodularRow UnimodularRow::act_right(const ElementaryProduct& word) const {
  if (word.rank() != size()) throw Error("word rank differs from row length");
  std::vector<RingElement> new_v = word.apply_right(entries_);
  std::vector<RingElement> new_c = word.inverse().apply_left(cofactors_);
  return UnimodularRow(ring_, std::move(new_v), std::move(new_c));
}

bool UnimodularRow::operator==(const UnimodularRow& o) const {
  return entries_ == o.entries_; // certificates are witnesses, not identity
}

UnimodularColumn::UnimodularColumn(RingPtr ring, std::vector<RingElement> entries,
                                   std::vector<RingElement> cofactors)
    : ring_(std::move(ring)), entries_(std::move(entries)),
      cofactors_(std::move(cofactors)) {
  check_entries(ring_, entries_);
  check_certificate(ring_, entries_, cofactors_);
}

std::optional<UnimodularColumn> UnimodularColumn::check(
    const RingPtr& ring, const std::vector<RingElement>& entries) {
  check_entries(ring, entries);
  auto cof = ideal_membership_with_cofactors(RingElement::one(ring), entries);
  if (!cof) return std::nullopt;
  return UnimodularColumn(ring, entries, *cof);
}

UnimodularColumn UnimodularColumn::standard(const RingPtr& ring, std::size_t i,
                                            std::size_t n) {
  auto e = standard_entries(ring, i, n);
  return UnimodularColumn(ring, e, e);
}

UnimodularColumn UnimodularColumn::act_left(const MatrixOverRing& g,
                                            const MatrixOverRing& g_inv) const {
  if (g.rows() != size() || g.cols() != size() || g_inv.rows() != size() ||
      g_inv.cols() != size())
    throw Error("action matrix shape mismatch");
  if (g * g_inv != MatrixOverRing::identity(ring_, size()))
    throw Error("supplied inverse is not an inverse");
  MatrixOverRing wcol(ring_, size(), 1);
  for (std::size_t i = 0; i < size(); ++i) wcol.set(i, 0, entries_[i]);
  MatrixOverRing gw = g * wcol;
  // transported certificate: (c g^{-1}) · (g w) = c w = 1
  MatrixOverRing crow(ring_, 1, size());
  for (std::size_t i = 0; i < size(); ++i) crow.set(0, i, cofactors_[i]);
  MatrixOverRing cg = crow * g_inv;
  std::vector<RingElement> new_w, new_c;
  for (std::size_t i = 0; i < size(); ++i) {
    new_w.push_back(gw.at(i, 0));
    new_c.push_back(cg.at(0, i));
  }
  return UnimodularColumn(ring_, std::move(new_w), std::move(new_c));
}

UnimodularColumn UnimodularColumn::act_left(const ElementaryProduct& word) const {
  if (word.rank() != size()) throw Error("word rank differs from column length");
  std::vector<RingElement> new_w = word.apply_left(entries_);
  std::vector<RingElement> new_c = word.inverse().apply_right(cofactors_);
  return UnimodularColumn(ring_, std::move(new_w), std::move(new_c));
}

bool UnimodularColumn::operator==(const UnimodularColumn& o) const {
  return entries_ == o.entries_;
}

RowWithSection::RowWithSection(RingPtr ring, std::vector<RingElement> v,
                               std::vector<RingElement> w)
    : ring_(std::move(ring)), v_(std::move(v)), w_(std::move(w)) {
  check_entries(ring_, v_);
  check_certificate(ring_, v_, w_); // v·w = 1
}

bool RowWithSection::operator==(const RowWithSection& o) const {
  return v_ == o.v_ && w_ == o.w_;
}

std::optional<UnimodularRow> check_unimodular(const RingPtr& ring,
                                              const std::vector<RingElement>& entries) {
  return UnimodularRow::check(ring, entries);
}

RowWithSection power_last(const RowWithSection& rs, std::uint64_t exponent) {
  const RingPtr& ring = rs.ring();
  std::vector<RingElement> v = rs.v();
  v.back() = v.back().pow(exponent);
  // Recompute the section from scratch; 1 = (sum v_i w_i)^e expands into
  // the new ideal, so membership cannot fail unless the library is broken.
  auto cof = ideal_membership_with_cofactors(RingElement::one(ring), v);
  if (!cof)
    throw Error("internal: section recomputation failed for a power of a "
                "unimodular row");
  return RowWithSection(ring, std::move(v), std::move(*cof));
}

bool verify_elementary_reduction(const UnimodularRow& v, const ElementaryProduct& word,
                                 const UnimodularRow& target) {
  if (v.size() != target.size()) throw Error("row length mismatch");
  if (word.rank() != v.size()) throw Error("word rank differs from row length");
  return word.apply_right(v.entries()) == target.entries();
}

std::optional<std::pair<ElementaryProduct, UnimodularRow>>
best_effort_reduction(const UnimodularRow& v) {
  const RingPtr& ring = v.ring();
  const std::size_t n = v.size();
  if (n < 2) return std::nullopt; // no room for elementary moves
  using Kind = ElementaryGenerator::Kind;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RingElement> others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(v.entries()[j]);
    RingElement gap = RingElement::one(ring) - v.entries()[i];
    auto cof = ideal_membership_with_cofactors(gap, others);
    if (!cof) continue;
    // v_i + sum_j cof_j v_j = 1, then clear every other entry against it.
    ElementaryProduct word(ring, n);
    std::size_t t = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!(*cof)[t].is_zero())
        word.append(ElementaryGenerator(Kind::linear, j, i, (*cof)[t], n));
      ++t;
    }
    std::vector<RingElement> cur = word.apply_right(v.entries());
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || cur[j].is_zero()) continue;
      word.append(ElementaryGenerator(Kind::linear, i, j, -cur[j], n));
    }
    if (i != n - 1) {
      // slide the 1 from position i to the last slot
      word.append(ElementaryGenerator(Kind::linear, i, n - 1,
                                      RingElement::one(ring), n));
      word.append(ElementaryGenerator(Kind::linear, n - 1, i,
                                      RingElement::from_integer(ring, -1), n));
    }
    UnimodularRow reduced = v.act_right(word);
    if (reduced == UnimodularRow::standard(ring, n - 1, n))
      return std::make_pair(std::move(word), std::move(reduced));
  }
  return std::nullopt;
}

} // namespace wittkit
