#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wittkit/elementary.hpp"
#include "wittkit/matrix.hpp"

namespace wittkit {

// Row (v_1..v_n) together with a cofactor certificate (c_1..c_n) satisfying
// sum c_i v_i = 1; the identity is re-checked on every construction path.
class UnimodularRow {
public:
  UnimodularRow(RingPtr ring, std::vector<RingElement> entries,
                std::vector<RingElement> cofactors);

  // Decides unimodularity by membership of 1 in (entries) and returns the
  // row with freshly computed cofactors, or nullopt.
  static std::optional<UnimodularRow> check(const RingPtr& ring,
                                            const std::vector<RingElement>& entries);
  // pi_{i,n}: the i-th standard row (0-based index).
  static UnimodularRow standard(const RingPtr& ring, std::size_t i, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<RingElement>& entries() const { return entries_; }
  const std::vector<RingElement>& cofactors() const { return cofactors_; }

  // v*g with the certificate transported along a supplied inverse
  // (validated: g*g_inv = I) or an elementary word.
  UnimodularRow act_right(const MatrixOverRing& g, const MatrixOverRing& g_inv) const;
  UnimodularRow act_right(const ElementaryProduct& word) const;

  bool operator==(const UnimodularRow& o) const;
  bool operator!=(const UnimodularRow& o) const { return !(*this == o); }

private:
  RingPtr ring_;
  std::vector<RingElement> entries_;
  std::vector<RingElement> cofactors_;
};

// Column counterpart, acted on from the left.
class UnimodularColumn {
public:
  UnimodularColumn(RingPtr ring, std::vector<RingElement> entries,
                   std::vector<RingElement> cofactors);

  static std::optional<UnimodularColumn> check(const RingPtr& ring,
                                               const std::vector<RingElement>& entries);
  // e_{i,n}: the i-th standard column (0-based index).
  static UnimodularColumn standard(const RingPtr& ring, std::size_t i, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<RingElement>& entries() const { return entries_; }
  const std::vector<RingElement>& cofactors() const { return cofactors_; }

  UnimodularColumn act_left(const MatrixOverRing& g, const MatrixOverRing& g_inv) const;
  UnimodularColumn act_left(const ElementaryProduct& word) const;

  bool operator==(const UnimodularColumn& o) const;
  bool operator!=(const UnimodularColumn& o) const { return !(*this == o); }

private:
  RingPtr ring_;
  std::vector<RingElement> entries_;
  std::vector<RingElement> cofactors_;
};

// Pair (v, w) with v·w = 1: w is a section of v.  The row's cofactors are w
// itself and vice versa, so both certificates are exact by construction.
class RowWithSection {
public:
  RowWithSection(RingPtr ring, std::vector<RingElement> v, std::vector<RingElement> w);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return v_.size(); }
  const std::vector<RingElement>& v() const { return v_; }
  const std::vector<RingElement>& w() const { return w_; }

  UnimodularRow row() const { return UnimodularRow(ring_, v_, w_); }
  UnimodularColumn section() const { return UnimodularColumn(ring_, w_, v_); }

  bool operator==(const RowWithSection& o) const;

private:
  RingPtr ring_;
  std::vector<RingElement> v_, w_;
};

// Convenience wrapper over UnimodularRow::check.
std::optional<UnimodularRow> check_unimodular(const RingPtr& ring,
                                              const std::vector<RingElement>& entries);

// (v_1, ..., v_{n-1}, v_n^e) with a freshly recomputed section.  The new row
// generates the unit ideal whenever the old one does, so a failure of the
// membership recomputation signals a library bug and throws.
RowWithSection power_last(const RowWithSection& rs, std::uint64_t exponent);

// True iff v * evaluate(word) equals target entrywise.
bool verify_elementary_reduction(const UnimodularRow& v, const ElementaryProduct& word,
                                 const UnimodularRow& target);

// Best-effort search for an elementary word moving v to the standard last
// row pi_n (whose final entry 1 is an e-th power for every e).  Greedy: find
// a position i with 1 - v_i in the ideal of the other entries, patch v_i to
// 1 with the membership cofactors, clear the rest, and move the 1 to the
// end.  May fail (nullopt) without prejudice — absence of a certificate
// proves nothing.
std::optional<std::pair<ElementaryProduct, UnimodularRow>>
best_effort_reduction(const UnimodularRow& v);

} // namespace wittkit
