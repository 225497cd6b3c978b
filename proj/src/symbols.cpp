#include "wittkit/symbols.hpp"

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {

MatrixOverRing suslin_rec(const RingPtr& ring, const std::vector<RingElement>& v,
                          const std::vector<RingElement>& w) {
  const std::size_t len = v.size();
  if (len == 1) {
    MatrixOverRing m(ring, 1, 1);
    m.set(0, 0, v[0]);
    return m;
  }
  std::vector<RingElement> vt(v.begin() + 1, v.end());
  std::vector<RingElement> wt(w.begin() + 1, w.end());
  MatrixOverRing a = suslin_rec(ring, vt, wt);
  MatrixOverRing b = suslin_rec(ring, wt, vt);
  const std::size_t h = a.rows();
  MatrixOverRing m(ring, 2 * h, 2 * h);
  for (std::size_t i = 0; i < h; ++i) {
    m.set(i, i, v[0]);
    m.set(h + i, h + i, w[0]);
  }
  m.insert_block(0, h, a);
  // lower-left block: -S_{r-1}(w', v')^T
  MatrixOverRing bt = b.transpose();
  m.insert_block(h, 0, -bt);
  return m;
}

RingElement dot(const RingPtr& ring, const std::vector<RingElement>& a,
                const std::vector<RingElement>& b) {
  RingElement acc = RingElement::zero(ring);
  for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

} // namespace

SuslinMatrix suslin_matrix(const RingPtr& ring, const std::vector<RingElement>& v,
                           const std::vector<RingElement>& w) {
  if (v.empty() || v.size() != w.size())
    throw Error("suslin matrix needs equal nonempty v and w");
  if (v.size() > 6) throw Error("suslin matrix limited to rows of length 6");
  for (const auto& e : v)
    if (e.ring() != ring && !e.ring()->same_ring(*ring))
      throw IncompatibleError("entry from a different ring");
  for (const auto& e : w)
    if (e.ring() != ring && !e.ring()->same_ring(*ring))
      throw IncompatibleError("entry from a different ring");

  const std::size_t r = v.size() - 1;
  MatrixOverRing m = suslin_rec(ring, v, w);

  if (r <= 3) {
    // S_r(v,w) * S_r(w,v)^T = (v·w) * I
    MatrixOverRing other = suslin_rec(ring, w, v);
    MatrixOverRing expect =
        MatrixOverRing::identity(ring, m.rows()).scale(dot(ring, v, w));
    if (m * other.transpose() != expect)
      throw Error("internal: Suslin recursion failed its defining identity");
  }
  return SuslinMatrix{r, v, w, std::move(m)};
}

VasersteinMatrix vaserstein_symbol(const RowWithSection& rs) {
  if (rs.size() != 3) throw Error("vaserstein symbol needs a length-3 row");
  const RingPtr& ring = rs.ring();
  const auto& a = rs.v();
  const auto& b = rs.w();
  MatrixOverRing m(ring, 4, 4);
  auto put = [&](std::size_t i, std::size_t j, const RingElement& x) {
    m.set(i, j, x);
    m.set(j, i, -x);
  };
  put(0, 1, a[0]);
  put(0, 2, a[1]);
  put(0, 3, a[2]);
  put(1, 2, b[2]);
  put(1, 3, -b[1]);
  put(2, 3, b[0]);
  AlternatingMatrix alt(std::move(m));
  if (!pfaffian(alt).is_one())
    throw Error("internal: Vaserstein representative has Pfaffian != 1");
  return VasersteinMatrix{rs, std::move(alt)};
}

MatrixOverRing factorial_completion_3(const RowWithSection& rs) {
  if (rs.size() != 3) throw Error("factorial completion needs a length-3 row");
  const RingPtr& ring = rs.ring();
  const RingElement &a = rs.v()[0], &b = rs.v()[1], &c = rs.v()[2];
  const RingElement &p = rs.w()[0], &q = rs.w()[1], &r = rs.w()[2];
  const RingElement two = RingElement::from_integer(ring, 2);

  // Over Z[a..r], det of the matrix below is (ap + bq + cr)^2, so the
  // section identity makes it 1 in every specialization, char 2 included.
  MatrixOverRing beta = MatrixOverRing::from_rows(
      ring, {{a, b, c * c},
             {q * q, r - p * q, -a - two * q * c},
             {-r - p * q, p * p, two * p * c - b}});
  if (!beta.det().is_one())
    throw Error("factorial completion: determinant verification failed");
  return beta;
}

MatrixOverRing pushforward(const RingHom& h, const MatrixOverRing& m) {
  if (m.ring() != h.source() && !m.ring()->same_ring(*h.source()))
    throw IncompatibleError("matrix is not over the source ring");
  MatrixOverRing out(h.target(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, h.apply(m.at(i, j)));
  return out;
}

} // namespace wittkit
