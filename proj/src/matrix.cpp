#include "wittkit/matrix.hpp"

#include <map>

#include "wittkit/errors.hpp"
#include "wittkit/groebner.hpp"

namespace wittkit {

namespace {

// Exact quotient p / q in the ambient polynomial ring; throws when the
// division leaves a remainder (which would be a bug in Bareiss).
Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return p;
  Division d = divide(p, {q});
  if (!d.remainder.is_zero())
    throw Error("internal: inexact division in fraction-free elimination");
  return d.quotients[0];
}

} // namespace

MatrixOverRing::MatrixOverRing(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      ent_(rows * cols, RingElement::zero(ring_)) {}

MatrixOverRing MatrixOverRing::identity(const RingPtr& ring, std::size_t n) {
  MatrixOverRing m(ring, n, n);
  RingElement one = RingElement::one(ring);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
  return m;
}

MatrixOverRing MatrixOverRing::from_rows(
    const RingPtr& ring, const std::vector<std::vector<RingElement>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  MatrixOverRing m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

const RingElement& MatrixOverRing::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
  return ent_[i * cols_ + j];
}

void MatrixOverRing::set(std::size_t i, std::size_t j, const RingElement& v) {
  if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
  if (v.ring() != ring_ && !v.ring()->same_ring(*ring_))
    throw IncompatibleError("matrix entry from a different ring");
  ent_[i * cols_ + j] = v;
}

void MatrixOverRing::insert_block(std::size_t r0, std::size_t c0,
                                  const MatrixOverRing& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) set(r0 + i, c0 + j, b.at(i, j));
}

std::vector<RingElement> MatrixOverRing::row(std::size_t i) const {
  std::vector<RingElement> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return out;
}

std::vector<RingElement> MatrixOverRing::col(std::size_t j) const {
  std::vector<RingElement> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

void MatrixOverRing::check_same_shape(const MatrixOverRing& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  if (ring_ != o.ring_ && !ring_->same_ring(*o.ring_))
    throw IncompatibleError("matrices over different rings");
}

MatrixOverRing MatrixOverRing::operator+(const MatrixOverRing& o) const {
  check_same_shape(o);
  MatrixOverRing r(ring_, rows_, cols_);
  for (std::size_t k = 0; k < ent_.size(); ++k) r.ent_[k] = ent_[k] + o.ent_[k];
  return r;
}

MatrixOverRing MatrixOverRing::operator-(const MatrixOverRing& o) const {
  check_same_shape(o);
  MatrixOverRing r(ring_, rows_, cols_);
  for (std::size_t k = 0; k < ent_.size(); ++k) r.ent_[k] = ent_[k] - o.ent_[k];
  return r;
}

MatrixOverRing MatrixOverRing::operator*(const MatrixOverRing& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  if (ring_ != o.ring_ && !ring_->same_ring(*o.ring_))
    throw IncompatibleError("matrices over different rings");
  MatrixOverRing r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      RingElement acc = RingElement::zero(ring_);
      for (std::size_t k = 0; k < cols_; ++k)
        acc = acc + at(i, k) * o.at(k, j);
      r.set(i, j, acc);
    }
  return r;
}

MatrixOverRing MatrixOverRing::operator-() const {
  MatrixOverRing r(ring_, rows_, cols_);
  for (std::size_t k = 0; k < ent_.size(); ++k) r.ent_[k] = -ent_[k];
  return r;
}

MatrixOverRing MatrixOverRing::scale(const RingElement& c) const {
  MatrixOverRing r(ring_, rows_, cols_);
  for (std::size_t k = 0; k < ent_.size(); ++k) r.ent_[k] = ent_[k] * c;
  return r;
}

MatrixOverRing MatrixOverRing::transpose() const {
  MatrixOverRing r(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

bool MatrixOverRing::operator==(const MatrixOverRing& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (ring_ != o.ring_ && !ring_->same_ring(*o.ring_)) return false;
  for (std::size_t k = 0; k < ent_.size(); ++k)
    if (ent_[k] != o.ent_[k]) return false;
  return true;
}

RingElement MatrixOverRing::det() const {
  if (!is_square()) throw Error("determinant of a non-square matrix");
  if (rows_ == 0) return RingElement::one(ring_);
  return ring_->is_free() ? det_bareiss() : det_expansion();
}

// Fraction-free Bareiss elimination; valid over any integral domain, used
// for free polynomial rings (and fields).
RingElement MatrixOverRing::det_bareiss() const {
  const std::size_t n = rows_;
  std::vector<Polynomial> a;
  a.reserve(n * n);
  for (const auto& e : ent_) a.push_back(e.poly());
  ContextPtr ctx = ring_->context();
  Polynomial prev = Polynomial::from_integer(ctx, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot * n + k].is_zero()) ++pivot;
      if (pivot == n) return RingElement::zero(ring_);
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a[k * n + j], a[pivot * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = exact_div(a[k * n + k] * a[i * n + j] -
                                     a[i * n + k] * a[k * n + j],
                                 prev);
    prev = a[k * n + k];
  }
  Polynomial d = a[n * n - 1];
  if (sign < 0) d = -d;
  return RingElement(ring_, d);
}

// Division-free Laplace expansion along the top remaining row, memoized on
// the set of surviving columns.
RingElement MatrixOverRing::det_expansion() const {
  const std::size_t n = rows_;
  if (n > 20) throw Error("determinant expansion limited to 20 rows");
  std::map<std::uint64_t, RingElement> memo;
  // Row index is n - popcount(mask); recursion over column masks.
  auto rec = [&](auto&& self, std::uint64_t mask) -> RingElement {
    if (mask == 0) return RingElement::one(ring_);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::size_t row = n - static_cast<std::size_t>(__builtin_popcountll(mask));
    RingElement acc = RingElement::zero(ring_);
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1ull << j))) continue;
      const RingElement& e = at(row, j);
      if (!e.is_zero()) {
        RingElement sub = self(self, mask & ~(1ull << j));
        acc = sign > 0 ? acc + e * sub : acc - e * sub;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  std::uint64_t full = n == 64 ? ~0ull : ((1ull << n) - 1);
  return rec(rec, full);
}

AlternatingMatrix::AlternatingMatrix(MatrixOverRing m) : m_(std::move(m)) {
  if (!m_.is_square()) throw Error("alternating matrix must be square");
  if (m_.rows() % 2 != 0) throw Error("alternating matrix must have even size");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    if (!m_.at(i, i).is_zero())
      throw Error("alternating matrix has a nonzero diagonal entry");
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_.at(i, j) != -m_.at(j, i))
        throw Error("matrix is not skew-symmetric");
  }
}

RingElement pfaffian(const AlternatingMatrix& a) {
  const MatrixOverRing& m = a.matrix();
  const std::size_t n = m.rows();
  if (n > 24) throw Error("pfaffian expansion limited to 24 rows");
  const RingPtr& ring = m.ring();
  std::map<std::uint64_t, RingElement> memo;
  // Pf over the index subset in mask: expand along its least index s0,
  // pairing it with each later index; the k-th partner carries (-1)^(k-1).
  auto rec = [&](auto&& self, std::uint64_t mask) -> RingElement {
    if (mask == 0) return RingElement::one(ring);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::size_t s0 = static_cast<std::size_t>(__builtin_ctzll(mask));
    RingElement acc = RingElement::zero(ring);
    int sign = 1;
    for (std::size_t k = s0 + 1; k < n; ++k) {
      if (!(mask & (1ull << k))) continue;
      const RingElement& e = m.at(s0, k);
      if (!e.is_zero()) {
        RingElement sub = self(self, mask & ~(1ull << s0) & ~(1ull << k));
        acc = sign > 0 ? acc + e * sub : acc - e * sub;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  std::uint64_t full = n == 0 ? 0 : ((1ull << n) - 1);
  return rec(rec, full);
}

MatrixOverRing orth_sum(const MatrixOverRing& a, const MatrixOverRing& b) {
  if (a.ring() != b.ring() && !a.ring()->same_ring(*b.ring()))
    throw IncompatibleError("orthogonal sum over different rings");
  MatrixOverRing r(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  r.insert_block(0, 0, a);
  r.insert_block(a.rows(), a.cols(), b);
  return r;
}

AlternatingMatrix orth_sum(const AlternatingMatrix& a, const AlternatingMatrix& b) {
  return AlternatingMatrix(orth_sum(a.matrix(), b.matrix()));
}

bool verify_congruence(const MatrixOverRing& m, const MatrixOverRing& n,
                       const MatrixOverRing& phi) {
  if (!m.is_square() || !n.is_square()) throw Error("congruence needs square matrices");
  if (phi.rows() != m.rows() || phi.cols() != n.rows())
    throw Error("congruence witness has the wrong shape");
  return phi.transpose() * m * phi == n;
}

} // namespace wittkit
