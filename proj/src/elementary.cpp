#include "wittkit/elementary.hpp"

#include <algorithm>

#include "wittkit/errors.hpp"

namespace wittkit {

ElementaryGenerator::ElementaryGenerator(Kind k, std::size_t i_, std::size_t j_,
                                         RingElement lam, std::size_t rank_)
    : kind(k), i(i_), j(j_), lambda(std::move(lam)), rank(rank_) {
  if (i >= rank || j >= rank) throw Error("generator index out of range");
  if (i == j) throw Error("generator needs distinct indices");
  if (kind == Kind::symplectic && rank % 2 != 0)
    throw Error("symplectic generator needs even rank");
}

MatrixOverRing ElementaryGenerator::to_matrix() const {
  MatrixOverRing m = MatrixOverRing::identity(lambda.ring(), rank);
  m.set(i, j, m.at(i, j) + lambda);
  if (kind == Kind::symplectic && j != symplectic_partner(i)) {
    std::size_t r = symplectic_partner(j), c = symplectic_partner(i);
    int s = symplectic_sign(i) * symplectic_sign(j);
    RingElement mirror = s > 0 ? -lambda : lambda;
    m.set(r, c, m.at(r, c) + mirror);
  }
  return m;
}

ElementaryGenerator ElementaryGenerator::lifted(std::size_t new_rank) const {
  if (new_rank < rank) throw Error("cannot lower generator rank");
  if (kind == Kind::symplectic && new_rank % 2 != 0)
    throw Error("symplectic generator needs even rank");
  return ElementaryGenerator(kind, i, j, lambda, new_rank);
}

ElementaryProduct::ElementaryProduct(RingPtr ring, std::size_t rank)
    : ring_(std::move(ring)), rank_(rank) {}

ElementaryProduct::ElementaryProduct(RingPtr ring, std::size_t rank,
                                     std::vector<ElementaryGenerator> word)
    : ring_(std::move(ring)), rank_(rank), word_(std::move(word)) {
  for (const auto& g : word_) {
    if (g.rank != rank_) throw Error("generator rank differs from word rank");
    if (g.lambda.ring() != ring_ && !g.lambda.ring()->same_ring(*ring_))
      throw IncompatibleError("generator over a different ring");
  }
}

void ElementaryProduct::append(const ElementaryGenerator& g) {
  if (g.rank != rank_) throw Error("generator rank differs from word rank");
  if (g.lambda.ring() != ring_ && !g.lambda.ring()->same_ring(*ring_))
    throw IncompatibleError("generator over a different ring");
  word_.push_back(g);
}

ElementaryProduct ElementaryProduct::inverse() const {
  std::vector<ElementaryGenerator> rev;
  rev.reserve(word_.size());
  for (auto it = word_.rbegin(); it != word_.rend(); ++it)
    rev.push_back(it->inverse());
  return ElementaryProduct(ring_, rank_, std::move(rev));
}

ElementaryProduct ElementaryProduct::lifted(std::size_t n) const {
  if (n < rank_) throw Error("cannot lower word rank");
  std::vector<ElementaryGenerator> lifted_word;
  lifted_word.reserve(word_.size());
  for (const auto& g : word_) lifted_word.push_back(g.lifted(n));
  return ElementaryProduct(ring_, n, std::move(lifted_word));
}

ElementaryProduct ElementaryProduct::concat(const ElementaryProduct& o) const {
  if (o.rank_ != rank_) throw Error("concatenating words of different ranks");
  std::vector<ElementaryGenerator> w = word_;
  w.insert(w.end(), o.word_.begin(), o.word_.end());
  return ElementaryProduct(ring_, rank_, std::move(w));
}

// Right multiplication by I + lam*e_ij adds lam * (column i) to column j;
// evaluating the word left to right this way avoids n^3 products per factor.
MatrixOverRing ElementaryProduct::evaluate() const {
  MatrixOverRing m = MatrixOverRing::identity(ring_, rank_);
  auto add_to_col = [&](std::size_t src, std::size_t dst, const RingElement& lam) {
    for (std::size_t r = 0; r < rank_; ++r)
      m.set(r, dst, m.at(r, dst) + m.at(r, src) * lam);
  };
  for (const auto& g : word_) {
    add_to_col(g.i, g.j, g.lambda);
    if (g.kind == ElementaryGenerator::Kind::symplectic &&
        g.j != symplectic_partner(g.i)) {
      int s = symplectic_sign(g.i) * symplectic_sign(g.j);
      add_to_col(symplectic_partner(g.j), symplectic_partner(g.i),
                 s > 0 ? -g.lambda : g.lambda);
    }
  }
  return m;
}

std::vector<RingElement> ElementaryProduct::apply_right(
    std::vector<RingElement> row) const {
  if (row.size() != rank_) throw Error("row length differs from word rank");
  for (const auto& g : word_) {
    // (row * (I + lam*e_ij))_j = row_j + row_i * lam
    row[g.j] = row[g.j] + row[g.i] * g.lambda;
    if (g.kind == ElementaryGenerator::Kind::symplectic &&
        g.j != symplectic_partner(g.i)) {
      int s = symplectic_sign(g.i) * symplectic_sign(g.j);
      RingElement lam = s > 0 ? -g.lambda : g.lambda;
      row[symplectic_partner(g.i)] =
          row[symplectic_partner(g.i)] + row[symplectic_partner(g.j)] * lam;
    }
  }
  return row;
}

std::vector<RingElement> ElementaryProduct::apply_left(
    std::vector<RingElement> col) const {
  // (word * col): apply factors right to left as row operations.
  if (col.size() != rank_) throw Error("column length differs from word rank");
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
    const auto& g = *it;
    col[g.i] = col[g.i] + g.lambda * col[g.j];
    if (g.kind == ElementaryGenerator::Kind::symplectic &&
        g.j != symplectic_partner(g.i)) {
      int s = symplectic_sign(g.i) * symplectic_sign(g.j);
      RingElement lam = s > 0 ? -g.lambda : g.lambda;
      col[symplectic_partner(g.j)] =
          col[symplectic_partner(g.j)] + lam * col[symplectic_partner(g.i)];
    }
  }
  return col;
}

// ---- integer factorization ---------------------------------------------------

mpz_class integer_det(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  for (const auto& r : a)
    if (r.size() != n) throw Error("integer determinant of a non-square matrix");
  if (n == 0) return 1;
  std::vector<mpz_class> m;
  m.reserve(n * n);
  for (const auto& r : a)
    for (long long v : r) m.emplace_back(static_cast<long>(v));
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = m[k * n + k] * m[i * n + j] - m[i * n + k] * m[k * n + j];
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (r != 0) throw Error("internal: inexact division in integer Bareiss");
        m[i * n + j] = q;
      }
    prev = m[k * n + k];
  }
  mpz_class d = m[n * n - 1];
  return sign < 0 ? mpz_class(-d) : d;
}

std::vector<IntegerElementaryMove> factor_integer_sl(
    const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  for (const auto& r : a)
    if (r.size() != n) throw Error("factor_integer_sl needs a square matrix");
  if (integer_det(a) != 1)
    throw Error("factor_integer_sl needs determinant exactly 1");

  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(a[i][j]);

  // Left row operations that reduce m to the identity; applied[t] means
  // row i += lambda * row j was performed at step t.
  std::vector<IntegerElementaryMove> applied;
  auto rowop = [&](std::size_t i, std::size_t j, const mpz_class& lam) {
    if (lam == 0) return;
    for (std::size_t c = 0; c < n; ++c) m[i][c] += lam * m[j][c];
    applied.push_back({i, j, lam});
  };

  // Euclidean clearing below each pivot; pivots end up +-1 because the
  // matrix stays unimodular throughout.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = k + 1; r < n; ++r) {
      while (m[r][k] != 0) {
        if (m[k][k] == 0) {
          rowop(k, r, 1);
          continue;
        }
        mpz_class q = m[r][k] / m[k][k]; // truncated: |remainder| < |pivot|
        rowop(r, k, -q);
        if (m[r][k] == 0) break;
        q = m[k][k] / m[r][k];
        rowop(k, r, -q);
      }
    }
    if (m[k][k] == 0) throw Error("internal: lost the pivot during reduction");
  }

  // Diagonal entries are now +-1 with an even number of -1; flip them in
  // pairs using -I_2 = (E12(1) E21(-1) E12(1))^2 restricted to the two rows.
  std::vector<std::size_t> neg;
  for (std::size_t k = 0; k < n; ++k)
    if (m[k][k] < 0) neg.push_back(k);
  if (neg.size() % 2 != 0) throw Error("internal: odd number of negative pivots");
  for (std::size_t t = 0; t + 1 < neg.size(); t += 2) {
    std::size_t p = neg[t], q = neg[t + 1];
    for (int rep = 0; rep < 2; ++rep) {
      rowop(p, q, 1);
      rowop(q, p, -1);
      rowop(p, q, 1);
    }
  }

  // Back substitution clears the strict upper triangle.
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t r = 0; r < k; ++r)
      if (m[r][k] != 0) rowop(r, k, -m[r][k]);
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j] != (i == j ? 1 : 0))
        throw Error("internal: reduction did not reach the identity");

  // E_t ... E_1 A = I, so A = inv(E_1) ... inv(E_t): negate each move,
  // keeping application order so the leftmost factor comes first.
  std::vector<IntegerElementaryMove> word;
  word.reserve(applied.size());
  for (const auto& mv : applied) word.push_back({mv.i, mv.j, -mv.lambda});
  return word;
}

ElementaryProduct to_elementary_product(const std::vector<IntegerElementaryMove>& moves,
                                        const RingPtr& ring, std::size_t rank) {
  ElementaryProduct out(ring, rank);
  for (const auto& mv : moves) {
    Coefficient c = Coefficient::from_mpz(ring->field(), mv.lambda);
    RingElement lam(ring, Polynomial::constant(ring->context(), c));
    if (lam.is_zero()) continue; // a move can vanish mod p
    out.append(ElementaryGenerator(ElementaryGenerator::Kind::linear, mv.i, mv.j,
                                   lam, rank));
  }
  return out;
}

} // namespace wittkit
