#include "wittkit/witt.hpp"

#include <vector>

#include "wittkit/errors.hpp"

namespace wittkit {

PsiMatrix psi_matrix(const RingPtr& ring, std::size_t half_rank) {
  MatrixOverRing m(ring, 2 * half_rank, 2 * half_rank);
  RingElement one = RingElement::one(ring);
  for (std::size_t k = 0; k < half_rank; ++k) {
    m.set(2 * k, 2 * k + 1, one);
    m.set(2 * k + 1, 2 * k, -one);
  }
  return PsiMatrix{half_rank, AlternatingMatrix(std::move(m))};
}

WittRepresentative::WittRepresentative(AlternatingMatrix m)
    : mat_(std::move(m)), pf_(pfaffian(mat_)),
      pf_inv_(RingElement::one(mat_.ring())) {
  auto inv = unit_inverse(pf_);
  if (!inv)
    throw Error("alternating matrix is not invertible: Pfaffian " +
                pf_.to_string() + " is not a unit");
  pf_inv_ = *inv;
}

SLWitness::SLWitness(MatrixOverRing sigma) : sigma_(std::move(sigma)) {
  if (!sigma_.is_square()) throw Error("SL witness must be square");
  if (!sigma_.det().is_one()) throw Error("SL witness must have determinant 1");
}

AlternatingMatrix hyperbolic_matrix(const MatrixOverRing& phi) {
  if (!phi.is_square()) throw Error("hyperbolic map needs a square matrix");
  if (phi.rows() % 2 != 0) throw Error("hyperbolic map needs even rank");
  PsiMatrix psi = psi_matrix(phi.ring(), phi.rows() / 2);
  return AlternatingMatrix(phi.transpose() * psi.matrix.matrix() * phi);
}

WittRepresentative hyperbolic(const MatrixOverRing& phi) {
  return WittRepresentative(hyperbolic_matrix(phi));
}

namespace {

// Common core: M ⊥ psi_pad == E^T (center) E, with consistency checks on
// ranks and, on success, the Pfaffian-invariance assertion.
bool verify_against(const WittRepresentative& m, const WittRepresentative& n,
                    const WittWitness& wit, const SLWitness* sl) {
  const RingPtr& ring = m.ring();
  if (n.ring() != ring && !n.ring()->same_ring(*ring))
    throw IncompatibleError("representatives over different rings");
  const std::size_t total = m.rank() + n.rank() + 2 * wit.level;
  if (wit.word.rank() != total)
    throw Error("witness word rank " + std::to_string(wit.word.rank()) +
                " does not match stabilized rank " + std::to_string(total));

  PsiMatrix pad_m = psi_matrix(ring, (total - m.rank()) / 2);
  PsiMatrix pad_n = psi_matrix(ring, (total - n.rank()) / 2);
  MatrixOverRing left = orth_sum(m.matrix().matrix(), pad_m.matrix.matrix());
  MatrixOverRing center = orth_sum(n.matrix().matrix(), pad_n.matrix.matrix());

  if (sl) {
    const MatrixOverRing& sigma = sl->sigma();
    if (sigma.rows() > total)
      throw Error("SL witness rank exceeds the stabilized rank");
    MatrixOverRing padded =
        orth_sum(sigma, MatrixOverRing::identity(ring, total - sigma.rows()));
    center = padded.transpose() * center * padded;
  }

  MatrixOverRing e = wit.word.evaluate();
  bool ok = left == e.transpose() * center * e;
  if (ok && m.pfaffian_value() != n.pfaffian_value())
    throw Error("internal: certified equivalence with unequal Pfaffians");
  return ok;
}

} // namespace

bool verify_witt_equiv(const WittRepresentative& m, const WittRepresentative& n,
                       const WittWitness& wit) {
  return verify_against(m, n, wit, nullptr);
}

bool verify_wsl_equiv(const WittRepresentative& m, const WittRepresentative& n,
                      const WittWitness& wit, const SLWitness& sl) {
  return verify_against(m, n, wit, &sl);
}

ElementaryGenerator elementary_symplectic(std::size_t i, std::size_t j,
                                          const RingElement& lambda,
                                          std::size_t rank) {
  return ElementaryGenerator(ElementaryGenerator::Kind::symplectic, i, j, lambda,
                             rank);
}

OrbitReport orbit_bruteforce(std::uint32_t p, std::size_t n, GeneratorSet gens) {
  if (p > 7) throw Error("orbit brute force limited to p <= 7");
  Field field = Field::prime(p); // validates primality
  (void)field;
  if (n < 2) throw Error("orbit brute force needs length >= 2");
  bool use_symplectic = gens != GeneratorSet::linear;
  if (use_symplectic && n % 2 != 0)
    throw Error("symplectic generators need even length");

  std::uint64_t count = 1;
  for (std::size_t k = 0; k < n; ++k) {
    count *= p;
    if (count > 20'000'000ull) throw Error("orbit space too large");
  }

  struct Move {
    bool symplectic;
    std::size_t i, j;
    std::uint32_t lam;
  };
  std::vector<Move> moves;
  bool use_linear = gens != GeneratorSet::symplectic;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::uint32_t lam = 1; lam < p; ++lam) {
        if (use_linear) moves.push_back({false, i, j, lam});
        if (use_symplectic) moves.push_back({true, i, j, lam});
      }
    }

  // encode (v_0..v_{n-1}) as sum v_k p^{n-1-k}: integer order = lex order
  auto decode = [&](std::uint64_t code) {
    std::vector<std::uint32_t> v(n);
    for (std::size_t k = n; k-- > 0;) {
      v[k] = static_cast<std::uint32_t>(code % p);
      code /= p;
    }
    return v;
  };
  auto encode = [&](const std::vector<std::uint32_t>& v) {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < n; ++k) code = code * p + v[k];
    return code;
  };

  auto apply_move = [&](std::vector<std::uint32_t> v, const Move& mv) {
    // right action of I + lam*e_ij (+ symplectic mirror): see apply_right
    v[mv.j] = static_cast<std::uint32_t>((v[mv.j] + static_cast<std::uint64_t>(v[mv.i]) * mv.lam) % p);
    if (mv.symplectic && mv.j != symplectic_partner(mv.i)) {
      int s = symplectic_sign(mv.i) * symplectic_sign(mv.j);
      std::uint32_t lam = s > 0 ? (p - mv.lam) % p : mv.lam;
      std::size_t src = symplectic_partner(mv.j), dst = symplectic_partner(mv.i);
      v[dst] = static_cast<std::uint32_t>((v[dst] + static_cast<std::uint64_t>(v[src]) * lam) % p);
    }
    return v;
  };

  OrbitReport report;
  report.total = static_cast<std::size_t>(count - 1);
  std::vector<bool> visited(count, false);
  for (std::uint64_t start = 1; start < count; ++start) {
    if (visited[start]) continue;
    std::vector<std::uint64_t> frontier{start};
    visited[start] = true;
    std::size_t size = 0;
    while (!frontier.empty()) {
      std::uint64_t cur = frontier.back();
      frontier.pop_back();
      ++size;
      std::vector<std::uint32_t> v = decode(cur);
      for (const auto& mv : moves) {
        std::uint64_t next = encode(apply_move(v, mv));
        if (!visited[next]) {
          visited[next] = true;
          frontier.push_back(next);
        }
      }
    }
    report.representatives.push_back(decode(start));
    report.sizes.push_back(size);
  }
  return report;
}

bool verify_transitivity_certificate(const UnimodularRow& v,
                                     const WittRepresentative& chi,
                                     const MatrixOverRing& psi) {
  if (!psi.is_square() || psi.rows() != chi.rank() || v.size() != chi.rank())
    throw Error("transitivity certificate dimension mismatch");
  if (!verify_congruence(chi.matrix().matrix(), chi.matrix().matrix(), psi))
    return false;
  return psi.row(0) == v.entries();
}

} // namespace wittkit
