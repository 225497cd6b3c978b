#include "wittkit/groebner.hpp"

#include <algorithm>
#include <set>

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {

// Polynomial together with cofactors over the original generator list; the
// invariant poly == sum cof[k] * gens[k] holds throughout Buchberger.
struct Tracked {
  Polynomial poly;
  std::vector<Polynomial> cof;
};

struct Pair {
  std::size_t i, j; // i < j
};

// Deterministic selection: smallest lcm in the term order, ties by (i, j).
std::size_t pick_pair(const std::vector<Pair>& pending,
                      const std::vector<Polynomial>& lead, MonomialOrder ord) {
  std::size_t best = 0;
  auto lcm_of = [&](const Pair& p) {
    return lead[p.i].leading_monomial().lcm(lead[p.j].leading_monomial());
  };
  Monomial best_lcm = lcm_of(pending[0]);
  for (std::size_t k = 1; k < pending.size(); ++k) {
    Monomial l = lcm_of(pending[k]);
    int c = Monomial::compare(l, best_lcm, ord);
    if (c < 0 || (c == 0 && (pending[k].i < pending[best].i ||
                             (pending[k].i == pending[best].i &&
                              pending[k].j < pending[best].j)))) {
      best = k;
      best_lcm = l;
    }
  }
  return best;
}

// Tracked full reduction of (h, hcof) by basis; afterwards the result still
// satisfies poly == sum cof[k] * gens[k].
Tracked tracked_reduce(Tracked h, const std::vector<Tracked>& basis) {
  Polynomial rem = Polynomial::zero(h.poly.context());
  Polynomial active = h.poly;
  while (!active.is_zero()) {
    bool reduced = false;
    for (const auto& b : basis) {
      if (b.poly.is_zero()) continue;
      if (b.poly.leading_monomial().divides(active.leading_monomial())) {
        Monomial m = active.leading_monomial().divide(b.poly.leading_monomial());
        Coefficient c = active.leading_coefficient() / b.poly.leading_coefficient();
        active = active - b.poly.multiply_term(m, c);
        for (std::size_t k = 0; k < h.cof.size(); ++k)
          h.cof[k] = h.cof[k] - b.cof[k].multiply_term(m, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      const Term& lt = active.leading_term();
      rem = rem + Polynomial::term(active.context(), lt.mono, lt.coeff);
      active = active - Polynomial::term(active.context(), lt.mono, lt.coeff);
    }
  }
  h.poly = rem;
  return h;
}

Tracked make_monic(Tracked t) {
  if (t.poly.is_zero()) return t;
  Coefficient inv = t.poly.leading_coefficient().inverse();
  t.poly = t.poly.scale(inv);
  for (auto& c : t.cof) c = c.scale(inv);
  return t;
}

// Buchberger with the coprime criterion and the chain criterion, tracking
// cofactors over the input generators.  Output is a (not reduced) Groebner
// basis of the input ideal.
std::vector<Tracked> tracked_buchberger(const std::vector<Polynomial>& gens) {
  std::vector<Tracked> basis;
  if (gens.empty()) return basis;
  ContextPtr ctx = gens.front().context();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].is_zero()) continue;
    Tracked t{gens[k], {}};
    for (std::size_t j = 0; j < gens.size(); ++j)
      t.cof.push_back(j == k ? Polynomial::from_integer(ctx, 1)
                             : Polynomial::zero(ctx));
    basis.push_back(make_monic(std::move(t)));
  }

  std::vector<Pair> pending;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pending.push_back({i, j});

  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    for (const auto& p : pending)
      if (p.i == a && p.j == b) return true;
    return false;
  };

  std::vector<Polynomial> leads;
  auto refresh_leads = [&] {
    leads.clear();
    for (const auto& b : basis) leads.push_back(b.poly);
  };
  refresh_leads();

  const MonomialOrder ord = ctx->order();
  while (!pending.empty()) {
    std::size_t idx = pick_pair(pending, leads, ord);
    Pair pr = pending[idx];
    pending.erase(pending.begin() + idx);

    const Monomial& li = basis[pr.i].poly.leading_monomial();
    const Monomial& lj = basis[pr.j].poly.leading_monomial();
    if (li.coprime(lj)) continue; // S-polynomial reduces to zero

    // Chain criterion: skip when some other leading monomial divides the
    // lcm and both companion pairs have already been handled.
    Monomial l = li.lcm(lj);
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (basis[k].poly.leading_monomial().divides(l) &&
          !is_pending(pr.i, k) && !is_pending(pr.j, k))
        skip = true;
    }
    if (skip) continue;

    Monomial mi = l.divide(li);
    Monomial mj = l.divide(lj);
    Tracked s{basis[pr.i].poly.multiply_term(mi, basis[pr.i].poly.leading_coefficient().inverse()) -
                  basis[pr.j].poly.multiply_term(mj, basis[pr.j].poly.leading_coefficient().inverse()),
              {}};
    s.cof.reserve(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Polynomial a = basis[pr.i].cof[k].multiply_term(
          mi, basis[pr.i].poly.leading_coefficient().inverse());
      Polynomial b = basis[pr.j].cof[k].multiply_term(
          mj, basis[pr.j].poly.leading_coefficient().inverse());
      s.cof.push_back(a - b);
    }
    Tracked r = tracked_reduce(std::move(s), basis);
    if (!r.poly.is_zero()) {
      basis.push_back(make_monic(std::move(r)));
      refresh_leads();
      for (std::size_t k = 0; k + 1 < basis.size(); ++k)
        pending.push_back({k, basis.size() - 1});
    }
  }
  return basis;
}

} // namespace

Division divide(const Polynomial& p, const std::vector<Polynomial>& basis) {
  Division d{std::vector<Polynomial>(basis.size(), Polynomial::zero(p.context())),
             Polynomial::zero(p.context())};
  Polynomial active = p;
  while (!active.is_zero()) {
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero()) continue;
      if (basis[i].leading_monomial().divides(active.leading_monomial())) {
        Monomial m = active.leading_monomial().divide(basis[i].leading_monomial());
        Coefficient c = active.leading_coefficient() / basis[i].leading_coefficient();
        d.quotients[i] = d.quotients[i] +
                         Polynomial::term(p.context(), m, c);
        active = active - basis[i].multiply_term(m, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      const Term& lt = active.leading_term();
      d.remainder = d.remainder + Polynomial::term(p.context(), lt.mono, lt.coeff);
      active = active - Polynomial::term(p.context(), lt.mono, lt.coeff);
    }
  }
  return d;
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis) {
  return divide(p, basis).remainder;
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens) {
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const Polynomial& p) { return p.is_zero(); }),
             gens.end());
  if (gens.empty()) return {};
  ContextPtr ctx = gens.front().context();
  std::vector<Tracked> raw = tracked_buchberger(gens);

  std::vector<Polynomial> basis;
  for (auto& t : raw) basis.push_back(std::move(t.poly));

  // Minimalize: drop any element whose leading monomial is divisible by
  // another surviving leading monomial.
  const MonomialOrder ord = ctx->order();
  std::sort(basis.begin(), basis.end(), [ord](const Polynomial& a, const Polynomial& b) {
    return Monomial::compare(a.leading_monomial(), b.leading_monomial(), ord) < 0;
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (kept.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }

  // Auto-reduce tails and normalize monic; leading monomials are already
  // pairwise non-divisible, so one pass suffices.
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = reduce(minimal[i], others);
    out.push_back(r.scale(r.leading_coefficient().inverse()));
  }
  std::sort(out.begin(), out.end(), [ord](const Polynomial& a, const Polynomial& b) {
    return Monomial::compare(a.leading_monomial(), b.leading_monomial(), ord) < 0;
  });
  return out;
}

std::optional<std::vector<Polynomial>> ideal_cofactors(
    const Polynomial& target, const std::vector<Polynomial>& gens) {
  ContextPtr ctx = target.context();
  if (gens.empty()) {
    if (target.is_zero()) return std::vector<Polynomial>{};
    return std::nullopt;
  }
  std::vector<Tracked> tb = tracked_buchberger(gens);
  std::vector<Polynomial> polys;
  for (const auto& t : tb) polys.push_back(t.poly);
  Division d = divide(target, polys);
  if (!d.remainder.is_zero()) return std::nullopt;

  std::vector<Polynomial> cof(gens.size(), Polynomial::zero(ctx));
  for (std::size_t i = 0; i < tb.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k)
      cof[k] = cof[k] + d.quotients[i] * tb[i].cof[k];

  // Built-in witness check: re-expand before handing the cofactors out.
  Polynomial check = Polynomial::zero(ctx);
  for (std::size_t k = 0; k < gens.size(); ++k) check = check + cof[k] * gens[k];
  if (check != target)
    throw Error("internal: membership cofactors failed re-expansion");
  return cof;
}

} // namespace wittkit
