#include "wittkit/monomial.hpp"

#include <algorithm>

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {

void check_arity(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw IncompatibleError("monomials over different variable counts");
}

} // namespace

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars);
  m.exp_.at(i) = 1;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exp_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  check_arity(*this, o);
  Monomial r(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += o.exp_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  check_arity(*this, o);
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > o.exp_[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  check_arity(*this, o);
  Monomial r(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (o.exp_[i] > exp_[i]) throw Error("monomial division with remainder");
    r.exp_[i] -= o.exp_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  check_arity(*this, o);
  Monomial r(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i)
    r.exp_[i] = std::max(exp_[i], o.exp_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  check_arity(*this, o);
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] != 0 && o.exp_[i] != 0) return false;
  return true;
}

int Monomial::compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  check_arity(a, b);
  switch (order) {
  case MonomialOrder::lex:
    for (std::size_t i = 0; i < a.exp_.size(); ++i) {
      if (a.exp_[i] != b.exp_[i]) return a.exp_[i] < b.exp_[i] ? -1 : 1;
    }
    return 0;
  case MonomialOrder::grevlex: {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Same total degree: the last position where the exponents differ
    // decides, and the SMALLER exponent there wins.
    for (std::size_t i = a.exp_.size(); i-- > 0;) {
      if (a.exp_[i] != b.exp_[i]) return a.exp_[i] > b.exp_[i] ? -1 : 1;
    }
    return 0;
  }
  }
  throw Error("unknown monomial order");
}

} // namespace wittkit
