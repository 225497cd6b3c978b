#pragma once

#include <cstdint>
#include <vector>

namespace wittkit {

enum class MonomialOrder { grevlex, lex };

// Exponent vector of fixed arity.  The arity is the number of variables of
// the ambient ring; mixing arities throws.
class Monomial {
public:
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exp_(std::move(exps)) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return exp_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exp_[i]; }
  std::uint64_t degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;     // this | o
  Monomial divide(const Monomial& o) const;  // this / o, requires o | this
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;     // lcm == product

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
  bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }

  // Three-way comparison in the given order: negative when a < b, zero on
  // equality, positive when a > b.
  static int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

private:
  std::vector<std::uint32_t> exp_;
};

} // namespace wittkit
