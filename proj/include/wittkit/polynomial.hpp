#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittkit/coefficient.hpp"
#include "wittkit/monomial.hpp"

namespace wittkit {

// Ambient polynomial ring k[x_1, ..., x_n]: ground field, ordered variable
// names, monomial order.  Shared immutably by every polynomial built over it.
class PolyContext {
public:
  PolyContext(Field field, std::vector<std::string> vars, MonomialOrder order);

  const Field& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  MonomialOrder order() const { return order_; }
  std::size_t nvars() const { return vars_.size(); }

  // Index of a variable name, or nullopt.
  std::optional<std::size_t> var_index(const std::string& name) const;

  bool operator==(const PolyContext& o) const;
  bool operator!=(const PolyContext& o) const { return !(*this == o); }

private:
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using ContextPtr = std::shared_ptr<const PolyContext>;

ContextPtr make_context(Field field, std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::grevlex);

struct Term {
  Monomial mono;
  Coefficient coeff;
};

// Sparse multivariate polynomial: terms strictly descending in the context
// order, no zero coefficients.  Immutable value type.
class Polynomial {
public:
  explicit Polynomial(ContextPtr ctx);

  static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(ContextPtr ctx, const Coefficient& c);
  static Polynomial from_integer(ContextPtr ctx, long v);
  static Polynomial variable(ContextPtr ctx, std::size_t i);
  static Polynomial term(ContextPtr ctx, const Monomial& m, const Coefficient& c);
  // Terms in any order, duplicates allowed; normalizes.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // Leading data in the context order; throws on zero.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const;
  const Coefficient& leading_coefficient() const;
  std::uint64_t total_degree() const; // 0 for the zero polynomial

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const; // enforces max_degree()
  Polynomial operator-() const;
  Polynomial scale(const Coefficient& c) const;
  Polynomial multiply_term(const Monomial& m, const Coefficient& c) const;
  Polynomial pow(std::uint64_t e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Substitutes images[i] for variable i; images live in target (they must
  // all share it, and its field must match).
  Polynomial substitute(const ContextPtr& target,
                        const std::vector<Polynomial>& images) const;

  // Parses the textual format: integer or a/b coefficients, '*' products,
  // '^' powers, parentheses, e.g. "3*x^2*y - 1/2*z + 4".
  static Polynomial parse(ContextPtr ctx, const std::string& text);

  std::string to_string() const; // deterministic, parses back to itself

private:
  void check_compatible(const Polynomial& o) const;

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

} // namespace wittkit
