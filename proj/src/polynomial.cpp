#include "wittkit/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "wittkit/config.hpp"
#include "wittkit/errors.hpp"

namespace wittkit {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

} // namespace

PolyContext::PolyContext(Field field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
  for (const auto& v : vars_)
    if (!is_identifier(v)) throw Error("bad variable name: '" + v + "'");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw Error("duplicate variable name: " + vars_[i]);
}

std::optional<std::size_t> PolyContext::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

bool PolyContext::operator==(const PolyContext& o) const {
  return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
}

ContextPtr make_context(Field field, std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const PolyContext>(field, std::move(vars), order);
}

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw Error("null polynomial context");
}

Polynomial Polynomial::constant(ContextPtr ctx, const Coefficient& c) {
  if (c.field() != ctx->field())
    throw IncompatibleError("constant from a different field");
  Polynomial p(std::move(ctx));
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(p.ctx_->nvars()), c});
  return p;
}

Polynomial Polynomial::from_integer(ContextPtr ctx, long v) {
  Coefficient c = Coefficient::from_integer(ctx->field(), v);
  return constant(std::move(ctx), c);
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t i) {
  if (i >= ctx->nvars()) throw Error("variable index out of range");
  Monomial m = Monomial::variable(ctx->nvars(), i);
  Coefficient c = Coefficient::one(ctx->field());
  return term(std::move(ctx), m, c);
}

Polynomial Polynomial::term(ContextPtr ctx, const Monomial& m, const Coefficient& c) {
  if (m.nvars() != ctx->nvars()) throw IncompatibleError("monomial arity mismatch");
  if (c.field() != ctx->field()) throw IncompatibleError("coefficient field mismatch");
  Polynomial p(std::move(ctx));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  Polynomial p(std::move(ctx));
  const MonomialOrder ord = p.ctx_->order();
  for (const auto& t : terms) {
    if (t.mono.nvars() != p.ctx_->nvars())
      throw IncompatibleError("monomial arity mismatch");
    if (t.coeff.field() != p.ctx_->field())
      throw IncompatibleError("coefficient field mismatch");
  }
  std::sort(terms.begin(), terms.end(), [ord](const Term& a, const Term& b) {
    return Monomial::compare(a.mono, b.mono, ord) > 0;
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of zero");
  return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const { return leading_term().mono; }
const Coefficient& Polynomial::leading_coefficient() const { return leading_term().coeff; }

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (ctx_ != o.ctx_ && *ctx_ != *o.ctx_)
    throw IncompatibleError("polynomials over different contexts");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  const MonomialOrder ord = ctx_->order();
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = Monomial::compare(terms_[i].mono, o.terms_[j].mono, ord);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Coefficient s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
      ++i; ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Polynomial Polynomial::scale(const Coefficient& c) const {
  if (c.field() != ctx_->field()) throw IncompatibleError("coefficient field mismatch");
  if (c.is_zero()) return zero(ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coefficient p = t.coeff * c;
    if (!p.is_zero()) r.terms_.push_back({t.mono, p});
  }
  return r;
}

Polynomial Polynomial::multiply_term(const Monomial& m, const Coefficient& c) const {
  if (c.is_zero()) return zero(ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coefficient p = t.coeff * c;
    if (!p.is_zero()) r.terms_.push_back({t.mono * m, p});
  }
  return r; // multiplying by a fixed term preserves the term order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  if (is_zero() || o.is_zero()) return zero(ctx_);
  if (total_degree() + o.total_degree() > max_degree())
    throw DegreeCapError("product degree " +
                         std::to_string(total_degree() + o.total_degree()) +
                         " exceeds cap " + std::to_string(max_degree()));
  Polynomial r = zero(ctx_);
  for (const auto& t : o.terms_) r = r + multiply_term(t.mono, t.coeff);
  return r;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial acc = from_integer(ctx_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ctx_ != o.ctx_ && *ctx_ != *o.ctx_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::substitute(const ContextPtr& target,
                                  const std::vector<Polynomial>& images) const {
  if (images.size() != ctx_->nvars())
    throw Error("substitute: expected one image per variable");
  if (target->field() != ctx_->field())
    throw IncompatibleError("substitute: field mismatch");
  for (const auto& im : images)
    if (im.context() != target && *im.context() != *target)
      throw IncompatibleError("substitute: image over a different context");
  Polynomial out = zero(target);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::uint32_t e = t.mono.exponent(i);
      if (e > 0) prod = prod * images[i].pow(e);
    }
    out = out + prod;
  }
  return out;
}

// ---- parsing ----------------------------------------------------------------

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_space();
    return pos >= s.size();
  }
  char peek() {
    skip_space();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) { ++pos; return true; }
    return false;
  }
  std::string read_number() {
    skip_space();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError("expected a number in '" + s + "'");
    return s.substr(start, pos - start);
  }
  std::string read_ident() {
    skip_space();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
};

struct PolyParser {
  Lexer lex;
  ContextPtr ctx;

  Polynomial parse_expr() {
    bool neg = false;
    while (true) {
      if (lex.consume('+')) continue;
      if (lex.consume('-')) { neg = !neg; continue; }
      break;
    }
    Polynomial acc = parse_term();
    if (neg) acc = -acc;
    while (!lex.eof()) {
      char c = lex.peek();
      if (c == '+') {
        lex.consume('+');
        acc = acc + parse_term();
      } else if (c == '-') {
        lex.consume('-');
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (lex.consume('*')) acc = acc * parse_factor();
    return acc;
  }

  Polynomial parse_factor() {
    bool neg = false;
    while (lex.consume('-')) neg = !neg;
    Polynomial base = parse_atom();
    if (lex.consume('^')) {
      std::string e = lex.read_number();
      unsigned long long v;
      try {
        v = std::stoull(e);
      } catch (const std::exception&) {
        throw ParseError("exponent out of range: " + e);
      }
      base = base.pow(v);
    }
    return neg ? -base : base;
  }

  Polynomial parse_atom() {
    char c = lex.peek();
    if (c == '(') {
      lex.consume('(');
      Polynomial inner = parse_expr();
      if (!lex.consume(')')) throw ParseError("missing ')' in '" + lex.s + "'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = lex.read_number();
      if (lex.peek() == '/') {
        // A '/' only ever follows a numeric literal: rational coefficient.
        lex.consume('/');
        std::string den = lex.read_number();
        Coefficient q = Coefficient::parse(ctx->field(), num + "/" + den);
        return Polynomial::constant(ctx, q);
      }
      return Polynomial::constant(ctx, Coefficient::parse(ctx->field(), num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = lex.read_ident();
      auto idx = ctx->var_index(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'");
      return Polynomial::variable(ctx, *idx);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + lex.s + "'");
  }
};

} // namespace

Polynomial Polynomial::parse(ContextPtr ctx, const std::string& text) {
  PolyParser p{Lexer{text}, ctx};
  if (p.lex.eof()) throw ParseError("empty polynomial");
  Polynomial out = p.parse_expr();
  if (!p.lex.eof())
    throw ParseError("trailing input at position " + std::to_string(p.lex.pos) +
                     " in '" + text + "'");
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Coefficient mag = t.coeff.is_negative() ? -t.coeff : t.coeff;
    std::string body;
    if (t.mono.is_one()) {
      body = mag.to_string();
    } else {
      std::string mono;
      for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
        std::uint32_t e = t.mono.exponent(i);
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += ctx_->vars()[i];
        if (e > 1) mono += "^" + std::to_string(e);
      }
      body = mag.is_one() ? mono : mag.to_string() + "*" + mono;
    }
    if (first) {
      out = (t.coeff.is_negative() ? "-" : "") + body;
      first = false;
    } else {
      out += (t.coeff.is_negative() ? " - " : " + ") + body;
    }
  }
  return out;
}

} // namespace wittkit
