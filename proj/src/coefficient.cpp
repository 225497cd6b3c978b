#include "wittkit/coefficient.hpp"

#include <atomic>

#include "wittkit/config.hpp"

namespace wittkit {

namespace {

std::atomic<std::uint64_t> g_max_degree{64};

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// x^-1 mod p by extended Euclid.
std::uint32_t mod_inverse(std::uint32_t x, std::uint32_t p) {
  if (x == 0) throw Error("division by zero in F_p");
  std::int64_t a = x, b = p, u = 1, v = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    a -= q * b; std::swap(a, b);
    u -= q * v; std::swap(u, v);
  }
  // a == gcd == 1 since p prime and x != 0 mod p
  std::int64_t r = u % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

} // namespace

std::uint64_t max_degree() { return g_max_degree.load(std::memory_order_relaxed); }
void set_max_degree(std::uint64_t cap) { g_max_degree.store(cap, std::memory_order_relaxed); }

Field Field::rationals() { return Field(0); }

Field Field::prime(std::uint32_t p) {
  if (p > (1u << 31))
    throw Error("prime field characteristic exceeds 2^31: " + std::to_string(p));
  if (!is_prime_u32(p))
    throw Error("not a prime: " + std::to_string(p));
  return Field(p);
}

std::string Field::to_string() const {
  return is_rationals() ? "Q" : "Fp " + std::to_string(p_);
}

Coefficient Coefficient::zero(const Field& f) { return Coefficient(f, mpq_class(0), 0); }

Coefficient Coefficient::one(const Field& f) {
  return f.is_rationals() ? Coefficient(f, mpq_class(1), 0)
                          : Coefficient(f, mpq_class(0), 1 % f.characteristic());
}

Coefficient Coefficient::from_integer(const Field& f, long v) {
  if (f.is_rationals()) return Coefficient(f, mpq_class(v), 0);
  std::int64_t p = f.characteristic();
  std::int64_t r = static_cast<std::int64_t>(v) % p;
  if (r < 0) r += p;
  return Coefficient(f, mpq_class(0), static_cast<std::uint32_t>(r));
}

Coefficient Coefficient::from_rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return Coefficient(Field::rationals(), c, 0);
}

Coefficient Coefficient::from_mpz(const Field& f, const mpz_class& v) {
  if (f.is_rationals()) return from_rational(mpq_class(v));
  mpz_class r = v % f.characteristic();
  if (r < 0) r += f.characteristic();
  return from_residue(f, static_cast<std::uint32_t>(r.get_ui()));
}

Coefficient Coefficient::from_residue(const Field& f, std::uint32_t v) {
  if (!f.is_prime_field()) throw Error("from_residue requires a prime field");
  return Coefficient(f, mpq_class(0), v % f.characteristic());
}

Coefficient Coefficient::parse(const Field& f, const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    try {
      mpz_class n(text);
      if (f.is_rationals()) return from_rational(mpq_class(n));
      mpz_class r = n % f.characteristic();
      if (r < 0) r += f.characteristic();
      return from_residue(f, static_cast<std::uint32_t>(r.get_ui()));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad coefficient literal: " + text);
    }
  }
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  Coefficient a = parse(f, num), b = parse(f, den);
  return a / b;
}

bool Coefficient::is_zero() const {
  return field_.is_rationals() ? rat_ == 0 : val_ == 0;
}

bool Coefficient::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : val_ == 1 % field_.characteristic();
}

void Coefficient::check_same_field(const Coefficient& o) const {
  if (field_ != o.field_)
    throw IncompatibleError("coefficients from different fields: " +
                            field_.to_string() + " vs " + o.field_.to_string());
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  check_same_field(o);
  if (field_.is_rationals()) return Coefficient(field_, rat_ + o.rat_, 0);
  std::uint64_t s = static_cast<std::uint64_t>(val_) + o.val_;
  return Coefficient(field_, mpq_class(0),
                     static_cast<std::uint32_t>(s % field_.characteristic()));
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
  return *this + (-o);
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
  check_same_field(o);
  if (field_.is_rationals()) return Coefficient(field_, rat_ * o.rat_, 0);
  std::uint64_t s = static_cast<std::uint64_t>(val_) * o.val_;
  return Coefficient(field_, mpq_class(0),
                     static_cast<std::uint32_t>(s % field_.characteristic()));
}

Coefficient Coefficient::operator/(const Coefficient& o) const {
  return *this * o.inverse();
}

Coefficient Coefficient::operator-() const {
  if (field_.is_rationals()) return Coefficient(field_, -rat_, 0);
  return Coefficient(field_, mpq_class(0),
                     val_ == 0 ? 0 : field_.characteristic() - val_);
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  if (field_.is_rationals()) return Coefficient(field_, 1 / rat_, 0);
  return Coefficient(field_, mpq_class(0), mod_inverse(val_, field_.characteristic()));
}

bool Coefficient::operator==(const Coefficient& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rationals() ? rat_ == o.rat_ : val_ == o.val_;
}

const mpq_class& Coefficient::rational() const {
  if (!field_.is_rationals()) throw Error("rational() on a prime-field value");
  return rat_;
}

std::uint32_t Coefficient::residue() const {
  if (!field_.is_prime_field()) throw Error("residue() on a rational value");
  return val_;
}

bool Coefficient::is_negative() const {
  return field_.is_rationals() && rat_ < 0;
}

std::string Coefficient::to_string() const {
  if (field_.is_rationals()) return rat_.get_str();
  return std::to_string(val_);
}

} // namespace wittkit
