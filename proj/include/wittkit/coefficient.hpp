#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "wittkit/errors.hpp"

namespace wittkit {

// Ground field descriptor: the rationals, or a prime field F_p with
// p <= 2^31.  Value type, cheap to copy and compare.
class Field {
public:
  static Field rationals();
  static Field prime(std::uint32_t p); // throws Error unless p is prime, p <= 2^31

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; } // 0 for Q

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string to_string() const; // "Q" or "Fp 7"

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

// Exact scalar in Q or F_p.  Immutable value semantics; mixing fields in
// arithmetic throws IncompatibleError.
class Coefficient {
public:
  Coefficient() : field_(Field::rationals()), rat_(0) {}

  static Coefficient zero(const Field& f);
  static Coefficient one(const Field& f);
  static Coefficient from_integer(const Field& f, long v);
  static Coefficient from_rational(const mpq_class& q); // field Q
  static Coefficient from_mpz(const Field& f, const mpz_class& v);
  static Coefficient from_residue(const Field& f, std::uint32_t v); // F_p only

  // Parses "-3", "2/5", "7" in the given field.  In F_p the slash form
  // means division, e.g. "1/2" in F_5 is 3.
  static Coefficient parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator/(const Coefficient& o) const; // throws Error on /0
  Coefficient operator-() const;
  Coefficient inverse() const; // throws Error on 0

  bool operator==(const Coefficient& o) const;
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  // Only meaningful for field() == Q.
  const mpq_class& rational() const;
  // Only meaningful for prime fields: canonical residue in [0, p).
  std::uint32_t residue() const;

  // True when the rational is negative.  Prime-field values are never
  // negative (residues are canonical), which the printer relies on.
  bool is_negative() const;

  std::string to_string() const; // "-3/2", "4"; deterministic

private:
  Coefficient(const Field& f, mpq_class q, std::uint32_t v)
      : field_(f), rat_(std::move(q)), val_(v) {}
  void check_same_field(const Coefficient& o) const;

  Field field_;
  mpq_class rat_;        // used when field_ is Q
  std::uint32_t val_ = 0; // used when field_ is F_p
};

} // namespace wittkit
