#include <doctest.h>

#include "wittkit/coefficient.hpp"

using namespace wittkit;

TEST_CASE("field descriptors") {
  Field q = Field::rationals();
  Field f5 = Field::prime(5);
  CHECK(q.is_rationals());
  CHECK(!q.is_prime_field());
  CHECK(q.characteristic() == 0);
  CHECK(f5.is_prime_field());
  CHECK(f5.characteristic() == 5);
  CHECK(q != f5);
  CHECK(f5 == Field::prime(5));
  CHECK(q.to_string() == "Q");
  CHECK(f5.to_string() == "Fp 5");

  CHECK_THROWS_AS(Field::prime(4), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK_THROWS_AS(Field::prime(0), Error);
  CHECK_NOTHROW(Field::prime(2));
  CHECK_NOTHROW(Field::prime(2147483647)); // 2^31 - 1 is prime
}

TEST_CASE("rational arithmetic stays in lowest terms") {
  Field q = Field::rationals();
  Coefficient a = Coefficient::parse(q, "2/4");
  CHECK(a.to_string() == "1/2");
  Coefficient b = Coefficient::parse(q, "-3");
  CHECK((a * b).to_string() == "-3/2");
  CHECK((a + a).is_one());
  CHECK((a - a).is_zero());
  CHECK((b / b).is_one());
  CHECK((-b).to_string() == "3");
  CHECK(b.is_negative());
  CHECK(!a.is_negative());
  CHECK(a.inverse().to_string() == "2");
  CHECK(Coefficient::from_integer(q, -6).rational() == mpq_class(-6));
}

TEST_CASE("prime field arithmetic uses canonical residues") {
  Field f5 = Field::prime(5);
  Coefficient a = Coefficient::from_integer(f5, 7);
  CHECK(a.residue() == 2);
  Coefficient b = Coefficient::from_integer(f5, -1);
  CHECK(b.residue() == 4);
  CHECK(!b.is_negative()); // residues are canonical, never negative
  CHECK((a + b).residue() == 1);
  CHECK((a * b).residue() == 3);
  CHECK(a.inverse().residue() == 3); // 2*3 = 6 = 1
  CHECK(Coefficient::parse(f5, "1/2").residue() == 3);
  CHECK(Coefficient::parse(f5, "9").residue() == 4);
  CHECK(Coefficient::from_mpz(f5, mpz_class("123456789012345678901")) ==
        Coefficient::from_mpz(f5, mpz_class("123456789012345678901") % 5));
}

TEST_CASE("division by zero and zero inverse throw") {
  Field q = Field::rationals();
  Coefficient one = Coefficient::one(q);
  Coefficient zero = Coefficient::zero(q);
  CHECK_THROWS_AS(one / zero, Error);
  CHECK_THROWS_AS(zero.inverse(), Error);
  Field f3 = Field::prime(3);
  CHECK_THROWS_AS(Coefficient::zero(f3).inverse(), Error);
}

TEST_CASE("mixing fields throws IncompatibleError") {
  Coefficient a = Coefficient::one(Field::rationals());
  Coefficient b = Coefficient::one(Field::prime(5));
  CHECK_THROWS_AS(a + b, IncompatibleError);
  CHECK_THROWS_AS(a * b, IncompatibleError);
}

TEST_CASE("parse accepts integers and fractions, rejects junk") {
  Field q = Field::rationals();
  CHECK(Coefficient::parse(q, "7").to_string() == "7");
  CHECK(Coefficient::parse(q, "-2/6").to_string() == "-1/3");
  CHECK_THROWS_AS(Coefficient::parse(q, "1/0"), Error);
  CHECK_THROWS_AS(Coefficient::parse(q, "abc"), Error);
  CHECK_THROWS_AS(Coefficient::parse(q, ""), Error);
  // the printed form parses back to an equal value
  for (const char* text : {"-3/2", "0", "41", "5/7"}) {
    Coefficient c = Coefficient::parse(q, text);
    CHECK(Coefficient::parse(q, c.to_string()) == c);
  }
}
