#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hecsbox/field.hpp>

#include <set>
#include <vector>

using namespace hecsbox;

namespace {

const mpz_class kLargePrime("10000000000000000000000000000001233");

PrimeField f11() { return PrimeField(mpz_class(11)); }

}  // namespace

TEST_CASE("integer parsing accepts decimal and hex") {
  CHECK(parse_integer("42") == 42);
  CHECK(parse_integer("0x2A") == 42);
  CHECK(parse_integer("0X2a") == 42);
  CHECK(parse_integer("-7") == -7);
  CHECK(parse_integer("10000000000000000000000000000001233") == kLargePrime);
  CHECK_THROWS_AS(parse_integer("12q"), ParseError);
  CHECK_THROWS_AS(parse_integer(""), ParseError);
  CHECK_THROWS_AS(parse_integer("0x"), ParseError);
  CHECK_THROWS_AS(parse_integer("--3"), ParseError);
}

TEST_CASE("field construction enforces odd primality") {
  CHECK_NOTHROW(PrimeField{mpz_class(11)});
  CHECK_NOTHROW(PrimeField{kLargePrime});
  CHECK_THROWS_AS(PrimeField(mpz_class(2)), InvalidModulus);
  CHECK_THROWS_AS(PrimeField(mpz_class(1)), InvalidModulus);
  CHECK_THROWS_AS(PrimeField(mpz_class(0)), InvalidModulus);
  CHECK_THROWS_AS(PrimeField(mpz_class(-11)), InvalidModulus);
  CHECK_THROWS_AS(PrimeField(mpz_class(91)), InvalidModulus);  // 7 * 13
  CHECK_THROWS_AS(PrimeField::from_string("4"), InvalidModulus);
}

TEST_CASE("elements are canonical representatives") {
  PrimeField f = f11();
  CHECK(f.element(mpz_class(15)).value() == 4);
  CHECK(f.element(mpz_class(-3)).value() == 8);
  CHECK(f.element(mpz_class(0)).value() == 0);
  CHECK(f.element_from_string("0xC").value() == 1);
}

TEST_CASE("arithmetic on F_11") {
  PrimeField f = f11();
  CHECK((f.element(7) + f.element(8)).value() == 4);
  CHECK((f.element(0) + f.element(9)).value() == 9);
  CHECK((f.element(3) * f.element(4)).value() == 1);
  CHECK((-f.element(0)).value() == 0);
  CHECK((f.element(2) - f.element(5)).value() == 8);
}

TEST_CASE("wraparound at the large prime") {
  PrimeField f(kLargePrime);
  CHECK((f.element(kLargePrime - 1) + f.element(1)).value() == 0);
  CHECK((f.element(2) * f.element((kLargePrime + 1) / 2)).value() == 1);
  CHECK(f.element(2).inv().value() == (kLargePrime + 1) / 2);
}

TEST_CASE("mixing fields is a hard error") {
  PrimeField a = f11();
  PrimeField b(mpz_class(13));
  CHECK_THROWS_AS(a.element(1) + b.element(1), FieldMismatch);
  CHECK_THROWS_AS(a.element(1) * b.element(1), FieldMismatch);
  CHECK(a.element(1) != b.element(1));
}

TEST_CASE("inverse") {
  PrimeField f = f11();
  CHECK(f.element(3).inv().value() == 4);
  CHECK(f.element(1).inv().value() == 1);
  CHECK_THROWS_AS(f.element(0).inv(), DivisionByZero);
}

TEST_CASE("pow") {
  PrimeField f = f11();
  CHECK(f.element(2).pow(10).value() == 1);  // Fermat
  CHECK(f.element(5).pow(0).value() == 1);
  CHECK(f.element(3).pow(2).value() == 9);
  CHECK(f.element(0).pow(0).value() == 1);
}

TEST_CASE("squares mod 11 against exhaustive oracle") {
  PrimeField f = f11();
  std::set<mpz_class> squares;
  for (long y = 0; y < 11; ++y) squares.insert(mpz_class(y * y % 11));
  for (long a = 0; a < 11; ++a) {
    CAPTURE(a);
    CHECK(f.element(a).is_square() == (squares.count(mpz_class(a)) != 0));
  }
  CHECK(f.element(3).is_square());
  CHECK(f.element(3).sqrt().value() == 5);  // roots {5, 6}; canonical is 5
  CHECK_FALSE(f.element(2).is_square());
  CHECK_THROWS_AS(f.element(2).sqrt(), NotASquare);
}

TEST_CASE("sqrt(x^2) is one of the two roots, exhaustively over F_11") {
  PrimeField f = f11();
  for (long x = 0; x < 11; ++x) {
    FieldElement e = f.element(x);
    FieldElement r = (e * e).sqrt();
    CHECK((r == e || r == -e));
    CHECK(r.value() <= (-r).value());  // canonical: the smaller root
  }
}

TEST_CASE("sqrt at the large prime (p = 1 mod 4 exercises Tonelli-Shanks)") {
  PrimeField f(kLargePrime);
  REQUIRE(kLargePrime % 4 == 1);
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(20240808UL);
  for (int i = 0; i < 50; ++i) {
    FieldElement x = f.element(rng.get_z_range(kLargePrime));
    FieldElement sq = x * x;
    CHECK(sq.is_square());
    FieldElement r = sq.sqrt();
    CHECK((r == x || r == -x));
    CHECK(r.value() <= (-r).value());
    CHECK((r * r) == sq);
  }
  CHECK(f.element(0).sqrt().value() == 0);
}

TEST_CASE("field axioms sampled at both scales") {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(77UL);
  for (const mpz_class& p : {mpz_class(11), kLargePrime}) {
    PrimeField f(p);
    for (int i = 0; i < 200; ++i) {
      FieldElement a = f.element(rng.get_z_range(p));
      FieldElement b = f.element(rng.get_z_range(p));
      FieldElement c = f.element(rng.get_z_range(p));
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) CHECK((a * a.inv()).value() == 1);
      // every result canonical
      CHECK((a * b).value() >= 0);
      CHECK((a * b).value() < p);
      CHECK((a - b).value() >= 0);
      CHECK((a - b).value() < p);
    }
  }
}
