#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "glnq/field.hpp"

using namespace glnq;

static const std::vector<std::uint64_t> prime_powers_to_64 = {
    2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64};

static Fq field_of_size(std::uint64_t q) {
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  std::uint64_t v = q;
  while (v > 1) {
    v /= p;
    ++k;
  }
  return Fq::make(p, k);
}

TEST_CASE("field sizes and characteristic") {
  for (std::uint64_t q : prime_powers_to_64) {
    Fq F = field_of_size(q);
    CHECK(F.q() == q);
    CHECK(q % F.characteristic() == 0);
  }
  CHECK_THROWS_AS(Fq::prime(6), error);
  CHECK_THROWS_AS(Fq::prime(1), error);
  CHECK_THROWS_AS(Fq::make(4, 2), error);
}

TEST_CASE("fermat: x^q = x in every field up to 64") {
  for (std::uint64_t q : prime_powers_to_64) {
    Fq F = field_of_size(q);
    for (std::uint64_t a = 0; a < q; ++a)
      CHECK(F.pow(static_cast<Fq::elem>(a), q) == a);
  }
}

TEST_CASE("field laws, sampled fields exhaustively") {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 8ull, 9ull, 25ull, 27ull}) {
    Fq F = field_of_size(q);
    for (std::uint64_t a = 0; a < q; ++a) {
      CHECK(F.add(static_cast<Fq::elem>(a), F.neg(static_cast<Fq::elem>(a))) == 0);
      if (a != 0) CHECK(F.mul(static_cast<Fq::elem>(a), F.inv(static_cast<Fq::elem>(a))) == 1);
      for (std::uint64_t b = 0; b < q; ++b) {
        Fq::elem ea = static_cast<Fq::elem>(a), eb = static_cast<Fq::elem>(b);
        CHECK(F.add(ea, eb) == F.add(eb, ea));
        CHECK(F.mul(ea, eb) == F.mul(eb, ea));
        // Frobenius is additive
        CHECK(F.frobenius(F.add(ea, eb)) == F.add(F.frobenius(ea), F.frobenius(eb)));
        for (std::uint64_t c = 0; c < q; c += (q > 9 ? 3 : 1)) {
          Fq::elem ec = static_cast<Fq::elem>(c);
          CHECK(F.mul(ea, F.add(eb, ec)) == F.add(F.mul(ea, eb), F.mul(ea, ec)));
          CHECK(F.mul(F.mul(ea, eb), ec) == F.mul(ea, F.mul(eb, ec)));
        }
      }
    }
    CHECK_THROWS_AS(F.inv(0), error);
  }
}

TEST_CASE("canonical moduli") {
  CHECK(Fq::make(2, 2).modulus() == std::vector<Fq::elem>{1, 1});  // x^2+x+1
  CHECK(Fq::make(2, 3).modulus() == std::vector<Fq::elem>{1, 1, 0});  // x^3+x+1
  CHECK(Fq::make(2, 4).modulus() == std::vector<Fq::elem>{1, 1, 0, 0});  // x^4+x+1
  CHECK(Fq::make(3, 2).modulus() == std::vector<Fq::elem>{1, 0});  // x^2+1
  // same construction twice gives the same field
  CHECK(Fq::make(5, 2).same_field(Fq::make(5, 2)));
  CHECK(!Fq::make(5, 2).same_field(Fq::make(5, 1)));
}

TEST_CASE("tower embedding is the identity on encodings") {
  for (std::uint64_t q : {3ull, 4ull, 5ull, 9ull}) {
    Fq F = field_of_size(q);
    Fq E = Fq::extension(F, 2);
    CHECK(E.q() == q * q);
    CHECK(E.degree_over_base() == 2);
    CHECK(E.base_field().same_field(F));
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b) {
        CHECK(E.add(static_cast<Fq::elem>(a), static_cast<Fq::elem>(b)) ==
              F.add(static_cast<Fq::elem>(a), static_cast<Fq::elem>(b)));
        CHECK(E.mul(static_cast<Fq::elem>(a), static_cast<Fq::elem>(b)) ==
              F.mul(static_cast<Fq::elem>(a), static_cast<Fq::elem>(b)));
      }
    // relative Frobenius x -> x^q fixes exactly the base field
    int fixed = 0;
    for (std::uint64_t a = 0; a < E.q(); ++a)
      if (E.pow(static_cast<Fq::elem>(a), q) == a) ++fixed;
    CHECK(fixed == static_cast<int>(q));
  }
}

TEST_CASE("generator and orders") {
  for (std::uint64_t q : prime_powers_to_64) {
    Fq F = field_of_size(q);
    Fq::elem g = F.generator();
    CHECK(F.mul_order(g) == q - 1);
    // smallest generator: nothing below it generates
    for (Fq::elem a = 1; a < g; ++a) CHECK(F.mul_order(a) < q - 1);
    for (std::uint64_t a = 1; a < q; ++a) CHECK((q - 1) % F.mul_order(static_cast<Fq::elem>(a)) == 0);
  }
  CHECK(Fq::prime(7).generator() == 3);
  CHECK(Fq::prime(31).generator() == 3);
}

TEST_CASE("slow path matches tables") {
  // 1031 is prime and above the table limit, so ops run the direct path;
  // check the arithmetic against plain modular arithmetic
  Fq F = Fq::prime(1031);
  for (std::uint64_t a = 0; a < 1031; a += 17)
    for (std::uint64_t b = 0; b < 1031; b += 29) {
      CHECK(F.add(static_cast<Fq::elem>(a), static_cast<Fq::elem>(b)) == (a + b) % 1031);
      CHECK(F.mul(static_cast<Fq::elem>(a), static_cast<Fq::elem>(b)) == a * b % 1031);
      if (a != 0) CHECK(F.mul(static_cast<Fq::elem>(a), F.inv(static_cast<Fq::elem>(a))) == 1);
    }
}

TEST_CASE("parse_field") {
  CHECK(parse_field("9").q() == 9);
  CHECK(parse_field("9").characteristic() == 3);
  CHECK(parse_field("2^5").q() == 32);
  CHECK(parse_field("31").q() == 31);
  CHECK_THROWS_AS(parse_field("6"), error);
  CHECK_THROWS_AS(parse_field("12"), error);
  CHECK_THROWS_AS(parse_field("x"), error);
  CHECK_THROWS_AS(parse_field("1"), error);
}

TEST_CASE("from_int and check") {
  Fq F5 = Fq::prime(5);
  CHECK(F5.from_int(12) == 2);
  Fq F9 = Fq::make(3, 2);
  CHECK_THROWS_AS(F9.from_int(9), error);   // extension encodings are not residues
  CHECK_THROWS_AS(F9.check(9), error);
  CHECK(F9.check(8) == 8);
}
