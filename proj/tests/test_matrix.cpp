#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "glnq/classlabel.hpp"
#include "glnq/matrix.hpp"

using namespace glnq;

TEST_CASE("matrix basics") {
  Fq F = Fq::prime(3);
  matf a = parse_matrix(F, "1,2;0,1");
  CHECK(a.n() == 2);
  CHECK(a.at(0, 1) == 2);
  CHECK(a.to_string() == "1,2;0,1");
  CHECK(parse_matrix(F, a.to_string()) == a);
  CHECK_THROWS_AS(parse_matrix(F, "1,2;0"), error);
  CHECK_THROWS_AS(parse_matrix(F, "1,5;0,1"), error);  // entry out of range
  CHECK_THROWS_AS(parse_matrix(F, ""), error);

  matf i = matf::identity(F, 2);
  CHECK(a * i == a);
  CHECK(i * a == a);
  CHECK(a + (i - i) == a);
  CHECK(mat_pow(a, 3) == a * a * a);
  CHECK(matf::scalar(F, 2, 2).is_scalar());
  CHECK(!a.is_scalar());
}

TEST_CASE("index round trip") {
  Fq F = Fq::prime(3);
  for (std::uint64_t idx = 0; idx < 81; ++idx) {
    matf m = matf::from_index(F, 2, idx);
    CHECK(m.to_index() == idx);
  }
}

TEST_CASE("det and rank against brute force over F_2 and F_3") {
  for (std::uint32_t p : {2u, 3u}) {
    Fq F = Fq::prime(p);
    std::uint64_t total = 1;
    for (int i = 0; i < 4; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      matf m = matf::from_index(F, 2, idx);
      // 2x2 determinant by the formula
      Fq::elem ad = F.mul(m.at(0, 0), m.at(1, 1));
      Fq::elem bc = F.mul(m.at(0, 1), m.at(1, 0));
      CHECK(det(m) == F.sub(ad, bc));
      // rank via kernel size: #solutions of mx = 0 is q^(n - rank)
      int kernel = 0;
      for (std::uint64_t xv = 0; xv < p * p; ++xv) {
        Fq::elem x0 = static_cast<Fq::elem>(xv % p), x1 = static_cast<Fq::elem>(xv / p);
        Fq::elem y0 = F.add(F.mul(m.at(0, 0), x0), F.mul(m.at(0, 1), x1));
        Fq::elem y1 = F.add(F.mul(m.at(1, 0), x0), F.mul(m.at(1, 1), x1));
        if (y0 == 0 && y1 == 0) ++kernel;
      }
      int expect_rank = 2;
      if (kernel == static_cast<int>(p)) expect_rank = 1;
      if (kernel == static_cast<int>(p * p)) expect_rank = 0;
      CHECK(rank(m) == expect_rank);
      if (det(m) != 0) {
        CHECK(inverse(m) * m == matf::identity(F, 2));
      } else {
        CHECK_THROWS_AS(inverse(m), error);
      }
    }
  }
}

TEST_CASE("group order by brute determinant count") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Fq F = Fq::prime(p);
    std::uint64_t total = 1, found = 0;
    for (int i = 0; i < 4; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx)
      if (det(matf::from_index(F, 2, idx)) != 0) ++found;
    CHECK(bigint(found) == group_order_gl(2, p));
  }
  Fq F2 = Fq::prime(2);
  std::uint64_t found3 = 0;
  for (std::uint64_t idx = 0; idx < 512; ++idx)
    if (det(matf::from_index(F2, 3, idx)) != 0) ++found3;
  CHECK(found3 == 168);
  CHECK(group_order_gl(3, 2) == 168);
  CHECK(group_order_gl(3, 3) == 11232);
  CHECK(group_order_sl(2, 3) == 24);
  CHECK(group_order_sl(3, 7) == group_order_gl(3, 7) / 6);
}

TEST_CASE("char_poly fundamentals") {
  Fq F = Fq::prime(5);
  matf m = parse_matrix(F, "1,2;3,4");
  fqpoly chi = char_poly(m);
  CHECK(chi.degree() == 2);
  CHECK(chi.is_monic());
  // x^2 - (trace) x + det
  CHECK(chi.coeff(1) == F.neg(F.add(1, 4)));
  CHECK(chi.coeff(0) == det(m));

  // char poly of a companion matrix is the polynomial itself
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Fq Fp = Fq::prime(p);
    std::uint64_t count = 1;
    for (int i = 0; i < 3; ++i) count *= p;
    for (std::uint64_t cv = 0; cv < count; ++cv) {
      std::vector<Fq::elem> cc;
      std::uint64_t v = cv;
      for (int i = 0; i < 3; ++i, v /= p) cc.push_back(static_cast<Fq::elem>(v % p));
      cc.push_back(1);
      fqpoly f(Fp, std::move(cc));
      CHECK(char_poly(companion(f)) == f);
    }
  }
}

TEST_CASE("cayley hamilton, exhaustive over GL-free 2x2 and sampled 3x3") {
  Fq F3 = Fq::prime(3);
  for (std::uint64_t idx = 0; idx < 81; ++idx) {
    matf m = matf::from_index(F3, 2, idx);
    matf z = eval_at_matrix(char_poly(m), m);
    CHECK(z == matf(F3, 2));
  }
  Fq F4 = Fq::make(2, 2);
  for (std::uint64_t idx = 0; idx < (1u << 18); idx += 257) {
    matf m = matf::from_index(F4, 3, idx);
    CHECK(eval_at_matrix(char_poly(m), m) == matf(F4, 3));
  }
}
