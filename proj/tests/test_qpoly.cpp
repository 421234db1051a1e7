#include <catch2/catch_amalgamated.hpp>

#include "glnq/qpoly.hpp"

using namespace glnq;

TEST_CASE("intpoly basics") {
  intpoly z = intpoly::zero();
  CHECK(z.is_zero());
  CHECK(z.degree() == intpoly::neg_infinity);
  CHECK(z.to_string() == "0");

  intpoly p = intpoly::one() - intpoly::monomial(1) + intpoly::monomial(2, 3);
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == -1);
  CHECK(p.coeff(2) == 3);
  CHECK(p.to_string() == "1 - t + 3*t^2");
  CHECK(p.eval(2) == 1 - 2 + 12);
  CHECK((intpoly::monomial(1) - intpoly::one()).to_string() == "-1 + t");

  intpoly a = (intpoly::one() + intpoly::monomial(1)) * (intpoly::one() - intpoly::monomial(1));
  CHECK(a == intpoly::one() - intpoly::monomial(2));
  CHECK(intpoly::divexact(a, intpoly::one() - intpoly::monomial(1)) ==
        intpoly::one() + intpoly::monomial(1));
  CHECK_THROWS_AS(intpoly::divexact(intpoly::monomial(2), intpoly::one() + intpoly::monomial(1)),
                  error);
  CHECK_THROWS_AS(intpoly::divexact(intpoly::one(), intpoly::zero()), error);

  CHECK(p.compose_power(2) == intpoly::one() - intpoly::monomial(2) + intpoly::monomial(4, 3));
  CHECK(intpoly::constant(6).content() == 6);
  CHECK((intpoly::monomial(1, 4) + intpoly::constant(6)).content() == 2);
}

TEST_CASE("poly_gcd") {
  intpoly one_minus_t = intpoly::one() - intpoly::monomial(1);
  intpoly a = one_minus_t * (intpoly::one() + intpoly::monomial(1));      // 1 - t^2
  intpoly b = one_minus_t * one_minus_t;                                  // (1-t)^2
  // leading coefficient is pinned positive, so the gcd comes out as t - 1
  CHECK(poly_gcd(a, b) == -one_minus_t);
  // primitive: contents are stripped
  CHECK(poly_gcd(a * bigint(4), b * bigint(6)).content() == 1);
  CHECK(poly_gcd(intpoly::zero(), b) == b);
  CHECK(poly_gcd(intpoly::constant(4), intpoly::constant(6)) == intpoly::one());
}

TEST_CASE("ratfunc canonical form") {
  intpoly one_minus_t = intpoly::one() - intpoly::monomial(1);
  intpoly one_plus_t = intpoly::one() + intpoly::monomial(1);
  ratfunc r(one_minus_t * one_plus_t, one_plus_t);
  CHECK(r == ratfunc::from_poly(one_minus_t));
  CHECK(r.is_poly());
  CHECK(r.to_string() == "1 - t");

  ratfunc half = ratfunc(intpoly::one(), intpoly::constant(2));
  CHECK(half + half == ratfunc::from_int(1));
  CHECK(half.to_string() == "1 / 2");
  CHECK((half * ratfunc::from_int(2)) == ratfunc::from_int(1));
  CHECK_THROWS_AS(ratfunc(intpoly::one(), intpoly::zero()), error);
  CHECK_THROWS_AS(half / ratfunc(), error);

  // denominator sign pinned positive
  ratfunc s(intpoly::one(), intpoly::constant(-2));
  CHECK(s.den() == intpoly::constant(2));
  CHECK(s.num() == intpoly::constant(-1));

  // reduction plus the positive-leading-denominator rule: 1/(1-t) = -1/(t-1)
  ratfunc t(one_minus_t, one_minus_t * one_minus_t);
  CHECK(t.den() == -one_minus_t);
  CHECK(t.num() == intpoly::constant(-1));
  CHECK(t.degree_diff() == -1);
}

TEST_CASE("phi") {
  CHECK(phi(0) == intpoly::one());
  CHECK(phi(1) == intpoly::one() - intpoly::monomial(1));
  // phi_3 = (1-t)(1-t^2)(1-t^3) = 1 - t - t^2 + t^4 + t^5 - t^6
  intpoly p3 = phi(3);
  CHECK(p3.degree() == 6);
  CHECK(p3.coeff(0) == 1);
  CHECK(p3.coeff(1) == -1);
  CHECK(p3.coeff(2) == -1);
  CHECK(p3.coeff(3) == 0);
  CHECK(p3.coeff(4) == 1);
  CHECK(p3.coeff(5) == 1);
  CHECK(p3.coeff(6) == -1);
  for (int m = 1; m <= 10; ++m) {
    CHECK(phi(m).degree() == m * (m + 1) / 2);
    CHECK(phi(m) == phi(m - 1) * (intpoly::one() - intpoly::monomial(m)));
  }
}

TEST_CASE("green polynomial fixed values") {
  partition two({2}), oneone({1, 1});
  CHECK(green_Q(oneone, oneone) == intpoly::one() + intpoly::monomial(1));
  CHECK(green_Q(two, oneone) == intpoly::one() - intpoly::monomial(1));
  CHECK(green_Q(two, two) == intpoly::one());
  CHECK(green_Q(oneone, two) == intpoly::one());
}

TEST_CASE("green polynomial at the identity shape is the t-factorial") {
  // Q^{1^n}_{1^n} = prod_{i=1}^n (1 + t + ... + t^{i-1})
  for (int n = 1; n <= 8; ++n) {
    intpoly expect = intpoly::one();
    for (int i = 1; i <= n; ++i) {
      std::vector<bigint> ones(static_cast<std::size_t>(i), 1);
      expect = expect * intpoly(std::move(ones));
    }
    CHECK(green_Q(partition::one_to_the(n), partition::one_to_the(n)) == expect);
  }
}

TEST_CASE("green polynomial integrality and degree across all rho") {
  for (int m = 1; m <= 12; ++m) {
    partition lam_id = partition::one_to_the(m);
    for (const auto& rho : enumerate_partitions(m)) {
      intpoly q = green_Q(rho, lam_id);  // divexact inside throws if not integral
      // numerator degree m(m+1)/2, denominator degree |rho| = m, every time
      CHECK(q.degree() == n_lambda(lam_id));
    }
    if (m >= 2) {
      partition lam_tv = merge(partition::one_to_the(m - 2), partition({2}));
      for (const auto& rho : enumerate_partitions(m)) {
        intpoly q = green_Q(rho, lam_tv);
        CHECK(q.degree() <= n_lambda(lam_tv));
      }
      // top shape: rho = 1^m gives the full-degree polynomial
      CHECK(green_Q(partition::one_to_the(m), lam_tv).degree() == n_lambda(lam_tv));
    }
  }
}

TEST_CASE("green polynomial value at t=1") {
  // at rho = 1^m the identity-shape polynomial evaluates to m!
  for (int m = 1; m <= 8; ++m)
    CHECK(green_Q(partition::one_to_the(m), partition::one_to_the(m)).eval(1) ==
          factorial(static_cast<unsigned>(m)));
}

TEST_CASE("green polynomial rejects unsupported shapes") {
  CHECK_THROWS_AS(green_Q(partition({3}), partition({3})), error);
  CHECK_THROWS_AS(green_Q(partition({2, 2}), partition({2, 2})), error);
  CHECK_THROWS_AS(green_Q(partition({2}), partition({1, 1, 1})), error);  // size mismatch
}

TEST_CASE("cancellation identity") {
  for (int s = 1; s <= 6; ++s)
    for (int v = 1; s * v <= 12; ++v) {
      CHECK(cancel_sum(s, v, green_family::identity) ==
            closed_form_rhs(s, v, green_family::identity));
      if (s > 1)
        CHECK(cancel_sum(s, v, green_family::transvection) ==
              closed_form_rhs(s, v, green_family::transvection));
    }
  CHECK_THROWS_AS(cancel_sum(1, 3, green_family::transvection), error);
  CHECK_THROWS_AS(closed_form_rhs(1, 3, green_family::transvection), error);
}

TEST_CASE("cancellation fixed value") {
  // s=2, v=1, transvection shape: the sum is the constant 1/2
  ratfunc r = cancel_sum(2, 1, green_family::transvection);
  CHECK(r == ratfunc(intpoly::one(), intpoly::constant(2)));
}

TEST_CASE("cancellation degree") {
  // transvection family: deg(num) - deg(den) = (n^2 - (v+2)n + 2)/2,
  // invariant under reduction so it can be read off either side
  for (int s = 2; s <= 5; ++s)
    for (int v = 1; s * v <= 10; ++v) {
      int n = s * v;
      CHECK(cancel_sum(s, v, green_family::transvection).degree_diff() ==
            (n * n - (v + 2) * n + 2) / 2);
      CHECK(closed_form_rhs(s, v, green_family::transvection).degree_diff() ==
            (n * n - (v + 2) * n + 2) / 2);
    }
}

TEST_CASE("gaussian binomial") {
  CHECK(gauss_grassmannian(0, 0) == intpoly::one());
  CHECK(gauss_grassmannian(4, 2).eval(2) == 35);
  // symmetry and the product formula
  for (int n = 0; n <= 8; ++n)
    for (int a = 0; a <= n; ++a) {
      intpoly g = gauss_grassmannian(n, a);
      CHECK(g == gauss_grassmannian(n, n - a));
      intpoly num = intpoly::one(), den = intpoly::one();
      for (int i = 0; i < a; ++i) {
        num = num * (intpoly::one() - intpoly::monomial(n - i));
        den = den * (intpoly::one() - intpoly::monomial(i + 1));
      }
      CHECK(g == intpoly::divexact(num, den));
    }
  CHECK_THROWS_AS(gauss_grassmannian(2, 3), error);
  CHECK_THROWS_AS(gauss_grassmannian(2, -1), error);
}
