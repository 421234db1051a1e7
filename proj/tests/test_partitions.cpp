#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "glnq/intpoly.hpp"
#include "glnq/partition.hpp"
#include "glnq/type_tau.hpp"

using namespace glnq;

// p(n) by Euler's pentagonal recurrence, independent of the enumerator
static std::vector<bigint> partition_counts(int upto) {
  std::vector<bigint> p(static_cast<std::size_t>(upto) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= upto; ++n) {
    bigint acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      bigint sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= n) acc += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

TEST_CASE("partition enumeration counts") {
  auto p = partition_counts(20);
  // a few fixed values as a sanity anchor on the recurrence itself
  CHECK(p[4] == 5);
  CHECK(p[10] == 42);
  CHECK(p[20] == 627);
  for (int n = 0; n <= 14; ++n) {
    auto all = enumerate_partitions(n);
    CHECK(bigint(all.size()) == p[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("partition enumeration order and uniqueness") {
  for (int n = 1; n <= 10; ++n) {
    auto all = enumerate_partitions(n);
    CHECK(all.front().parts() == std::vector<int>{n});
    CHECK(all.back() == partition::one_to_the(n));
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(all[i].size() == n);
      CHECK(seen.insert(all[i].parts()).second);
      if (i > 0) CHECK(partition_less(all[i - 1], all[i]));
    }
  }
}

TEST_CASE("conjugate") {
  CHECK(partition({4, 2, 1}).conjugate() == partition({3, 2, 1, 1}));
  CHECK(partition({2, 1}).conjugate() == partition({2, 1}));
  CHECK(partition().conjugate() == partition());
  CHECK(partition({5}).conjugate() == partition::one_to_the(5));
  for (int n = 0; n <= 10; ++n)
    for (const auto& lam : enumerate_partitions(n)) {
      CHECK(lam.conjugate().conjugate() == lam);
      CHECK(lam.conjugate().size() == n);
    }
}

TEST_CASE("n_lambda against the conjugate-side definition") {
  CHECK(n_lambda(partition({2, 2})) == 2);
  CHECK(n_lambda(partition::one_to_the(5)) == 10);
  CHECK(n_lambda(partition({5})) == 0);
  for (int n = 0; n <= 10; ++n)
    for (const auto& lam : enumerate_partitions(n)) {
      partition conj = lam.conjugate();
      int via_conj = 0;
      for (int x : conj.parts()) via_conj += x * (x - 1) / 2;
      CHECK(n_lambda(lam) == via_conj);
    }
}

TEST_CASE("z_rho") {
  CHECK(z_rho(partition({2, 1, 1})) == 4);
  CHECK(z_rho(partition({3})) == 3);
  CHECK(z_rho(partition::one_to_the(4)) == 24);
  // sum over rho of n!/z_rho counts all permutations of S_n
  for (int n = 1; n <= 10; ++n) {
    bigint total = 0;
    for (const auto& rho : enumerate_partitions(n)) {
      bigint z = z_rho(rho);
      CHECK(factorial(static_cast<unsigned>(n)) % z == 0);
      total += factorial(static_cast<unsigned>(n)) / z;
    }
    CHECK(total == factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("z_rho under stretching") {
  // stretching multiplies z by s once per part: z(p_s(mu)) = s^length(mu) * z(mu).
  // (Not s^{|mu|}: that only matches when mu = 1^v, e.g. z((4)) = 4 while
  // 2^{|(2)|} * z((2)) would be 8.)
  CHECK(z_rho(partition({4})) == 4);
  CHECK(z_rho(stretch(partition({2}), 2)) == 4);
  for (int s = 1; s <= 6; ++s)
    for (int n = 1; n <= 8; ++n)
      for (const auto& mu : enumerate_partitions(n))
        CHECK(z_rho(stretch(mu, s)) ==
              big_pow(s, static_cast<unsigned>(mu.num_parts())) * z_rho(mu));
}

TEST_CASE("stretch and merge") {
  CHECK(stretch(partition({2, 1}), 2) == partition({4, 2}));
  CHECK(stretch(partition(), 3) == partition());
  CHECK(merge(partition({3, 1}), partition({2, 1})) == partition({3, 2, 1, 1}));
  for (const auto& lam : enumerate_partitions(6)) {
    CHECK(stretch(lam, 1) == lam);
    CHECK(stretch(lam, 3).size() == 18);
  }
}

TEST_CASE("partition text forms") {
  CHECK(partition({2, 1, 1}).to_string() == "2,1,1");
  CHECK(partition({2, 1, 1}).to_exponent_string() == "1^2 2");
  CHECK(partition().to_string() == "-");
  CHECK(parse_partition("2,1,1") == partition({2, 1, 1}));
  CHECK(parse_partition("1^2 2") == partition({2, 1, 1}));
  CHECK(parse_partition("3") == partition({3}));
  CHECK(parse_partition("-") == partition());
  CHECK(parse_partition("") == partition());
  CHECK(parse_partition(" 2, 1 ,1 ") == partition({2, 1, 1}));
  CHECK_THROWS_AS(parse_partition("0,1"), error);
  CHECK_THROWS_AS(parse_partition("a"), error);
  for (int n = 0; n <= 8; ++n)
    for (const auto& lam : enumerate_partitions(n)) {
      CHECK(parse_partition(lam.to_string()) == lam);
      CHECK(parse_partition(lam.to_exponent_string()) == lam);
    }
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(partition({0}), error);
  CHECK_THROWS_AS(partition({-1, 2}), error);
  CHECK_THROWS_AS(enumerate_partitions(-1), error);
}

// independent count of types of degree n: coefficient of x^n in
// prod over nonempty partitions kappa of (1 + sum_{mu nonempty} x^{|kappa||mu|})
static bigint type_count_oracle(int n) {
  auto p = partition_counts(n);
  intpoly gen = intpoly::one();
  for (int ks = 1; ks <= n; ++ks) {
    // one factor per key of size ks; p(ks) keys of that size
    std::vector<bigint> factor_c(static_cast<std::size_t>(n) + 1, 0);
    factor_c[0] = 1;
    for (int vs = 1; ks * vs <= n; ++vs)
      factor_c[static_cast<std::size_t>(ks * vs)] = p[static_cast<std::size_t>(vs)];
    intpoly factor{std::vector<bigint>(factor_c)};
    for (bigint i = 0; i < p[static_cast<std::size_t>(ks)]; ++i) gen = gen * factor;
    // truncate to degree n to keep the product small
    std::vector<bigint> trunc(gen.coeffs().begin(),
                              gen.coeffs().begin() +
                                  std::min(gen.coeffs().size(), static_cast<std::size_t>(n) + 1));
    gen = intpoly(std::move(trunc));
  }
  return gen.coeff(n);
}

TEST_CASE("type enumeration") {
  CHECK(enumerate_types(1).size() == 1);
  CHECK(enumerate_types(2).size() == 4);
  CHECK(enumerate_types(3).size() == 8);
  for (int n = 1; n <= 6; ++n) {
    auto types = enumerate_types(n);
    CHECK(bigint(types.size()) == type_count_oracle(n));
    std::set<std::string> seen;
    for (std::size_t i = 0; i < types.size(); ++i) {
      CHECK(types[i].degree() == n);
      CHECK(types[i].dim() >= 1);
      CHECK(types[i].dim() <= n);
      CHECK(seen.insert(types[i].to_string()).second);
      if (i > 0) CHECK(type_less(types[i - 1], types[i]));
    }
  }
}

TEST_CASE("the four degree-2 types") {
  auto types = enumerate_types(2);
  std::set<std::string> names;
  for (const auto& t : types) names.insert(t.to_string());
  CHECK(names == std::set<std::string>{"[1->2]", "[1->1,1]", "[2->1]", "[1,1->1]"});
}

TEST_CASE("type accessors") {
  type_tau t({{partition({1}), partition({2, 1})}, {partition({2, 1}), partition({1})}});
  CHECK(t.degree() == 1 * 3 + 3 * 1);
  CHECK(t.dim() == 3 + 1);
  CHECK(t.value_at(partition({1})) == partition({2, 1}));
  CHECK(t.value_at(partition({3})) == partition());
  CHECK(!t.is_primary());
  auto factors = t.primary_factors();
  REQUIRE(factors.size() == 2);
  int deg = 0;
  for (const auto& f : factors) {
    CHECK(f.is_primary());
    deg += f.degree();
  }
  CHECK(deg == t.degree());
  CHECK_THROWS_AS(type_tau({{partition(), partition({1})}}), error);
  CHECK_THROWS_AS(type_tau({{partition({1}), partition({1})}, {partition({1}), partition({2})}}),
                  error);
}
