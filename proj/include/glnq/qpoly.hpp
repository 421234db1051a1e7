#pragma once

#include <string>
#include <vector>

#include "glnq/error.hpp"
#include "glnq/intpoly.hpp"
#include "glnq/partition.hpp"
#include "glnq/ratfunc.hpp"

namespace glnq {

// phi_m(t) = prod_{i=1}^m (1 - t^i); phi_0 = 1
inline intpoly phi(int m) {
  require(m >= 0, errc::range_error, "phi needs m >= 0");
  intpoly r = intpoly::one();
  for (int i = 1; i <= m; ++i) r = r * (intpoly::one() - intpoly::monomial(i));
  return r;
}

// The two unipotent shapes with closed-form Green polynomials.  "identity"
// means lambda = 1^m (the shape of the identity class), "transvection" means
// lambda = 1^{m-2} 2.
enum class green_family { identity, transvection };

namespace detail {

// classify lambda into one of the supported shapes
inline green_family classify_green_lambda(const partition& lam) {
  bool all_ones = true;
  for (int p : lam.parts())
    if (p != 1) all_ones = false;
  if (all_ones) return green_family::identity;
  if (lam.multiplicity(2) == 1 && lam.multiplicity(1) == lam.num_parts() - 1)
    return green_family::transvection;
  fail(errc::unsupported_lambda,
       "no closed form for Green polynomial at lambda = " + lam.to_string());
}

inline intpoly green_denominator(const partition& rho) {
  intpoly d = intpoly::one();
  for (auto [part, mult] : rho.multiplicities()) {
    intpoly f = intpoly::one() - intpoly::monomial(part);
    for (int i = 0; i < mult; ++i) d = d * f;
  }
  return d;
}

}  // namespace detail

// Green polynomial Q^lambda_rho(t) for lambda = 1^m or 1^{m-2} 2.
//
//   Q^{1^m}_rho       = phi_m / prod_i (1 - t^i)^{r_i}
//   Q^{1^{m-2} 2}_rho = phi_{m-2} * ((r_1 - 1) t^m - r_1 t^{m-1} + 1)
//                       / prod_i (1 - t^i)^{r_i}
//
// where r_i is the multiplicity of i in rho.  Both quotients are exact in
// Z[t]; divexact enforces that.
inline intpoly green_Q(const partition& rho, const partition& lam) {
  int m = lam.size();
  require(rho.size() == m, errc::size_mismatch,
          "Green polynomial needs |rho| = |lambda|, got " + rho.to_string() + " vs " +
              lam.to_string());
  green_family fam = detail::classify_green_lambda(lam);
  intpoly num;
  if (fam == green_family::identity) {
    num = phi(m);
  } else {
    int r1 = rho.multiplicity(1);
    num = phi(m - 2) * (intpoly::monomial(m, r1 - 1) - intpoly::monomial(m - 1, r1) +
                        intpoly::one());
  }
  return intpoly::divexact(num, detail::green_denominator(rho));
}

// Left side of the cancellation identity: the sum over rho = p_s(mu),
// mu in Lambda_v, of Q^lambda_rho(t) weighted by 1/(s^v z_mu), where
// lambda = 1^n for the identity family and 1^{n-2} 2 for the transvection
// family (the latter needs s > 1), n = s*v.
//
// The weight is the coefficient with which the class of type p_s(mu) enters
// when averaging over the s^v v! relevant permutations: v!/z_mu of them have
// type mu.  Beware that this is not 1/z_{p_s(mu)}: stretching multiplies
// z by s^{length(mu)}, one factor per part, so z_{p_s(mu)} = s^v z_mu only
// when mu = 1^v.  With the true centralizer orders as weights the sum does
// not collapse for v >= 2; with these weights it always does.
//
// The weights are plain integers, so the sum is accumulated over their lcm
// and reduced once at the end; no rational-function gcds are needed on the
// way.
inline ratfunc cancel_sum(int s, int v, green_family family) {
  require(s >= 1, errc::range_error, "cancel_sum needs s >= 1");
  require(v >= 1, errc::range_error, "cancel_sum needs v >= 1");
  require(family == green_family::identity || s > 1, errc::invalid_family,
          "transvection cancellation needs s > 1");
  int n = s * v;
  partition lam = family == green_family::identity
                      ? partition::one_to_the(n)
                      : merge(partition::one_to_the(n - 2), partition({2}));

  const bigint s_to_v = big_pow(s, static_cast<unsigned>(v));
  std::vector<intpoly> numerators;
  std::vector<bigint> weights;
  bigint lcm = 1;
  for (const auto& mu : enumerate_partitions(v)) {
    partition rho = stretch(mu, s);
    numerators.push_back(green_Q(rho, lam));
    weights.push_back(s_to_v * z_rho(mu));
    lcm = big_lcm(lcm, weights.back());
  }
  intpoly total = intpoly::zero();
  for (std::size_t i = 0; i < numerators.size(); ++i)
    total = total + numerators[i] * (lcm / weights[i]);
  return ratfunc(total, intpoly::constant(lcm));
}

// Closed form the cancellation sum collapses to:
//   identity:      phi_n(t) / (s^v phi_v(t^s))
//   transvection:  (1 - t^n) phi_{n-2}(t) / (s^v phi_v(t^s)),  s > 1
inline ratfunc closed_form_rhs(int s, int v, green_family family) {
  require(s >= 1, errc::range_error, "closed_form_rhs needs s >= 1");
  require(v >= 1, errc::range_error, "closed_form_rhs needs v >= 1");
  require(family == green_family::identity || s > 1, errc::invalid_family,
          "transvection cancellation needs s > 1");
  int n = s * v;
  intpoly den = phi(v).compose_power(s) * big_pow(s, static_cast<unsigned>(v));
  intpoly num = family == green_family::identity
                    ? phi(n)
                    : (intpoly::one() - intpoly::monomial(n)) * phi(n - 2);
  return ratfunc(num, den);
}

// Gaussian binomial coefficient [n choose a]_t via the Pascal-type
// recurrence G(n,a) = G(n-1,a-1) + t^a G(n-1,a).
inline intpoly gauss_grassmannian(int n, int a) {
  require(n >= 0 && a >= 0 && a <= n, errc::range_error, "gaussian binomial needs 0 <= a <= n");
  std::vector<intpoly> row(static_cast<std::size_t>(a) + 1);
  row[0] = intpoly::one();
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(a, i); j >= 1; --j) {
      if (j == i)
        row[static_cast<std::size_t>(j)] = intpoly::one();
      else
        row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] +
                                           intpoly::monomial(j) * row[static_cast<std::size_t>(j)];
    }
  return row[static_cast<std::size_t>(a)];
}

}  // namespace glnq
