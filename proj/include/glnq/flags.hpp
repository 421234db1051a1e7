#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "glnq/bigint.hpp"
#include "glnq/classlabel.hpp"
#include "glnq/error.hpp"
#include "glnq/field.hpp"
#include "glnq/matrix.hpp"
#include "glnq/qpoly.hpp"

namespace glnq {

// The shape of a flag variety over F_q^n: quotient dimensions n_1, ..., n_m
// with every n_i >= 1 and m >= 2.  The subspace dimensions are the partial
// complements a_i = n - n_1 - ... - n_i, a strictly decreasing sequence from
// a_0 = n down to a_m = 0; a flag of this shape is a chain
// V = V^0 > V^1 > ... > V^m = {0} with dim V^i = a_i.
class flag_spec {
 public:
  flag_spec(Fq F, std::vector<int> dims) : F_(std::move(F)), dims_(std::move(dims)) {
    require(dims_.size() >= 2, errc::dimension_mismatch, "a flag needs at least two steps");
    for (int d : dims_)
      require(d >= 1, errc::dimension_mismatch, "every quotient dimension must be positive");
    n_ = std::accumulate(dims_.begin(), dims_.end(), 0);
  }

  const Fq& field() const { return F_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }

  // a_0 = n, a_1, ..., a_m = 0
  std::vector<int> subspace_dims() const {
    std::vector<int> a{n_};
    for (int d : dims_) a.push_back(a.back() - d);
    return a;
  }

 private:
  Fq F_;
  int n_;
  std::vector<int> dims_;
};

// Number of flags of the given shape: the product of Gaussian binomials
// [a_{i-1} choose a_i] evaluated at q.
inline bigint count_flags(const flag_spec& sp) {
  std::vector<int> a = sp.subspace_dims();
  bigint total = 1;
  for (std::size_t i = 1; i < a.size(); ++i)
    total *= gauss_grassmannian(a[i - 1], a[i]).eval(bigint(sp.field().q()));
  return total;
}

namespace detail {

// g applied to a column vector: (g v)_i = sum_j g(i,j) v_j
inline fvec mat_vec(const matf& g, const fvec& v) {
  const Fq& F = g.field();
  int n = g.n();
  fvec out(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    Fq::elem s = 0;
    for (int j = 0; j < n; ++j) s = F.add(s, F.mul(g.at(i, j), v[static_cast<std::size_t>(j)]));
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

// A subspace held in reduced echelon form: rows with strictly increasing
// pivot columns, each pivot 1 and alone in its column.
struct echelon {
  std::vector<fvec> rows;
  std::vector<int> pivots;
};

inline echelon full_space(const Fq& F, int n) {
  echelon E;
  for (int i = 0; i < n; ++i) {
    fvec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = F.one();
    E.rows.push_back(std::move(e));
    E.pivots.push_back(i);
  }
  return E;
}

// canonical coset representative of v modulo the span of E
inline fvec reduce(const Fq& F, const echelon& E, fvec v) {
  for (std::size_t r = 0; r < E.rows.size(); ++r) {
    Fq::elem c = v[static_cast<std::size_t>(E.pivots[r])];
    if (c == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, E.rows[r][j]));
  }
  return v;
}

inline bool is_zero(const fvec& v) {
  return std::all_of(v.begin(), v.end(), [](Fq::elem e) { return e == 0; });
}

// reduce v against E and adjoin it if independent; keeps E reduced
inline bool insert(const Fq& F, echelon& E, fvec v) {
  v = reduce(F, E, v);
  int p = -1;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) {
      p = static_cast<int>(j);
      break;
    }
  if (p < 0) return false;
  Fq::elem inv = F.inv(v[static_cast<std::size_t>(p)]);
  for (auto& e : v) e = F.mul(e, inv);
  // clear the new pivot column in the old rows
  for (std::size_t r = 0; r < E.rows.size(); ++r) {
    Fq::elem c = E.rows[r][static_cast<std::size_t>(p)];
    if (c == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      E.rows[r][j] = F.sub(E.rows[r][j], F.mul(c, v[j]));
  }
  std::size_t pos = 0;
  while (pos < E.pivots.size() && E.pivots[pos] < p) ++pos;
  E.rows.insert(E.rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  E.pivots.insert(E.pivots.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

// Visit every reduced echelon basis of a d-dimensional subspace of F^N:
// pivot-column sets in lexicographic order, free entries in odometer order.
template <class Fn>
void for_each_echelon(const Fq& F, int N, int d, Fn&& fn) {
  require(0 <= d && d <= N, errc::dimension_mismatch, "echelon dimension out of range");
  if (d == 0) {
    fn(std::vector<fvec>{});
    return;
  }
  std::vector<int> piv(static_cast<std::size_t>(d));
  std::iota(piv.begin(), piv.end(), 0);
  const std::uint64_t q = F.q();
  for (;;) {
    // positions free to vary: right of a pivot, not a pivot column
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < d; ++r)
      for (int j = piv[static_cast<std::size_t>(r)] + 1; j < N; ++j)
        if (!std::binary_search(piv.begin(), piv.end(), j)) free_pos.push_back({r, j});

    std::vector<Fq::elem> vals(free_pos.size(), 0);
    for (;;) {
      std::vector<fvec> rows(static_cast<std::size_t>(d), fvec(static_cast<std::size_t>(N), 0));
      for (int r = 0; r < d; ++r)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])] =
            F.one();
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        rows[static_cast<std::size_t>(free_pos[t].first)]
            [static_cast<std::size_t>(free_pos[t].second)] = vals[t];
      fn(rows);
      // odometer
      std::size_t t = 0;
      while (t < vals.size() && vals[t] + 1 == q) vals[t++] = 0;
      if (t == vals.size()) break;
      vals[t] += 1;
    }

    // next pivot combination
    int i = d - 1;
    while (i >= 0 && piv[static_cast<std::size_t>(i)] == N - d + i) --i;
    if (i < 0) break;
    piv[static_cast<std::size_t>(i)] += 1;
    for (int j = i + 1; j < d; ++j)
      piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// row combination: coeffs (in the parent's coordinates) times the parent's
// ambient basis rows
inline fvec combine(const Fq& F, const fvec& coeffs, const std::vector<fvec>& basis) {
  fvec out(basis.empty() ? coeffs.size() : basis[0].size(), 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] = F.add(out[j], F.mul(coeffs[k], basis[k][j]));
  }
  return out;
}

// How g interacts with one flag: whether every V^i is g-invariant, and if
// so the matrix induced on each quotient V^{i-1}/V^i (column t holds the
// coordinates of the image of the t-th coset representative).
struct flag_action {
  bool stabilized = false;
  std::vector<matf> quotient;
};

inline flag_action analyze_flag(const matf& g, const flag_spec& sp,
                                const std::vector<std::vector<fvec>>& bases) {
  const Fq& F = g.field();
  const int m = sp.m();
  flag_action out;

  std::vector<echelon> E(static_cast<std::size_t>(m) + 1);
  E[0] = full_space(F, sp.n());
  for (int i = 1; i < m; ++i)
    for (const fvec& r : bases[static_cast<std::size_t>(i - 1)])
      insert(F, E[static_cast<std::size_t>(i)], r);
  // E[m] stays empty: V^m = {0}

  for (int i = 1; i < m; ++i)
    for (const fvec& r : E[static_cast<std::size_t>(i)].rows)
      if (!is_zero(reduce(F, E[static_cast<std::size_t>(i)], mat_vec(g, r)))) return out;
  out.stabilized = true;

  for (int i = 1; i <= m; ++i) {
    const echelon& below = E[static_cast<std::size_t>(i)];
    echelon U;
    for (const fvec& w : E[static_cast<std::size_t>(i - 1)].rows) insert(F, U, reduce(F, below, w));
    int ni = sp.dims()[static_cast<std::size_t>(i - 1)];
    require(static_cast<int>(U.rows.size()) == ni, errc::dimension_mismatch,
            "quotient dimension disagrees with the flag shape");
    matf M(F, ni);
    for (int t = 0; t < ni; ++t) {
      fvec y = reduce(F, below, mat_vec(g, U.rows[static_cast<std::size_t>(t)]));
      for (int s = 0; s < ni; ++s) {
        Fq::elem c = y[static_cast<std::size_t>(U.pivots[static_cast<std::size_t>(s)])];
        M.at(s, t) = c;
        if (c != 0)
          for (std::size_t j = 0; j < y.size(); ++j)
            y[j] = F.sub(y[j], F.mul(c, U.rows[static_cast<std::size_t>(s)][j]));
      }
      require(is_zero(y), errc::dimension_mismatch, "quotient image escaped its subquotient");
    }
    out.quotient.push_back(std::move(M));
  }
  return out;
}

}  // namespace detail

// Visit every flag of the given shape.  The callback receives, for each of
// the proper levels V^1, ..., V^{m-1}, basis rows in ambient coordinates;
// V^m = {0} is implicit.  Nested echelon enumeration, so each flag appears
// exactly once, in a fixed order independent of everything but the shape.
template <class Fn>
void for_each_flag(const flag_spec& sp, Fn&& fn) {
  require(count_flags(sp) <= bigint(10'000'000), errc::too_large,
          "flag enumeration beyond the supported size");
  const Fq& F = sp.field();
  std::vector<int> a = sp.subspace_dims();
  std::vector<std::vector<fvec>> bases(static_cast<std::size_t>(sp.m()) - 1);
  // parent[k] = ambient basis rows of V^{k}; V^0 is the standard basis
  std::vector<fvec> standard;
  for (int i = 0; i < sp.n(); ++i) {
    fvec e(static_cast<std::size_t>(sp.n()), 0);
    e[static_cast<std::size_t>(i)] = F.one();
    standard.push_back(std::move(e));
  }

  auto recurse = [&](auto&& self, int level, const std::vector<fvec>& parent) -> void {
    if (level == sp.m()) {
      fn(const_cast<const std::vector<std::vector<fvec>>&>(bases));
      return;
    }
    detail::for_each_echelon(F, a[static_cast<std::size_t>(level - 1)],
                             a[static_cast<std::size_t>(level)],
                             [&](const std::vector<fvec>& rel) {
                               std::vector<fvec> ambient;
                               for (const fvec& r : rel)
                                 ambient.push_back(detail::combine(F, r, parent));
                               bases[static_cast<std::size_t>(level - 1)] = ambient;
                               self(self, level + 1, ambient);
                             });
  };
  recurse(recurse, 1, standard);
}

// For each subset of quotients, how many g-stabilized flags see a scalar
// action exactly there: profile[mask] counts flags whose scalar quotients
// are { i : bit i-1 of mask set }.  Any element of M_n works, invertible
// or not.  All stability counts below are sums over this table.
inline std::vector<std::uint64_t> stability_profile(const matf& g, const flag_spec& sp) {
  require(g.field().same_field(sp.field()), errc::wrong_group,
          "matrix and flag shape live over different fields");
  require(g.n() == sp.n(), errc::dimension_mismatch, "matrix size does not match the flag shape");
  std::vector<std::uint64_t> profile(std::size_t{1} << sp.m(), 0);
  for_each_flag(sp, [&](const std::vector<std::vector<fvec>>& bases) {
    detail::flag_action act = detail::analyze_flag(g, sp, bases);
    if (!act.stabilized) return;
    std::size_t mask = 0;
    for (int i = 1; i <= sp.m(); ++i)
      if (act.quotient[static_cast<std::size_t>(i - 1)].is_scalar()) mask |= std::size_t{1} << (i - 1);
    profile[mask] += 1;
  });
  return profile;
}

// Number of flags that are g-stable with respect to S: every V^i invariant
// and the quotient action scalar away from S.  With strict = true the
// action must additionally be non-scalar at every index of S.
inline std::uint64_t stable_flag_count(const matf& g, const flag_spec& sp, const std::set<int>& S,
                                       bool strict) {
  for (int i : S)
    require(1 <= i && i <= sp.m(), errc::range_error, "stability index outside {1..m}");
  std::vector<std::uint64_t> profile = stability_profile(g, sp);
  std::size_t outside = 0;
  for (int i = 1; i <= sp.m(); ++i)
    if (!S.count(i)) outside |= std::size_t{1} << (i - 1);
  std::uint64_t total = 0;
  for (std::size_t mask = 0; mask < profile.size(); ++mask) {
    bool ok = strict ? mask == outside : (mask & outside) == outside;
    if (ok) total += profile[mask];
  }
  return total;
}

// The probability that a uniform flag of this shape is g-stable with
// respect to S, together with the exponent 1 - n + sum_{i in S} (n_i - 1)
// it is measured against and the ratio probability / q^exponent.
struct flag_prob_report {
  bigint stable;
  bigint total;
  int exponent = 0;
  double constant = 0.0;

  double probability() const {
    return static_cast<double>(to_u64(stable)) / static_cast<double>(to_u64(total));
  }
};

inline flag_prob_report flag_probability_report(const matf& g, const flag_spec& sp,
                                                const std::set<int>& S) {
  require(!g.is_scalar(), errc::central_element,
          "stability probability is only bounded for non-central elements");
  flag_prob_report rep;
  rep.stable = bigint(stable_flag_count(g, sp, S, false));
  rep.total = count_flags(sp);
  rep.exponent = 1 - sp.n();
  for (int i : S) rep.exponent += sp.dims()[static_cast<std::size_t>(i - 1)] - 1;
  rep.constant =
      rep.probability() / std::pow(static_cast<double>(sp.field().q()), rep.exponent);
  return rep;
}

// Number of g-fixed flags whose induced quotient actions land in the
// prescribed conjugacy classes; the flag shape is read off the class
// degrees.  This is the structure constant pairing parabolic induction
// with class functions.
inline std::uint64_t hall_coefficient(irreducible_table& tab, const matf& g,
                                      const std::vector<class_label>& classes) {
  require(classes.size() >= 2, errc::dimension_mismatch, "need at least two quotient classes");
  std::vector<int> dims;
  int total = 0;
  for (const class_label& c : classes) {
    require(!c.entries.empty() && c.field().same_field(g.field()), errc::dimension_mismatch,
            "quotient class over a different field");
    dims.push_back(c.degree());
    total += c.degree();
  }
  require(total == g.n(), errc::dimension_mismatch, "class degrees do not sum to the matrix size");
  require(det(g) != 0, errc::singular_matrix, "induced quotient classes need an invertible element");

  flag_spec sp(g.field(), dims);
  std::uint64_t count = 0;
  for_each_flag(sp, [&](const std::vector<std::vector<fvec>>& bases) {
    detail::flag_action act = detail::analyze_flag(g, sp, bases);
    if (!act.stabilized) return;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (!(compute_class_label(tab, act.quotient[i]) == classes[i])) return;
    count += 1;
  });
  return count;
}

// The character of GL_2 induced from a pair of degree-1 characters of
// GL_1, evaluated at a class: sum over g-fixed lines of
// zeta^{a dlog(quotient eigenvalue) + b dlog(line eigenvalue)}.  Agrees
// with the principal series for a != b and with the sum of a linear
// character and its Steinberg twist for a = b.
inline std::complex<double> induce_gl2(std::uint64_t a, std::uint64_t b, const class_label& lab) {
  const Fq& F = lab.field();
  require(lab.degree() == 2, errc::wrong_group, "induction target is GL_2");
  const std::uint64_t q = F.q();
  std::vector<std::uint64_t> dlog(static_cast<std::size_t>(q), 0);
  Fq::elem x = F.one();
  for (std::uint64_t e = 0; e + 1 < q; ++e) {
    dlog[x] = e;
    x = F.mul(x, F.generator());
  }
  matf g = representative(lab);
  flag_spec sp(F, {1, 1});
  static const double two_pi = 2.0 * std::acos(-1.0);
  std::complex<double> sum = 0.0;
  for_each_flag(sp, [&](const std::vector<std::vector<fvec>>& bases) {
    detail::flag_action act = detail::analyze_flag(g, sp, bases);
    if (!act.stabilized) return;
    Fq::elem on_quotient = act.quotient[0].at(0, 0);
    Fq::elem on_line = act.quotient[1].at(0, 0);
    std::uint64_t j = (a * dlog[on_quotient] + b * dlog[on_line]) % (q - 1);
    sum += j == 0 ? 1.0 : std::polar(1.0, two_pi * static_cast<double>(j) / static_cast<double>(q - 1));
  });
  return sum;
}

}  // namespace glnq
