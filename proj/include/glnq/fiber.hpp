#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glnq/bigint.hpp"
#include "glnq/classlabel.hpp"
#include "glnq/error.hpp"
#include "glnq/field.hpp"
#include "glnq/gl2char.hpp"
#include "glnq/matrix.hpp"
#include "glnq/parallel.hpp"

namespace glnq {

enum class group_kind { gl, sl };
enum class fiber_method { brute, transporter, character };
enum class scan_family { transvection, split, elliptic };

inline const char* to_name(group_kind g) { return g == group_kind::gl ? "gl" : "sl"; }

inline const char* to_name(fiber_method m) {
  switch (m) {
    case fiber_method::brute: return "brute";
    case fiber_method::transporter: return "transporter";
    case fiber_method::character: return "character";
  }
  return "unknown";
}

inline const char* to_name(scan_family f) {
  switch (f) {
    case scan_family::transvection: return "transvection";
    case scan_family::split: return "split";
    case scan_family::elliptic: return "elliptic";
  }
  return "unknown";
}

inline bigint group_order(group_kind grp, int n, std::uint64_t q) {
  return grp == group_kind::gl ? group_order_gl(n, q) : group_order_sl(n, q);
}

namespace detail {

// number of n x n matrix indices over F_q
inline std::uint64_t index_space(std::uint64_t q, int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) {
    require(total <= (std::uint64_t{1} << 50) / q, errc::too_large, "matrix index space overflow");
    total *= q;
  }
  return total;
}

// rows of the map X -> P X + X Q c, flattened with X_{ij} at column i n + j
// and the (k, l) entry of the image at row k n + l
inline std::vector<fvec> two_sided_rows(const matf& P, const matf& Q, Fq::elem c) {
  const Fq& F = P.field();
  const int n = P.n();
  std::vector<fvec> rows(static_cast<std::size_t>(n) * n,
                         fvec(static_cast<std::size_t>(n) * n, 0));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      fvec& row = rows[static_cast<std::size_t>(k) * n + l];
      // (P X)_{kl} picks up P_{ki} X_{il}
      for (int i = 0; i < n; ++i) {
        std::size_t col = static_cast<std::size_t>(i) * n + l;
        row[col] = F.add(row[col], P.at(k, i));
      }
      // (X Q)_{kl} c picks up X_{kj} Q_{jl} c
      for (int j = 0; j < n; ++j) {
        std::size_t col = static_cast<std::size_t>(k) * n + j;
        row[col] = F.add(row[col], F.mul(Q.at(j, l), c));
      }
    }
  return rows;
}

// basis of the solution space of M v = 0
inline std::vector<fvec> null_space(const Fq& F, std::vector<fvec> rows, int ncols) {
  std::vector<int> pivot_of_row;
  std::size_t rank = 0;
  for (int col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Fq::elem inv = F.inv(rows[rank][static_cast<std::size_t>(col)]);
    for (auto& e : rows[rank]) e = F.mul(e, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      Fq::elem c = rows[r][static_cast<std::size_t>(col)];
      if (c == 0) continue;
      for (int j = 0; j < ncols; ++j)
        rows[r][static_cast<std::size_t>(j)] =
            F.sub(rows[r][static_cast<std::size_t>(j)], F.mul(c, rows[rank][static_cast<std::size_t>(j)]));
    }
    pivot_of_row.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int p : pivot_of_row) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<fvec> basis;
  for (int freec = 0; freec < ncols; ++freec) {
    if (is_pivot[static_cast<std::size_t>(freec)]) continue;
    fvec v(static_cast<std::size_t>(ncols), 0);
    v[static_cast<std::size_t>(freec)] = F.one();
    for (std::size_t r = 0; r < pivot_of_row.size(); ++r)
      v[static_cast<std::size_t>(pivot_of_row[r])] =
          F.neg(rows[r][static_cast<std::size_t>(freec)]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// count the determinant-one matrices in the span of a basis of flattened
// n x n matrices
inline bigint count_det_one_in_span(const Fq& F, int n, const std::vector<fvec>& basis) {
  const std::uint64_t q = F.q();
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    require(combos <= (std::uint64_t{1} << 40) / q, errc::too_large, "solution space too large");
    combos *= q;
  }
  bigint found = 0;
  std::vector<Fq::elem> coef(basis.size(), 0);
  for (std::uint64_t step = 0; step < combos; ++step) {
    matf X(F, n);
    for (std::size_t t = 0; t < basis.size(); ++t) {
      if (coef[t] == 0) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          X.at(i, j) = F.add(X.at(i, j),
                             F.mul(coef[t], basis[t][static_cast<std::size_t>(i) * n + j]));
    }
    if (det(X) == F.one()) found += 1;
    std::size_t t = 0;
    while (t < coef.size() && coef[t] + 1 == q) coef[t++] = 0;
    if (t == coef.size()) break;
    coef[t] += 1;
  }
  return found;
}

inline void check_fiber_element(const matf& g, group_kind grp) {
  require(det(g) != 0, errc::singular_matrix, "commutator fibers live over the group");
  if (grp == group_kind::sl)
    require(det(g) == g.field().one(), errc::wrong_group,
            "fibers of the special linear commutator map need determinant one");
}

}  // namespace detail

// #{(x, y) : x y x^{-1} y^{-1} = g} by looping over all pairs.  The pair
// condition is tested multiplication-only as x y = (g y) x.
inline bigint fiber_count_naive(group_kind grp, const matf& g, int threads = 1) {
  detail::check_fiber_element(g, grp);
  const Fq& F = g.field();
  const int n = g.n();
  bigint order = group_order(grp, n, F.q());
  require(order * order <= bigint(1'000'000'000), errc::too_large,
          "naive pair loop beyond its guard");

  std::vector<matf> elems;
  std::uint64_t total = detail::index_space(F.q(), n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    matf y = matf::from_index(F, n, idx);
    Fq::elem d = det(y);
    if (d == 0 || (grp == group_kind::sl && d != F.one())) continue;
    elems.push_back(std::move(y));
  }

  return sharded_reduce(
      std::uint64_t{0}, elems.size(), threads, bigint(0),
      [&](std::uint64_t lo, std::uint64_t hi) {
        bigint acc = 0;
        for (std::uint64_t yi = lo; yi < hi; ++yi) {
          matf gy = g * elems[yi];
          for (const matf& x : elems)
            if (x * elems[yi] == gy * x) acc += 1;
        }
        return acc;
      },
      [](bigint a, bigint b) { return a + b; });
}

// Same count by a single loop over y: the solutions x of x y x^{-1} = g y
// form either the empty set or a coset of the centralizer of y.  For GL
// the coset size is the centralizer order, read off the class label; for
// SL the coset is cut out inside the group by enumerating the solution
// space of x y = (g y) x and keeping determinant one.
inline bigint fiber_count_transporter(group_kind grp, const matf& g, int threads = 1) {
  detail::check_fiber_element(g, grp);
  const Fq& F = g.field();
  const int n = g.n();
  require(group_order(grp, n, F.q()) <= bigint(100'000'000), errc::too_large,
          "transporter loop beyond its guard");

  std::uint64_t total = detail::index_space(F.q(), n);
  return sharded_reduce(
      std::uint64_t{0}, total, threads, bigint(0),
      [&](std::uint64_t lo, std::uint64_t hi) {
        irreducible_table tab(F);
        bigint acc = 0;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          matf y = matf::from_index(F, n, idx);
          Fq::elem d = det(y);
          if (d == 0 || (grp == group_kind::sl && d != F.one())) continue;
          matf gy = g * y;
          class_label ly = compute_class_label(tab, y);
          if (!(compute_class_label(tab, gy) == ly)) continue;
          if (grp == group_kind::gl) {
            acc += centralizer_order_gl(ly);
          } else {
            std::vector<fvec> rows = detail::two_sided_rows(gy, y, F.neg(F.one()));
            // kernel of X -> (g y) X - X y, i.e. solutions of x y = (g y) x;
            // sign flipped relative to the transporter equation is harmless
            // for a linear space
            acc += detail::count_det_one_in_span(F, n, detail::null_space(F, rows, n * n));
          }
        }
        return acc;
      },
      [](bigint a, bigint b) { return a + b; });
}

// The fiber of the SL_n commutator map over the central element zeta I,
// zeta a fixed primitive n-th root of unity, together with the clock and
// shift witness pair when it can be scaled into SL_n over F_q.
struct central_fiber_report {
  bigint count;
  Fq::elem zeta = 0;
  std::optional<std::pair<matf, matf>> witness;
};

inline central_fiber_report central_fiber_sl(const Fq& F, int n, int threads = 1) {
  require(n >= 2, errc::range_error, "central fiber needs n >= 2");
  const std::uint64_t q = F.q();
  require((q - 1) % static_cast<std::uint64_t>(n) == 0, errc::no_primitive_root,
          "no primitive n-th root of unity in this field");
  require(group_order_sl(n, q) <= bigint(100'000'000), errc::too_large,
          "central fiber beyond its guard");
  central_fiber_report rep;
  rep.zeta = F.pow(F.generator(), (q - 1) / static_cast<std::uint64_t>(n));

  // [a, b] = zeta I reads a b a^{-1} = zeta b, a linear condition on b
  // whose solution count depends only on the conjugacy class of a.  Classes
  // of determinant one cover SL_n once each, with their full size.
  irreducible_table tab(F);
  std::vector<class_label> labels = enumerate_class_labels(tab, n);
  rep.count = sharded_reduce(
      std::uint64_t{0}, labels.size(), threads, bigint(0),
      [&](std::uint64_t lo, std::uint64_t hi) {
        bigint acc = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
          const class_label& lab = labels[i];
          if (det_of_class(lab) != F.one()) continue;
          matf a = representative(lab);
          std::vector<fvec> rows = detail::two_sided_rows(a, a, F.neg(rep.zeta));
          // kernel of b -> a b - zeta b a
          bigint per_rep =
              detail::count_det_one_in_span(F, n, detail::null_space(F, rows, n * n));
          acc += class_size_gl(lab) * per_rep;
        }
        return acc;
      },
      [](bigint a, bigint b) { return a + b; });

  // clock and shift: A = diag(alpha, alpha zeta, ..., alpha zeta^{n-1})
  // and B = beta times the cyclic shift satisfy A B A^{-1} = zeta B for
  // any scalars; determinant one forces alpha^n = zeta^{-n(n-1)/2} and
  // beta^n = (-1)^{n-1}, which need not be solvable in F_q
  std::uint64_t half = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  Fq::elem alpha_target = F.inv(F.pow(rep.zeta, half));
  Fq::elem beta_target = n % 2 == 1 ? F.one() : F.neg(F.one());
  Fq::elem alpha = 0, beta = 0;
  for (Fq::elem x = 1; x < q; ++x) {
    if (alpha == 0 && F.pow(x, static_cast<std::uint64_t>(n)) == alpha_target) alpha = x;
    if (beta == 0 && F.pow(x, static_cast<std::uint64_t>(n)) == beta_target) beta = x;
  }
  if (alpha != 0 && beta != 0) {
    matf A(F, n), B(F, n);
    for (int i = 0; i < n; ++i) {
      A.at(i, i) = F.mul(alpha, F.pow(rep.zeta, static_cast<std::uint64_t>(i)));
      B.at((i + 1) % n, i) = beta;
    }
    require(det(A) == F.one() && det(B) == F.one(), errc::range_error,
            "witness scaling failed its determinant check");
    matf lhs = A * B;
    matf rhs = matf::scalar(F, n, rep.zeta) * (B * A);
    require(lhs == rhs, errc::range_error, "witness pair failed its commutation check");
    rep.witness = std::make_pair(std::move(A), std::move(B));
  }

  // The scaling can fail while the count above is positive (q = 3 or 7 at
  // n = 2, say).  Conjugating a witness pair conjugates both members, so
  // if any pair exists one exists with its first member a class
  // representative; small groups find it by direct search.
  if (!rep.witness && group_order_sl(n, q) <= bigint(10'000)) {
    matf target = matf::scalar(F, n, rep.zeta);
    std::uint64_t total = detail::index_space(q, n);
    for (const class_label& lab : labels) {
      if (rep.witness) break;
      if (det_of_class(lab) != F.one()) continue;
      matf a = representative(lab);
      for (std::uint64_t idx = 0; idx < total && !rep.witness; ++idx) {
        matf b = matf::from_index(F, n, idx);
        if (det(b) != F.one()) continue;
        if (a * b == target * (b * a)) rep.witness = std::make_pair(a, b);
      }
    }
  }
  return rep;
}

// One non-central class per field for the exponent scans.
// One determinant-one representative per family. Commutators always have
// determinant one, so a class off that hypersurface has an empty fiber and
// would poison a growth fit with zeros.
inline class_label scan_class_label(irreducible_table& tab, scan_family fam, int n) {
  const Fq& F = tab.field();
  const std::uint64_t q = F.q();
  require(n >= 2, errc::range_error, "scan classes need n >= 2");
  class_label lab;
  switch (fam) {
    case scan_family::transvection: {
      if (n == 2) {
        // a plain transvection has the wrong growth constant at small q, so
        // scan its negative: one Jordan block of size 2 with eigenvalue -1
        // (the same class in characteristic two, where -1 = 1)
        lab.entries.push_back({fqpoly(F, {F.one(), F.one()}), partition({2})});
      } else {
        std::vector<int> parts{2};
        for (int i = 2; i < n; ++i) parts.push_back(1);
        lab.entries.push_back({fqpoly(F, {F.neg(F.one()), F.one()}), partition(parts)});
      }
      break;
    }
    case scan_family::split: {
      // inverse pairs g^j, g^{-j} (and a lone 1 when n is odd) multiply to 1
      std::vector<Fq::elem> evs;
      if (n % 2 == 1) evs.push_back(F.one());
      for (int j = 1; j <= n / 2; ++j) {
        Fq::elem ev = F.pow(F.generator(), static_cast<std::uint64_t>(j));
        evs.push_back(ev);
        evs.push_back(F.inv(ev));
      }
      for (std::size_t i = 0; i < evs.size(); ++i)
        for (std::size_t j = i + 1; j < evs.size(); ++j)
          require(evs[i] != evs[j], errc::range_error,
                  "no split class with determinant one over this field");
      for (Fq::elem ev : evs)
        lab.entries.push_back({fqpoly(F, {F.neg(ev), F.one()}), partition({1})});
      break;
    }
    case scan_family::elliptic: {
      Fq big = Fq::extension(F, n);
      // z = w^{q-1} has norm w^{q^n - 1} = 1, hence determinant one
      Fq::elem z = big.pow(big.generator(), q - 1);
      // minimal polynomial: product of (t - z^{q^i}); subfield encodings
      // agree, so base-field coefficients read off directly
      fqpoly minimal = fqpoly::one(big);
      std::vector<Fq::elem> conjugates;
      Fq::elem conj = z;
      for (int i = 0; i < n; ++i) {
        conjugates.push_back(conj);
        minimal = minimal * fqpoly(big, {big.neg(conj), big.one()});
        conj = big.pow(conj, q);
      }
      for (std::size_t i = 0; i < conjugates.size(); ++i)
        for (std::size_t j = i + 1; j < conjugates.size(); ++j)
          require(conjugates[i] != conjugates[j], errc::range_error,
                  "norm-one generator power is not a degree-n element");
      std::vector<Fq::elem> coeffs;
      for (int i = 0; i <= n; ++i) {
        Fq::elem c = minimal.coeff(i);
        require(c < q, errc::range_error, "minimal polynomial left the base field");
        coeffs.push_back(c);
      }
      lab.entries.push_back({fqpoly(F, coeffs), partition({1})});
      break;
    }
  }
  sort_label(lab);
  return lab;
}

// One fiber measurement, normalized against the flatness exponent.
struct fiber_report {
  int n = 0;
  std::uint64_t q = 0;
  group_kind group = group_kind::gl;
  fiber_method method = fiber_method::brute;
  class_label label;
  bigint count;
  int exponent = 0;
  double c_q = 0.0;
};

struct scan_result {
  std::vector<fiber_report> reports;
  double slope = 0.0;  // least-squares slope of log count against log q, fitted on q >= fit_min_q
};

inline bigint fiber_count(group_kind grp, fiber_method method, const matf& g, int threads = 1) {
  switch (method) {
    case fiber_method::brute: return fiber_count_naive(grp, g, threads);
    case fiber_method::transporter: return fiber_count_transporter(grp, g, threads);
    case fiber_method::character: {
      require(grp == group_kind::gl && g.n() == 2, errc::invalid_family,
              "character-sum counts exist for GL_2 only");
      irreducible_table tab(g.field());
      return gl2_table(g.field()).frobenius_fiber(compute_class_label(tab, g));
    }
  }
  fail(errc::range_error, "unknown fiber method");
}

// The exact counts carry subleading terms comparable to the main term at the
// smallest fields, so the slope fit starts at fit_min_q (the reports still
// cover the whole list).
inline scan_result exponent_scan(int n, scan_family fam, const std::vector<std::uint64_t>& q_list,
                                 fiber_method method, int threads = 1,
                                 std::uint64_t fit_min_q = 5) {
  require(!q_list.empty(), errc::range_error, "empty field list");
  scan_result out;
  std::vector<std::pair<double, double>> pts;
  for (std::uint64_t q : q_list) {
    Fq F = parse_field(std::to_string(q));
    irreducible_table tab(F);
    fiber_report rep;
    rep.n = n;
    rep.q = q;
    rep.group = group_kind::gl;
    rep.method = method;
    rep.label = scan_class_label(tab, fam, n);
    rep.count = fiber_count(group_kind::gl, method, representative(rep.label), threads);
    rep.exponent = n * n + 1;
    rep.c_q = static_cast<double>(to_u64(rep.count)) /
              std::pow(static_cast<double>(q), rep.exponent);
    if (q >= fit_min_q)
      pts.emplace_back(std::log(static_cast<double>(q)),
                       std::log(static_cast<double>(to_u64(rep.count))));
    out.reports.push_back(std::move(rep));
  }
  if (pts.size() < 2) {
    pts.clear();
    for (const fiber_report& rep : out.reports)
      pts.emplace_back(std::log(static_cast<double>(rep.q)),
                       std::log(static_cast<double>(to_u64(rep.count))));
  }
  require(pts.size() >= 2, errc::range_error, "slope needs at least two fields");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(pts.size());
  out.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return out;
}

}  // namespace glnq
