// End-to-end checks the project promises, run in a fixed order with one
// verdict per item, plus the CSV tables the reproduction bundle writes.
// Exact mathematics is compared exactly; every floating comparison pins
// its tolerance here, next to the check that uses it.  Growth constants
// that are measured rather than derived live in a small fixture file:
// record mode writes them, ordinary runs assert they have not moved.
#ifndef GLNQ_ACCEPTANCE_HPP
#define GLNQ_ACCEPTANCE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "glnq/cache.hpp"
#include "glnq/classlabel.hpp"
#include "glnq/fiber.hpp"
#include "glnq/field.hpp"
#include "glnq/flags.hpp"
#include "glnq/gl2char.hpp"
#include "glnq/labels.hpp"
#include "glnq/partition.hpp"
#include "glnq/qpoly.hpp"
#include "glnq/serialize.hpp"
#include "glnq/type_tau.hpp"

namespace glnq::accept {

struct criterion_result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct options {
  std::filesystem::path fixtures;
  bool record = false;  // measure growth constants and rewrite the fixture file
  bool slow = false;    // include the long transporter cross-check
  int threads = 1;
};

struct report {
  std::vector<criterion_result> results;
  std::vector<table> tables;

  bool all_pass() const {
    return std::all_of(results.begin(), results.end(),
                       [](const criterion_result& r) { return r.pass; });
  }
};

namespace detail {

inline Fq field(std::uint64_t q) { return parse_field(std::to_string(q)); }

// measured growth constants; equality up to floating noise counts as stable
struct fixture_data {
  std::map<std::string, double> char_type_constants;
  double type_sum_constant = 0.0;
  double flag_constant = 0.0;
};

constexpr double fixture_tol = 1e-6;

inline std::optional<fixture_data> load_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  njson j = njson::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("version", 0) != 1) return std::nullopt;
  try {
    fixture_data fx;
    for (const auto& [k, v] : j.at("char_type_constants").items())
      fx.char_type_constants[k] = std::stod(v.get<std::string>());
    fx.type_sum_constant = std::stod(j.at("type_sum_constant").get<std::string>());
    fx.flag_constant = std::stod(j.at("flag_constant").get<std::string>());
    return fx;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline void save_fixtures(const std::filesystem::path& path, const fixture_data& fx) {
  njson j;
  j["version"] = 1;
  njson consts;
  for (const auto& [k, v] : fx.char_type_constants) consts[k] = fixed12(v);
  j["char_type_constants"] = std::move(consts);
  j["type_sum_constant"] = fixed12(fx.type_sum_constant);
  j["flag_constant"] = fixed12(fx.flag_constant);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  out << j.dump(2) << '\n';
}

inline bool stable(double measured, double stored) {
  return std::abs(measured - stored) <= fixture_tol * std::max(1.0, std::abs(stored));
}

struct type_cmp {
  bool operator()(const type_tau& a, const type_tau& b) const { return type_less(a, b); }
};

// ordered compositions of n into at least two positive parts
inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      if (cur.size() >= 2) out.push_back(cur);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      cur.push_back(p);
      self(self, rest - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

inline std::vector<std::set<int>> subsets(int m) {
  std::vector<std::set<int>> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::set<int> s;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) s.insert(i + 1);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

// Both cancellation sums collapse to their closed forms for every factor
// pair of every n up to 10, and the degree of the transvection-side form
// is the stated quadratic in n and v.
inline criterion_result check_cancellation() {
  criterion_result r{1, "cancellation identities", true, ""};
  int pairs = 0;
  for (int n = 1; n <= 10; ++n)
    for (int s = 1; s <= n; ++s) {
      if (n % s != 0) continue;
      int v = n / s;
      ++pairs;
      if (!(cancel_sum(s, v, green_family::identity) ==
            closed_form_rhs(s, v, green_family::identity))) {
        r.pass = false;
        r.detail = "identity family open at s=" + std::to_string(s) + " v=" + std::to_string(v);
        return r;
      }
      if (s > 1) {
        ratfunc rhs = closed_form_rhs(s, v, green_family::transvection);
        if (!(cancel_sum(s, v, green_family::transvection) == rhs)) {
          r.pass = false;
          r.detail =
              "transvection family open at s=" + std::to_string(s) + " v=" + std::to_string(v);
          return r;
        }
        if (2 * rhs.degree_diff() != n * n - (v + 2) * n + 2) {
          r.pass = false;
          r.detail = "transvection degree off at s=" + std::to_string(s) +
                     " v=" + std::to_string(v) + ": " + std::to_string(rhs.degree_diff());
          return r;
        }
      }
    }
  r.detail = std::to_string(pairs) + " factor pairs through n = 10, both column families";
  return r;
}

// The top-degree statistic hits its two exact values and the general cap.
inline criterion_result check_top_degree() {
  criterion_result r{2, "top degree of the two column families", true, ""};
  int checked = 0;
  for (int m = 1; m <= 12; ++m) {
    partition ones = partition::one_to_the(m);
    partition tv = m >= 2 ? merge(partition::one_to_the(m - 2), partition({2})) : partition::one_to_the(0);
    for (const partition& lam : enumerate_partitions(m)) {
      ++checked;
      int got = n_lambda(lam);
      int want;
      if (lam == ones)
        want = m * (m - 1) / 2;
      else if (m >= 2 && lam == tv)
        want = (m - 1) * (m - 2) / 2;
      else {
        if (got > (m - 2) * (m - 3) / 2 + 1) {
          r.pass = false;
          r.detail = "cap exceeded at " + lam.to_string() + ": " + std::to_string(got);
          return r;
        }
        continue;
      }
      if (got != want) {
        r.pass = false;
        r.detail = lam.to_string() + " gives " + std::to_string(got) + ", expected " +
                   std::to_string(want);
        return r;
      }
    }
  }
  r.detail = std::to_string(checked) + " partitions through m = 12";
  return r;
}

// Green polynomials never exceed the top-degree statistic of their column
// and meet it exactly in the identity column.
inline criterion_result check_green_degrees() {
  criterion_result r{3, "Green polynomial degree bound", true, ""};
  int checked = 0;
  for (int m = 1; m <= 10; ++m) {
    partition ones = partition::one_to_the(m);
    partition tv = m >= 2 ? merge(partition::one_to_the(m - 2), partition({2})) : partition::one_to_the(0);
    for (const partition& rho : enumerate_partitions(m)) {
      ++checked;
      if (green_Q(rho, ones).degree() != n_lambda(ones)) {
        r.pass = false;
        r.detail = "identity column degree off at rho = " + rho.to_string();
        return r;
      }
      if (m >= 2 && green_Q(rho, tv).degree() > n_lambda(tv)) {
        r.pass = false;
        r.detail = "transvection column degree high at rho = " + rho.to_string();
        return r;
      }
    }
  }
  r.detail = std::to_string(checked) + " rows through m = 10, equality in the identity column";
  return r;
}

// Row and column orthogonality of the GL_2 tables, and the exact degree sum.
inline criterion_result check_gl2_orthogonality() {
  criterion_result r{4, "GL_2 character table orthogonality", true, ""};
  const double tol = 1e-8;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    Fq F = detail::field(q);
    gl2_table t(F, cached_dlogs(F));
    const auto& cls = t.classes();
    const auto& chs = t.chars();
    const bigint order = group_order_gl(2, q);
    const double orderd = static_cast<double>(to_u64(order));

    bigint degsq = 0;
    for (const gl2_char& ch : chs) degsq += bigint(ch.degree) * ch.degree;
    if (degsq != order) {
      r.pass = false;
      r.detail = "degree squares miss the group order at q = " + std::to_string(q);
      return r;
    }

    for (std::size_t i = 0; i < chs.size(); ++i)
      for (std::size_t j = i; j < chs.size(); ++j) {
        std::complex<double> s = 0.0;
        for (std::size_t c = 0; c < cls.size(); ++c)
          s += static_cast<double>(to_u64(cls[c].size)) * t.value(i, c) * std::conj(t.value(j, c));
        double want = i == j ? 1.0 : 0.0;
        if (std::abs(s / orderd - want) > tol) {
          r.pass = false;
          r.detail = "row orthogonality fails at q = " + std::to_string(q);
          return r;
        }
      }

    for (std::size_t c = 0; c < cls.size(); ++c)
      for (std::size_t d = c; d < cls.size(); ++d) {
        std::complex<double> s = 0.0;
        for (std::size_t i = 0; i < chs.size(); ++i)
          s += t.value(i, c) * std::conj(t.value(i, d));
        double want = c == d ? 1.0 : 0.0;
        double scale = static_cast<double>(to_u64(cls[c].size)) / orderd;
        if (std::abs(s * scale - want) > tol) {
          r.pass = false;
          r.detail = "column orthogonality fails at q = " + std::to_string(q);
          return r;
        }
      }
  }
  r.detail = "within 1e-8 and exact degree sums, q in {2,3,4,5,7,8,9,11,13}";
  return r;
}

// Character-sum fiber counts agree with the brute pair loop on every class.
inline criterion_result check_frobenius_vs_brute(std::vector<table>& tables, int threads) {
  criterion_result r{5, "character-sum fiber counts against brute force", true, ""};
  table tab_out{"frobenius_compare", {"q", "class", "brute", "character_sum"}, {}};
  int classes_checked = 0;
  for (std::uint64_t q : {2, 3, 5}) {
    Fq F = detail::field(q);
    gl2_table t(F, cached_dlogs(F));
    for (const gl2_class& c : t.classes()) {
      bigint frob = t.frobenius_fiber(c.label);
      bigint brute = fiber_count_naive(group_kind::gl, representative(c.label), threads);
      tab_out.rows.push_back(
          {std::to_string(q), c.label.to_string(), bigint_str(brute), bigint_str(frob)});
      if (frob != brute) {
        r.pass = false;
        r.detail = "mismatch at q = " + std::to_string(q) + ", class " + c.label.to_string();
        tables.push_back(std::move(tab_out));
        return r;
      }
      ++classes_checked;
    }
    if (q == 2) {
      // two fixed points of the table: the order-three class and the
      // transvection class
      class_label cubic{{{fqpoly(F, {1, 1, 1}), partition({1})}}};
      class_label transvection{{{fqpoly(F, {1, 1}), partition({2})}}};
      if (t.frobenius_fiber(cubic) != 9 || t.frobenius_fiber(transvection) != 0) {
        r.pass = false;
        r.detail = "pinned F_2 fiber counts moved";
        tables.push_back(std::move(tab_out));
        return r;
      }
    }
  }
  tables.push_back(std::move(tab_out));
  r.detail = std::to_string(classes_checked) + " classes exact over q in {2,3,5}";
  return r;
}

// Classes and characters pair off type by type, and degree-s simplices
// match the degree-s irreducibles away from t.
inline criterion_result check_duality_counts(std::vector<table>& tables) {
  criterion_result r{6, "class and character duality counts", true, ""};
  table types_out{"duality_types", {"n", "q", "type", "classes", "chars"}, {}};
  table degs_out{"degree_counts", {"q", "s", "simplices", "irreducibles"}, {}};

  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t q : {2, 3, 4, 5}) {
      Fq F = detail::field(q);
      irreducible_table itab(F);
      std::map<type_tau, std::pair<int, int>, detail::type_cmp> by_type;
      for (const class_label& lab : enumerate_class_labels(itab, n))
        by_type[type_of_class(lab)].first += 1;
      for (const char_label& lab : enumerate_char_labels(q, n))
        by_type[type_of_char(lab)].second += 1;
      for (const auto& [tau, counts] : by_type) {
        types_out.rows.push_back({std::to_string(n), std::to_string(q), tau.to_string(),
                                  std::to_string(counts.first), std::to_string(counts.second)});
        if (counts.first != counts.second) {
          r.pass = false;
          r.detail = "type " + tau.to_string() + " unbalanced at n = " + std::to_string(n) +
                     ", q = " + std::to_string(q);
        }
      }
    }

  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
    for (int s = 1; s <= 4; ++s) {
      Fq F = detail::field(q);
      irreducible_table itab(F);
      std::size_t simplices = enumerate_simplices(q, s).size();
      std::size_t irr = itab.degree(s).size() - (s == 1 ? 1 : 0);
      degs_out.rows.push_back({std::to_string(q), std::to_string(s), std::to_string(simplices),
                               std::to_string(irr)});
      if (simplices != irr) {
        r.pass = false;
        r.detail = "degree count off at q = " + std::to_string(q) + ", s = " + std::to_string(s);
      }
    }

  tables.push_back(std::move(types_out));
  tables.push_back(std::move(degs_out));
  if (r.pass) r.detail = "types balanced for n <= 4, q <= 5; degree counts match for q <= 9";
  return r;
}

// Character counts per type grow like q to the type dimension, and type
// sums at non-central classes stay within a fixed multiple of q.  The
// constants are measurements, kept in the fixture file.
inline criterion_result check_type_growth(const options& opt, detail::fixture_data& recorded,
                                          const std::optional<detail::fixture_data>& stored) {
  criterion_result r{7, "character counts and type sums per type", true, ""};
  const std::vector<std::uint64_t> qs = {3, 4, 5, 7, 8, 9, 11, 13};

  std::map<std::string, double> max_ratio;
  std::vector<type_tau> types = enumerate_types(2);
  for (std::uint64_t q : qs) {
    std::map<type_tau, int, detail::type_cmp> counts;
    for (const char_label& lab : enumerate_char_labels(q, 2)) counts[type_of_char(lab)] += 1;
    for (const type_tau& tau : types) {
      double ratio = static_cast<double>(counts[tau]) /
                     std::pow(static_cast<double>(q), static_cast<double>(tau.dim()));
      double& mr = max_ratio[tau.to_string()];
      mr = std::max(mr, ratio);
    }
  }

  double max_type_sum = 0.0;
  for (std::uint64_t q : qs) {
    Fq F = detail::field(q);
    gl2_table t(F, cached_dlogs(F));
    for (const gl2_class& c : t.classes()) {
      if (c.family == gl2_class_family::central) continue;
      for (const type_tau& tau : types) {
        double ratio = std::abs(t.type_sum(tau, c.label)) / static_cast<double>(q);
        max_type_sum = std::max(max_type_sum, ratio);
      }
    }
  }

  recorded.char_type_constants = max_ratio;
  recorded.type_sum_constant = max_type_sum;
  if (opt.record) {
    r.detail = "recorded constants; largest count ratio " +
               fixed12(std::max_element(max_ratio.begin(), max_ratio.end(),
                                        [](const auto& a, const auto& b) {
                                          return a.second < b.second;
                                        })
                           ->second) +
               ", type sum " + fixed12(max_type_sum);
    return r;
  }
  if (!stored) {
    r.pass = false;
    r.detail = "fixture file missing; run once with --record";
    return r;
  }
  for (const auto& [key, measured] : max_ratio) {
    auto it = stored->char_type_constants.find(key);
    if (it == stored->char_type_constants.end() || !detail::stable(measured, it->second)) {
      r.pass = false;
      r.detail = "count constant moved for type " + key + ": " + fixed12(measured);
      return r;
    }
  }
  if (!detail::stable(max_type_sum, stored->type_sum_constant)) {
    r.pass = false;
    r.detail = "type sum constant moved: " + fixed12(max_type_sum);
    return r;
  }
  r.detail = "constants stable across q in {3..13}; type sum bound " +
             fixed12(stored->type_sum_constant);
  return r;
}

// Every non-central class, every flag shape, every stability pattern:
// the stability probability is at most a fixed multiple of q to the
// stated exponent.  The multiple is a measurement, kept in the fixture.
inline criterion_result check_flag_probabilities(const options& opt,
                                                 detail::fixture_data& recorded,
                                                 const std::optional<detail::fixture_data>& stored) {
  criterion_result r{8, "flag stability probabilities", true, ""};
  double max_ratio = 0.0;
  int cases = 0;
  for (std::uint64_t q : {2, 3})
    for (int n = 2; n <= 4; ++n) {
      Fq F = detail::field(q);
      irreducible_table itab(F);
      std::vector<std::vector<int>> shapes = detail::compositions(n);
      for (const class_label& lab : enumerate_class_labels(itab, n)) {
        matf g = representative(lab);
        if (g.is_scalar()) continue;
        for (const std::vector<int>& dims : shapes) {
          flag_spec sp(F, dims);
          std::vector<std::uint64_t> profile = stability_profile(g, sp);
          bigint total = count_flags(sp);
          for (const std::set<int>& S : detail::subsets(sp.m())) {
            std::size_t outside = 0;
            for (int i = 1; i <= sp.m(); ++i)
              if (!S.count(i)) outside |= std::size_t{1} << (i - 1);
            std::uint64_t stable_count = 0;
            for (std::size_t mask = 0; mask < profile.size(); ++mask)
              if ((mask & outside) == outside) stable_count += profile[mask];
            int exponent = 1 - n;
            for (int i : S) exponent += dims[static_cast<std::size_t>(i - 1)] - 1;
            double prob = static_cast<double>(stable_count) / static_cast<double>(to_u64(total));
            double ratio = prob / std::pow(static_cast<double>(q), exponent);
            max_ratio = std::max(max_ratio, ratio);
            ++cases;
          }
        }
      }
    }

  recorded.flag_constant = max_ratio;
  if (opt.record) {
    r.detail = "recorded constant " + fixed12(max_ratio) + " over " + std::to_string(cases) +
               " cases";
    return r;
  }
  if (!stored) {
    r.pass = false;
    r.detail = "fixture file missing; run once with --record";
    return r;
  }
  if (!detail::stable(max_ratio, stored->flag_constant)) {
    r.pass = false;
    r.detail = "constant moved: " + fixed12(max_ratio) + " vs stored " +
               fixed12(stored->flag_constant);
    return r;
  }
  r.detail = std::to_string(cases) + " cases bounded with constant " +
             fixed12(stored->flag_constant);
  return r;
}

// Inducing a pair of degree-one characters up to GL_2 lands on the
// principal series for distinct characters and on the sum of a linear
// character with its Steinberg twist for equal ones.
inline criterion_result check_induction() {
  criterion_result r{9, "parabolic induction against the tables", true, ""};
  const double tol = 1e-8;
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    Fq F = detail::field(q);
    gl2_table t(F, cached_dlogs(F));
    const auto& cls = t.classes();
    for (std::uint64_t a = 0; a + 1 < q; ++a)
      for (std::uint64_t b = a; b + 1 < q; ++b)
        for (const gl2_class& c : cls) {
          std::complex<double> got = induce_gl2(a, b, c.label);
          std::complex<double> want = 0.0;
          for (const gl2_char& ch : t.chars()) {
            bool hit = false;
            if (a != b)
              hit = ch.family == gl2_char_family::principal && ch.a == a && ch.b == b;
            else
              hit = (ch.family == gl2_char_family::linear ||
                     ch.family == gl2_char_family::steinberg) &&
                    ch.a == a;
            if (hit) want += t.value(ch, c);
          }
          if (std::abs(got - want) > tol) {
            r.pass = false;
            r.detail = "induction off at q = " + std::to_string(q) + ", a = " +
                       std::to_string(a) + ", b = " + std::to_string(b) + ", class " +
                       c.label.to_string();
            return r;
          }
        }
  }
  r.detail = "all parameter pairs and classes through q = 7";
  return r;
}

// Non-central fiber counts grow like q to the dimension of the group:
// fitted slopes inside the stated band, bounded constants, the small
// three-dimensional transporter counts under their cap, and the identity
// fiber on the correct larger scale.
inline criterion_result check_fiber_growth(std::vector<table>& tables, int threads) {
  criterion_result r{10, "commutator fiber growth", true, ""};
  const std::vector<std::uint64_t> all_q = {3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31};
  table scan_out{"exponent_scan", {"family", "n", "q", "method", "count", "exponent", "c_q"}, {}};
  table slope_out{"scan_slopes", {"family", "n", "fit_min_q", "slope"}, {}};

  for (scan_family fam : {scan_family::transvection, scan_family::split, scan_family::elliptic}) {
    std::vector<std::uint64_t> qs;
    for (std::uint64_t q : all_q) {
      Fq F = detail::field(q);
      irreducible_table itab(F);
      try {
        scan_class_label(itab, fam, 2);
        qs.push_back(q);
      } catch (const error&) {
        // the split family has no determinant-one class over F_3
      }
    }
    scan_result sr = exponent_scan(2, fam, qs, fiber_method::character, threads, 5);
    for (const fiber_report& rep : sr.reports) {
      scan_out.rows.push_back({to_name(fam), "2", std::to_string(rep.q), to_name(rep.method),
                               bigint_str(rep.count), std::to_string(rep.exponent),
                               fixed12(rep.c_q)});
      if (rep.exponent != 5) {
        r.pass = false;
        r.detail = "scan exponent off for " + std::string(to_name(fam));
      }
    }
    slope_out.rows.push_back({to_name(fam), "2", "5", fixed12(sr.slope)});
    if (sr.slope < 4.8 || sr.slope > 5.2) {
      r.pass = false;
      r.detail = "slope " + fixed12(sr.slope) + " outside [4.8, 5.2] for " + to_name(fam);
    }
    double lo = 0.0, hi = 0.0;
    for (const fiber_report& rep : sr.reports) {
      if (rep.q < 5) continue;
      if (lo == 0.0 || rep.c_q < lo) lo = rep.c_q;
      if (rep.c_q > hi) hi = rep.c_q;
    }
    if (hi > 2.0 * lo) {
      r.pass = false;
      r.detail = "c_q spread " + fixed12(hi / lo) + " above factor two for " + to_name(fam);
    }
  }
  tables.push_back(std::move(scan_out));
  tables.push_back(std::move(slope_out));
  if (!r.pass) return r;

  // three-dimensional transporter counts stay under a small multiple of
  // q^10; the multiple is a pinned observation, not a derived constant
  const double transporter_cap = 4.0;
  for (std::uint64_t q : {2, 3})
    for (scan_family fam : {scan_family::transvection, scan_family::elliptic}) {
      Fq F = detail::field(q);
      irreducible_table itab(F);
      matf g = representative(scan_class_label(itab, fam, 3));
      bigint count = fiber_count_transporter(group_kind::gl, g, threads);
      double ratio = static_cast<double>(to_u64(count)) / std::pow(static_cast<double>(q), 10);
      if (ratio > transporter_cap) {
        r.pass = false;
        r.detail = "n = 3 transporter ratio " + fixed12(ratio) + " above its cap";
        return r;
      }
    }

  // identity fibers: commuting pairs number the group order times the
  // class count, which stays under q^6 while outgrowing every multiple
  // of q^5
  bigint first_count = 0, last_count = 0;
  std::uint64_t first_q = all_q.front(), last_q = all_q.back();
  bigint prev_count = 0;
  std::uint64_t prev_q = 0;
  for (std::uint64_t q : all_q) {
    Fq F = detail::field(q);
    irreducible_table itab(F);
    bigint classes = bigint(enumerate_class_labels(itab, 2).size());
    bigint count = group_order_gl(2, q) * classes;
    if (count > big_pow(q, 6)) {
      r.pass = false;
      r.detail = "identity fiber above q^6 at q = " + std::to_string(q);
      return r;
    }
    if (prev_q != 0 && count * big_pow(prev_q, 5) <= prev_count * big_pow(q, 5)) {
      r.pass = false;
      r.detail = "identity fiber over q^5 failed to grow at q = " + std::to_string(q);
      return r;
    }
    if (q == first_q) first_count = count;
    if (q == last_q) last_count = count;
    prev_count = count;
    prev_q = q;
  }
  if (last_count * big_pow(first_q, 5) < 4 * first_count * big_pow(last_q, 5)) {
    r.pass = false;
    r.detail = "identity fiber over q^5 grew too slowly to diverge";
    return r;
  }
  r.detail = "slopes in band, c_q spreads under two, transporter and identity scales as stated";
  return r;
}

// Central fibers of the special linear commutator map have the size of
// the projective group, with an exact witness pair in the small fields.
inline criterion_result check_central_fibers(const options& opt) {
  criterion_result r{11, "central fibers of the special linear commutator map", true, ""};
  for (std::uint64_t q : {3, 5, 7}) {
    Fq F = detail::field(q);
    central_fiber_report rep = central_fiber_sl(F, 2, opt.threads);
    bigint pgl = group_order_gl(2, q) / (bigint(q) - 1);
    if (rep.count != pgl) {
      r.pass = false;
      r.detail = "count " + bigint_str(rep.count) + " differs from the projective order " +
                 bigint_str(pgl) + " at q = " + std::to_string(q) + "; logged as a finding";
      return r;
    }
    if (!rep.witness) {
      r.pass = false;
      r.detail = "no witness pair found at q = " + std::to_string(q);
      return r;
    }
    const auto& [A, B] = *rep.witness;
    matf comm = A * B * inverse(A) * inverse(B);
    if (!(comm == matf::scalar(F, 2, rep.zeta)) || det(A) != F.one() || det(B) != F.one()) {
      r.pass = false;
      r.detail = "witness pair fails its exact check at q = " + std::to_string(q);
      return r;
    }
  }

  // the same count in one larger case, by the per-class kernel method
  Fq F7 = detail::field(7);
  central_fiber_report rep37 = central_fiber_sl(F7, 3, opt.threads);
  bigint pgl37 = group_order_gl(3, 7) / bigint(6);
  if (rep37.count != pgl37) {
    r.pass = false;
    r.detail = "n = 3 count " + bigint_str(rep37.count) + " differs from " + bigint_str(pgl37) +
               "; logged as a finding";
    return r;
  }
  r.detail = "counts 24, 120, 336 with exact witnesses; n = 3, q = 7 matches " +
             bigint_str(pgl37);
  if (opt.slow) {
    bigint cross = fiber_count_transporter(
        group_kind::sl, matf::scalar(F7, 3, rep37.zeta), opt.threads);
    if (cross != pgl37) {
      r.pass = false;
      r.detail = "transporter cross-check found " + bigint_str(cross) + ", kernel method " +
                 bigint_str(rep37.count) + "; logged as a finding";
      return r;
    }
    r.detail += "; transporter cross-check agrees";
  }
  return r;
}

inline report run_all(const options& opt) {
  report rep;
  std::optional<detail::fixture_data> stored = detail::load_fixtures(opt.fixtures);
  detail::fixture_data recorded;

  rep.results.push_back(check_cancellation());
  rep.results.push_back(check_top_degree());
  rep.results.push_back(check_green_degrees());
  rep.results.push_back(check_gl2_orthogonality());
  rep.results.push_back(check_frobenius_vs_brute(rep.tables, opt.threads));
  rep.results.push_back(check_duality_counts(rep.tables));
  rep.results.push_back(check_type_growth(opt, recorded, stored));
  rep.results.push_back(check_flag_probabilities(opt, recorded, stored));
  rep.results.push_back(check_induction());
  rep.results.push_back(check_fiber_growth(rep.tables, opt.threads));
  rep.results.push_back(check_central_fibers(opt));

  table summary{"criteria_summary", {"id", "name", "pass", "detail"}, {}};
  for (const criterion_result& r : rep.results)
    summary.rows.push_back({std::to_string(r.id), r.name, r.pass ? "yes" : "no", r.detail});
  rep.tables.insert(rep.tables.begin(), std::move(summary));

  if (opt.record && !opt.fixtures.empty()) detail::save_fixtures(opt.fixtures, recorded);
  return rep;
}

}  // namespace glnq::accept

#endif  // GLNQ_ACCEPTANCE_HPP
