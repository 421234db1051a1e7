#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "glnq/flags.hpp"
#include "glnq/gl2char.hpp"

using namespace glnq;

namespace {

Fq field_of_size(std::uint32_t q) { return parse_field(std::to_string(q)); }

std::set<int> all_indices(int m) {
  std::set<int> s;
  for (int i = 1; i <= m; ++i) s.insert(i);
  return s;
}

// every subset of {1..m} as a set, by bitmask order
std::vector<std::set<int>> subsets(int m) {
  std::vector<std::set<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::set<int> s;
    for (int i = 1; i <= m; ++i)
      if (mask & (std::size_t{1} << (i - 1))) s.insert(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("flag counts") {
  CHECK(count_flags(flag_spec(field_of_size(3), {1, 1})) == 4);
  CHECK(count_flags(flag_spec(field_of_size(2), {1, 1, 1})) == 21);
  CHECK(count_flags(flag_spec(field_of_size(5), {1, 1})) == 6);
  // two-step flags are Grassmannians
  for (std::uint32_t q : {2u, 3u, 4u})
    for (int n = 2; n <= 4; ++n)
      for (int d = 1; d < n; ++d)
        CHECK(count_flags(flag_spec(field_of_size(q), {n - d, d})) ==
              gauss_grassmannian(n, d).eval(bigint(q)));
  CHECK_THROWS_AS(flag_spec(field_of_size(2), {2}), error);
  CHECK_THROWS_AS(flag_spec(field_of_size(2), {2, 0}), error);
}

TEST_CASE("flag enumeration is exhaustive and duplicate free") {
  for (std::uint32_t q : {2u, 3u}) {
    Fq F = field_of_size(q);
    for (const std::vector<int>& dims :
         std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2}, {1, 1, 1}, {2, 2}, {1, 2, 1}}) {
      flag_spec sp(F, dims);
      std::set<std::vector<std::vector<fvec>>> seen;
      for_each_flag(sp, [&](const std::vector<std::vector<fvec>>& bases) {
        CHECK(static_cast<int>(bases.size()) == sp.m() - 1);
        seen.insert(bases);
      });
      CHECK(bigint(seen.size()) == count_flags(sp));
    }
  }
}

TEST_CASE("central elements stabilize everything") {
  Fq F = field_of_size(3);
  matf g = matf::scalar(F, 3, 2);
  flag_spec sp(F, {1, 1, 1});
  CHECK(bigint(stable_flag_count(g, sp, {}, false)) == count_flags(sp));
  // scalars act as scalars on every quotient, so no strict flag exists
  CHECK(stable_flag_count(g, sp, {2}, true) == 0);
  CHECK(stable_flag_count(g, sp, all_indices(3), true) == 0);
  CHECK_THROWS_AS(flag_probability_report(g, sp, {}), error);
}

TEST_CASE("split diagonal in GL_2(F_5): the two eigenlines") {
  Fq F = field_of_size(5);
  matf g(F, 2, {1, 0, 0, 2});
  flag_spec sp(F, {1, 1});
  CHECK(stable_flag_count(g, sp, {}, false) == 2);
  flag_prob_report rep = flag_probability_report(g, sp, {});
  CHECK(rep.stable == 2);
  CHECK(rep.total == 6);
  CHECK(rep.exponent == -1);
  CHECK(rep.constant == Catch::Approx(5.0 / 3.0));
}

TEST_CASE("one-dimensional quotients admit no strict non-scalar action") {
  Fq F = field_of_size(3);
  matf g(F, 2, {1, 1, 0, 1});
  flag_spec sp(F, {1, 1});
  for (const std::set<int>& S : subsets(2))
    if (!S.empty()) CHECK(stable_flag_count(g, sp, S, true) == 0);
}

TEST_CASE("nilpotent single block: only the kernel line") {
  Fq F = field_of_size(5);
  matf g(F, 2, {0, 1, 0, 0});  // singular, accepted
  flag_spec sp(F, {1, 1});
  // a stable line must lie in ker g, and there is one such line
  CHECK(stable_flag_count(g, sp, {1}, false) == 1);
  flag_prob_report rep = flag_probability_report(g, sp, {1});
  CHECK(rep.probability() == Catch::Approx(1.0 / 6.0));
  CHECK(rep.exponent == -1);
  CHECK(rep.constant == Catch::Approx(5.0 / 6.0));
}

TEST_CASE("strict counts over subsets sum to the non-strict count") {
  for (std::uint32_t q : {2u, 3u}) {
    Fq F = field_of_size(q);
    std::vector<std::pair<int, std::vector<int>>> shapes = {
        {3, {1, 1, 1}}, {3, {2, 1}}, {3, {1, 2}}, {4, {2, 2}}, {4, {1, 2, 1}}};
    for (const auto& [n, dims] : shapes) {
      flag_spec sp(F, dims);
      // one representative from a few distinct classes
      std::vector<matf> gs;
      matf u = matf::identity(F, n);
      u.at(0, 1) = 1;
      gs.push_back(u);
      matf d = matf::identity(F, n);
      if (q > 2) d.at(0, 0) = 2;
      gs.push_back(d);
      matf cyc(F, n);
      for (int i = 0; i + 1 < n; ++i) cyc.at(i, i + 1) = 1;
      cyc.at(n - 1, 0) = 1;
      gs.push_back(cyc);
      for (const matf& g : gs)
        for (const std::set<int>& S : subsets(sp.m())) {
          std::uint64_t strict_sum = 0;
          for (const std::set<int>& T : subsets(sp.m())) {
            bool inside = true;
            for (int t : T) inside = inside && S.count(t);
            if (inside) strict_sum += stable_flag_count(g, sp, T, true);
          }
          CHECK(strict_sum == stable_flag_count(g, sp, S, false));
        }
    }
  }
}

TEST_CASE("probability bound with the stated exponent") {
  // every non-central class, every shape of F_q^3, every S: ratio below 4
  for (std::uint32_t q : {2u, 3u}) {
    Fq F = field_of_size(q);
    irreducible_table tab(F);
    for (const class_label& lab : enumerate_class_labels(tab, 3)) {
      matf g = representative(lab);
      if (g.is_scalar()) continue;
      for (const std::vector<int>& dims :
           std::vector<std::vector<int>>{{1, 1, 1}, {2, 1}, {1, 2}}) {
        flag_spec sp(F, dims);
        for (const std::set<int>& S : subsets(sp.m())) {
          flag_prob_report rep = flag_probability_report(g, sp, S);
          CHECK(rep.constant <= 4.0);
        }
      }
    }
  }
}

TEST_CASE("hall coefficients") {
  Fq F = field_of_size(5);
  irreducible_table tab(F);
  matf g(F, 2, {1, 0, 0, 2});

  auto scalar_class = [&](Fq::elem c) { return compute_class_label(tab, matf(F, 1, {c})); };

  // the only qualifying line is spanned by e_1: eigenvalue 1 on it, 2 above
  CHECK(hall_coefficient(tab, g, {scalar_class(2), scalar_class(1)}) == 1);
  CHECK(hall_coefficient(tab, g, {scalar_class(1), scalar_class(2)}) == 1);
  CHECK(hall_coefficient(tab, g, {scalar_class(1), scalar_class(1)}) == 0);
  CHECK(hall_coefficient(tab, g, {scalar_class(3), scalar_class(1)}) == 0);

  // summed over all class pairs: every g-fixed flag counted once
  std::uint64_t sum = 0;
  for (Fq::elem a = 1; a < 5; ++a)
    for (Fq::elem b = 1; b < 5; ++b) sum += hall_coefficient(tab, g, {scalar_class(a), scalar_class(b)});
  CHECK(sum == stable_flag_count(g, flag_spec(F, {1, 1}), all_indices(2), false));

  // central elements: only the matching scalar classes contribute
  matf z = matf::scalar(F, 2, 3);
  for (Fq::elem a = 1; a < 5; ++a)
    for (Fq::elem b = 1; b < 5; ++b) {
      std::uint64_t h = hall_coefficient(tab, z, {scalar_class(a), scalar_class(b)});
      if (a == 3 && b == 3)
        CHECK(bigint(h) == count_flags(flag_spec(F, {1, 1})));
      else
        CHECK(h == 0);
    }

  // errors: degree sum, foreign field, singular element
  CHECK_THROWS_AS(hall_coefficient(tab, g, {scalar_class(1)}), error);
  matf g3(F, 3);
  CHECK_THROWS_AS(hall_coefficient(tab, g3, {scalar_class(1), scalar_class(1)}), error);
  matf sing(F, 2, {1, 0, 0, 0});
  CHECK_THROWS_AS(hall_coefficient(tab, sing, {scalar_class(1), scalar_class(1)}), error);
}

TEST_CASE("hall sum over class tuples matches fixed flags in a bigger group") {
  Fq F = field_of_size(2);
  irreducible_table tab(F);
  matf g(F, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});
  std::vector<class_label> gl2_classes = enumerate_class_labels(tab, 2);
  std::vector<class_label> gl1_classes = enumerate_class_labels(tab, 1);
  std::uint64_t sum = 0;
  for (const class_label& c1 : gl2_classes)
    for (const class_label& c2 : gl1_classes) sum += hall_coefficient(tab, g, {c1, c2});
  CHECK(sum == stable_flag_count(g, flag_spec(F, {2, 1}), all_indices(2), false));
}

TEST_CASE("parabolic induction against the character table") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    gl2_table t(field_of_size(q));
    for (const gl2_class& c : t.classes()) {
      // a != b: the principal series entry
      for (const gl2_char& ch : t.chars()) {
        if (ch.family != gl2_char_family::principal) continue;
        std::complex<double> ind = induce_gl2(ch.a, ch.b, c.label);
        std::complex<double> tab = t.value(ch, c);
        CHECK(std::abs(ind - tab) < 1e-8);
      }
      // a = b: the linear character plus its Steinberg twist
      for (std::uint64_t a = 0; a + 1 < q; ++a) {
        std::complex<double> ind = induce_gl2(a, a, c.label);
        std::complex<double> lin = t.value(t.chars()[a], c);
        std::complex<double> st = t.value(t.chars()[q - 1 + a], c);
        CHECK(std::abs(ind - (lin + st)) < 1e-8);
      }
    }
    // value at the identity: all q + 1 lines
    CHECK(std::abs(induce_gl2(0, 1 % (q - 1), t.classes()[0].label) -
                   std::complex<double>(static_cast<double>(q + 1))) < 1e-8);
  }
}

TEST_CASE("induced characters have norm one or two") {
  for (std::uint32_t q : {3u, 5u}) {
    gl2_table t(field_of_size(q));
    double order = static_cast<double>(to_u64(t.group_order()));
    for (std::uint64_t a = 0; a + 1 < q; ++a)
      for (std::uint64_t b = a; b + 1 < q; ++b) {
        std::complex<double> norm = 0.0;
        for (const gl2_class& c : t.classes()) {
          std::complex<double> v = induce_gl2(a, b, c.label);
          norm += static_cast<double>(to_u64(c.size)) * v * std::conj(v);
        }
        norm /= order;
        double expect = a == b ? 2.0 : 1.0;
        CHECK(std::abs(norm - expect) < 1e-8);
      }
  }
}
