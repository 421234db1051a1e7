#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "glnq/cache.hpp"
#include "glnq/serialize.hpp"

using namespace glnq;

namespace {

Fq field_of_size(std::uint32_t q) { return parse_field(std::to_string(q)); }

// every test in this file works under a private cache root
struct cache_sandbox {
  std::filesystem::path dir;
  cache_sandbox() {
    dir = std::filesystem::temp_directory_path() / "glnq-test-cache";
    std::filesystem::remove_all(dir);
    setenv("GLNQ_CACHE_DIR", dir.string().c_str(), 1);
  }
  ~cache_sandbox() {
    std::filesystem::remove_all(dir);
    unsetenv("GLNQ_CACHE_DIR");
  }
};

}  // namespace

TEST_CASE("polynomial text round trip") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    Fq F = field_of_size(q);
    irreducible_table tab(F);
    for (int d = 1; d <= 3; ++d)
      for (const fqpoly& f : tab.degree(d)) {
        CHECK(parse_poly(F, f.to_string()) == f);
        CHECK(parse_coeff_list(F, coeff_list(f)) == f);
      }
  }
  Fq F3 = field_of_size(3);
  CHECK(parse_poly(F3, "2t^2+t+1") == fqpoly(F3, {1, 1, 2}));
  CHECK(parse_poly(F3, "1 + t + 2t^2") == fqpoly(F3, {1, 1, 2}));
  CHECK_THROWS_AS(parse_poly(F3, "t^"), error);
  CHECK_THROWS_AS(parse_poly(F3, "x+1"), error);
  CHECK_THROWS_AS(parse_poly(F3, "3t"), error);
  CHECK_THROWS_AS(parse_poly(F3, ""), error);
}

TEST_CASE("matrix text round trip") {
  Fq F5 = field_of_size(5);
  matf m(F5, 3, {1, 2, 3, 0, 4, 1, 2, 2, 0});
  CHECK(m.to_string() == "1,2,3;0,4,1;2,2,0");
  CHECK(parse_matrix(F5, m.to_string()) == m);
  CHECK(parse_matrix(F5, " 1, 2,3; 0,4,1;2,2,0 ") == m);
  CHECK_THROWS_AS(parse_matrix(F5, "1,2;3"), error);
  CHECK_THROWS_AS(parse_matrix(F5, "5,0;0,1"), error);
  CHECK_THROWS_AS(parse_matrix(F5, "a,0;0,1"), error);
}

TEST_CASE("class label text and JSON round trip") {
  for (auto [q, n] : {std::pair<std::uint32_t, int>{3, 2}, {2, 3}, {5, 2}}) {
    Fq F = field_of_size(q);
    irreducible_table tab(F);
    for (const class_label& lab : enumerate_class_labels(tab, n)) {
      CHECK(parse_class_label(F, lab.to_string()) == lab);
      CHECK(parse_class_label_json(F, class_label_json(lab)) == lab);
    }
  }
  Fq F3 = field_of_size(3);
  CHECK_THROWS_AS(parse_class_label(F3, "t:1"), error);        // not invertible
  CHECK_THROWS_AS(parse_class_label(F3, "t^2+2:1"), error);    // reducible
  CHECK_THROWS_AS(parse_class_label(F3, "t+1:1;t+1:1"), error);  // repeated
  CHECK_THROWS_AS(parse_class_label(F3, "t+1"), error);        // no partition
}

TEST_CASE("green-convention partitions are stored conjugated") {
  Fq F3 = field_of_size(3);
  njson entry;
  entry["f"] = "2,1";  // t + 2, the eigenvalue-one line
  entry["partition"] = njson::array({3, 1});
  entry["convention"] = "green";
  njson lab = njson::array({entry});
  class_label parsed = parse_class_label_json(F3, lab);
  CHECK(parsed.entries[0].second == partition({3, 1}).conjugate());

  entry["convention"] = "tilted";
  CHECK_THROWS_AS(parse_class_label_json(F3, njson::array({entry})), error);
}

TEST_CASE("character label JSON round trip") {
  for (std::uint64_t q : {2, 3, 5}) {
    for (const char_label& lab : enumerate_char_labels(q, 2)) {
      CHECK(parse_char_label_json(q, char_label_json(lab)) == lab);
    }
  }
  simplex sx{2, 5};
  CHECK(parse_simplex_json(simplex_json(sx)) == sx);
}

TEST_CASE("report serialization is stable") {
  CHECK(fixed12(0.5) == "0.500000000000");
  CHECK(fixed12(2.0 / 3.0) == "0.666666666667");

  Fq F3 = field_of_size(3);
  irreducible_table tab(F3);
  fiber_report rep;
  rep.n = 2;
  rep.q = 3;
  rep.group = group_kind::gl;
  rep.method = fiber_method::character;
  rep.label = scan_class_label(tab, scan_family::transvection, 2);
  rep.count = 108;
  rep.exponent = 5;
  rep.c_q = 108.0 / 243.0;
  njson j = fiber_report_json(rep);
  CHECK(j["class"] == "t+1:2");
  CHECK(j["count"] == "108");
  CHECK(j["c_q"] == "0.444444444444");
  CHECK(j["group"] == "gl");

  central_fiber_report cr = central_fiber_sl(field_of_size(5), 2);
  njson cj = central_fiber_json(field_of_size(5), 2, cr);
  CHECK(cj["count"] == "120");
  REQUIRE(cj["witness"].is_object());
  matf a = parse_matrix_json(field_of_size(5), cj["witness"]["a"]);
  CHECK(a == cr.witness->first);
}

TEST_CASE("irreducible cache round trips and survives corruption") {
  cache_sandbox sandbox;
  Fq F3 = field_of_size(3);
  auto fresh = cached_irreducibles(F3, 3);
  REQUIRE(fresh.size() == 3);
  CHECK(fresh[0].size() == 3);   // t, t+1, t+2
  CHECK(fresh[1].size() == 3);   // (9 - 3) / 2
  CHECK(fresh[2].size() == 8);   // (27 - 3) / 3

  auto reloaded = cached_irreducibles(F3, 3);
  CHECK(reloaded == fresh);

  // a table adopting the cached levels serves the same polynomials
  irreducible_table tab(F3);
  tab.adopt(reloaded);
  irreducible_table plain(F3);
  for (int d = 1; d <= 3; ++d) CHECK(tab.degree(d) == plain.degree(d));

  // scribble over the cache file; the loader must fall back to recomputing
  bool corrupted = false;
  for (const auto& entry : std::filesystem::directory_iterator(sandbox.dir)) {
    std::ofstream out(entry.path());
    out << "{\"version\": 1, \"levels\": [[\"9,9\"], [], []]}";
    corrupted = true;
  }
  REQUIRE(corrupted);
  CHECK(cached_irreducibles(F3, 3) == fresh);
}

TEST_CASE("class label and dlog caches reproduce the computed tables") {
  cache_sandbox sandbox;
  Fq F3 = field_of_size(3);
  irreducible_table tab(F3);
  auto direct = enumerate_class_labels(tab, 2);
  auto first = cached_class_labels(tab, 2);
  auto second = cached_class_labels(tab, 2);
  CHECK(first == direct);
  CHECK(second == direct);

  gl2_table::dlog_tables dl = cached_dlogs(F3);
  gl2_table::dlog_tables again = cached_dlogs(F3);
  CHECK(dl.base == again.base);
  CHECK(dl.quadratic == again.quadratic);

  // the table built from cached dlogs matches a fresh one
  gl2_table from_cache(F3, std::move(again));
  gl2_table plain(F3);
  REQUIRE(from_cache.classes().size() == plain.classes().size());
  for (std::size_t i = 0; i < plain.classes().size(); ++i) {
    CHECK(from_cache.classes()[i].label == plain.classes()[i].label);
    CHECK(from_cache.classes()[i].size == plain.classes()[i].size);
  }
  for (std::size_t ci = 0; ci < plain.chars().size(); ci += 3)
    for (std::size_t cj = 0; cj < plain.classes().size(); cj += 2)
      CHECK(from_cache.value(ci, cj) == plain.value(ci, cj));

  // deleting the cache directory changes nothing observable
  std::filesystem::remove_all(sandbox.dir);
  CHECK(cached_class_labels(tab, 2) == direct);
}
