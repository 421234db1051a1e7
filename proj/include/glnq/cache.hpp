#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "glnq/gl2char.hpp"
#include "glnq/serialize.hpp"

namespace glnq {

// On-disk memoization for the three expensive-to-recompute tables:
// irreducible polynomials, conjugacy class labels, and discrete logs.  Files
// are JSON keyed by (p, k, n) plus a schema version; any version bump or size
// mismatch makes a file invisible, so stale caches degrade to recomputation,
// never to wrong answers.  All functions swallow I/O failures the same way: a
// cache that cannot be read or written is simply not a cache.
inline constexpr int cache_schema_version = 1;

inline std::filesystem::path cache_directory() {
  if (const char* env = std::getenv("GLNQ_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::temp_directory_path() / "glnq-cache";
}

namespace detail {

inline njson read_cache_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) || ec) return njson();
  std::ifstream in(path);
  if (!in) return njson();
  njson j = njson::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return njson();
  if (j.value("version", 0) != cache_schema_version) return njson();
  return j;
}

inline void write_cache_file(const std::filesystem::path& path, const njson& j) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) return;
  std::ofstream out(path);
  if (!out) return;
  out << j.dump(1) << '\n';
}

inline std::string field_key(const Fq& F) {
  return "p" + std::to_string(F.characteristic()) + "_k" + std::to_string(F.degree_over_prime());
}

}  // namespace detail

// Irreducible polynomials of every degree up to max_degree, cache-backed.
// The returned levels feed irreducible_table::adopt or direct consumers.
inline std::vector<std::vector<fqpoly>> cached_irreducibles(const Fq& F, int max_degree) {
  require(max_degree >= 1, errc::range_error, "irreducible degree must be positive");
  std::filesystem::path path =
      cache_directory() /
      ("irreducibles_" + detail::field_key(F) + "_d" + std::to_string(max_degree) + ".json");
  njson j = detail::read_cache_file(path);
  if (j.contains("levels") && j["levels"].is_array() &&
      static_cast<int>(j["levels"].size()) == max_degree) {
    try {
      std::vector<std::vector<fqpoly>> levels;
      bool ok = true;
      for (int d = 1; d <= max_degree && ok; ++d) {
        std::vector<fqpoly> level;
        for (const auto& entry : j["levels"][static_cast<std::size_t>(d - 1)]) {
          if (!entry.is_string()) {
            ok = false;
            break;
          }
          fqpoly f = parse_coeff_list(F, entry.get<std::string>());
          if (f.degree() != d || f.coeff(d) != 1) {
            ok = false;
            break;
          }
          level.push_back(std::move(f));
        }
        levels.push_back(std::move(level));
      }
      if (ok) return levels;
    } catch (const std::exception&) {
      // fall through to recompute; a corrupt cache is no cache
    }
  }
  irreducible_table tab(F);
  std::vector<std::vector<fqpoly>> levels;
  for (int d = 1; d <= max_degree; ++d) levels.push_back(tab.degree(d));
  njson out;
  out["version"] = cache_schema_version;
  out["p"] = F.characteristic();
  out["k"] = F.degree_over_prime();
  out["max_degree"] = max_degree;
  njson jlevels = njson::array();
  for (const auto& level : levels) {
    njson jl = njson::array();
    for (const fqpoly& f : level) jl.push_back(coeff_list(f));
    jlevels.push_back(std::move(jl));
  }
  out["levels"] = std::move(jlevels);
  detail::write_cache_file(path, out);
  return levels;
}

// Class labels of the degree-n group over F, cache-backed.
inline std::vector<class_label> cached_class_labels(irreducible_table& tab, int n) {
  const Fq& F = tab.field();
  std::filesystem::path path =
      cache_directory() /
      ("classes_" + detail::field_key(F) + "_n" + std::to_string(n) + ".json");
  njson j = detail::read_cache_file(path);
  if (j.contains("labels") && j["labels"].is_array()) {
    try {
      std::vector<class_label> labels;
      bool ok = true;
      for (const auto& entry : j["labels"]) {
        class_label lab = parse_class_label_json(F, entry);
        if (lab.degree() != n) {
          ok = false;
          break;
        }
        labels.push_back(std::move(lab));
      }
      if (ok && !labels.empty()) return labels;
    } catch (const std::exception&) {
      // fall through to recompute; a corrupt cache is no cache
    }
  }
  std::vector<class_label> labels = enumerate_class_labels(tab, n);
  njson out;
  out["version"] = cache_schema_version;
  out["p"] = F.characteristic();
  out["k"] = F.degree_over_prime();
  out["n"] = n;
  njson jlabels = njson::array();
  for (const class_label& lab : labels) jlabels.push_back(class_label_json(lab));
  out["labels"] = std::move(jlabels);
  detail::write_cache_file(path, out);
  return labels;
}

// Discrete log tables for the rank-2 character table, cache-backed.
inline gl2_table::dlog_tables cached_dlogs(const Fq& F) {
  std::filesystem::path path =
      cache_directory() / ("dlogs_" + detail::field_key(F) + ".json");
  njson j = detail::read_cache_file(path);
  const std::uint64_t q = F.q();
  if (j.contains("base") && j.contains("quadratic")) {
    try {
      gl2_table::dlog_tables dl;
      if (j["base"].is_array() && j["base"].size() == q && j["quadratic"].is_array() &&
          j["quadratic"].size() == q * q) {
        for (const auto& v : j["base"]) dl.base.push_back(v.get<std::uint64_t>());
        for (const auto& v : j["quadratic"]) dl.quadratic.push_back(v.get<std::uint64_t>());
        return dl;
      }
    } catch (const std::exception&) {
      // fall through to recompute; a corrupt cache is no cache
    }
  }
  gl2_table::dlog_tables dl = gl2_table::compute_dlogs(F);
  njson out;
  out["version"] = cache_schema_version;
  out["p"] = F.characteristic();
  out["k"] = F.degree_over_prime();
  out["base"] = dl.base;
  out["quadratic"] = dl.quadratic;
  detail::write_cache_file(path, out);
  return dl;
}

}  // namespace glnq
