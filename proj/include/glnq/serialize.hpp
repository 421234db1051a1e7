#pragma once

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "glnq/classlabel.hpp"
#include "glnq/error.hpp"
#include "glnq/fiber.hpp"
#include "glnq/flags.hpp"
#include "glnq/labels.hpp"
#include "glnq/matrix.hpp"
#include "glnq/partition.hpp"

namespace glnq {

using njson = nlohmann::ordered_json;

// Floating values are always rendered through this helper so identical runs
// produce identical bytes regardless of locale or format defaults.
inline std::string fixed12(double x) {
  if (x == 0.0) x = 0.0;  // never print the sign of a negative zero
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(12) << x;
  return os.str();
}

inline std::string bigint_str(const bigint& n) { return n.str(); }

// ---------------------------------------------------------------------------
// JSON forms

// Coefficient list "c0,c1,..." from the constant term up, including the
// leading one.
inline std::string coeff_list(const fqpoly& f) {
  std::ostringstream os;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i) os << ',';
    os << f.coeff(i);
  }
  return os.str();
}

inline fqpoly parse_coeff_list(const Fq& F, const std::string& text) {
  std::vector<Fq::elem> coeffs;
  std::istringstream is(text);
  std::string cell;
  while (std::getline(is, cell, ',')) {
    std::uint64_t v = 0;
    for (char c : cell) {
      require(std::isdigit(static_cast<unsigned char>(c)), errc::parse_error,
              "coefficient lists hold element encodings, got '" + cell + "'");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      require(v < F.q(), errc::parse_error,
              "encoding " + cell + " does not name an element of F_" + std::to_string(F.q()));
    }
    coeffs.push_back(static_cast<Fq::elem>(v));
  }
  require(!coeffs.empty(), errc::parse_error, "empty coefficient list");
  return fqpoly(F, coeffs);
}

inline njson partition_json(const partition& lam) { return njson(lam.parts()); }

inline partition parse_partition_json(const njson& j) {
  require(j.is_array(), errc::parse_error, "partitions serialize as arrays of parts");
  std::vector<int> parts;
  for (const auto& p : j) {
    require(p.is_number_integer() && p.get<int>() >= 1, errc::parse_error,
            "partition parts are positive integers");
    parts.push_back(p.get<int>());
  }
  return partition(parts);
}

// Partitions attached to labels are stored with an explicit convention tag:
// "blocks" means parts are Jordan block sizes (the in-memory convention),
// "green" means the conjugate shape is stored.
inline partition partition_with_convention(const njson& entry) {
  partition lam = parse_partition_json(entry.at("partition"));
  std::string conv = entry.value("convention", "blocks");
  if (conv == "green") return lam.conjugate();
  require(conv == "blocks", errc::parse_error, "unknown partition convention '" + conv + "'");
  return lam;
}

inline njson class_label_json(const class_label& lab) {
  njson out = njson::array();
  for (const auto& [f, lam] : lab.entries) {
    njson entry;
    entry["f"] = coeff_list(f);
    entry["partition"] = partition_json(lam);
    entry["convention"] = "blocks";
    out.push_back(std::move(entry));
  }
  return out;
}

inline class_label parse_class_label_json(const Fq& F, const njson& j) {
  require(j.is_array() && !j.empty(), errc::parse_error,
          "class labels serialize as non-empty arrays of entries");
  class_label lab;
  for (const auto& entry : j) {
    fqpoly f = parse_coeff_list(F, entry.at("f").get<std::string>());
    lab.entries.push_back({std::move(f), partition_with_convention(entry)});
  }
  sort_label(lab);
  return lab;
}

inline njson simplex_json(const simplex& sx) {
  njson out;
  out["s"] = sx.s;
  out["k"] = sx.k;
  return out;
}

inline simplex parse_simplex_json(const njson& j) {
  simplex sx;
  sx.s = j.at("s").get<int>();
  sx.k = j.at("k").get<std::uint64_t>();
  return sx;
}

inline njson char_label_json(const char_label& lab) {
  njson out = njson::array();
  for (const auto& [sx, lam] : lab.entries) {
    njson entry;
    entry["simplex"] = simplex_json(sx);
    entry["partition"] = partition_json(lam);
    entry["convention"] = "blocks";
    out.push_back(std::move(entry));
  }
  return out;
}

inline char_label parse_char_label_json(std::uint64_t q, const njson& j) {
  require(j.is_array() && !j.empty(), errc::parse_error,
          "character labels serialize as non-empty arrays of entries");
  char_label lab;
  for (const auto& entry : j) {
    simplex sx = parse_simplex_json(entry.at("simplex"));
    require(sx.s >= 1, errc::parse_error, "simplex size must be positive");
    std::uint64_t modulus = 1;
    for (int i = 0; i < sx.s; ++i) modulus *= q;
    require(sx.k < modulus - 1, errc::parse_error, "simplex point outside its cyclic group");
    lab.entries.push_back({sx, partition_with_convention(entry)});
  }
  std::sort(lab.entries.begin(), lab.entries.end(),
            [](const auto& a, const auto& b) { return simplex_less(a.first, b.first); });
  return lab;
}

inline njson matrix_json(const matf& m) {
  njson rows = njson::array();
  for (int i = 0; i < m.n(); ++i) {
    njson row = njson::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline matf parse_matrix_json(const Fq& F, const njson& j) {
  require(j.is_array() && !j.empty(), errc::parse_error, "matrices serialize as arrays of rows");
  int n = static_cast<int>(j.size());
  std::vector<Fq::elem> flat;
  for (const auto& row : j) {
    require(row.is_array() && static_cast<int>(row.size()) == n, errc::parse_error,
            "matrix rows must all have length " + std::to_string(n));
    for (const auto& cell : row) flat.push_back(cell.get<Fq::elem>());
  }
  return matf(F, n, flat);
}

inline njson fiber_report_json(const fiber_report& rep) {
  njson out;
  out["n"] = rep.n;
  out["q"] = rep.q;
  out["group"] = rep.group == group_kind::gl ? "gl" : "sl";
  out["method"] = to_name(rep.method);
  out["class"] = rep.label.to_string();
  out["count"] = bigint_str(rep.count);
  out["exponent"] = rep.exponent;
  out["c_q"] = fixed12(rep.c_q);
  return out;
}

inline njson flag_prob_json(const flag_prob_report& rep) {
  njson out;
  out["probability_num"] = bigint_str(rep.stable);
  out["probability_den"] = bigint_str(rep.total);
  out["exponent"] = rep.exponent;
  out["constant"] = fixed12(rep.constant);
  return out;
}

inline njson central_fiber_json(const Fq& F, int n, const central_fiber_report& rep) {
  njson out;
  out["n"] = n;
  out["q"] = F.q();
  out["zeta"] = rep.zeta;
  out["count"] = bigint_str(rep.count);
  if (rep.witness) {
    njson w;
    w["a"] = matrix_json(rep.witness->first);
    w["b"] = matrix_json(rep.witness->second);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

}  // namespace glnq
