#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "glnq/classlabel.hpp"
#include "glnq/error.hpp"
#include "glnq/partition.hpp"
#include "glnq/type_tau.hpp"

namespace glnq {

// A degree-s simplex over F_q: an orbit of size exactly s of multiplication
// by q on Z/(q^s - 1), named by its smallest member.  These index the
// characters of F_{q^s}^* up to Frobenius twist, and there are exactly as
// many of them as monic irreducibles of degree s other than t.
struct simplex {
  int s = 1;
  std::uint64_t k = 0;

  friend bool operator==(const simplex& a, const simplex& b) = default;
  friend bool simplex_less(const simplex& a, const simplex& b) {
    if (a.s != b.s) return a.s < b.s;
    return a.k < b.k;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(' << s << '|' << k << ')';
    return os.str();
  }
};

inline std::vector<simplex> enumerate_simplices(std::uint64_t q, int s) {
  require(q >= 2, errc::range_error, "simplices need q >= 2");
  require(s >= 1, errc::range_error, "simplex degree must be positive");
  std::uint64_t mod = 1;
  for (int i = 0; i < s; ++i) {
    mod *= q;
    require(mod <= (std::uint64_t(1) << 40), errc::too_large, "q^s too large for simplex enumeration");
  }
  mod -= 1;
  std::vector<simplex> out;
  for (std::uint64_t k = 0; k < mod; ++k) {
    std::uint64_t x = k * q % mod;
    int orbit = 1;
    bool minimal = true;
    while (x != k) {
      if (x < k) {
        minimal = false;
        break;
      }
      x = x * q % mod;
      ++orbit;
    }
    if (minimal && orbit == s) out.push_back({s, k});
  }
  return out;
}

// A character label: finitely supported map from simplices to nonempty
// partitions; the degree weights each simplex by its own degree.
struct char_label {
  std::vector<std::pair<simplex, partition>> entries;  // sorted by simplex_less

  int degree() const {
    int d = 0;
    for (const auto& [s, lam] : entries) d += s.s * lam.size();
    return d;
  }

  friend bool operator==(const char_label& a, const char_label& b) = default;

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) os << ';';
      os << entries[i].first.to_string() << ':' << entries[i].second.to_string();
    }
    return os.str();
  }
};

// Type of a character label: group simplices by their partition value and
// record the simplex degrees.  No conjugation happens on this side; with
// the conjugation built into type_of_class, equal types then pair classes
// with characters.
inline type_tau type_of_char(const char_label& lab) {
  std::vector<std::pair<partition, std::vector<int>>> acc;
  for (const auto& [s, lam] : lab.entries) {
    bool found = false;
    for (auto& [k, degs] : acc)
      if (k == lam) {
        degs.push_back(s.s);
        found = true;
      }
    if (!found) acc.push_back({lam, {s.s}});
  }
  std::vector<type_tau::entry> entries;
  for (auto& [k, degs] : acc) entries.emplace_back(k, partition(std::move(degs)));
  return type_tau(std::move(entries));
}

namespace detail {

// Assign nonempty partitions to weighted keys so total degree = n; keys are
// consumed in index order, each used at most once.
template <typename Key, typename Emit>
void assign_partitions(const std::vector<std::pair<Key, int>>& keys, int n, Emit&& emit) {
  std::vector<std::pair<Key, partition>> cur;
  std::vector<std::vector<partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int s = 1; s <= n; ++s) by_size[static_cast<std::size_t>(s)] = enumerate_partitions(s);
  auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
    if (remaining == 0) {
      emit(cur);
      return;
    }
    for (std::size_t i = from; i < keys.size(); ++i) {
      int d = keys[i].second;
      if (d > remaining) continue;
      for (int w = 1; w * d <= remaining; ++w)
        for (const auto& lam : by_size[static_cast<std::size_t>(w)]) {
          cur.emplace_back(keys[i].first, lam);
          self(self, i + 1, remaining - d * w);
          cur.pop_back();
        }
    }
  };
  rec(rec, 0, n);
}

}  // namespace detail

// All conjugacy class labels of GL_n over the table's field, ordered by the
// assignment recursion over the canonical irreducible order.
inline std::vector<class_label> enumerate_class_labels(irreducible_table& tab, int n) {
  require(n >= 1, errc::range_error, "need n >= 1");
  std::vector<std::pair<fqpoly, int>> keys;
  for (int d = 1; d <= n; ++d)
    for (const fqpoly& f : tab.degree(d)) {
      if (d == 1 && f.coeff(0) == 0) continue;  // f = t never divides an invertible char poly
      keys.emplace_back(f, d);
    }
  std::vector<class_label> out;
  detail::assign_partitions(keys, n, [&](const std::vector<std::pair<fqpoly, partition>>& cur) {
    class_label lab;
    lab.entries = cur;
    out.push_back(std::move(lab));
  });
  return out;
}

// All character labels of GL_n(F_q), same recursion over simplices.
inline std::vector<char_label> enumerate_char_labels(std::uint64_t q, int n) {
  require(n >= 1, errc::range_error, "need n >= 1");
  std::vector<std::pair<simplex, int>> keys;
  for (int s = 1; s <= n; ++s)
    for (const simplex& sim : enumerate_simplices(q, s)) keys.emplace_back(sim, s);
  std::vector<char_label> out;
  detail::assign_partitions(keys, n, [&](const std::vector<std::pair<simplex, partition>>& cur) {
    char_label lab;
    lab.entries = cur;
    out.push_back(std::move(lab));
  });
  return out;
}

// One way of realizing rho as the disjoint union over label entries of
// stretched partitions: entry i of degree d_i and weight w_i receives a
// partition m_i of w_i, and the parts of all p_{d_i}(m_i) together must
// reproduce rho exactly.
using substitution_mode = std::vector<partition>;

inline std::vector<substitution_mode> modes_of_substitution(
    const std::vector<std::pair<int, int>>& degree_weight, const partition& rho) {
  int total = 0;
  for (auto [d, w] : degree_weight) {
    require(d >= 1 && w >= 1, errc::range_error, "entry degrees and weights must be positive");
    total += d * w;
  }
  std::vector<substitution_mode> out;
  if (total != rho.size()) return out;

  std::vector<std::vector<partition>> choices;
  for (auto [d, w] : degree_weight) choices.push_back(enumerate_partitions(w));

  std::map<int, int> want;
  for (int p : rho.parts()) ++want[p];

  substitution_mode cur;
  auto rec = [&](auto&& self, std::size_t i, const std::map<int, int>& remaining) -> void {
    if (i == degree_weight.size()) {
      for (const auto& [p, c] : remaining)
        if (c != 0) return;
      out.push_back(cur);
      return;
    }
    int d = degree_weight[i].first;
    for (const partition& m : choices[i]) {
      std::map<int, int> next = remaining;
      bool ok = true;
      for (int part : m.parts()) {
        auto it = next.find(part * d);
        if (it == next.end() || it->second == 0) {
          ok = false;
          break;
        }
        --it->second;
      }
      if (!ok) continue;
      cur.push_back(m);
      self(self, i + 1, next);
      cur.pop_back();
    }
  };
  rec(rec, 0, want);
  return out;
}

}  // namespace glnq
