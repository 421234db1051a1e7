#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "glnq/error.hpp"
#include "glnq/partition.hpp"

namespace glnq {

// A type: a finitely supported map from nonempty partitions to nonempty
// partitions.  Entries are kept sorted by canonical key order, keys unique.
// The degree weights each key by its size; two conjugacy classes (or two
// irreducible characters) in different ambient groups share a type exactly
// when their labels agree up to renaming the underlying polynomials or
// simplices.
class type_tau {
 public:
  using entry = std::pair<partition, partition>;

  type_tau() = default;

  explicit type_tau(std::vector<entry> entries) : entries_(std::move(entries)) {
    for (auto& [k, v] : entries_) {
      require(!k.empty(), errc::range_error, "type key must be a nonempty partition");
      require(!v.empty(), errc::range_error, "type value must be a nonempty partition");
    }
    std::sort(entries_.begin(), entries_.end(), [](const entry& a, const entry& b) {
      return partition_less(a.first, b.first);
    });
    for (std::size_t i = 1; i < entries_.size(); ++i)
      require(!(entries_[i - 1].first == entries_[i].first), errc::range_error,
              "duplicate key in type");
  }

  const std::vector<entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  partition value_at(const partition& key) const {
    for (const auto& [k, v] : entries_)
      if (k == key) return v;
    return partition();
  }

  // sum of |key| * |value|
  int degree() const {
    int d = 0;
    for (const auto& [k, v] : entries_) d += k.size() * v.size();
    return d;
  }

  // sum of |value|
  int dim() const {
    int d = 0;
    for (const auto& [k, v] : entries_) d += v.size();
    return d;
  }

  bool is_primary() const { return entries_.size() == 1; }

  // Split into single-entry types; their degrees sum to degree().
  std::vector<type_tau> primary_factors() const {
    std::vector<type_tau> out;
    for (const auto& e : entries_) out.push_back(type_tau({e}));
    return out;
  }

  friend bool operator==(const type_tau& a, const type_tau& b) = default;

  // "[1->2,1][2,1->1]": entries in canonical key order
  std::string to_string() const {
    if (entries_.empty()) return "[]";
    std::ostringstream os;
    for (const auto& [k, v] : entries_) os << '[' << k.to_string() << "->" << v.to_string() << ']';
    return os.str();
  }

 private:
  std::vector<entry> entries_;
};

inline bool type_less(const type_tau& a, const type_tau& b) {
  auto key = [](const type_tau& t) {
    std::vector<std::vector<int>> k;
    for (const auto& [kk, vv] : t.entries()) {
      k.push_back(kk.parts());
      k.push_back(vv.parts());
    }
    return k;
  };
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return key(a) < key(b);
}

// All types of a given degree, in a stable order (degree is fixed here, so
// the order is the lexicographic one from type_less).
inline std::vector<type_tau> enumerate_types(int degree) {
  require(degree >= 0, errc::range_error, "degree must be nonnegative");
  std::vector<partition> keys;
  for (int s = 1; s <= degree; ++s)
    for (auto& p : enumerate_partitions(s)) keys.push_back(p);

  // partitions of every size up to degree, for values
  std::vector<std::vector<partition>> by_size(static_cast<std::size_t>(degree) + 1);
  for (int s = 1; s <= degree; ++s) by_size[static_cast<std::size_t>(s)] = enumerate_partitions(s);

  std::vector<type_tau> out;
  std::vector<type_tau::entry> cur;
  auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(type_tau(cur));
      return;
    }
    for (std::size_t i = from; i < keys.size(); ++i) {
      int ks = keys[i].size();
      if (ks > remaining) continue;
      for (int vs = 1; vs * ks <= remaining; ++vs)
        for (const auto& val : by_size[static_cast<std::size_t>(vs)]) {
          cur.emplace_back(keys[i], val);
          self(self, i + 1, remaining - ks * vs);
          cur.pop_back();
        }
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), type_less);
  return out;
}

}  // namespace glnq
