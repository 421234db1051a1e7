#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "glnq/bigint.hpp"
#include "glnq/error.hpp"

namespace glnq {

// An integer partition, stored as a non-increasing list of positive parts.
// The empty partition is a valid value (the partition of 0).
class partition {
 public:
  partition() = default;

  explicit partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) require(p >= 1, errc::range_error, "partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  }

  static partition one_to_the(int n) {
    require(n >= 0, errc::range_error, "negative multiplicity");
    return partition(std::vector<int>(static_cast<std::size_t>(n), 1));
  }

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int num_parts() const { return static_cast<int>(parts_.size()); }

  // |lambda|: the integer being partitioned.
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  int multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
  }

  int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }

  // part -> multiplicity, ascending part order
  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  partition conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= largest_part(); ++j) {
      int cnt = 0;
      for (int p : parts_)
        if (p >= j) ++cnt;
      c.push_back(cnt);
    }
    return partition(std::move(c));
  }

  friend bool operator==(const partition& a, const partition& b) = default;

  std::string to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ',';
      os << parts_[i];
    }
    return os.str();
  }

  // exponent form, ascending parts: (2,1,1) -> "1^2 2"
  std::string to_exponent_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    bool first = true;
    for (auto [part, mult] : multiplicities()) {
      if (!first) os << ' ';
      first = false;
      os << part;
      if (mult > 1) os << '^' << mult;
    }
    return os.str();
  }

 private:
  std::vector<int> parts_;
};

// Canonical order on partitions: by size, then descending-lexicographic on
// the part lists, so enumeration of a fixed size starts at (n) and ends at
// 1^n.  This is the index order used everywhere a partition list is emitted.
inline bool partition_less(const partition& a, const partition& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.parts() > b.parts();
}

// All partitions of n in canonical order.
inline std::vector<partition> enumerate_partitions(int n) {
  require(n >= 0, errc::range_error, "cannot partition a negative integer");
  std::vector<partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(partition(cur));
      return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// n(lambda) = sum over parts x of the conjugate of x(x-1)/2.  Equivalently
// sum_j (j-1) * lambda_j over the parts of lambda itself.
inline int n_lambda(const partition& lam) {
  int s = 0;
  const auto& parts = lam.parts();
  for (std::size_t j = 0; j < parts.size(); ++j) s += static_cast<int>(j) * parts[j];
  return s;
}

// z_rho = prod_i i^{m_i} m_i!  where m_i is the multiplicity of i in rho.
// The order of the centralizer of a permutation of cycle type rho.
inline bigint z_rho(const partition& rho) {
  bigint z = 1;
  for (auto [part, mult] : rho.multiplicities())
    z *= big_pow(part, static_cast<unsigned>(mult)) * factorial(static_cast<unsigned>(mult));
  return z;
}

// p_s: multiply every part by s.
inline partition stretch(const partition& lam, int s) {
  require(s >= 1, errc::range_error, "stretch factor must be positive");
  std::vector<int> parts = lam.parts();
  for (int& p : parts) p *= s;
  return partition(std::move(parts));
}

// Multiset union of parts.
inline partition merge(const partition& a, const partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return partition(std::move(parts));
}

// Accepts "2,1,1", exponent form "1^2 2", and "-" or "" for the empty
// partition.
inline partition parse_partition(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) || !t.empty()) t += c;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  if (t.empty() || t == "-") return partition();

  std::vector<int> parts;
  auto parse_int = [&](std::string s) -> int {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    require(!s.empty(), errc::parse_error, "empty number in partition '" + text + "'");
    for (char c : s)
      require(std::isdigit(static_cast<unsigned char>(c)), errc::parse_error,
              "bad character in partition '" + text + "'");
    long v = std::stol(s);
    require(v >= 1, errc::parse_error, "partition parts must be positive in '" + text + "'");
    return static_cast<int>(v);
  };

  if (t.find(',') != std::string::npos) {
    std::istringstream is(t);
    std::string tok;
    while (std::getline(is, tok, ',')) parts.push_back(parse_int(tok));
  } else {
    std::istringstream is(t);
    std::string tok;
    while (is >> tok) {
      auto caret = tok.find('^');
      if (caret == std::string::npos) {
        parts.push_back(parse_int(tok));
      } else {
        int part = parse_int(tok.substr(0, caret));
        int mult = parse_int(tok.substr(caret + 1));
        for (int i = 0; i < mult; ++i) parts.push_back(part);
      }
    }
  }
  return partition(std::move(parts));
}

}  // namespace glnq
