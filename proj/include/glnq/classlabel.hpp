#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "glnq/bigint.hpp"
#include "glnq/error.hpp"
#include "glnq/fqpoly.hpp"
#include "glnq/matrix.hpp"
#include "glnq/partition.hpp"
#include "glnq/type_tau.hpp"

namespace glnq {

// Conjugacy class of an invertible matrix: for each monic irreducible f
// dividing the characteristic polynomial (never f = t), the partition
// listing the sizes of the f-primary rational canonical blocks.  Entries
// are sorted by the canonical polynomial order and the partitions here are
// block sizes: the identity carries 1^n at t-1, a transvection 1^{n-2} 2.
struct class_label {
  std::vector<std::pair<fqpoly, partition>> entries;

  int degree() const {
    int d = 0;
    for (const auto& [f, lam] : entries) d += f.degree() * lam.size();
    return d;
  }

  const Fq& field() const {
    require(!entries.empty(), errc::range_error, "empty class label has no field");
    return entries.front().first.field();
  }

  friend bool operator==(const class_label& a, const class_label& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      if (a.entries[i].first != b.entries[i].first || a.entries[i].second != b.entries[i].second)
        return false;
    return true;
  }

  // "t+2:1,1" or "t+1:2;t^2+t+2:1"
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) os << ';';
      os << entries[i].first.to_string() << ':' << entries[i].second.to_string();
    }
    return os.str();
  }
};

inline void sort_label(class_label& lab) {
  std::sort(lab.entries.begin(), lab.entries.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
}

// Conjugacy class label of an invertible matrix, from the rank profile of
// f(g)^j: the number of f-blocks of size >= j is
// (rank f(g)^{j-1} - rank f(g)^j) / deg f.
inline class_label compute_class_label(irreducible_table& tab, const matf& g) {
  require(det(g) != 0, errc::singular_matrix, "class labels are defined for invertible matrices");
  fqpoly chi = char_poly(g);
  class_label lab;
  for (const auto& [f, mult] : factor(tab, chi)) {
    int d = f.degree();
    matf fg = eval_at_matrix(f, g);
    std::vector<int> ranks{g.n()};  // rank of fg^0
    matf p = fg;
    for (int j = 1; j <= mult; ++j) {
      ranks.push_back(rank(p));
      if (j < mult) p = p * fg;
    }
    std::vector<int> parts;
    std::vector<int> ge(static_cast<std::size_t>(mult) + 2, 0);
    for (int j = 1; j <= mult; ++j)
      ge[static_cast<std::size_t>(j)] =
          (ranks[static_cast<std::size_t>(j) - 1] - ranks[static_cast<std::size_t>(j)]) / d;
    for (int j = 1; j <= mult; ++j) {
      int exactly = ge[static_cast<std::size_t>(j)] - ge[static_cast<std::size_t>(j) + 1];
      for (int rep = 0; rep < exactly; ++rep) parts.push_back(j);
    }
    lab.entries.emplace_back(f, partition(std::move(parts)));
  }
  sort_label(lab);
  return lab;
}

// companion matrix of a monic polynomial
inline matf companion(const fqpoly& f) {
  const Fq& F = f.field();
  int d = f.degree();
  require(d >= 1 && f.is_monic(), errc::range_error, "companion matrix needs a monic polynomial");
  matf c(F, d);
  for (int i = 1; i < d; ++i) c.at(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) c.at(i, d - 1) = F.neg(f.coeff(i));
  return c;
}

// Block-diagonal representative: for each label entry in order, a companion
// block of f^b for every part b (descending).  Deterministic, so equal
// labels give identical matrices.
inline matf representative(const class_label& lab) {
  require(!lab.entries.empty(), errc::range_error, "cannot build a representative of degree 0");
  const Fq& F = lab.field();
  int n = lab.degree();
  matf g(F, n);
  int off = 0;
  for (const auto& [f, lam] : lab.entries)
    for (int b : lam.parts()) {
      fqpoly fb = fqpoly::one(F);
      for (int i = 0; i < b; ++i) fb = fb * f;
      matf c = companion(fb);
      for (int i = 0; i < c.n(); ++i)
        for (int j = 0; j < c.n(); ++j) g.at(off + i, off + j) = c.at(i, j);
      off += c.n();
    }
  return g;
}

inline Fq::elem det_of_class(const class_label& lab) {
  const Fq& F = lab.field();
  Fq::elem d = 1;
  for (const auto& [f, lam] : lab.entries) {
    Fq::elem c0 = f.coeff(0);
    if (f.degree() % 2 == 1) c0 = F.neg(c0);
    d = F.mul(d, F.pow(c0, static_cast<std::uint64_t>(lam.size())));
  }
  return d;
}

inline bigint group_order_gl(int n, std::uint64_t q) {
  require(n >= 1, errc::range_error, "group order needs n >= 1");
  bigint o = big_pow(bigint(q), static_cast<unsigned>(n) * (static_cast<unsigned>(n) - 1) / 2);
  for (int i = 1; i <= n; ++i) o *= big_pow(bigint(q), static_cast<unsigned>(i)) - 1;
  return o;
}

inline bigint group_order_sl(int n, std::uint64_t q) {
  return group_order_gl(n, q) / (bigint(q) - 1);
}

// Order of the centralizer of a class in its ambient GL_n(F_q):
// the product over label entries of a_lambda(q^{deg f}) with
// a_lambda(Q) = Q^{|lambda| + 2 n(lambda)} prod_i phi_{m_i}(1/Q),
// written integrally to stay in bigint.
inline bigint centralizer_order_gl(const class_label& lab) {
  bigint total = 1;
  const bigint q = lab.field().q();
  for (const auto& [f, lam] : lab.entries) {
    bigint Q = big_pow(q, static_cast<unsigned>(f.degree()));
    int exp = lam.size() + 2 * n_lambda(lam);
    bigint prod = 1;
    for (auto [part, m] : lam.multiplicities()) {
      exp -= m * (m + 1) / 2;
      for (int j = 1; j <= m; ++j) prod *= big_pow(Q, static_cast<unsigned>(j)) - 1;
    }
    require(exp >= 0, errc::range_error, "negative exponent in centralizer order");
    total *= big_pow(Q, static_cast<unsigned>(exp)) * prod;
  }
  return total;
}

inline bigint class_size_gl(const class_label& lab) {
  return group_order_gl(lab.degree(), lab.field().q()) / centralizer_order_gl(lab);
}

// Type of a class: group the entries by the conjugate of their block-size
// partition; the value at each such partition collects the degrees of the
// polynomials carrying it.
inline type_tau type_of_class(const class_label& lab) {
  std::vector<std::pair<partition, std::vector<int>>> acc;
  for (const auto& [f, lam] : lab.entries) {
    partition key = lam.conjugate();
    bool found = false;
    for (auto& [k, degs] : acc)
      if (k == key) {
        degs.push_back(f.degree());
        found = true;
      }
    if (!found) acc.push_back({key, {f.degree()}});
  }
  std::vector<type_tau::entry> entries;
  for (auto& [k, degs] : acc) entries.emplace_back(k, partition(std::move(degs)));
  return type_tau(std::move(entries));
}

// Multiplicative Jordan decomposition g = s u = u s with s semisimple and
// u unipotent, both polynomials in g.  Newton iteration against the radical
// of the characteristic polynomial inside F_q[t]/(chi).
inline std::pair<matf, matf> jordan_decompose(irreducible_table& tab, const matf& g) {
  require(det(g) != 0, errc::singular_matrix, "decomposition needs an invertible matrix");
  const Fq& F = g.field();
  fqpoly chi = char_poly(g);
  fqpoly rad = fqpoly::one(F);
  for (const auto& [f, mult] : factor(tab, chi)) rad = rad * f;

  fqpoly s = fqpoly::x(F) % chi;
  for (int iter = 0; iter <= 2 * g.n() + 4; ++iter) {
    fqpoly val = compose_mod(rad, s, chi);
    if (val.is_zero()) break;
    require(iter < 2 * g.n() + 4, errc::range_error, "decomposition did not converge");
    fqpoly der = compose_mod(rad.derivative(), s, chi);
    s = (s - val * inv_mod(der, chi)) % chi;
  }
  matf S = eval_at_matrix(s, g);
  matf U = inverse(S) * g;
  return {S, U};
}

// "t+1:2;t^2+t+2:1"
inline fqpoly parse_poly(const Fq& F, const std::string& text) {
  fqpoly out = fqpoly::zero(F);
  bool any = false;
  std::string term;
  std::istringstream is(text);
  while (std::getline(is, term, '+')) {
    any = true;
    std::string t;
    for (char c : term)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    require(!t.empty(), errc::parse_error, "empty term in polynomial '" + text + "'");
    std::uint64_t coef = 1;
    int exp = 0;
    std::size_t pos = 0;
    if (std::isdigit(static_cast<unsigned char>(t[0]))) {
      std::size_t digits = 1;
      while (digits < t.size() && std::isdigit(static_cast<unsigned char>(t[digits]))) ++digits;
      require(digits <= 18, errc::parse_error, "coefficient out of range in '" + term + "'");
      coef = std::stoull(t.substr(0, digits));
      pos = digits;
    }
    if (pos < t.size()) {
      require(t[pos] == 't', errc::parse_error, "bad polynomial term '" + term + "'");
      ++pos;
      exp = 1;
      if (pos < t.size()) {
        require(t[pos] == '^', errc::parse_error, "bad polynomial term '" + term + "'");
        std::string digits = t.substr(pos + 1);
        require(!digits.empty(), errc::parse_error, "bad polynomial term '" + term + "'");
        for (char c : digits)
          require(std::isdigit(static_cast<unsigned char>(c)), errc::parse_error,
                  "bad polynomial term '" + term + "'");
        require(digits.size() <= 3, errc::parse_error, "exponent out of range in '" + term + "'");
        exp = std::stoi(digits);
        pos = t.size();
      }
    }
    out = out + fqpoly::monomial(F, exp, F.check(coef));
  }
  require(any, errc::parse_error, "empty polynomial text");
  return out;
}

inline class_label parse_class_label(const Fq& F, const std::string& text) {
  class_label lab;
  std::istringstream is(text);
  std::string entry;
  while (std::getline(is, entry, ';')) {
    auto colon = entry.rfind(':');
    require(colon != std::string::npos, errc::parse_error, "class label entry needs 'poly:partition'");
    fqpoly f = parse_poly(F, entry.substr(0, colon));
    require(f.degree() >= 1 && f.is_monic(), errc::parse_error,
            "class label polynomial must be monic of positive degree");
    require(f.coeff(0) != 0, errc::parse_error,
            "class label polynomial must have a nonzero constant term");
    require(is_irreducible(f), errc::parse_error,
            "class label polynomial '" + f.to_string() + "' is reducible");
    partition lam = parse_partition(entry.substr(colon + 1));
    require(lam.size() > 0, errc::parse_error, "class label entry needs a nonempty partition");
    lab.entries.emplace_back(f, std::move(lam));
  }
  require(!lab.entries.empty(), errc::parse_error, "empty class label");
  sort_label(lab);
  for (std::size_t i = 1; i < lab.entries.size(); ++i)
    require(lab.entries[i - 1].first != lab.entries[i].first, errc::parse_error,
            "repeated polynomial in class label");
  return lab;
}

}  // namespace glnq
