#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "glnq/error.hpp"
#include "glnq/field.hpp"
#include "glnq/fqpoly.hpp"

namespace glnq {

// A vector over F_q, as a row of field-element encodings.
using fvec = std::vector<Fq::elem>;

// Square matrix over a finite field, row major, carrying its field handle.
class matf {
 public:
  using elem = Fq::elem;

  matf(Fq F, int n) : F_(std::move(F)), n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
    require(n >= 1, errc::range_error, "matrix size must be positive");
  }

  matf(Fq F, int n, std::vector<elem> entries) : F_(std::move(F)), n_(n), a_(std::move(entries)) {
    require(n >= 1, errc::range_error, "matrix size must be positive");
    require(a_.size() == static_cast<std::size_t>(n) * n, errc::dimension_mismatch,
            "entry count does not match matrix size");
    for (elem e : a_) F_.check(e);
  }

  static matf identity(const Fq& F, int n) { return scalar(F, n, 1); }

  static matf scalar(const Fq& F, int n, elem c) {
    matf m(F, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
  }

  const Fq& field() const { return F_; }
  int n() const { return n_; }

  elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  elem at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<elem>& entries() const { return a_; }

  friend bool operator==(const matf& a, const matf& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
  friend bool operator!=(const matf& a, const matf& b) { return !(a == b); }

  friend matf operator*(const matf& a, const matf& b) {
    require(a.n_ == b.n_, errc::dimension_mismatch, "matrix size mismatch");
    const Fq& F = a.F_;
    matf c(F, a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        elem aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < a.n_; ++j)
          c.at(i, j) = F.add(c.at(i, j), F.mul(aik, b.at(k, j)));
      }
    return c;
  }

  friend matf operator+(const matf& a, const matf& b) {
    require(a.n_ == b.n_, errc::dimension_mismatch, "matrix size mismatch");
    matf c(a.F_, a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.F_.add(a.a_[i], b.a_[i]);
    return c;
  }

  friend matf operator-(const matf& a, const matf& b) {
    require(a.n_ == b.n_, errc::dimension_mismatch, "matrix size mismatch");
    matf c(a.F_, a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.F_.sub(a.a_[i], b.a_[i]);
    return c;
  }

  matf scaled(elem s) const {
    matf c(F_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] = F_.mul(a_[i], s);
    return c;
  }

  bool is_scalar() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (at(i, j) != (i == j ? at(0, 0) : 0)) return false;
    return true;
  }

  // index <-> matrix bijection onto [0, q^{n^2}), entries as base-q digits
  // in row-major order (used by exhaustive loops)
  static matf from_index(const Fq& F, int n, std::uint64_t idx) {
    matf m(F, n);
    const std::uint64_t q = F.q();
    for (std::size_t pos = 0; pos < m.a_.size(); ++pos, idx /= q)
      m.a_[pos] = static_cast<elem>(idx % q);
    return m;
  }

  std::uint64_t to_index() const {
    std::uint64_t v = 0;
    const std::uint64_t q = F_.q();
    for (auto it = a_.rbegin(); it != a_.rend(); ++it) v = v * q + *it;
    return v;
  }

  // "a,b;c,d" row by row
  std::string to_string() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
      if (i) os << ';';
      for (int j = 0; j < n_; ++j) {
        if (j) os << ',';
        os << at(i, j);
      }
    }
    return os.str();
  }

 private:
  Fq F_;
  int n_;
  std::vector<elem> a_;
};

inline matf mat_pow(const matf& a, std::uint64_t e) {
  matf r = matf::identity(a.field(), a.n());
  matf b = a;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

inline Fq::elem det(const matf& m) {
  const Fq& F = m.field();
  const int n = m.n();
  matf a = m;
  Fq::elem d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      d = F.neg(d);
    }
    d = F.mul(d, a.at(col, col));
    Fq::elem inv = F.inv(a.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      Fq::elem f = F.mul(a.at(r, col), inv);
      if (f == 0) continue;
      for (int j = col; j < n; ++j) a.at(r, j) = F.sub(a.at(r, j), F.mul(f, a.at(col, j)));
    }
  }
  return d;
}

inline int rank(const matf& m) {
  const Fq& F = m.field();
  const int n = m.n();
  matf a = m;
  int rk = 0;
  for (int col = 0; col < n && rk < n; ++col) {
    int piv = -1;
    for (int r = rk; r < n; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rk)
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(rk, j));
    Fq::elem inv = F.inv(a.at(rk, col));
    for (int r = rk + 1; r < n; ++r) {
      Fq::elem f = F.mul(a.at(r, col), inv);
      if (f == 0) continue;
      for (int j = col; j < n; ++j) a.at(r, j) = F.sub(a.at(r, j), F.mul(f, a.at(rk, j)));
    }
    ++rk;
  }
  return rk;
}

inline matf inverse(const matf& m) {
  const Fq& F = m.field();
  const int n = m.n();
  matf a = m;
  matf b = matf::identity(F, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    require(piv >= 0, errc::singular_matrix, "matrix is not invertible");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(b.at(piv, j), b.at(col, j));
      }
    Fq::elem inv = F.inv(a.at(col, col));
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = F.mul(a.at(col, j), inv);
      b.at(col, j) = F.mul(b.at(col, j), inv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Fq::elem f = a.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = F.sub(a.at(r, j), F.mul(f, a.at(col, j)));
        b.at(r, j) = F.sub(b.at(r, j), F.mul(f, b.at(col, j)));
      }
    }
  }
  return b;
}

// det(xI - m) via principal minors: the coefficient of x^{n-k} is
// (-1)^k * (sum of k x k principal minors).  Exact over the field and
// comfortably fast for the matrix sizes used here.
inline fqpoly char_poly(const matf& m) {
  const Fq& F = m.field();
  const int n = m.n();
  std::vector<Fq::elem> coeffs(static_cast<std::size_t>(n) + 1, 0);
  coeffs[static_cast<std::size_t>(n)] = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) rows.push_back(i);
    int k = static_cast<int>(rows.size());
    matf sub(F, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]);
    Fq::elem d = det(sub);
    std::size_t pos = static_cast<std::size_t>(n - k);
    if (k % 2 == 1) d = F.neg(d);
    coeffs[pos] = F.add(coeffs[pos], d);
  }
  return fqpoly(F, std::move(coeffs));
}

// p(m) by Horner
inline matf eval_at_matrix(const fqpoly& p, const matf& m) {
  const Fq& F = m.field();
  matf r(F, m.n());
  for (int i = p.degree(); i >= 0; --i) {
    r = r * m;
    Fq::elem c = p.coeff(i);
    if (c != 0) r = r + matf::scalar(F, m.n(), c);
  }
  return r;
}

// "1,2;0,1"
inline matf parse_matrix(const Fq& F, const std::string& text) {
  std::vector<std::vector<Fq::elem>> rows;
  std::istringstream is(text);
  std::string row;
  while (std::getline(is, row, ';')) {
    std::vector<Fq::elem> r;
    std::istringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      std::size_t pos = 0;
      while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
      require(pos < cell.size(), errc::parse_error, "empty matrix entry in '" + text + "'");
      unsigned long v = 0;
      try {
        v = std::stoul(cell.substr(pos));
      } catch (const std::exception&) {
        fail(errc::parse_error, "bad matrix entry in '" + text + "'");
      }
      r.push_back(F.check(v));
    }
    rows.push_back(std::move(r));
  }
  require(!rows.empty(), errc::parse_error, "empty matrix text");
  int n = static_cast<int>(rows.size());
  std::vector<Fq::elem> flat;
  for (const auto& r : rows) {
    require(static_cast<int>(r.size()) == n, errc::parse_error, "matrix text is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return matf(F, n, std::move(flat));
}

}  // namespace glnq
