#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "glnq/bigint.hpp"
#include "glnq/error.hpp"
#include "glnq/field.hpp"

namespace glnq {

// Polynomial over a finite field, coefficients ascending, top coefficient
// nonzero.  Each value carries its field handle, so arithmetic needs no
// extra argument; operands must live over the same field.
class fqpoly {
 public:
  using elem = Fq::elem;

  explicit fqpoly(Fq field) : F_(std::move(field)) {}

  fqpoly(Fq field, std::vector<elem> coeffs) : F_(std::move(field)), c_(std::move(coeffs)) {
    for (elem c : c_) F_.check(c);
    trim();
  }

  static fqpoly zero(const Fq& F) { return fqpoly(F); }
  static fqpoly constant(const Fq& F, elem c) { return fqpoly(F, {c}); }
  static fqpoly one(const Fq& F) { return constant(F, 1); }
  static fqpoly x(const Fq& F) { return fqpoly(F, {0, 1}); }

  static fqpoly monomial(const Fq& F, int k, elem c = 1) {
    require(k >= 0, errc::range_error, "monomial degree must be nonnegative");
    std::vector<elem> v(static_cast<std::size_t>(k) + 1, 0);
    v.back() = c;
    return fqpoly(F, std::move(v));
  }

  const Fq& field() const { return F_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  elem coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
  }

  const std::vector<elem>& coeffs() const { return c_; }
  elem leading() const { return c_.empty() ? 0 : c_.back(); }

  // total order: degree, then coefficient vector as a base-q integer read
  // from the constant term up.  This is the canonical order used wherever
  // irreducible polynomials are listed.
  std::uint64_t encoding() const {
    std::uint64_t v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * F_.q() + *it;
    return v;
  }

  friend bool operator==(const fqpoly& a, const fqpoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const fqpoly& a, const fqpoly& b) { return !(a == b); }

  friend bool poly_less(const fqpoly& a, const fqpoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.encoding() < b.encoding();
  }

  friend fqpoly operator+(const fqpoly& a, const fqpoly& b) {
    const Fq& F = a.F_;
    std::vector<elem> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return fqpoly(F, std::move(c));
  }

  friend fqpoly operator-(const fqpoly& a, const fqpoly& b) {
    const Fq& F = a.F_;
    std::vector<elem> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return fqpoly(F, std::move(c));
  }

  friend fqpoly operator*(const fqpoly& a, const fqpoly& b) {
    const Fq& F = a.F_;
    if (a.is_zero() || b.is_zero()) return zero(F);
    std::vector<elem> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = F.add(c[i + j], F.mul(a.c_[i], b.c_[j]));
    return fqpoly(F, std::move(c));
  }

  fqpoly scaled(elem s) const {
    const Fq& F = F_;
    std::vector<elem> c = c_;
    for (elem& x : c) x = F.mul(x, s);
    return fqpoly(F, std::move(c));
  }

  fqpoly monic() const {
    require(!is_zero(), errc::division_by_zero, "zero polynomial has no monic scaling");
    return scaled(F_.inv(leading()));
  }

  friend std::pair<fqpoly, fqpoly> divmod(const fqpoly& a, const fqpoly& b) {
    const Fq& F = a.F_;
    require(!b.is_zero(), errc::division_by_zero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {zero(F), a};
    std::vector<elem> rem = a.c_;
    std::vector<elem> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    elem lead_inv = F.inv(b.leading());
    for (int d = static_cast<int>(rem.size()) - 1; d >= b.degree(); --d) {
      elem top = rem[static_cast<std::size_t>(d)];
      if (top == 0) continue;
      elem c = F.mul(top, lead_inv);
      int shift = d - b.degree();
      quo[static_cast<std::size_t>(shift)] = c;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        std::size_t idx = static_cast<std::size_t>(shift) + j;
        rem[idx] = F.sub(rem[idx], F.mul(c, b.c_[j]));
      }
    }
    rem.resize(static_cast<std::size_t>(std::max(b.degree(), 0)));
    return {fqpoly(F, std::move(quo)), fqpoly(F, std::move(rem))};
  }

  friend fqpoly operator/(const fqpoly& a, const fqpoly& b) { return divmod(a, b).first; }
  friend fqpoly operator%(const fqpoly& a, const fqpoly& b) { return divmod(a, b).second; }

  elem eval(elem x) const {
    const Fq& F = F_;
    elem r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = F.add(F.mul(r, x), *it);
    return r;
  }

  fqpoly derivative() const {
    const Fq& F = F_;
    if (c_.size() <= 1) return zero(F);
    std::vector<elem> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      c[i - 1] = F.mul(c_[i], F.from_int(i % F.characteristic()));
    return fqpoly(F, std::move(c));
  }

  // "t^2+3t+1"; constant polynomials print as the bare coefficient
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      elem c = coeff(i);
      if (c == 0) continue;
      if (!first) os << '+';
      first = false;
      if (i == 0) {
        os << c;
      } else {
        if (c != 1) os << c;
        os << 't';
        if (i > 1) os << '^' << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Fq F_;
  std::vector<elem> c_;
};

inline fqpoly poly_gcd(fqpoly a, fqpoly b) {
  while (!b.is_zero()) {
    fqpoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

inline fqpoly pow_mod(const fqpoly& base, std::uint64_t e, const fqpoly& mod) {
  fqpoly r = fqpoly::one(base.field());
  fqpoly b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return r;
}

// f(g) mod m by Horner
inline fqpoly compose_mod(const fqpoly& f, const fqpoly& g, const fqpoly& m) {
  const Fq& F = f.field();
  fqpoly r = fqpoly::zero(F);
  for (int i = f.degree(); i >= 0; --i)
    r = (r * g + fqpoly::constant(F, f.coeff(i))) % m;
  return r;
}

// inverse of a modulo m; requires gcd(a, m) = 1
inline fqpoly inv_mod(const fqpoly& a, const fqpoly& m) {
  const Fq& F = a.field();
  fqpoly r0 = m, r1 = a % m;
  fqpoly s0 = fqpoly::zero(F), s1 = fqpoly::one(F);
  while (!r1.is_zero() && r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    fqpoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  require(!r1.is_zero(), errc::division_by_zero, "element not invertible modulo m");
  return s1.scaled(F.inv(r1.leading())) % m;
}

// Lazily grown list of monic irreducibles over one field, ordered within
// each degree by coefficient encoding.  Growth is not thread safe; build a
// table per thread or pre-grow before sharing.
class irreducible_table {
 public:
  explicit irreducible_table(Fq F) : F_(std::move(F)) {}

  const Fq& field() const { return F_; }

  const std::vector<fqpoly>& degree(int d) {
    require(d >= 1, errc::range_error, "irreducible degree must be positive");
    while (static_cast<int>(by_degree_.size()) < d) grow();
    return by_degree_[static_cast<std::size_t>(d) - 1];
  }

  // Seed the table with precomputed levels, degree one first.  Levels must
  // match what grow() would produce; only shape is checked here, so feed
  // this nothing but the output of a previous degree() walk.
  void adopt(std::vector<std::vector<fqpoly>> levels) {
    for (std::size_t i = 0; i < levels.size(); ++i)
      for (const fqpoly& f : levels[i])
        require(f.degree() == static_cast<int>(i) + 1 && f.coeff(f.degree()) == 1 &&
                    f.field().same_field(F_),
                errc::size_mismatch, "adopted levels do not fit this field");
    if (levels.size() > by_degree_.size()) by_degree_ = std::move(levels);
  }

 private:
  void grow() {
    int d = static_cast<int>(by_degree_.size()) + 1;
    const std::uint64_t q = F_.q();
    std::vector<fqpoly> out;
    if (d == 1) {
      for (std::uint64_t c0 = 0; c0 < q; ++c0)
        out.push_back(fqpoly(F_, {static_cast<Fq::elem>(c0), 1}));
    } else {
      std::uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= q;
      for (std::uint64_t cval = 0; cval < count; ++cval) {
        std::vector<Fq::elem> c(static_cast<std::size_t>(d) + 1, 1);
        std::uint64_t v = cval;
        for (int i = 0; i < d; ++i, v /= q) c[static_cast<std::size_t>(i)] = static_cast<Fq::elem>(v % q);
        if (c[0] == 0) continue;  // divisible by t
        fqpoly f(F_, std::move(c));
        bool red = false;
        for (int e = 1; 2 * e <= d && !red; ++e)
          for (const fqpoly& g : by_degree_[static_cast<std::size_t>(e) - 1])
            if ((f % g).is_zero()) {
              red = true;
              break;
            }
        if (!red) out.push_back(std::move(f));
      }
    }
    by_degree_.push_back(std::move(out));
  }

  Fq F_;
  std::vector<std::vector<fqpoly>> by_degree_;
};

// count of monic irreducibles of degree d over F_q (necklace formula)
inline bigint irreducible_count(std::uint64_t q, int d) {
  require(d >= 1, errc::range_error, "irreducible degree must be positive");
  // sum_{e | d} mu(d/e) q^e / d
  bigint total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int m = d / e;
    // Moebius of m by trial factorization
    int mu = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) {
          mu = 0;
          break;
        }
        mu = -mu;
      }
    }
    if (mu != 0 && m > 1) mu = -mu;
    total += bigint(mu) * big_pow(bigint(q), static_cast<unsigned>(e));
  }
  return total / d;
}

// Standalone irreducibility test by trial division, mainly for validating
// user-supplied polynomials without an irreducible table at hand.
inline bool is_irreducible(const fqpoly& f) {
  int d = f.degree();
  if (d <= 0) return false;
  const Fq& F = f.field();
  const std::uint64_t q = F.q();
  for (int e = 1; 2 * e <= d; ++e) {
    std::uint64_t count = 1;
    for (int i = 0; i < e; ++i) {
      count *= q;
      require(count <= (std::uint64_t(1) << 24), errc::too_large,
              "irreducibility test too large for trial division");
    }
    for (std::uint64_t cval = 0; cval < count; ++cval) {
      std::vector<Fq::elem> c(static_cast<std::size_t>(e) + 1, 1);
      std::uint64_t v = cval;
      for (int i = 0; i < e; ++i, v /= q) c[static_cast<std::size_t>(i)] = static_cast<Fq::elem>(v % q);
      if ((f % fqpoly(F, std::move(c))).is_zero()) return false;
    }
  }
  return true;
}

// Full factorization by trial division against the table, smallest factors
// first.  Once the remaining degree cannot contain two factors of the next
// trial degree, the remainder is irreducible.
inline std::vector<std::pair<fqpoly, int>> factor(irreducible_table& tab, fqpoly f) {
  require(!f.is_zero(), errc::range_error, "cannot factor the zero polynomial");
  f = f.monic();
  std::vector<std::pair<fqpoly, int>> out;
  int d = 1;
  while (f.degree() > 0) {
    if (2 * d > f.degree()) {
      // all factors of degree < d are gone, so what is left is irreducible
      out.emplace_back(f, 1);
      break;
    }
    for (const fqpoly& g : tab.degree(d)) {
      int mult = 0;
      while (true) {
        auto [q, r] = divmod(f, g);
        if (!r.is_zero()) break;
        f = std::move(q);
        ++mult;
      }
      if (mult > 0) out.emplace_back(g, mult);
      if (f.degree() < d) break;
    }
    ++d;
  }
  return out;
}

}  // namespace glnq
