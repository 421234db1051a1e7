#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "glnq/bigint.hpp"
#include "glnq/error.hpp"

namespace glnq {

// Dense polynomial in one variable t over the integers.  Coefficients are
// bigint; coeffs_[i] is the coefficient of t^i and the top coefficient is
// nonzero (the zero polynomial has an empty vector).
class intpoly {
 public:
  // degree() of the zero polynomial
  static constexpr int neg_infinity = -0x40000000;

  intpoly() = default;

  explicit intpoly(std::vector<bigint> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static intpoly zero() { return intpoly(); }
  static intpoly one() { return constant(1); }

  static intpoly constant(bigint c) {
    intpoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
  }

  static intpoly monomial(int k, bigint c = 1) {
    require(k >= 0, errc::range_error, "monomial degree must be nonnegative");
    intpoly p;
    if (c != 0) {
      p.coeffs_.assign(static_cast<std::size_t>(k) + 1, 0);
      p.coeffs_.back() = std::move(c);
    }
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }

  int degree() const {
    return coeffs_.empty() ? neg_infinity : static_cast<int>(coeffs_.size()) - 1;
  }

  bigint coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const std::vector<bigint>& coeffs() const { return coeffs_; }

  bigint leading() const { return coeffs_.empty() ? bigint(0) : coeffs_.back(); }

  friend bool operator==(const intpoly& a, const intpoly& b) = default;

  friend intpoly operator+(const intpoly& a, const intpoly& b) {
    std::vector<bigint> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return intpoly(std::move(c));
  }

  friend intpoly operator-(const intpoly& a, const intpoly& b) {
    std::vector<bigint> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return intpoly(std::move(c));
  }

  friend intpoly operator-(const intpoly& a) { return intpoly::zero() - a; }

  friend intpoly operator*(const intpoly& a, const intpoly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<bigint> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return intpoly(std::move(c));
  }

  friend intpoly operator*(const intpoly& a, const bigint& s) { return a * constant(s); }
  friend intpoly operator*(const bigint& s, const intpoly& a) { return a * constant(s); }

  // Exact division: throws unless b divides a in Z[t].
  static intpoly divexact(const intpoly& a, const intpoly& b) {
    require(!b.is_zero(), errc::division_by_zero, "polynomial division by zero");
    if (a.is_zero()) return zero();
    require(a.degree() >= b.degree(), errc::degree_mismatch, "inexact polynomial division");
    std::vector<bigint> rem = a.coeffs_;
    std::vector<bigint> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    for (int d = a.degree(); d >= b.degree();) {
      const bigint& top = rem[static_cast<std::size_t>(d)];
      if (top == 0) {
        --d;
        continue;
      }
      require(top % b.leading() == 0, errc::degree_mismatch, "inexact polynomial division");
      bigint q = top / b.leading();
      int shift = d - b.degree();
      quot[static_cast<std::size_t>(shift)] = q;
      for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        rem[static_cast<std::size_t>(shift) + i] -= q * b.coeffs_[i];
      --d;
    }
    for (const bigint& r : rem)
      require(r == 0, errc::degree_mismatch, "inexact polynomial division");
    return intpoly(std::move(quot));
  }

  // substitute t -> t^s
  intpoly compose_power(int s) const {
    require(s >= 1, errc::range_error, "power substitution needs s >= 1");
    if (is_zero()) return zero();
    std::vector<bigint> c(static_cast<std::size_t>(degree()) * s + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(s)] = coeffs_[i];
    return intpoly(std::move(c));
  }

  bigint eval(const bigint& x) const {
    bigint r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
  }

  // gcd of all coefficients (nonnegative); 0 for the zero polynomial
  bigint content() const {
    bigint g = 0;
    for (const bigint& c : coeffs_) g = big_gcd(g, c);
    return g;
  }

  intpoly primitive_part() const {
    if (is_zero()) return zero();
    return divided_by_content(content());
  }

  // "1 - t + 3*t^2", ascending powers
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const bigint& c = coeffs_[i];
      if (c == 0) continue;
      bigint mag = c < 0 ? bigint(-c) : c;
      if (first) {
        if (c < 0) os << '-';
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (i == 0) {
        os << mag;
      } else {
        if (mag != 1) os << mag << '*';
        os << 't';
        if (i > 1) os << '^' << i;
      }
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  intpoly divided_by_content(const bigint& g) const {
    std::vector<bigint> c = coeffs_;
    for (bigint& x : c) x /= g;
    return intpoly(std::move(c));
  }

  std::vector<bigint> coeffs_;
};

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a = q*b + r.
// Returns r.  Requires deg a >= deg b >= 0.
inline intpoly pseudo_rem(const intpoly& a, const intpoly& b) {
  int e = a.degree() - b.degree() + 1;
  intpoly r = a * big_pow(b.leading(), static_cast<unsigned>(e));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    bigint q = r.leading() / b.leading();
    // leading coefficients divide exactly by construction of the premultiplier
    r = r - intpoly::monomial(r.degree() - b.degree(), q) * b;
  }
  return r;
}

// Primitive-PRS gcd.  Result is primitive with positive leading coefficient
// (content of the inputs is deliberately not carried into the result).
inline intpoly poly_gcd(intpoly a, intpoly b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    intpoly r = pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0) a = -a;
  return a;
}

}  // namespace glnq
