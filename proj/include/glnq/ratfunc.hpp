#pragma once

#include <string>

#include "glnq/intpoly.hpp"

namespace glnq {

// Rational function num/den over Z(t), kept in canonical reduced form:
// gcd(num, den) = 1 as polynomials, the integer contents share no factor,
// and den has positive leading coefficient.  Equality is then just
// componentwise.
class ratfunc {
 public:
  ratfunc() : num_(intpoly::zero()), den_(intpoly::one()) {}

  ratfunc(intpoly num, intpoly den) : num_(std::move(num)), den_(std::move(den)) {
    require(!den_.is_zero(), errc::division_by_zero, "rational function with zero denominator");
    reduce();
  }

  static ratfunc from_poly(intpoly p) { return ratfunc(std::move(p), intpoly::one()); }
  static ratfunc from_int(bigint v) { return from_poly(intpoly::constant(std::move(v))); }

  const intpoly& num() const { return num_; }
  const intpoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_ == intpoly::one(); }

  // degree of num minus degree of den; for the zero function this is the
  // zero polynomial's sentinel
  int degree_diff() const {
    if (num_.is_zero()) return intpoly::neg_infinity;
    return num_.degree() - den_.degree();
  }

  friend bool operator==(const ratfunc& a, const ratfunc& b) = default;

  friend ratfunc operator+(const ratfunc& a, const ratfunc& b) {
    return ratfunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ratfunc operator-(const ratfunc& a, const ratfunc& b) {
    return ratfunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ratfunc operator*(const ratfunc& a, const ratfunc& b) {
    return ratfunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend ratfunc operator/(const ratfunc& a, const ratfunc& b) {
    require(!b.is_zero(), errc::division_by_zero, "division by the zero rational function");
    return ratfunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  std::string to_string() const {
    if (is_poly()) return num_.to_string();
    std::string n = num_.to_string(), d = den_.to_string();
    if (num_.degree() > 0 || num_.coeffs().size() > 1) n = "(" + n + ")";
    if (den_.degree() > 0 || den_.coeffs().size() > 1) d = "(" + d + ")";
    return n + " / " + d;
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = intpoly::one();
      return;
    }
    intpoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = intpoly::divexact(num_, g);
      den_ = intpoly::divexact(den_, g);
    }
    bigint c = big_gcd(num_.content(), den_.content());
    if (c > 1) {
      num_ = intpoly::divexact(num_, intpoly::constant(c));
      den_ = intpoly::divexact(den_, intpoly::constant(c));
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  intpoly num_;
  intpoly den_;
};

}  // namespace glnq
