#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "glnq/error.hpp"

namespace glnq {

// A finite field F_q, q = p^k, built either as a prime field or as an
// extension of an already-built field.  Values are cheap shared handles.
//
// Elements are encoded as integers in [0, q).  For a prime field the
// encoding is the residue itself.  For an extension of degree k over a base
// of size Q, the element sum a_i x^i (a_i in the base field) is encoded as
// sum enc(a_i) Q^i.  Under this scheme the embedding of the base field into
// the extension is the identity on encodings, which keeps subfield data
// (matrix entries, character arguments) valid verbatim in the tower.
//
// The modulus of an extension is not a free choice here: it is the monic
// irreducible x^k + c_{k-1} x^{k-1} + ... + c_0 whose coefficient vector
// (c_0, ..., c_{k-1}) has the smallest encoding as a base-Q integer.  Fixing
// that makes every field, and hence every table and label in the library,
// reproducible from (p, k) alone.
//
// Fields with q <= 1024 get full add/mul lookup tables; everything in the
// test and acceptance workloads stays under that.  Larger fields (up to
// q = 2^20) fall back to direct computation.
class Fq {
 public:
  using elem = std::uint32_t;
  static constexpr std::uint64_t max_size = 1u << 20;
  static constexpr std::uint64_t table_limit = 1024;

  static Fq prime(std::uint32_t p) {
    require(p <= max_size, errc::too_large, "field larger than 2^20");
    require(is_prime(p), errc::range_error, "characteristic " + std::to_string(p) + " is not prime");
    auto im = std::make_shared<impl>();
    im->p = p;
    im->q = p;
    im->k = 1;
    im->deg_over_prime = 1;
    finish(*im);
    return Fq(std::move(im));
  }

  // Extension of degree k >= 2 with the canonical minimal modulus.
  static Fq extension(const Fq& base, int k) {
    require(k >= 2, errc::range_error, "extension degree must be at least 2");
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
      q *= base.q();
      require(q <= max_size, errc::too_large, "field larger than 2^20");
    }
    auto im = std::make_shared<impl>();
    im->p = base.characteristic();
    im->q = q;
    im->k = static_cast<std::uint32_t>(k);
    im->deg_over_prime = base.degree_over_prime() * static_cast<std::uint32_t>(k);
    im->base = base.im_;
    im->modulus = find_modulus(base, k);
    finish(*im);
    return Fq(std::move(im));
  }

  // F_{p^k} as a single extension step over the prime field.
  static Fq make(std::uint32_t p, int k) {
    require(k >= 1, errc::range_error, "field degree must be positive");
    Fq pf = prime(p);
    return k == 1 ? pf : extension(pf, k);
  }

  std::uint64_t q() const { return im_->q; }
  std::uint32_t characteristic() const { return im_->p; }
  std::uint32_t degree_over_prime() const { return im_->deg_over_prime; }
  // degree of this field over the field it was built from (1 for a prime field)
  std::uint32_t degree_over_base() const { return im_->k; }
  bool is_prime_field() const { return !im_->base; }

  Fq base_field() const {
    require(!is_prime_field(), errc::range_error, "prime field has no base");
    return Fq(im_->base);
  }

  // modulus coefficients (c_0, ..., c_{k-1}) of x^k + sum c_i x^i
  const std::vector<elem>& modulus() const { return im_->modulus; }

  bool same_field(const Fq& o) const {
    if (im_ == o.im_) return true;
    if (im_->q != o.im_->q || im_->p != o.im_->p || im_->k != o.im_->k) return false;
    if (im_->modulus != o.im_->modulus) return false;
    if (!im_->base) return !o.im_->base;
    return o.im_->base && Fq(im_->base).same_field(Fq(o.im_->base));
  }

  elem zero() const { return 0; }
  elem one() const { return 1; }

  elem from_int(std::uint64_t v) const {
    if (is_prime_field()) return static_cast<elem>(v % im_->p);
    require(v < im_->q, errc::range_error, "element encoding out of range");
    return static_cast<elem>(v);
  }

  elem check(std::uint64_t v) const {
    require(v < im_->q, errc::range_error, "element encoding out of range");
    return static_cast<elem>(v);
  }

  elem add(elem a, elem b) const {
    const impl& f = *im_;
    if (!f.add_tab.empty()) return f.add_tab[a * f.q + b];
    return f.slow_add(a, b);
  }

  elem neg(elem a) const {
    const impl& f = *im_;
    if (!f.neg_tab.empty()) return f.neg_tab[a];
    return f.slow_neg(a);
  }

  elem sub(elem a, elem b) const { return add(a, neg(b)); }

  elem mul(elem a, elem b) const {
    const impl& f = *im_;
    if (!f.mul_tab.empty()) return f.mul_tab[a * f.q + b];
    return f.slow_mul(a, b);
  }

  elem inv(elem a) const {
    require(a != 0, errc::division_by_zero, "inverse of zero");
    const impl& f = *im_;
    if (!f.inv_tab.empty()) return f.inv_tab[a];
    return f.slow_inv(a);
  }

  elem div(elem a, elem b) const { return mul(a, inv(b)); }

  elem pow(elem a, std::uint64_t e) const {
    elem r = 1, b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  // x -> x^p, the absolute Frobenius
  elem frobenius(elem a) const { return pow(a, im_->p); }

  // smallest-encoded generator of the multiplicative group
  elem generator() const { return im_->generator; }

  std::uint64_t mul_order(elem a) const {
    require(a != 0, errc::range_error, "zero has no multiplicative order");
    std::uint64_t n = im_->q - 1;
    for (std::uint64_t d : im_->unit_order_divisors)
      if (pow(a, d) == 1) return d;
    return n;
  }

 private:
  struct impl {
    std::uint32_t p = 0;
    std::uint64_t q = 0;
    std::uint32_t k = 1;
    std::uint32_t deg_over_prime = 1;
    std::shared_ptr<const impl> base;
    std::vector<elem> modulus;  // empty for prime fields
    std::vector<elem> add_tab, mul_tab, neg_tab, inv_tab;
    elem generator = 0;
    std::vector<std::uint64_t> unit_order_divisors;  // divisors of q-1, ascending

    elem slow_add(elem a, elem b) const {
      if (!base) return static_cast<elem>((static_cast<std::uint64_t>(a) + b) % p);
      const std::uint64_t Q = base->q;
      Fq bf{std::shared_ptr<const impl>(base)};
      elem out = 0;
      std::uint64_t mul = 1;
      std::uint64_t va = a, vb = b;
      for (std::uint32_t i = 0; i < k; ++i) {
        elem d = bf.add(static_cast<elem>(va % Q), static_cast<elem>(vb % Q));
        out += static_cast<elem>(d * mul);
        va /= Q;
        vb /= Q;
        mul *= Q;
      }
      return out;
    }

    elem slow_neg(elem a) const {
      if (!base) return a == 0 ? 0 : static_cast<elem>(p - a);
      const std::uint64_t Q = base->q;
      Fq bf{std::shared_ptr<const impl>(base)};
      elem out = 0;
      std::uint64_t mul = 1, va = a;
      for (std::uint32_t i = 0; i < k; ++i) {
        out += static_cast<elem>(bf.neg(static_cast<elem>(va % Q)) * mul);
        va /= Q;
        mul *= Q;
      }
      return out;
    }

    elem slow_mul(elem a, elem b) const {
      if (!base) return static_cast<elem>(static_cast<std::uint64_t>(a) * b % p);
      const std::uint64_t Q = base->q;
      Fq bf{std::shared_ptr<const impl>(base)};
      std::vector<elem> da(k), db(k), prod(2 * k - 1, 0);
      std::uint64_t va = a, vb = b;
      for (std::uint32_t i = 0; i < k; ++i, va /= Q, vb /= Q) {
        da[i] = static_cast<elem>(va % Q);
        db[i] = static_cast<elem>(vb % Q);
      }
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
          prod[i + j] = bf.add(prod[i + j], bf.mul(da[i], db[j]));
      // reduce by the monic modulus: x^k = -sum c_j x^j
      for (std::uint32_t i = 2 * k - 2; i >= k; --i) {
        elem c = prod[i];
        if (c != 0) {
          prod[i] = 0;
          for (std::uint32_t j = 0; j < k; ++j)
            prod[i - k + j] = bf.sub(prod[i - k + j], bf.mul(c, modulus[j]));
        }
        if (i == k) break;
      }
      elem out = 0;
      std::uint64_t mul = 1;
      for (std::uint32_t i = 0; i < k; ++i, mul *= Q) out += static_cast<elem>(prod[i] * mul);
      return out;
    }

    elem slow_inv(elem a) const {
      if (!base) {
        // Fermat: a^(p-2)
        std::uint32_t ex = p - 2;
        std::uint64_t rr = 1, bb = a;
        while (ex) {
          if (ex & 1) rr = rr * bb % p;
          bb = bb * bb % p;
          ex >>= 1;
        }
        return static_cast<elem>(rr);
      }
      const std::uint64_t Q = base->q;
      Fq bf{std::shared_ptr<const impl>(base)};
      // extended Euclid in base[x] against the modulus
      std::vector<elem> r0(modulus);
      r0.push_back(1);  // monic x^k + ...
      std::vector<elem> r1(k, 0);
      std::uint64_t va = a;
      for (std::uint32_t i = 0; i < k; ++i, va /= Q) r1[i] = static_cast<elem>(va % Q);
      auto trim = [](std::vector<elem>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
      };
      trim(r1);
      std::vector<elem> s0{}, s1{1};
      while (r1.size() > 1) {
        // divide r0 by r1
        std::vector<elem> rem = r0, quo(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
        elem lead_inv = bf.inv(r1.back());
        while (rem.size() >= r1.size() && !rem.empty()) {
          elem c = bf.mul(rem.back(), lead_inv);
          std::size_t shift = rem.size() - r1.size();
          quo[shift] = c;
          for (std::size_t j = 0; j < r1.size(); ++j)
            rem[shift + j] = bf.sub(rem[shift + j], bf.mul(c, r1[j]));
          trim(rem);
        }
        // s_{new} = s0 - quo * s1
        std::vector<elem> qs(quo.size() + (s1.empty() ? 1 : s1.size()), 0);
        if (!s1.empty())
          for (std::size_t i = 0; i < quo.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j)
              qs[i + j] = bf.add(qs[i + j], bf.mul(quo[i], s1[j]));
        std::vector<elem> snew(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) snew[i] = bf.sub(snew[i], qs[i]);
        trim(snew);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
      }
      require(!r1.empty(), errc::division_by_zero, "element not invertible");
      elem c_inv = bf.inv(r1[0]);
      elem out = 0;
      std::uint64_t mul = 1;
      for (std::uint32_t i = 0; i < k; ++i, mul *= Q) {
        elem d = i < s1.size() ? bf.mul(s1[i], c_inv) : 0;
        out += static_cast<elem>(d * mul);
      }
      return out;
    }
  };

  explicit Fq(std::shared_ptr<const impl> im) : im_(std::move(im)) {}

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  // minimal-encoding monic irreducible of degree k over base, by trial
  // division against all monic polynomials of degree <= k/2
  static std::vector<elem> find_modulus(const Fq& base, int k) {
    const std::uint64_t Q = base.q();
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= Q;
    for (std::uint64_t cval = 1; cval < total; ++cval) {
      std::vector<elem> c(static_cast<std::size_t>(k));
      std::uint64_t v = cval;
      for (int i = 0; i < k; ++i, v /= Q) c[static_cast<std::size_t>(i)] = static_cast<elem>(v % Q);
      if (c[0] == 0) continue;  // divisible by x
      std::vector<elem> f = c;
      f.push_back(1);
      if (is_irreducible(base, f)) return c;
    }
    fail(errc::range_error, "no irreducible modulus found");
  }

  static bool is_irreducible(const Fq& base, const std::vector<elem>& f) {
    const int k = static_cast<int>(f.size()) - 1;
    const std::uint64_t Q = base.q();
    for (int d = 1; 2 * d <= k; ++d) {
      std::uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= Q;
      for (std::uint64_t gv = 0; gv < count; ++gv) {
        std::vector<elem> g(static_cast<std::size_t>(d) + 1);
        std::uint64_t v = gv;
        for (int i = 0; i < d; ++i, v /= Q) g[static_cast<std::size_t>(i)] = static_cast<elem>(v % Q);
        g.back() = 1;
        if (divides(base, g, f)) return false;
      }
    }
    return true;
  }

  // g monic; does g divide f over base?
  static bool divides(const Fq& base, const std::vector<elem>& g, const std::vector<elem>& f) {
    std::vector<elem> rem = f;
    auto trim = [](std::vector<elem>& v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(rem);
    while (rem.size() >= g.size()) {
      elem c = rem.back();
      std::size_t shift = rem.size() - g.size();
      for (std::size_t j = 0; j < g.size(); ++j)
        rem[shift + j] = base.sub(rem[shift + j], base.mul(c, g[j]));
      trim(rem);
    }
    return rem.empty();
  }

  static void finish(impl& f) {
    if (f.q <= table_limit) {
      const std::size_t q = static_cast<std::size_t>(f.q);
      f.add_tab.resize(q * q);
      f.mul_tab.resize(q * q);
      f.neg_tab.resize(q);
      f.inv_tab.assign(q, 0);
      for (std::size_t a = 0; a < q; ++a) {
        f.neg_tab[a] = f.slow_neg(static_cast<elem>(a));
        for (std::size_t b = 0; b < q; ++b) {
          f.add_tab[a * q + b] = f.slow_add(static_cast<elem>(a), static_cast<elem>(b));
          f.mul_tab[a * q + b] = f.slow_mul(static_cast<elem>(a), static_cast<elem>(b));
        }
      }
      for (std::size_t a = 1; a < q; ++a) f.inv_tab[a] = f.slow_inv(static_cast<elem>(a));
    }

    // divisors of q-1 ascending, then the smallest generator
    std::uint64_t n = f.q - 1;
    for (std::uint64_t d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        f.unit_order_divisors.push_back(d);
        if (d != n / d) f.unit_order_divisors.push_back(n / d);
      }
    std::sort(f.unit_order_divisors.begin(), f.unit_order_divisors.end());

    // non-owning handle over the impl being finished, just to reuse pow()
    Fq handle{std::shared_ptr<const impl>(std::shared_ptr<const impl>(), &f)};
    for (std::uint64_t a = 1; a < f.q; ++a) {
      bool gen = true;
      for (std::uint64_t d : f.unit_order_divisors)
        if (d < n && handle.pow(static_cast<elem>(a), d) == 1) {
          gen = false;
          break;
        }
      if (gen) {
        f.generator = static_cast<elem>(a);
        break;
      }
    }
  }

  std::shared_ptr<const impl> im_;
};

// Parse "q" or "p^k" into the field F_q, rejecting non prime powers.
inline Fq parse_field(const std::string& text) {
  auto caret = text.find('^');
  auto to_u = [&](const std::string& s) -> std::uint64_t {
    require(!s.empty(), errc::parse_error, "empty field size");
    for (char c : s)
      require(std::isdigit(static_cast<unsigned char>(c)), errc::parse_error,
              "bad field size '" + text + "'");
    return std::stoull(s);
  };
  if (caret != std::string::npos) {
    std::uint64_t p = to_u(text.substr(0, caret));
    std::uint64_t k = to_u(text.substr(caret + 1));
    require(p >= 2 && p <= 0xffffffffu && k >= 1 && k <= 32, errc::parse_error,
            "bad field size '" + text + "'");
    return Fq::make(static_cast<std::uint32_t>(p), static_cast<int>(k));
  }
  std::uint64_t q = to_u(text);
  require(q >= 2 && q <= Fq::max_size, errc::range_error, "field size out of range");
  // factor q as p^k
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int k = 0;
  std::uint64_t v = q;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  require(v == 1, errc::range_error, std::to_string(q) + " is not a prime power");
  return Fq::make(static_cast<std::uint32_t>(p), k);
}

}  // namespace glnq
