#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "glnq/bigint.hpp"
#include "glnq/classlabel.hpp"
#include "glnq/error.hpp"
#include "glnq/field.hpp"
#include "glnq/labels.hpp"
#include "glnq/type_tau.hpp"

namespace glnq {

// The conjugacy classes of GL_2(F_q) fall into four families: scalars,
// scalar-times-unipotent, split semisimple with two distinct eigenvalues,
// and classes whose characteristic polynomial is an irreducible quadratic.
enum class gl2_class_family { central, nonsemisimple, split, elliptic };

// The irreducible characters mirror them: alpha(det), the Steinberg twists,
// principal series for an unordered pair of distinct characters of F_q^*,
// and discrete series for a character of F_{q^2}^* not fixed by Frobenius.
enum class gl2_char_family { linear, steinberg, principal, discrete };

inline const char* to_name(gl2_class_family f) {
  switch (f) {
    case gl2_class_family::central: return "central";
    case gl2_class_family::nonsemisimple: return "nonsemisimple";
    case gl2_class_family::split: return "split";
    case gl2_class_family::elliptic: return "elliptic";
  }
  return "?";
}

inline const char* to_name(gl2_char_family f) {
  switch (f) {
    case gl2_char_family::linear: return "linear";
    case gl2_char_family::steinberg: return "steinberg";
    case gl2_char_family::principal: return "principal";
    case gl2_char_family::discrete: return "discrete";
  }
  return "?";
}

struct gl2_class {
  gl2_class_family family = gl2_class_family::central;
  std::uint64_t dx = 0, dy = 0;  // eigenvalue dlogs (central/nonsemisimple use dx)
  std::uint64_t k = 0;           // elliptic: minimal orbit representative mod q^2-1
  std::uint64_t dnorm = 0;       // elliptic: dlog of the norm, an element of F_q^*
  bigint size = 1;
  class_label label;
};

struct gl2_char {
  gl2_char_family family = gl2_char_family::linear;
  std::uint64_t a = 0, b = 0;  // exponents mod q-1 (principal: a < b)
  std::uint64_t m = 0;         // discrete: exponent mod q^2-1, minimal in {m, qm}
  int degree = 1;

  std::string params_string() const {
    std::ostringstream os;
    switch (family) {
      case gl2_char_family::linear:
      case gl2_char_family::steinberg: os << "a=" << a; break;
      case gl2_char_family::principal: os << "a=" << a << ",b=" << b; break;
      case gl2_char_family::discrete: os << "m=" << m; break;
    }
    return os.str();
  }
};

// Full character table of GL_2(F_q).  Character values are complex doubles
// built from roots of unity of orders q-1 and q^2-1; every integer that is
// read off downstream is recovered by rounding with a checked residue.
// Class and character orders are fixed at construction (families in the
// enum order, parameters ascending), so sums over the table are
// deterministic and reproducible bit for bit.
class gl2_table {
 public:
  // Discrete logarithms over the base field and its quadratic extension,
  // indexed by element encoding; separable so callers can cache them.
  struct dlog_tables {
    std::vector<std::uint64_t> base, quadratic;
  };

  explicit gl2_table(const Fq& F) : gl2_table(F, compute_dlogs(F)) {}

  gl2_table(const Fq& F, dlog_tables dl) : F_(F), F2_(Fq::extension(F, 2)), q_(F.q()) {
    require(dl.base.size() == q_ && dl.quadratic.size() == q_ * q_ &&
                dl.base[F_.generator()] == (q_ > 2 ? 1u : 0u) &&
                dl.quadratic[F2_.generator()] == 1,
            errc::size_mismatch, "discrete log tables do not fit this field");
    dlog_ = std::move(dl.base);
    dlog2_ = std::move(dl.quadratic);
    build_classes();
    build_chars();
  }

  static dlog_tables compute_dlogs(const Fq& F) {
    const std::uint64_t q = F.q();
    Fq F2 = Fq::extension(F, 2);
    dlog_tables dl;
    dl.base.assign(q, 0);
    Fq::elem g = F.generator();
    Fq::elem x = 1;
    for (std::uint64_t e = 0; e + 1 < q; ++e) {
      dl.base[x] = e;
      x = F.mul(x, g);
    }
    dl.quadratic.assign(q * q, 0);
    Fq::elem g2 = F2.generator();
    Fq::elem y = 1;
    for (std::uint64_t e = 0; e + 1 < q * q; ++e) {
      dl.quadratic[y] = e;
      y = F2.mul(y, g2);
    }
    return dl;
  }

  const Fq& field() const { return F_; }
  const Fq& quadratic_field() const { return F2_; }
  std::uint64_t q() const { return q_; }
  bigint group_order() const { return group_order_gl(2, q_); }

  const std::vector<gl2_class>& classes() const { return classes_; }
  const std::vector<gl2_char>& chars() const { return chars_; }

  // Look up a class by its label; the label must name a GL_2 class over the
  // table's base field.
  std::size_t class_index(const class_label& lab) const {
    require(!lab.entries.empty() && lab.field().same_field(F_) && lab.degree() == 2,
            errc::wrong_group, "label does not name a GL_2 class over this field");
    for (std::size_t i = 0; i < classes_.size(); ++i)
      if (classes_[i].label == lab) return i;
    fail(errc::wrong_group, "label '" + lab.to_string() + "' is not a GL_2 class");
  }

  // The abstract label of a character, which also carries its type: linear
  // characters sit on one 1-simplex with partition (2), Steinberg twists
  // with partition 1^2, principal series on two 1-simplices, discrete
  // series on a 2-simplex.
  char_label label_of(const gl2_char& ch) const {
    char_label lab;
    switch (ch.family) {
      case gl2_char_family::linear:
        lab.entries.push_back({simplex{1, ch.a}, partition({2})});
        break;
      case gl2_char_family::steinberg:
        lab.entries.push_back({simplex{1, ch.a}, partition({1, 1})});
        break;
      case gl2_char_family::principal:
        lab.entries.push_back({simplex{1, ch.a}, partition({1})});
        lab.entries.push_back({simplex{1, ch.b}, partition({1})});
        break;
      case gl2_char_family::discrete:
        lab.entries.push_back({simplex{2, ch.m}, partition({1})});
        break;
    }
    return lab;
  }

  type_tau type_of(const gl2_char& ch) const { return type_of_char(label_of(ch)); }

  std::complex<double> value(const gl2_char& ch, const gl2_class& c) const {
    const double qd = static_cast<double>(q_);
    switch (ch.family) {
      case gl2_char_family::linear:
        switch (c.family) {
          case gl2_class_family::central: return zeta(2 * ch.a * c.dx);
          case gl2_class_family::nonsemisimple: return zeta(2 * ch.a * c.dx);
          case gl2_class_family::split: return zeta(ch.a * (c.dx + c.dy));
          case gl2_class_family::elliptic: return zeta(ch.a * c.dnorm);
        }
        break;
      case gl2_char_family::steinberg:
        switch (c.family) {
          case gl2_class_family::central: return qd * zeta(2 * ch.a * c.dx);
          case gl2_class_family::nonsemisimple: return 0.0;
          case gl2_class_family::split: return zeta(ch.a * (c.dx + c.dy));
          case gl2_class_family::elliptic: return -zeta(ch.a * c.dnorm);
        }
        break;
      case gl2_char_family::principal:
        switch (c.family) {
          case gl2_class_family::central: return (qd + 1.0) * zeta((ch.a + ch.b) * c.dx);
          case gl2_class_family::nonsemisimple: return zeta((ch.a + ch.b) * c.dx);
          case gl2_class_family::split:
            return zeta(ch.a * c.dx + ch.b * c.dy) + zeta(ch.a * c.dy + ch.b * c.dx);
          case gl2_class_family::elliptic: return 0.0;
        }
        break;
      case gl2_char_family::discrete:
        switch (c.family) {
          case gl2_class_family::central: return (qd - 1.0) * omega(ch.m * dlog2_of_base(c.dx));
          case gl2_class_family::nonsemisimple: return -omega(ch.m * dlog2_of_base(c.dx));
          case gl2_class_family::split: return 0.0;
          case gl2_class_family::elliptic:
            return -(omega(ch.m * c.k) + omega(ch.m * (c.k * q_ % (q_ * q_ - 1))));
        }
        break;
    }
    fail(errc::range_error, "unreachable character family");
  }

  std::complex<double> value(std::size_t chi, std::size_t cls) const {
    return value(chars_[chi], classes_[cls]);
  }

  // Frobenius count of commutator pairs: #{(x,y) : [x,y] in the class c} per
  // element of c is |G| sum_chi chi(c)/chi(1).  The sum is evaluated in
  // table order and must round to an integer within 1e-4.
  bigint frobenius_fiber(const class_label& lab) const {
    const gl2_class& c = classes_[class_index(lab)];
    std::complex<double> s = 0.0;
    for (const gl2_char& ch : chars_) s += value(ch, c) / static_cast<double>(ch.degree);
    double val = static_cast<double>(to_u64(group_order())) * s.real();
    double imag = static_cast<double>(to_u64(group_order())) * s.imag();
    long long rounded = std::llround(val);
    require(std::abs(val - static_cast<double>(rounded)) < 1e-4 && std::abs(imag) < 1e-4,
            errc::precision_loss, "character sum does not round to an integer");
    require(rounded >= 0, errc::precision_loss, "character sum rounds to a negative count");
    return bigint(rounded);
  }

  // Partial Frobenius sum over the characters of one type; only defined at
  // non-central classes, where the paper-scale normalization |sum|/q stays
  // bounded.
  std::complex<double> type_sum(const type_tau& tau, const class_label& lab) const {
    const gl2_class& c = classes_[class_index(lab)];
    require(c.family != gl2_class_family::central, errc::central_class,
            "type sums are defined at non-central classes");
    std::complex<double> s = 0.0;
    for (const gl2_char& ch : chars_)
      if (type_of(ch) == tau) s += value(ch, c) / static_cast<double>(ch.degree);
    return s;
  }

 private:
  void build_classes() {
    const Fq::elem gen = F_.generator();
    auto linear_for = [&](std::uint64_t e) {
      // t - g^e, monic linear with the given root
      Fq::elem root = F_.pow(gen, e);
      return fqpoly(F_, {F_.neg(root), 1});
    };
    // scalars and scalar-times-unipotent, by ascending element encoding
    for (int pass = 0; pass < 2; ++pass)
      for (std::uint64_t enc = 1; enc < q_; ++enc) {
        gl2_class c;
        c.dx = dlog_[enc];
        if (pass == 0) {
          c.family = gl2_class_family::central;
          c.size = 1;
          c.label.entries.push_back({linear_for(c.dx), partition({1, 1})});
        } else {
          c.family = gl2_class_family::nonsemisimple;
          c.size = bigint(q_) * q_ - 1;
          c.label.entries.push_back({linear_for(c.dx), partition({2})});
        }
        classes_.push_back(std::move(c));
      }
    // split semisimple: unordered pairs of distinct eigenvalues
    for (std::uint64_t ex = 1; ex < q_; ++ex)
      for (std::uint64_t ey = ex + 1; ey < q_; ++ey) {
        gl2_class c;
        c.family = gl2_class_family::split;
        c.dx = dlog_[ex];
        c.dy = dlog_[ey];
        c.size = bigint(q_) * q_ + q_;
        c.label.entries.push_back({linear_for(c.dx), partition({1})});
        c.label.entries.push_back({linear_for(c.dy), partition({1})});
        sort_label(c.label);
        classes_.push_back(std::move(c));
      }
    // elliptic: one class per 2-simplex; the label is the minimal polynomial
    // t^2 - Tr(z) t + N(z) of z = g2^k
    Fq::elem g2 = F2_.generator();
    for (const simplex& s : enumerate_simplices(q_, 2)) {
      gl2_class c;
      c.family = gl2_class_family::elliptic;
      c.k = s.k;
      c.size = bigint(q_) * q_ - q_;
      Fq::elem z = F2_.pow(g2, s.k);
      Fq::elem zq = F2_.pow(z, q_);  // conjugate over the base field
      Fq::elem tr = F2_.add(z, zq);
      Fq::elem nm = F2_.mul(z, zq);
      require(tr < q_ && nm < q_, errc::range_error, "trace or norm left the base field");
      c.dnorm = dlog_[nm];
      c.label.entries.push_back({fqpoly(F_, {nm, F_.neg(tr), 1}), partition({1})});
      classes_.push_back(std::move(c));
    }
  }

  void build_chars() {
    for (std::uint64_t a = 0; a + 1 < q_; ++a)
      chars_.push_back({gl2_char_family::linear, a, 0, 0, 1});
    for (std::uint64_t a = 0; a + 1 < q_; ++a)
      chars_.push_back({gl2_char_family::steinberg, a, 0, 0, static_cast<int>(q_)});
    for (std::uint64_t a = 0; a + 1 < q_; ++a)
      for (std::uint64_t b = a + 1; b + 1 < q_; ++b)
        chars_.push_back({gl2_char_family::principal, a, b, 0, static_cast<int>(q_ + 1)});
    for (const simplex& s : enumerate_simplices(q_, 2))
      chars_.push_back({gl2_char_family::discrete, 0, 0, s.k, static_cast<int>(q_ - 1)});
  }

  // dlog in F_{q^2} of a base-field element given by its base-field dlog;
  // subfield encodings agree, so this is a table lookup
  std::uint64_t dlog2_of_base(std::uint64_t dx) const {
    Fq::elem x = F_.pow(F_.generator(), dx);
    return dlog2_[x];
  }

  std::complex<double> zeta(std::uint64_t j) const { return root_of_unity(j, q_ - 1); }
  std::complex<double> omega(std::uint64_t j) const { return root_of_unity(j, q_ * q_ - 1); }

  static std::complex<double> root_of_unity(std::uint64_t j, std::uint64_t order) {
    static const double two_pi = 2.0 * std::acos(-1.0);
    j %= order;
    if (j == 0) return 1.0;
    return std::polar(1.0, two_pi * static_cast<double>(j) / static_cast<double>(order));
  }

  Fq F_, F2_;
  std::uint64_t q_;
  std::vector<std::uint64_t> dlog_, dlog2_;
  std::vector<gl2_class> classes_;
  std::vector<gl2_char> chars_;
};

}  // namespace glnq
