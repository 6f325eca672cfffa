#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "hyclif/error.hpp"

namespace hyclif {

using Rational = mpq_class;

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(Errc::parse, "empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(Errc::parse, "malformed rational '" + s + "'");
  if (q.get_den() == 0) throw Error(Errc::parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Exact element a + b*sqrt(2) of Q(sqrt 2).
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : rat_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational rat) : rat_(std::move(rat)) { rat_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  Scalar(Rational rat, Rational r2) : rat_(std::move(rat)), r2_(std::move(r2)) {
    rat_.canonicalize();
    r2_.canonicalize();
  }

  static Scalar sqrt2() { return {Rational(0), Rational(1)}; }
  static Scalar inv_sqrt2() { return {Rational(0), Rational(1, 2)}; }

  const Rational& rat() const { return rat_; }
  const Rational& r2() const { return r2_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(r2_) == 0; }
  bool is_rational() const { return sgn(r2_) == 0; }
  bool is_one() const { return rat_ == 1 && sgn(r2_) == 0; }

  // a^2 - 2 b^2; zero only for the zero element
  Rational norm() const { return rat_ * rat_ - 2 * r2_ * r2_; }

  // Exact sign of a + b sqrt2.
  int sign() const {
    const int sa = sgn(rat_);
    const int sb = sgn(r2_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 2 b^2
    const int c = cmp(Rational(rat_ * rat_), Rational(2 * r2_ * r2_));
    return c > 0 ? sa : (c < 0 ? sb : 0);
  }

  Scalar inverse() const {
    const Rational d = norm();
    if (sgn(d) == 0) throw Error(Errc::domain, "division by zero scalar");
    return {Rational(rat_ / d), Rational(-r2_ / d)};
  }

  Scalar operator-() const { return {Rational(-rat_), Rational(-r2_)}; }

  Scalar& operator+=(const Scalar& o) {
    rat_ += o.rat_;
    if (sgn(o.r2_) != 0) r2_ += o.r2_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    rat_ -= o.rat_;
    if (sgn(o.r2_) != 0) r2_ -= o.r2_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
      rat_ *= o.rat_;
      return *this;
    }
    Rational a = rat_ * o.rat_ + 2 * r2_ * o.r2_;
    Rational b = rat_ * o.r2_ + r2_ * o.rat_;
    rat_ = std::move(a);
    r2_ = std::move(b);
    return *this;
  }
  Scalar& operator*=(std::int64_t k) {
    if (k == 1) return *this;
    rat_ *= k;
    if (sgn(r2_) != 0) r2_ *= k;
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_rational()) {
      if (sgn(o.rat_) == 0) throw Error(Errc::domain, "division by zero scalar");
      rat_ /= o.rat_;
      if (sgn(r2_) != 0) r2_ /= o.rat_;
      return *this;
    }
    return *this *= o.inverse();
  }

  // this += a * k, the hot path of every product loop
  void add_scaled(const Scalar& a, std::int64_t k) {
    if (k == 1) {
      *this += a;
    } else if (k == -1) {
      *this -= a;
    } else {
      rat_ += a.rat_ * k;
      if (sgn(a.r2_) != 0) r2_ += a.r2_ * k;
    }
  }
  // this += a * b * k
  void add_product(const Scalar& a, const Scalar& b, std::int64_t k) {
    if (a.is_rational() && b.is_rational()) {
      Rational t = a.rat_ * b.rat_;
      if (k != 1) t *= k;
      rat_ += t;
      return;
    }
    Scalar t = a;
    t *= b;
    add_scaled(t, k);
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat_ == b.rat_ && a.r2_ == b.r2_;
  }

  // Total order used only for deterministic containers; not the field order.
  friend bool lex_less(const Scalar& a, const Scalar& b) {
    if (a.rat_ != b.rat_) return a.rat_ < b.rat_;
    return a.r2_ < b.r2_;
  }

private:
  Rational rat_{0};
  Rational r2_{0};
};

// `p/q`, `r/s r2`, or `p/q+r/s r2`.
inline std::string to_string(const Scalar& s) {
  if (s.is_rational()) return s.rat().get_str();
  std::string r2;
  if (s.r2() == 1) {
    r2 = "r2";
  } else if (s.r2() == -1) {
    r2 = "-r2";
  } else {
    r2 = s.r2().get_str() + " r2";
  }
  if (sgn(s.rat()) == 0) return r2;
  if (r2.front() == '-') return s.rat().get_str() + r2;
  return s.rat().get_str() + "+" + r2;
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

}  // namespace hyclif
