#pragma once

#include <string>

#include "planch/rational.hpp"

namespace planch {

/// Exact real number a + b·sqrt(p) for a fixed prime p.
/// Used for values built from half-integral powers of q = p^f.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(long p, Rational a, Rational b = 0);

  static QuadSurd from_rational(long p, const Rational& a) { return QuadSurd(p, a, 0); }
  /// q^{e} for q = p^f and e with 2·f·e integral.
  static QuadSurd q_power(long p, long f, const Rational& e);

  long prime() const { return p_; }
  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadSurd operator+(const QuadSurd& o) const;
  QuadSurd operator-(const QuadSurd& o) const;
  QuadSurd operator*(const QuadSurd& o) const;
  QuadSurd operator/(const QuadSurd& o) const;
  QuadSurd operator-() const { return QuadSurd(p_, -a_, -b_); }
  QuadSurd inverse() const;
  bool operator==(const QuadSurd& o) const { return p_ == o.p_ && a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const QuadSurd& o) const { return !(*this == o); }
  int sign() const;
  QuadSurd abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;
  std::string str() const;

 private:
  void require_same_field(const QuadSurd& o) const;
  long p_ = 2;
  Rational a_ = 0;
  Rational b_ = 0;
};

}  // namespace planch
