#include "planch/qsurd.hpp"

#include <cmath>

#include "planch/errors.hpp"

namespace planch {

QuadSurd::QuadSurd(long p, Rational a, Rational b) : p_(p), a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

QuadSurd QuadSurd::q_power(long p, long f, const Rational& e) {
  Rational twice = 2 * f * e;
  twice.canonicalize();
  if (!is_integer(twice))
    throw PreconditionError("q^" + to_string(e) + " is not a half-integral power of p");
  long k = twice.get_num().get_si();
  long half = k >= 0 ? k / 2 : -((-k + 1) / 2);
  bool odd = (k - 2 * half) != 0;
  Rational base = pow(Rational(p), half);
  return odd ? QuadSurd(p, 0, base) : QuadSurd(p, base, 0);
}

void QuadSurd::require_same_field(const QuadSurd& o) const {
  if (p_ != o.p_ && !(is_rational() && o.is_rational()))
    throw PreconditionError("surds over different primes");
}

QuadSurd QuadSurd::operator+(const QuadSurd& o) const {
  require_same_field(o);
  long p = b_ != 0 ? p_ : o.p_;
  return QuadSurd(p, a_ + o.a_, b_ + o.b_);
}

QuadSurd QuadSurd::operator-(const QuadSurd& o) const { return *this + (-o); }

QuadSurd QuadSurd::operator*(const QuadSurd& o) const {
  require_same_field(o);
  long p = b_ != 0 ? p_ : o.p_;
  return QuadSurd(p, a_ * o.a_ + Rational(p) * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
}

QuadSurd QuadSurd::inverse() const {
  Rational norm = a_ * a_ - Rational(p_) * b_ * b_;
  if (norm == 0) throw PreconditionError("division by zero surd");
  return QuadSurd(p_, a_ / norm, -b_ / norm);
}

QuadSurd QuadSurd::operator/(const QuadSurd& o) const { return *this * o.inverse(); }

int QuadSurd::sign() const {
  // sign of a + b·sqrt(p)
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Rational lhs = a_ * a_, rhs = Rational(p_) * b_ * b_;
  return lhs > rhs ? sa : sb;
}

double QuadSurd::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(p_)); }

std::string QuadSurd::str() const {
  if (b_ == 0) return to_string(a_);
  std::string s = a_ == 0 ? "" : to_string(a_) + (b_ > 0 ? " + " : " - ");
  Rational bb = (a_ != 0 && b_ < 0) ? Rational(-b_) : b_;
  s += (bb == 1 ? std::string() : (bb == -1 ? std::string("-") : to_string(bb) + "*"));
  s += "sqrt(" + std::to_string(p_) + ")";
  return s;
}

}  // namespace planch
