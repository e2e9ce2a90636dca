#include "planch/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "planch/errors.hpp"

namespace planch {

Complex turn(const Rational& t) {
  Rational r = mod1(t);
  if (r == 0) return {1.0, 0.0};
  if (r == Rational(1, 2)) return {-1.0, 0.0};
  if (r == Rational(1, 4)) return {0.0, 1.0};
  if (r == Rational(3, 4)) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * r.get_d());
}

Complex turn(double t) {
  double r = t - std::floor(t);
  return std::polar(1.0, 2.0 * std::numbers::pi * r);
}

GeometricFactor::GeometricFactor(Rational a, Rational r) : angle(mod1(a)), shift(std::move(r)) {
  shift.canonicalize();
}

Complex GeometricFactor::value(double log_q, Complex s) const {
  Complex sh = s + shift.get_d();
  return 1.0 - turn(angle) * std::exp(-sh * log_q);
}

// ---------------------------------------------------------------- scalars

SpectralScalar SpectralScalar::exact(const Rational& phase, const QuadSurd& magnitude) {
  SpectralScalar c;
  c.exact_ = true;
  c.phase_ = mod1(phase);
  c.magnitude_ = magnitude;
  if (magnitude.sign() < 0) {
    c.magnitude_ = -magnitude;
    c.phase_ = mod1(c.phase_ + Rational(1, 2));
  }
  c.value_ = turn(c.phase_) * c.magnitude_.to_double();
  return c;
}

SpectralScalar SpectralScalar::numeric(Complex value) {
  SpectralScalar c;
  c.exact_ = false;
  c.value_ = value;
  return c;
}

SpectralScalar SpectralScalar::unit_times_q_power(const LocalFieldSpec& field, const Rational& phase,
                                                  const Rational& e) {
  Rational twice = 2 * field.f * e;
  twice.canonicalize();
  if (is_integer(twice)) return exact(phase, QuadSurd::q_power(field.p, field.f, e));
  return numeric(turn(phase) * std::exp(e.get_d() * field.log_q()));
}

SpectralScalar SpectralScalar::operator*(const SpectralScalar& o) const {
  if (exact_ && o.exact_) {
    bool same = magnitude_.prime() == o.magnitude_.prime() || magnitude_.is_rational() || o.magnitude_.is_rational();
    if (same) return exact(phase_ + o.phase_, magnitude_ * o.magnitude_);
  }
  return numeric(value_ * o.value_);
}

SpectralScalar SpectralScalar::inverse() const {
  if (exact_) {
    if (magnitude_.is_zero()) throw PreconditionError("inverse of zero scalar");
    return exact(-phase_, magnitude_.inverse());
  }
  return numeric(1.0 / value_);
}

bool SpectralScalar::operator==(const SpectralScalar& o) const {
  if (exact_ && o.exact_) return phase_ == o.phase_ && magnitude_ == o.magnitude_;
  return value_ == o.value_;
}

// ------------------------------------------------------------- functions

SpectralFunction::SpectralFunction(const LocalFieldSpec& field)
    : field_(field), scalar_(SpectralScalar::one(field.p)) {}

SpectralFunction SpectralFunction::zeta(const LocalFieldSpec& field) {
  return factor(field, Rational(0), Rational(0), true);
}

SpectralFunction SpectralFunction::factor(const LocalFieldSpec& field, const Rational& angle, const Rational& shift,
                                          bool in_denominator) {
  SpectralFunction f(field);
  (in_denominator ? f.den_ : f.num_).emplace_back(angle, shift);
  return f;
}

SpectralFunction SpectralFunction::monomial(const LocalFieldSpec& field, const SpectralScalar& c, const Rational& a) {
  SpectralFunction f(field);
  f.scalar_ = c;
  f.exponent_ = a;
  f.exponent_.canonicalize();
  return f;
}

void SpectralFunction::require_same_field(const SpectralFunction& g) const {
  if (!(field_.p == g.field_.p && field_.f == g.field_.f))
    throw PreconditionError("spectral functions over different residue fields");
}

SpectralFunction SpectralFunction::operator*(const SpectralFunction& g) const {
  SpectralFunction out = *this;
  out *= g;
  return out;
}

SpectralFunction& SpectralFunction::operator*=(const SpectralFunction& g) {
  require_same_field(g);
  scalar_ = scalar_ * g.scalar_;
  exponent_ += g.exponent_;
  exponent_.canonicalize();
  num_.insert(num_.end(), g.num_.begin(), g.num_.end());
  den_.insert(den_.end(), g.den_.begin(), g.den_.end());
  return *this;
}

SpectralFunction SpectralFunction::inverse() const {
  SpectralFunction out(field_);
  out.scalar_ = scalar_.inverse();
  out.exponent_ = -exponent_;
  out.num_ = den_;
  out.den_ = num_;
  return out;
}

SpectralFunction SpectralFunction::normalized() const {
  std::vector<GeometricFactor> n = num_, d = den_;
  std::sort(n.begin(), n.end());
  std::sort(d.begin(), d.end());
  std::vector<GeometricFactor> rn, rd;
  size_t i = 0, j = 0;
  while (i < n.size() && j < d.size()) {
    if (n[i] == d[j]) {
      ++i;
      ++j;
    } else if (n[i] < d[j]) {
      rn.push_back(n[i++]);
    } else {
      rd.push_back(d[j++]);
    }
  }
  rn.insert(rn.end(), n.begin() + static_cast<long>(i), n.end());
  rd.insert(rd.end(), d.begin() + static_cast<long>(j), d.end());
  SpectralFunction out(field_);
  out.scalar_ = scalar_;
  out.exponent_ = exponent_;
  out.num_ = std::move(rn);
  out.den_ = std::move(rd);
  return out;
}

SpectralFunction SpectralFunction::reflected() const {
  // q^{-a(1-s)} = q^{-a} q^{as}
  SpectralFunction out = monomial(field_, scalar_ * SpectralScalar::unit_times_q_power(field_, 0, -exponent_),
                                  -exponent_);
  // 1 - e^{2 pi i u} q^{-(1-s+r)} = -e^{2 pi i u} q^{-1-r} q^{s} (1 - e^{-2 pi i u} q^{-(s-1-r)})
  auto flip = [&](const GeometricFactor& g, bool den) {
    SpectralScalar c = SpectralScalar::unit_times_q_power(field_, g.angle + Rational(1, 2), -1 - g.shift);
    SpectralFunction piece = monomial(field_, c, Rational(-1));
    piece *= factor(field_, -g.angle, -1 - g.shift);
    out *= den ? piece.inverse() : piece;
  };
  for (const auto& g : num_) flip(g, false);
  for (const auto& g : den_) flip(g, true);
  return out;
}

int SpectralFunction::ord_zero_at_zero() const {
  int n = 0;
  for (const auto& g : num_) n += g.vanishes_at_zero();
  for (const auto& g : den_) n -= g.vanishes_at_zero();
  return n;
}

Complex SpectralFunction::evaluate(Complex s) const {
  const double lq = field_.log_q();
  Complex v = scalar_.value() * std::exp(-exponent_.get_d() * s * lq);
  for (const auto& g : num_) v *= g.value(lq, s);
  for (const auto& g : den_) {
    Complex d = g.value(lq, s);
    if (std::abs(d) < 1e-14) throw PoleError("pole of spectral function at s = " + std::to_string(s.real()) + "+" +
                                            std::to_string(s.imag()) + "i");
    v /= d;
  }
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw std::overflow_error("spectral function value overflows");
  return v;
}

Complex SpectralFunction::evaluate(const Rational& s) const {
  for (const auto& g : den_)
    if (g.angle == 0 && g.shift + s == 0) throw PoleError("pole of spectral function at s = " + to_string(s));
  return evaluate(Complex(s.get_d(), 0.0));
}

Complex SpectralFunction::regular_part_at_zero() const {
  const double lq = field_.log_q();
  Complex v = scalar_.value();
  for (const auto& g : num_)
    if (!g.vanishes_at_zero()) v *= g.value(lq, 0.0);
  for (const auto& g : den_)
    if (!g.vanishes_at_zero()) v /= g.value(lq, 0.0);
  return v;
}

Complex SpectralFunction::regularized_value() const {
  if (ord_zero_at_zero() < 0) throw PreconditionError("regularization undefined for poles");
  return regular_part_at_zero();
}

std::optional<SpectralScalar> SpectralFunction::regularized_value_exact() const {
  if (ord_zero_at_zero() < 0) throw PreconditionError("regularization undefined for poles");
  if (!scalar_.exact_unit()) return std::nullopt;
  SpectralScalar v = scalar_;
  auto factor_value = [&](const GeometricFactor& g) -> std::optional<SpectralScalar> {
    // 1 - e^{2 pi i u} q^{-r} with e^{2 pi i u} = +-1
    if (g.angle != 0 && g.angle != Rational(1, 2)) return std::nullopt;
    Rational twice = 2 * field_.f * g.shift;
    twice.canonicalize();
    if (!is_integer(twice)) return std::nullopt;
    QuadSurd w = QuadSurd::q_power(field_.p, field_.f, -g.shift);
    if (g.angle == 0) w = -w;
    return SpectralScalar::exact(0, QuadSurd(field_.p, 1) + w);
  };
  for (const auto& g : num_) {
    if (g.vanishes_at_zero()) continue;
    auto w = factor_value(g);
    if (!w) return std::nullopt;
    v = v * *w;
  }
  for (const auto& g : den_) {
    if (g.vanishes_at_zero()) continue;
    auto w = factor_value(g);
    if (!w) return std::nullopt;
    v = v * w->inverse();
  }
  if (!v.exact_unit()) return std::nullopt;
  return v;
}

Complex SpectralFunction::limit_with_power(int k) const {
  int ord = ord_zero_at_zero();
  if (ord != -k)
    throw PreconditionError("limit_with_power: order at 0 is " + std::to_string(ord) + ", expected pole of order " +
                            std::to_string(k));
  return regular_part_at_zero() * std::pow(field_.log_q(), -k);
}

bool SpectralFunction::equals(const SpectralFunction& g) const {
  if (!(field_.p == g.field_.p && field_.f == g.field_.f)) return false;
  SpectralFunction a = normalized(), b = g.normalized();
  return a.scalar_ == b.scalar_ && a.exponent_ == b.exponent_ && a.num_ == b.num_ && a.den_ == b.den_;
}

std::string SpectralFunction::str() const {
  std::ostringstream os;
  if (scalar_.exact_unit()) {
    os << "e(" << to_string(scalar_.phase()) << ")*[" << scalar_.magnitude().str() << "]";
  } else {
    os << "(" << scalar_.value().real() << (scalar_.value().imag() < 0 ? "" : "+") << scalar_.value().imag() << "i)";
  }
  if (exponent_ != 0) os << " * q^(-(" << to_string(exponent_) << ")s)";
  auto print = [&](const GeometricFactor& g) {
    os << "(1 - e(" << to_string(g.angle) << ") q^-(s";
    if (g.shift != 0) os << (g.shift > 0 ? "+" : "") << to_string(g.shift);
    os << "))";
  };
  for (const auto& g : num_) {
    os << " * ";
    print(g);
  }
  for (const auto& g : den_) {
    os << " / ";
    print(g);
  }
  return os.str();
}

SpectralFunction multiply(const SpectralFunction& f, const SpectralFunction& g) { return f * g; }
SpectralFunction normalize(const SpectralFunction& f) { return f.normalized(); }
SpectralFunction inverse(const SpectralFunction& f) { return f.inverse(); }
int ord_zero_at_zero(const SpectralFunction& f) { return f.ord_zero_at_zero(); }
Complex regularized_value(const SpectralFunction& f) { return f.regularized_value(); }
Complex evaluate(const SpectralFunction& f, Complex s) { return f.evaluate(s); }
Complex limit_with_power(const SpectralFunction& f, int k) { return f.limit_with_power(k); }

}  // namespace planch
