#pragma once

// Closed class of "spectral functions" of s:
//   c · q^{-a s} · prod_num (1 - e^{2 pi i u} q^{-(s+r)}) / prod_den (1 - e^{2 pi i u} q^{-(s+r)})
// with exact rational angles u (turns) and shifts r, so that zeros and poles
// at s = 0 are decided exactly.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "planch/field_spec.hpp"
#include "planch/qsurd.hpp"
#include "planch/rational.hpp"

namespace planch {

using Complex = std::complex<double>;

/// e^{2 pi i t} for a rational number of turns t.
Complex turn(const Rational& t);
Complex turn(double t);

/// (1 - e^{2 pi i angle} q^{-(s+shift)})
struct GeometricFactor {
  Rational angle;  // kept reduced in [0,1)
  Rational shift;

  GeometricFactor() = default;
  GeometricFactor(Rational a, Rational r);

  bool vanishes_at_zero() const { return angle == 0 && shift == 0; }
  Complex value(double log_q, Complex s) const;
  bool operator==(const GeometricFactor& o) const { return angle == o.angle && shift == o.shift; }
  /// Ordering (shift, angle) used for canonical serialization.
  bool operator<(const GeometricFactor& o) const {
    return shift != o.shift ? shift < o.shift : angle < o.angle;
  }
};

/// Complex scalar, optionally known exactly as e^{2 pi i phase} · magnitude with
/// magnitude in Q(sqrt p).
class SpectralScalar {
 public:
  SpectralScalar() = default;
  static SpectralScalar exact(const Rational& phase, const QuadSurd& magnitude);
  static SpectralScalar numeric(Complex value);
  static SpectralScalar one(long p) { return exact(Rational(0), QuadSurd(p, 1)); }
  /// e^{2 pi i phase} · q^{e}; exact when q^e is a half-integral power of p.
  static SpectralScalar unit_times_q_power(const LocalFieldSpec& field, const Rational& phase, const Rational& e);

  Complex value() const { return value_; }
  bool exact_unit() const { return exact_; }
  const Rational& phase() const { return phase_; }
  const QuadSurd& magnitude() const { return magnitude_; }

  SpectralScalar operator*(const SpectralScalar& o) const;
  SpectralScalar inverse() const;
  bool operator==(const SpectralScalar& o) const;

 private:
  Complex value_{1.0, 0.0};
  bool exact_ = true;
  Rational phase_ = 0;
  QuadSurd magnitude_{2, 1};
};

class SpectralFunction {
 public:
  explicit SpectralFunction(const LocalFieldSpec& field);
  static SpectralFunction one(const LocalFieldSpec& field) { return SpectralFunction(field); }
  /// zeta_F(s) = (1 - q^{-s})^{-1}
  static SpectralFunction zeta(const LocalFieldSpec& field);
  /// (1 - e^{2 pi i angle} q^{-(s+shift)}) as a numerator or denominator.
  static SpectralFunction factor(const LocalFieldSpec& field, const Rational& angle, const Rational& shift,
                                 bool in_denominator = false);
  /// c · q^{-a s}
  static SpectralFunction monomial(const LocalFieldSpec& field, const SpectralScalar& c, const Rational& a);

  const LocalFieldSpec& field() const { return field_; }
  const SpectralScalar& scalar() const { return scalar_; }
  const Rational& exponent() const { return exponent_; }
  const std::vector<GeometricFactor>& numerator() const { return num_; }
  const std::vector<GeometricFactor>& denominator() const { return den_; }

  /// Pointwise product; factor lists are concatenated, nothing cancels.
  SpectralFunction operator*(const SpectralFunction& g) const;
  SpectralFunction& operator*=(const SpectralFunction& g);
  SpectralFunction inverse() const;
  /// Cancels equal numerator/denominator factors and sorts both lists.
  SpectralFunction normalized() const;
  /// s -> 1 - s, re-expressed in the same closed form.
  SpectralFunction reflected() const;

  /// (#vanishing numerator factors) - (#vanishing denominator factors) at s = 0.
  int ord_zero_at_zero() const;

  /// Value at complex s. Throws PoleError on a vanishing denominator,
  /// std::overflow_error if the result is not finite.
  Complex evaluate(Complex s) const;
  /// Same with exact pole detection at a real rational point.
  Complex evaluate(const Rational& s) const;

  /// lim_{s->0} zeta_F(s)^n f(s) with n = ord_zero_at_zero() >= 0.
  Complex regularized_value() const;
  /// Exact version when every surviving factor and the scalar are exact and
  /// real-valued at s = 0 (angles in {0,1/2}, half-integral shifts).
  std::optional<SpectralScalar> regularized_value_exact() const;
  /// lim_{s->0} s^k f(s); requires ord_zero_at_zero() == -k.
  Complex limit_with_power(int k) const;

  /// Exact equality of the normalized forms.
  bool equals(const SpectralFunction& g) const;

  std::string str() const;

 private:
  void require_same_field(const SpectralFunction& g) const;
  // product of surviving (non-vanishing at s=0) factors at s = 0, times scalar
  Complex regular_part_at_zero() const;

  LocalFieldSpec field_;
  SpectralScalar scalar_;
  Rational exponent_ = 0;
  std::vector<GeometricFactor> num_;
  std::vector<GeometricFactor> den_;
};

SpectralFunction multiply(const SpectralFunction& f, const SpectralFunction& g);
SpectralFunction normalize(const SpectralFunction& f);
SpectralFunction inverse(const SpectralFunction& f);
int ord_zero_at_zero(const SpectralFunction& f);
Complex regularized_value(const SpectralFunction& f);
Complex evaluate(const SpectralFunction& f, Complex s);
Complex limit_with_power(const SpectralFunction& f, int k);

}  // namespace planch
