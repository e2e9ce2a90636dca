#include <doctest.h>

#include <cmath>

#include "planch/errors.hpp"
#include "planch/field.hpp"
#include "planch/spectral.hpp"
#include "support.hpp"

using namespace planch;
using namespace planch::testing;

namespace {

const LocalFieldSpec F3 = LocalFieldSpec::from_q(3, 0);

SpectralFunction random_function(Rng& r, const LocalFieldSpec& f) {
  SpectralFunction g = SpectralFunction::monomial(
      f, SpectralScalar::unit_times_q_power(f, r.angle(), ratio(r.range(-3, 3), 2)), ratio(r.range(-4, 4), 2));
  int n = static_cast<int>(r.range(0, 4));
  for (int i = 0; i < n; ++i) {
    Rational angle = r.range(0, 2) == 0 ? Rational(0) : r.angle();
    Rational shift = r.range(0, 2) == 0 ? Rational(0) : ratio(r.range(-2, 4), 2);
    g *= SpectralFunction::factor(f, angle, shift, r.coin());
  }
  return g;
}

}  // namespace

TEST_CASE("multiply and normalize") {
  SpectralFunction z = SpectralFunction::zeta(F3);
  CHECK((z * z.inverse()).normalized().equals(SpectralFunction::one(F3)));
  CHECK((z * SpectralFunction::factor(F3, Rational(0), Rational(0))).normalized().equals(SpectralFunction::one(F3)));
  // no implicit cancellation
  auto prod = z * z.inverse();
  CHECK(prod.numerator().size() == 1);
  CHECK(prod.denominator().size() == 1);
  CHECK((gamma_trivial(F3) * gamma_trivial(F3)).ord_zero_at_zero() == 2);
}

TEST_CASE("order of vanishing") {
  CHECK(SpectralFunction::zeta(F3).ord_zero_at_zero() == -1);
  CHECK(gamma_trivial(F3).ord_zero_at_zero() == 1);
  CHECK(SpectralFunction::factor(F3, Rational(1, 3), Rational(0)).ord_zero_at_zero() == 0);
  CHECK(SpectralFunction::factor(F3, Rational(0), Rational(1, 2)).ord_zero_at_zero() == 0);
}

TEST_CASE("regularized values and limits") {
  auto f = SpectralFunction::factor(F3, Rational(0), Rational(0));
  CHECK(std::abs(f.regularized_value() - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(gamma_trivial(F3).regularized_value() - Complex(1.5, 0)) < 1e-14);
  auto plain = SpectralFunction::factor(F3, Rational(1, 3), Rational(0));
  CHECK(std::abs(plain.regularized_value() - plain.evaluate(Complex(0, 0))) < 1e-15);
  CHECK_THROWS_AS(SpectralFunction::zeta(F3).regularized_value(), PreconditionError);

  double lq = std::log(3.0);
  CHECK(std::abs(SpectralFunction::zeta(F3).limit_with_power(1) - Complex(1 / lq, 0)) < 1e-14);
  auto z2 = SpectralFunction::zeta(F3) * SpectralFunction::zeta(F3);
  CHECK(std::abs(z2.limit_with_power(2) - Complex(1 / (lq * lq), 0)) < 1e-14);
  CHECK(std::abs(plain.limit_with_power(0) - plain.evaluate(Complex(0, 0))) < 1e-15);
  CHECK_THROWS_AS(z2.limit_with_power(1), PreconditionError);
}

TEST_CASE("evaluation and poles") {
  CHECK(std::abs(SpectralFunction::zeta(F3).evaluate(Rational(1)) - Complex(1.5, 0)) < 1e-14);
  CHECK_THROWS_AS(SpectralFunction::zeta(F3).evaluate(Rational(0)), PoleError);
}

TEST_CASE("order and regularized value are multiplicative") {
  Rng r(21);
  for (int i = 0; i < 1000; ++i) {
    auto f = random_function(r, F3), g = random_function(r, F3);
    CHECK((f * g).ord_zero_at_zero() == f.ord_zero_at_zero() + g.ord_zero_at_zero());
    if (f.ord_zero_at_zero() >= 0 && g.ord_zero_at_zero() >= 0) {
      Complex a = (f * g).regularized_value(), b = f.regularized_value() * g.regularized_value();
      CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("limit_with_power matches a numerical limit") {
  Rng r(22);
  int checked = 0;
  while (checked < 100) {
    auto f = random_function(r, F3);
    int k = -f.ord_zero_at_zero();
    if (k < 0) continue;
    Complex lim = f.limit_with_power(k);
    Complex approx = std::pow(1e-4, k) * f.evaluate(Complex(1e-4, 0));
    CHECK(std::abs(approx - lim) <= 1e-3 * std::abs(lim));
    ++checked;
  }
}

TEST_CASE("order-zero functions are periodic along the imaginary axis") {
  Rng r(23);
  const double period = 2 * std::numbers::pi / std::log(3.0);
  for (int i = 0; i < 100; ++i) {
    auto f = random_function(r, F3);
    if (f.ord_zero_at_zero() != 0 || f.exponent() != 0) continue;
    double t = r.uniform(0.1, 3.0);
    try {
      Complex a = f.evaluate(Complex(0, t)), b = f.evaluate(Complex(0, t + period));
      CHECK(std::abs(std::abs(a) - std::abs(b)) <= 1e-9 * std::max(1.0, std::abs(a)));
    } catch (const PoleError&) {
    }
  }
}

TEST_CASE("reflection and inverse") {
  Rng r(24);
  for (int i = 0; i < 200; ++i) {
    auto f = random_function(r, F3);
    Complex s(r.uniform(0.1, 0.9), r.uniform(-2, 2));
    try {
      CHECK(std::abs(f.reflected().evaluate(s) - f.evaluate(1.0 - s)) <= 1e-9 * std::max(1.0, std::abs(f.evaluate(1.0 - s))));
      CHECK(std::abs(f.evaluate(s) * f.inverse().evaluate(s) - Complex(1, 0)) < 1e-9);
    } catch (const PoleError&) {
    }
  }
}
