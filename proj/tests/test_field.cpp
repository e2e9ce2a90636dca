#include <doctest.h>

#include "planch/errors.hpp"
#include "planch/field.hpp"
#include "support.hpp"

using namespace planch;
using namespace planch::testing;

TEST_CASE("valuations") {
  auto f3 = LocalFieldSpec::from_pf(3, 1);
  CHECK(valuation(f3, PadicScalar{Rational(18)}) == 2);
  CHECK(valuation(f3, PadicScalar{Rational(1, 3)}) == -1);
  CHECK(valuation(LocalFieldSpec::from_pf(5, 1), PadicScalar{Rational(7)}) == 0);
  CHECK_THROWS_AS(valuation(f3, PadicScalar{Rational(0)}), PreconditionError);
}

TEST_CASE("field specs") {
  auto f = LocalFieldSpec::from_q(9, 1);
  CHECK(f.p == 3);
  CHECK(f.f == 2);
  CHECK(f.q() == 9);
  CHECK_THROWS_AS(LocalFieldSpec::from_q(6), InputError);
  CHECK_THROWS_AS(LocalFieldSpec::from_pf(4, 1), InputError);
  CHECK_THROWS_AS(LocalFieldSpec::from_pf(3, 0), InputError);
}

TEST_CASE("square class examples") {
  CHECK(square_class(3, Rational(-2)).name() == "1");
  CHECK(square_class(5, Rational(2)).name() == "u");
  CHECK(square_class(3, Rational(3)).name() == "pi");
  CHECK(square_class(2, Rational(-1)) == square_class(2, Rational(7)));
  CHECK(square_class(2, Rational(17)) == square_class(2, Rational(1)));
  CHECK_THROWS(square_class(3, Rational(0)));
}

TEST_CASE("square classes agree with the Euler-criterion oracle") {
  Rng r(11);
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    for (int i = 0; i < 300; ++i) {
      Rational x = ratio(r.range(1, 5000) * (r.coin() ? 1 : -1), r.range(1, 500));
      CHECK(square_class(p, x) == oracle_square_class(p, x));
    }
  }
}

TEST_CASE("square classes form a group and ignore squares") {
  Rng r(12);
  for (long p : {2L, 3L, 5L}) {
    int order = SquareClass::group_order(p);
    for (int i = 0; i < order; ++i) {
      SquareClass a = SquareClass::from_index(p, i);
      CHECK(a.index() == i);
      CHECK(square_class(p, a.representative()) == a);
      CHECK((a * a).index() == 0);
    }
    for (int i = 0; i < 500; ++i) {
      Rational x = ratio(r.range(-999, 999) | 1, r.range(1, 99));
      Rational y = ratio(r.range(1, 99), r.range(1, 99));
      Rational z = ratio(r.range(1, 999), r.range(1, 99));
      CHECK(square_class(p, x * y * y) == square_class(p, x));
      CHECK(square_class(p, x * z) == square_class(p, x) * square_class(p, z));
    }
  }
}

TEST_CASE("quadratic characters") {
  auto chi = QuadraticCharacter::unramified(3);
  CHECK(char_eval(chi, Rational(9)) == 1);
  CHECK(char_eval(chi, Rational(3)) == -1);
  CHECK(char_eval(QuadraticCharacter::trivial(5), Rational(10)) == 1);
  CHECK(chi.is_unramified());
  CHECK_THROWS_AS(QuadraticCharacter(3, {1, -1, 1, 1}), InputError);
  Rng r(13);
  for (long p : {2L, 3L, 7L}) {
    std::vector<QuadraticCharacter> chars = {QuadraticCharacter::trivial(p), QuadraticCharacter::unramified(p)};
    if (p != 2) chars.push_back(QuadraticCharacter::from_generators(p, -1, 1));
    for (const auto& c : chars)
      for (int i = 0; i < 1000; ++i) {
        Rational x = ratio(r.range(1, 5000) * (r.coin() ? 1 : -1), r.range(1, 300));
        Rational y = ratio(r.range(1, 300), r.range(1, 300));
        CHECK(char_eval(c, x * y * y) == char_eval(c, x));
      }
  }
}

TEST_CASE("trivial-character gamma factor") {
  auto f = LocalFieldSpec::from_q(3, 0);
  SpectralFunction g = gamma_trivial(f);
  CHECK(g.ord_zero_at_zero() == 1);
  CHECK(std::abs(g.regularized_value() - Complex(1.5, 0)) < 1e-14);
  CHECK(std::abs(g.evaluate(Rational(1, 2)) - Complex(1, 0)) < 1e-14);
  CHECK_THROWS_AS(g.evaluate(Rational(1)), PoleError);

  auto f2 = LocalFieldSpec::from_q(2, 2);
  for (double s : {0.3, 0.7, 1.7}) {
    Complex expect = std::pow(2.0, 2 * (0.5 - s)) * (1 - std::pow(2.0, -s)) / (1 - std::pow(2.0, s - 1));
    CHECK(std::abs(gamma_trivial(f2).evaluate(Complex(s, 0)) - expect) < 1e-12);
  }
}

TEST_CASE("gamma star of the trivial character") {
  CHECK(gamma_star_trivial(LocalFieldSpec::from_q(3, 0)) == QuadSurd::from_rational(3, Rational(3, 2)));
  CHECK(gamma_star_trivial(LocalFieldSpec::from_q(2, 0)) == QuadSurd::from_rational(2, Rational(2)));
  CHECK(gamma_star_trivial(LocalFieldSpec::from_q(4, 2)) == QuadSurd::from_rational(2, Rational(16, 3)));
  // odd level: a genuine square root
  QuadSurd odd = gamma_star_trivial(LocalFieldSpec::from_q(3, 1));
  CHECK(!odd.is_rational());
  CHECK(odd.to_double() == doctest::Approx(std::sqrt(3.0) * 1.5));
  for (long q : {2L, 3L, 4L, 5L, 9L})
    for (long n : {-2L, -1L, 0L, 1L, 3L}) {
      auto f = LocalFieldSpec::from_q(q, n);
      auto ex = gamma_trivial(f).regularized_value_exact();
      REQUIRE(ex.has_value());
      CHECK(ex->magnitude() == gamma_star_trivial(f));
      CHECK(ex->phase() == 0);
    }
}
