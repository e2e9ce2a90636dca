#include <doctest.h>

#include <algorithm>

#include "planch/errors.hpp"
#include "planch/field.hpp"
#include "planch/wd.hpp"
#include "support.hpp"

using namespace planch;
using namespace planch::testing;

namespace {

const LocalFieldSpec F3 = LocalFieldSpec::from_q(3, 0);

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// SL2 character of Sp(m) as a Laurent polynomial: exponents m-1, m-3, ..., 1-m
std::map<int, int> character(const std::vector<int>& blocks) {
  std::map<int, int> c;
  for (int m : blocks)
    for (int e = m - 1; e >= 1 - m; e -= 2) ++c[e];
  return c;
}

}  // namespace

TEST_CASE("Clebsch-Gordan and plethysm") {
  CHECK(sorted(sp_tensor(1, 4)) == std::vector<int>{4});
  CHECK(sorted(sp_tensor(2, 2)) == std::vector<int>{1, 3});
  CHECK(sorted(sp_tensor(3, 2)) == std::vector<int>{2, 4});
  CHECK(sorted(sp_sym2(2)) == std::vector<int>{3});
  CHECK(sorted(sp_wedge2(2)) == std::vector<int>{1});
  CHECK(sorted(sp_sym2(3)) == std::vector<int>{1, 5});
  CHECK(sorted(sp_wedge2(4)) == std::vector<int>{1, 5});
  // character oracle: chi_m chi_n, and sym2/wedge2 via chi(g)^2 +- chi(g^2)
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= 7; ++n) {
      std::map<int, int> prod;
      for (auto [a, ca] : character({m}))
        for (auto [b, cb] : character({n})) prod[a + b] += ca * cb;
      CHECK(character(sp_tensor(m, n)) == prod);
    }
    // sym2 = (chi(g)^2 + chi(g^2)) / 2, wedge2 = (chi(g)^2 - chi(g^2)) / 2
    std::map<int, int> sq, adams, sym, alt;
    for (auto [a, ca] : character({m}))
      for (auto [b, cb] : character({m})) sq[a + b] += ca * cb;
    for (auto [a, ca] : character({m})) adams[2 * a] += ca;
    for (auto [e, c] : sq) {
      int x = adams.count(e) ? adams[e] : 0;
      if ((c + x) / 2) sym[e] = (c + x) / 2;
      if ((c - x) / 2) alt[e] = (c - x) / 2;
    }
    CHECK(character(sp_sym2(m)) == sym);
    CHECK(character(sp_wedge2(m)) == alt);
  }
}

TEST_CASE("rep operations") {
  WDRep a({WDAtom(Rational(1, 3), 1)});
  CHECK(dual(a) == WDRep({WDAtom(Rational(2, 3), 1)}));
  Rational u(1, 5), v(1, 7);
  WDRep uv({WDAtom(u, 1), WDAtom(v, 1)});
  CHECK(ad_M(uv) == WDRep({WDAtom(0, 1), WDAtom(0, 1), WDAtom(u - v, 1), WDAtom(v - u, 1)}));
  CHECK(ad_M_over_A(uv) == WDRep({WDAtom(0, 1), WDAtom(u - v, 1), WDAtom(v - u, 1)}));
  CHECK(sym2(WDRep({WDAtom(0, 2)})) == WDRep({WDAtom(0, 3)}));
  CHECK(determinant(WDRep({WDAtom(Rational(1, 2), 1), WDAtom(Rational(1, 2), 1)})) == 0);
  CHECK(determinant(WDRep({WDAtom(Rational(1, 3), 2)})) == Rational(2, 3));
  CHECK(determinant(WDRep({WDAtom(0, 3)})) == 0);
}

TEST_CASE("compact grammar") {
  CHECK(parse_rep("1/3*Sp(2) + 2/3*Sp(2) + 0") ==
        WDRep({WDAtom(Rational(1, 3), 2), WDAtom(Rational(2, 3), 2), WDAtom(0, 1)}));
  CHECK(parse_rep("Sp(3)") == WDRep({WDAtom(0, 3)}));
  CHECK(parse_rep(" 5/4 ") == WDRep({WDAtom(Rational(1, 4), 1)}));
  CHECK_THROWS_AS(parse_rep("1/3*Sp(0)"), InputError);
  CHECK_THROWS_AS(parse_rep("1/3 +"), InputError);
  CHECK_THROWS_AS(parse_rep("x"), InputError);
}

TEST_CASE("self-duality types") {
  CHECK(self_duality(WDRep({WDAtom(0, 1)})) == SelfDuality::orthogonal);
  CHECK(self_duality(WDRep({WDAtom(0, 2)})) == SelfDuality::symplectic);
  CHECK(self_duality(WDRep({WDAtom(Rational(1, 3), 1), WDAtom(Rational(2, 3), 1)})) ==
        SelfDuality::orthogonal_and_symplectic);
  CHECK(self_duality(WDRep({WDAtom(Rational(1, 3), 1)})) == SelfDuality::none);
  CHECK(self_duality(WDRep({WDAtom(0, 1), WDAtom(0, 2)})) == SelfDuality::none);
}

TEST_CASE("L, epsilon and gamma factors against the oracle") {
  CHECK(L_factor(WDRep({WDAtom(0, 1)}), F3).equals(SpectralFunction::zeta(F3)));
  CHECK(gamma_factor(WDRep({WDAtom(0, 1)}), F3).equals(gamma_trivial(F3)));
  CHECK(gamma_factor(WDRep({WDAtom(Rational(1, 2), 1)}), F3).ord_zero_at_zero() == 0);
  Rng r(31);
  for (long n : {-1L, 0L, 2L})
    for (long q : {2L, 3L, 5L}) {
      auto f = LocalFieldSpec::from_q(q, n);
      for (int i = 0; i < 40; ++i) {
        WDRep rho = random_rep(r, 5);
        Complex s(r.uniform(0.05, 0.95), r.uniform(-3, 3));
        Complex got = gamma_factor(rho, f).evaluate(s), want = oracle_gamma(rho, static_cast<double>(q), n, s);
        CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
      }
    }
}

TEST_CASE("factors are additive over direct sums") {
  Rng r(32);
  for (int i = 0; i < 100; ++i) {
    WDRep a = random_rep(r, 4), b = random_rep(r, 4);
    CHECK(gamma_factor(a + b, F3).equals(gamma_factor(a, F3) * gamma_factor(b, F3)));
    CHECK(L_factor(a + b, F3).equals(L_factor(a, F3) * L_factor(b, F3)));
    CHECK(eps_factor(a + b, F3).equals(eps_factor(a, F3) * eps_factor(b, F3)));
  }
}

TEST_CASE("gamma order at zero equals the L-factor pole order") {
  Rng r(33);
  for (int i = 0; i < 300; ++i) {
    WDRep rho = random_rep(r, 6);
    CHECK(gamma_factor(rho, F3).ord_zero_at_zero() == -L_factor(rho, F3).ord_zero_at_zero());
    CHECK(dual(dual(rho)) == rho);
  }
}

TEST_CASE("component groups") {
  auto g = component_groups(WDRep({WDAtom(0, 1), WDAtom(Rational(1, 2), 1)}));
  CHECK(g.s_plus == 4);
  CHECK(g.s == 2);
  CHECK(g.fiber_ratio == 1);
  g = component_groups(WDRep({WDAtom(0, 3)}));
  CHECK(g.s_plus == 2);
  CHECK(g.s == 1);
  g = component_groups(WDRep({WDAtom(0, 2), WDAtom(0, 2)}));
  CHECK(g.s_plus == 1);
  CHECK(g.s == 1);
  CHECK(g.fiber_ratio == 2);
  CHECK_THROWS_AS(component_groups(WDRep({WDAtom(0, 2)})), PreconditionError);

  Rng r(34);
  for (int i = 0; i < 300; ++i) {
    WDRep rho = random_orthogonal_rep(r, 8);
    auto got = component_groups(rho);
    auto want = oracle_component_groups(rho);
    CHECK(got.s_plus == want.s_plus);
    CHECK(got.s == want.s);
    CHECK(got.fiber_ratio == 2 * got.s / got.s_plus);
  }
}
