#include <doctest.h>

#include "planch/errors.hpp"
#include "planch/forms.hpp"
#include "support.hpp"

using namespace planch;
using namespace planch::testing;

namespace {

const LocalFieldSpec F3 = LocalFieldSpec::from_q(3, 0);

QMatrix worked() { return QMatrix{{-1, 1}, {-1, 0}}; }

QMatrix random_form(Rng& r, size_t d) {
  for (;;) {
    QMatrix g = random_matrix(r, d, d);
    if (leibniz_det(g) != 0) return g;
  }
}

// a form in a gamma_t orbit, moved by a random Ad(m)
QMatrix random_sharp(Rng& r, long p, size_t d) {
  SquareClass t = SquareClass::from_index(p, static_cast<int>(r.range(0, SquareClass::group_order(p) - 1)));
  return ad_action(random_invertible(r, d), gamma_t_representative(t, d));
}

OrbitLabel label_t(long p, const Rational& x) { return OrbitLabel{OrbitKind::gamma_t, square_class(p, x)}; }

}  // namespace

TEST_CASE("symmetric and alternating parts") {
  auto [s, a] = split_sym_alt(worked());
  CHECK(s == (QMatrix{{-2, 0}, {0, 0}}));
  CHECK(a == (QMatrix{{0, 2}, {-2, 0}}));
  QMatrix sym{{1, 2}, {2, 5}};
  CHECK(split_sym_alt(sym).first == sym * Rational(2));
  CHECK(split_sym_alt(sym).second.is_zero());
  Rng r(61);
  for (int i = 0; i < 50; ++i) {
    QMatrix g = random_matrix(r, 3, 3);
    auto [gs, ga] = split_sym_alt(g);
    CHECK(gs + ga == g * Rational(2));
    CHECK(gs.is_symmetric());
    CHECK(ga.is_antisymmetric());
  }
}

TEST_CASE("classification examples") {
  CHECK(classify_sharp(worked(), 3) == label_t(3, 1));
  CHECK(classify_sharp(QMatrix{{0, 1}, {-1, 0}}, 3).kind == OrbitKind::gamma_0);
  CHECK(classify_sharp(QMatrix::identity(2), 3).kind == OrbitKind::outside_sharp);
  CHECK(classify_sharp(QMatrix{{5}}, 3) == label_t(3, 10));
  CHECK_THROWS_AS(classify_sharp(QMatrix{{1, 1}, {1, 1}}, 3), PreconditionError);
  // alternating forms exist only in even dimension; odd-size antisymmetric matrices are singular
  CHECK_THROWS_AS(classify_sharp(QMatrix(3, 3), 3), PreconditionError);
  CHECK(classify_sharp(worked(), 3).str() == "gamma_t(1)");
}

TEST_CASE("representatives round-trip") {
  for (long p : {2L, 3L, 5L})
    for (int i = 0; i < SquareClass::group_order(p); ++i)
      for (size_t d = 1; d <= 5; ++d) {
        SquareClass t = SquareClass::from_index(p, i);
        QMatrix g = gamma_t_representative(t, d);
        auto [s, a] = split_sym_alt(g);
        CHECK(rank(s) == 1);
        CHECK(rank(a) == (d % 2 == 0 ? d : d - 1));
        CHECK(classify_sharp(g, p) == OrbitLabel{OrbitKind::gamma_t, t});
      }
}

TEST_CASE("discriminant and twisted characteristic polynomial") {
  CHECK(disc_twisted(worked(), 3).index() == 0);
  CHECK(disc_twisted(standard_alternating(2), 3).index() == 0);
  CHECK(char_poly_twisted(worked()) == Poly::power_of_linear(-1, 2));
  CHECK(char_poly_twisted(standard_alternating(4)) == Poly::power_of_linear(-1, 4));
  CHECK(char_poly_twisted(QMatrix{{1, 2}, {2, 7}}) == Poly::power_of_linear(1, 2));
  Rng r(62);
  for (int i = 0; i < 100; ++i) {
    QMatrix g = random_form(r, 3);
    Poly c = char_poly_twisted(g);
    // eigenvalues of Γ^{-T}Γ come in inverse pairs: T^d c(1/T) = ± c(T)
    std::vector<Rational> rev(c.coeffs().rbegin(), c.coeffs().rend());
    Poly reversed(rev);
    CHECK((reversed == c || reversed == c * Rational(-1)));
    CHECK(c.evaluate(0) * c.evaluate(0) == 1);
  }
}

TEST_CASE("Ad(M)-invariance, exact") {
  Rng r(63);
  for (int i = 0; i < 500; ++i) {
    size_t d = static_cast<size_t>(r.range(1, 4));
    QMatrix g = r.coin() ? random_form(r, d) : random_sharp(r, 3, d);
    QMatrix m = random_invertible(r, d);
    QMatrix h = ad_action(m, g);
    CHECK(classify_sharp(h, 3) == classify_sharp(g, 3));
    CHECK(char_poly_twisted(h) == char_poly_twisted(g));
    CHECK(disc_twisted(h, 3) == disc_twisted(g, 3));
  }
}

TEST_CASE("scaling covariance") {
  Rng r(64);
  for (int i = 0; i < 200; ++i) {
    long p = r.coin() ? 3 : 2;
    size_t d = static_cast<size_t>(r.range(1, 4));
    QMatrix g = random_sharp(r, p, d);
    Rational a = ratio(r.range(1, 40) * (r.coin() ? 1 : -1), r.range(1, 40));
    OrbitLabel before = classify_sharp(g, p), after = classify_sharp(g * a, p);
    REQUIRE(before.kind == OrbitKind::gamma_t);
    CHECK(after == OrbitLabel{OrbitKind::gamma_t, square_class(p, a) * *before.t});
  }
}

TEST_CASE("closure of gamma_{-1} contains the alternating orbit") {
  for (size_t d : {2u, 4u}) {
    for (long k = 1; k <= 6; ++k) {
      QMatrix g = closure_family(d, ratio(1, k * k));
      CHECK(classify_sharp(g, 3) == label_t(3, -1));
    }
    QMatrix lim = closure_limit(d);
    CHECK(lim.is_antisymmetric());
    CHECK(classify_sharp(lim, 3).kind == OrbitKind::gamma_0);
    // entrywise convergence: the distance to the limit shrinks with λ
    QMatrix diff = closure_family(d, ratio(1, 1000)) - lim;
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) CHECK(abs(diff(i, j)) <= ratio(1, 1000000));
  }
}

TEST_CASE("characteristic polynomial correspondence") {
  for (long n = 1; n <= 3; ++n) {
    Poly eps = Poly::power_of_linear(-1, 2 * n);
    CHECK(correspond_char_poly(eps, Flavor::symplectic_odd) == eps * Poly::power_of_linear(1, 1));
    CHECK(correspond_char_poly(Poly::power_of_linear(1, 2 * n), Flavor::orthogonal_even) == eps);
    // the fiber over ε contains every gamma_t of even size
    for (int i = 0; i < 4; ++i) {
      QMatrix g = gamma_t_representative(SquareClass::from_index(3, i), 2 * n);
      CHECK(correspond_char_poly(char_poly_twisted(g), Flavor::symplectic_odd) ==
            Poly::power_of_linear(-1, 2 * n) * Poly::power_of_linear(1, 1));
    }
  }
  CHECK(correspond_char_poly(Poly({1, 0, 1}), Flavor::symplectic_odd).degree() == 3);
  CHECK(correspond_char_poly(Poly({1, 0, 1}), Flavor::orthogonal_even).degree() == 2);
  CHECK_THROWS_AS(correspond_char_poly(Poly({1, 0, 2}), Flavor::symplectic_odd), InputError);
  CHECK_THROWS_AS(correspond_char_poly(Poly({1, 1, 0, 1}), Flavor::orthogonal_even), InputError);
}

TEST_CASE("Weyl discriminant") {
  auto one = weyl_discriminant_twisted(QMatrix{{5}}, F3);
  CHECK(one.fixed_dim == 0);
  CHECK(one.value == 1);
  Rng r(65);
  int regular = 0;
  for (int i = 0; i < 200; ++i) {
    size_t d = static_cast<size_t>(r.range(2, 3));
    QMatrix g = random_form(r, d);
    WeylDiscriminant w;
    try {
      w = weyl_discriminant_twisted(g, F3);
    } catch (const PreconditionError&) {
      continue;
    }
    ++regular;
    CHECK(w.fixed_dim == d / 2);
    CHECK(w.product != 0);
    CHECK(w.value == doctest::Approx(std::pow(3.0, -static_cast<double>(w.valuation))));
    auto moved = weyl_discriminant_twisted(ad_action(random_invertible(r, d), g), F3);
    CHECK(moved.product == w.product);
    CHECK(moved.value == w.value);
  }
  CHECK(regular > 100);
  // eigenvalue collisions
  CHECK_THROWS_AS(weyl_discriminant_twisted(standard_alternating(2), F3), PreconditionError);
  CHECK_THROWS_AS(weyl_discriminant_twisted(QMatrix::identity(3), F3), PreconditionError);
}

TEST_CASE("quadratic spaces") {
  auto h = QuadSpace::make(QMatrix{{0, 1}, {1, 0}}, 3);
  CHECK(h.disc.index() == 0);  // hyperbolic plane: (-1)^1 * (-1) = 1
  CHECK_THROWS_AS(QuadSpace::make(QMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3), InputError);
  CHECK_THROWS_AS(QuadSpace::make(QMatrix{{0, 1}, {2, 0}}, 3), InputError);
}

TEST_CASE("odd orthogonal embedding") {
  for (size_t d = 1; d <= 4; ++d) {
    auto emb = build_odd_so(d);
    CHECK(emb.Q.rows() == 2 * d + 1);
    CHECK(emb.Q.is_symmetric());
    CHECK(det(emb.Q) != 0);
    QMatrix id = QMatrix::identity(2 * d + 1);
    CHECK(in_G(emb, id));
    CHECK(b_of_g(emb, id).is_zero());
    CHECK(!in_G_prime(emb, id));
    CHECK(!m_tilde_of(emb, id));
    QMatrix bad = id;
    bad(0, 0) = 2;
    CHECK(!group_violation(emb, bad).empty());
    CHECK_THROWS_AS(m_tilde_of(emb, bad), PreconditionError);
  }
}

TEST_CASE("rank-one property and Bruhat round trip") {
  Rng r(66);
  int found = 0;
  for (int i = 0; i < 300; ++i) {
    size_t d = static_cast<size_t>(r.range(1, 4));
    auto emb = build_odd_so(d);
    QMatrix alpha = random_matrix(r, 1, d);
    QMatrix A = random_matrix(r, d, d);
    A = A - A.transpose();
    QMatrix u = nbar_element(emb, alpha, A);
    REQUIRE(in_G(emb, u));
    CHECK(in_nbar_shape(emb, u));
    QMatrix b = b_of_g(emb, u);
    QMatrix ell = ell_of(emb, u);
    auto [bs, ba] = split_sym_alt(b);
    CHECK(bs == -(ell.transpose() * ell));
    CHECK(rank(bs) <= 1);
    auto f = m_tilde_of(emb, u);
    CHECK(f.has_value() == (det(b) != 0));
    if (!f) continue;
    ++found;
    CHECK(f->u1 * f->w * f->u2 == u);
    CHECK(in_G(emb, f->w));
    CHECK(f->m_tilde == b_of_g(emb, f->w));
    CHECK(f->m_tilde == b);
    // the nonzero value of B^s is -1 times a square
    auto diag = congruence_diagonal(bs);
    for (const auto& x : diag)
      if (x != 0) CHECK(square_class(3, x) == square_class(3, Rational(-1)));
  }
  CHECK(found > 100);
}

TEST_CASE("determinant and characteristic polynomial against Leibniz") {
  Rng r(67);
  for (int i = 0; i < 100; ++i) {
    size_t n = static_cast<size_t>(r.range(1, 5));
    QMatrix m = random_matrix(r, n, n);
    CHECK(det(m) == leibniz_det(m));
    Poly c = char_poly(m);
    CHECK(c.degree() == static_cast<long>(n));
    CHECK(c.is_monic());
    for (long x = -3; x <= 3; ++x) {
      QMatrix shifted = QMatrix::identity(n) * Rational(x) - m;
      CHECK(c.evaluate(x) == leibniz_det(shifted));
    }
    if (det(m) != 0) CHECK(m * inverse(m) == QMatrix::identity(n));
    CHECK(rank(m) + nullity(m) == n);
  }
}

TEST_CASE("symbolic distribution label") {
  CHECK(i_chi_label(QuadraticCharacter::unramified(3)) ==
        "O(gamma_t(1), f) + O(gamma_t(u), f) - O(gamma_t(pi), f) - O(gamma_t(u*pi), f)");
  CHECK(i_chi_label(QuadraticCharacter::trivial(3)).find('-') == std::string::npos);
}
