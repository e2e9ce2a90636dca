#pragma once

// Random generators and independent oracles shared by the unit tests and the
// acceptance runner. Oracles here deliberately avoid the library's factor
// engine and linear algebra: they recompute from the defining formulas.

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "planch/field.hpp"
#include "planch/limit.hpp"
#include "planch/matrix.hpp"
#include "planch/temp.hpp"
#include "planch/wd.hpp"

namespace planch::testing {

using Cx = std::complex<double>;

class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g_); }
  bool coin() { return range(0, 1) == 1; }
  /// angle a/b in [0,1) with b from a small menu
  Rational angle() {
    static const long dens[] = {1, 2, 3, 4, 5, 6, 8, 12};
    long b = dens[range(0, 7)];
    return ratio(range(0, b - 1), b);
  }
  /// angle with a large denominator: generic with overwhelming probability
  Rational generic_angle() { return ratio(range(0, 9972), 9973); }
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

inline WDRep random_rep(Rng& r, int max_dim) {
  std::vector<WDAtom> atoms;
  int dim = 0;
  int target = static_cast<int>(r.range(1, max_dim));
  while (dim < target) {
    int m = static_cast<int>(r.range(1, std::min(3, target - dim)));
    atoms.emplace_back(r.angle(), m);
    dim += m;
  }
  return WDRep(atoms);
}

/// Random orthogonal-type parameter: dual pairs, symplectic atoms in even
/// multiplicity and orthogonal atoms in any multiplicity.
inline WDRep random_orthogonal_rep(Rng& r, int max_dim) {
  std::vector<WDAtom> atoms;
  int dim = 0;
  int target = static_cast<int>(r.range(1, max_dim));
  while (dim < target) {
    long kind = r.range(0, 2);
    Rational half = r.coin() ? Rational(0) : Rational(1, 2);
    if (kind == 0 && target - dim >= 2) {
      Rational a = r.angle();
      atoms.emplace_back(a, 1);
      atoms.emplace_back(-a, 1);
      dim += 2;
    } else if (kind == 1 && target - dim >= 4) {
      atoms.emplace_back(half, 2);
      atoms.emplace_back(half, 2);
      dim += 4;
    } else {
      int m = target - dim >= 3 && r.coin() ? 3 : 1;
      atoms.emplace_back(half, m);
      dim += m;
    }
  }
  return WDRep(atoms);
}

// ------------------------------------------------------------ gamma oracle

inline Cx e_turn(double t) { return std::polar(1.0, 2 * std::numbers::pi * t); }

/// L(s, chi (x) Sp(m)) = (1 - chi(pi) q^{-s-(m-1)/2})^{-1}
inline Cx oracle_L(const WDAtom& a, double q, Cx s) {
  return 1.0 / (1.0 - e_turn(to_double(a.angle)) * std::pow(q, -s - (a.sp - 1) / 2.0));
}

/// eps(s, V, N) = eps(s, V) det(-Frob q^{-s} | V / ker N), V = (+)_i chi|.|^{(m-1)/2 - i}
inline Cx oracle_eps(const WDAtom& a, double q, long n, Cx s) {
  Cx chi = e_turn(to_double(a.angle));
  Cx out = 1;
  for (int i = 0; i < a.sp; ++i) {
    double c = (a.sp - 1) / 2.0 - i;
    out *= std::pow(chi, static_cast<double>(n)) * std::pow(q, static_cast<double>(n) * (0.5 - s - c));
  }
  // Frobenius eigenvalues off ker N: chi q^{-(m-1)/2 + j}, j = 1..m-1
  for (int j = 1; j < a.sp; ++j) out *= -chi * std::pow(q, -s - (a.sp - 1) / 2.0 + static_cast<double>(j));
  return out;
}

inline Cx oracle_gamma(const WDRep& rho, double q, long n, Cx s) {
  Cx out = 1;
  for (const auto& a : rho.atoms()) out *= oracle_eps(a, q, n, s) * oracle_L(a.dual(), q, 1.0 - s) / oracle_L(a, q, s);
  return out;
}

// ------------------------------------------------------------ component groups

struct GroupOrders {
  long s_plus = 1, s = 1;
};

/// Enumerates sign vectors on the distinct orthogonal-type constituents and
/// keeps those of determinant one.
inline GroupOrders oracle_component_groups(const WDRep& rho) {
  std::vector<std::pair<WDAtom, int>> orth;
  for (const auto& [a, mult] : rho.isotypic())
    if (a.type() == SelfDuality::orthogonal) orth.emplace_back(a, mult);
  GroupOrders g;
  g.s_plus = 0;
  g.s = 0;
  const size_t k = orth.size();
  // Component ε of O(q_i) is represented by diag(ε, 1, ..., 1), which acts by ε on a
  // single copy of the constituent; build that element's diagonal on all of V and take det.
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    ++g.s_plus;
    std::vector<int> diag;
    for (size_t i = 0; i < k; ++i)
      for (int copy = 0; copy < orth[i].second; ++copy)
        for (int c = 0; c < orth[i].first.sp; ++c) diag.push_back(copy == 0 && ((mask >> i) & 1) ? -1 : 1);
    int det = 1;
    for (int x : diag) det *= x;
    if (det == 1) ++g.s;
  }
  return g;
}

// ------------------------------------------------------------ Steinberg

/// |gamma(0, wedge2 Sp(2n+1))| / |S| assembled block by block from zeta ratios,
/// n(psi) = 0: for Sp(k) with k odd, gamma(0) = (-1)^{k-1} q^{(k-1)/2} zeta((k+1)/2) / zeta((k-1)/2).
inline Rational steinberg_by_hand(long n, long q) {
  auto zeta = [&](long x) -> Rational { return Rational(1) / (1 - Rational(1) / pow(Rational(q), x)); };
  // the k = 1 block contributes zeta(1) / zeta(s) at s = 0; its simple zero is the regularized one
  auto inv_zeta = [&](long x) -> Rational { return x == 0 ? Rational(1) : 1 / zeta(x); };
  Rational prod = 1;
  for (long k = 4 * n - 1; k >= 1; k -= 4) {  // wedge2 Sp(m) = Sp(2m-3) + Sp(2m-7) + ..., m = 2n+1
    prod *= pow(Rational(q), (k - 1) / 2) * zeta((k + 1) / 2) * inv_zeta((k - 1) / 2);
  }
  return abs(prod);  // |S| = 1 for the principal parameter
}

// ------------------------------------------------------------ linear algebra

/// Leibniz expansion; small matrices only.
inline Rational leibniz_det(const QMatrix& m) {
  const size_t n = m.rows();
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total = 0;
  do {
    int sign = 1;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Rational term = sign;
    for (size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline QMatrix random_matrix(Rng& r, size_t rows, size_t cols, long lo = -3, long hi = 3) {
  QMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = r.range(lo, hi);
  return m;
}

inline QMatrix random_invertible(Rng& r, size_t n) {
  for (;;) {
    QMatrix m = random_matrix(r, n, n);
    if (leibniz_det(m) != 0) return m;
  }
}

/// Square class of x in Q_p by the Euler criterion on the unit part (odd p) or
/// the unit residue mod 8 (p = 2).
inline SquareClass oracle_square_class(long p, const Rational& x) {
  Integer num = x.get_num(), den = x.get_den();
  long v = 0;
  while (num % p == 0) num /= p, ++v;
  while (den % p == 0) den /= p, --v;
  if (p == 2) {
    Integer u = (num * den) % 8;  // den odd: den^{-1} = den mod 8
    if (u < 0) u += 8;
    return SquareClass(2, static_cast<int>(v & 1), static_cast<int>(u.get_si()));
  }
  Integer u = (num * den) % p;  // same class as num/den
  if (u < 0) u += p;
  Integer e;
  mpz_powm_ui(e.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), Integer(p).get_mpz_t());
  return SquareClass(p, static_cast<int>(v & 1), e == 1 ? 0 : 1);
}

// ------------------------------------------------------------ triples

inline OrthEntry entry(const Rational& angle, int sp, int mult) {
  OrthEntry e;
  e.atom = WDAtom(angle, sp);
  e.mult = mult;
  e.dim = sp;
  return e;
}

/// Orthogonal-locus parameter at a subtorus point.
inline TempPoint twisted_point(const OrthTriple& t, const TorusPoint& tp) {
  TempPoint pt = t.base_point();
  for (size_t b = 0; b < pt.blocks.size(); ++b) pt.blocks[b].twist = mod1(tp.twist[b]);
  return pt;
}

inline SubtorusPoint random_subtorus_point(const OrthTriple& t, Rng& r) {
  SubtorusPoint mu = zero_subtorus_point(t);
  for (auto* part : {&mu.x, &mu.y, &mu.z})
    for (auto& v : *part)
      for (auto& c : v) c = r.generic_angle();
  return mu;
}

}  // namespace planch::testing
