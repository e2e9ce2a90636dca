#pragma once

// Singular spectral limit for orthogonal triples: the s -> 0+ limit of
//   d·gamma(s,1) ∫ Phi · gamma(s, Sym2)^{-1} · mu_chi
// over a component of the tempered dual of GL_d, compared with
//   2 ∫ Phi · gamma*(wedge2) / |S^+|
// over its orthogonal locus.
//
// Coordinates: every block b of the base point carries an absolute angle
// v_b = u_b + theta_b (turns). The component's torus is
//   T = { theta : sum_b k_b theta_b = 0 mod 1 },
// parametrized by all theta_b except one block with k_b = 1. Torus-level
// integrals use Lebesgue measure dtheta on [0,1)^{S-1}; component-level
// values divide by |Gamma|, the group of size-preserving block permutations
// through which T covers the component.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "planch/field_spec.hpp"
#include "planch/quadrature.hpp"
#include "planch/rational.hpp"
#include "planch/spectral.hpp"
#include "planch/temp.hpp"

namespace planch {

/// Smooth test function of the block angles, invariant under size-preserving
/// block permutations.
class TestFunction {
 public:
  struct Term {
    double coef = 1;
    int freq = 1;
    double phase = 0;  // turns
    int block = -1;    // -1: summed over all blocks
  };

  static TestFunction constant(double c);
  /// c0 + sum_terms coef · cos(2 pi (freq v_b + phase)).
  static TestFunction trig(double c0, std::vector<Term> terms, bool symmetrize = false);
  /// sum_b g(v_b) with g the periodized Gaussian of width sigma centred at `center`,
  /// truncated to Fourier modes |j| <= modes.
  static TestFunction gaussian(double amplitude, double sigma, double center, int modes);

  std::string kind() const { return kind_; }
  double operator()(const std::vector<int>& k, const std::vector<double>& v) const;

  /// Samples random angle vectors and block permutations; throws InputError when
  /// the function is not invariant to 1e-12.
  void check_invariance(const std::vector<int>& k, unsigned seed = 1) const;

  double c0() const { return c0_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool symmetrized() const { return symmetrize_; }
  double sigma() const { return sigma_; }
  double center() const { return center_; }
  int modes() const { return modes_; }

 private:
  std::string kind_ = "constant";
  double c0_ = 1;
  std::vector<Term> terms_;
  bool symmetrize_ = false;
  double sigma_ = 0.1, center_ = 0;
  int modes_ = 0;
};

/// All permutations of block indices that preserve block sizes.
std::vector<std::vector<int>> size_preserving_permutations(const std::vector<int>& k, size_t limit = 40320);

/// Twists theta_b (base-point block order) relative to the triple's base point.
struct TorusPoint {
  std::vector<Rational> twist;
};

/// Free coordinates of the orthogonal subtorus; mirrored coordinates are forced:
/// x^v = -x, y_{p+1-l} = -y_l, z_{q+1-l} = -z_l (middle z = 0).
struct SubtorusPoint {
  std::vector<std::vector<Rational>> x;  // per pair entry, m_i values
  std::vector<std::vector<Rational>> y;  // per symplectic entry, p_j/2 values
  std::vector<std::vector<Rational>> z;  // per orthogonal entry, floor(q_k/2) values
};
TorusPoint embed(const OrthTriple& t, const SubtorusPoint& mu);
SubtorusPoint zero_subtorus_point(const OrthTriple& t);

struct LimitConfig {
  double s0 = 0.1;
  int s_count = 8;
  double tol = 1e-3;
  int grid = 4096;        // panel budget of each one-dimensional pass
  double quad_rtol = 1e-9;
  int threads = 1;
};

/// Exact-engine integrand: Phi · gamma(s, Sym2)^{-1} · gamma*(Ad_{M/A}) at the given twists.
Complex lhs_integrand(const OrthTriple& t, const TestFunction& phi, const Rational& s, const TorusPoint& pt,
                      const LocalFieldSpec& field);
/// Same integrand through the fast double-precision path used by the quadrature.
Complex lhs_integrand_fast(const OrthTriple& t, const TestFunction& phi, double s, const std::vector<double>& theta,
                           const LocalFieldSpec& field);

/// Component-level left side at fixed s > 0.
QuadResult lhs_value(const OrthTriple& t, const TestFunction& phi, double s, const LocalFieldSpec& field,
                     const LimitConfig& cfg);
/// Component-level right side.
QuadResult rhs_value(const OrthTriple& t, const TestFunction& phi, const LocalFieldSpec& field, const LimitConfig& cfg);

/// One component of the orthogonal locus inside the torus.
struct PairingStructure {
  std::vector<std::pair<int, int>> pairs;             // blocks with v_i + v_j = 0
  std::vector<std::pair<int, Rational>> singletons;   // block, self-dual angle e in {0, 1/2}
};
std::vector<PairingStructure> orthogonal_components(const OrthTriple& t);

/// Order of the size-preserving block permutation group.
long covering_order(const OrthTriple& t);

struct GenericPointCheck {
  Complex lhs;
  Complex rhs;
  double deviation = 0;
  int order = 0;  // ord of gamma(Sym2) at 0
  int N = 0;
};
/// Throws PreconditionError when mu is not generic (ord of gamma(Sym2) differs from N).
GenericPointCheck generic_point_check(const OrthTriple& t, const SubtorusPoint& mu, const LocalFieldSpec& field);

/// Number of vanishing linear forms x+x^v (all l, l'), y_l+y_l' (l<l'), z_l+z_l' (l<=l')
/// at the given twists.
int singular_exponent(const OrthTriple& t, const TorusPoint& pt);

struct ComponentMass {
  double mass = 0;
  double expected = 0;  // 1/|W(M,sigma)|
  double quadrature = 0;
  double constant = 0;  // (2pi/log q)^{1-S} / (P |W|)
  double jacobian = 0;  // prod over free blocks of 2 pi k_b / log q
};
/// Mass of the component under the density normalization, integrating 1 with the
/// left-side quadrature at a large fixed s with the gamma-factors dropped.
ComponentMass component_mass(const OrthTriple& t, const LocalFieldSpec& field, const LimitConfig& cfg);

struct LimitReport {
  LocalFieldSpec field;
  std::vector<double> s;
  std::vector<Complex> lhs;
  std::vector<double> lhs_error;
  Complex lhs_extrapolated;
  double extrapolation_error = 0;
  Complex rhs;
  double rhs_error = 0;
  double abs_discrepancy = 0;
  double rel_discrepancy = 0;
  double tol = 0;
  bool pass = false;
  int grid = 0;
  long evaluations = 0;
  int max_panels_used = 0;
  long covering = 1;
  int components = 0;
  double fit_exponent = 0;  // slope of log|lhs/(d gamma(s,1))| against log s
};

/// Richardson extrapolation to s = 0 for values at s0·2^{-k}, assuming A + B s + C s^2 + ...
/// Returns the extrapolated value and the difference of the last two diagonal entries.
std::pair<Complex, double> richardson(const std::vector<Complex>& values);

LimitReport verify(const OrthTriple& t, const TestFunction& phi, const LocalFieldSpec& field, const LimitConfig& cfg);

/// Least-squares slope of log|y| against log x.
double fit_exponent(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace planch
