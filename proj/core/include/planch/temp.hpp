#pragma once

// Tempered dual of GL_d: points, Plancherel densities, orthogonal triples and
// the constants attached to them.

#include <optional>
#include <string>
#include <vector>

#include "planch/field_spec.hpp"
#include "planch/qsurd.hpp"
#include "planch/rational.hpp"
#include "planch/spectral.hpp"
#include "planch/wd.hpp"

namespace planch {

/// One Levi block GL_k carrying the twisted Steinberg St_k(angle) twisted by `twist`.
struct TempBlock {
  int k = 1;
  Rational angle;
  Rational twist;

  WDAtom atom() const { return WDAtom(angle + twist, k); }
  bool operator==(const TempBlock& o) const { return k == o.k && angle == o.angle && twist == o.twist; }
};

struct TempPoint {
  std::vector<TempBlock> blocks;

  int dim() const;
  std::vector<int> shape() const;
  /// Sum k_i (u_i + lambda_i) mod 1.
  Rational central_angle() const;
};

WDRep parameter_of(const TempPoint& pt);

struct WeylOrders {
  Integer w;                                   // |W(M, sigma)|
  std::vector<std::pair<WDAtom, int>> blocks;  // distinct twisted blocks and multiplicities
};
WeylOrders weyl_orders(const TempPoint& pt);

Complex plancherel_density(const TempPoint& pt, const LocalFieldSpec& field);
/// chi given by its angle at a uniformizer (unramified quadratic: 0 or 1/2).
Complex plancherel_density_chi(const TempPoint& pt, const Rational& chi_angle, const LocalFieldSpec& field);
bool central_quotient_relation_check(const TempPoint& pt, const Rational& chi_angle, const LocalFieldSpec& field);

struct OrthEntry {
  WDAtom atom;
  int mult = 1;  // m_i = n_i (pairs), p_j, or q_k
  int dim = 1;   // d_i, e_j, f_k
};

/// Orthogonal triple data: dual pairs, symplectic-type and orthogonal-type parts.
struct OrthTriple {
  std::vector<OrthEntry> pairs;       // I^n
  std::vector<OrthEntry> symplectic;  // I^s
  std::vector<OrthEntry> orthogonal;  // I^o

  int dim() const;
  /// Checks atom types, distinctness and dimensions; throws InputError.
  void validate() const;
  /// Blocks in the order x_{i,1..m}, x^v_{i,1..n}, y_{j,1..p}, z_{k,1..q}.
  TempPoint base_point() const;
  WDRep parameter() const { return parameter_of(base_point()); }
};

std::optional<OrthTriple> orth_triple_of(const TempPoint& pt, const std::optional<Rational>& chi_angle = std::nullopt);

struct TripleConstants {
  Integer P;
  long S = 0;
  Integer D;
  long N = 0;
  long c = 0;
  Integer W;
  Integer W_prime;
};
TripleConstants triple_constants(const OrthTriple& t);

/// |gamma*(wedge2 sigma)| / |S_sigma|
double formal_degree_rhs(const WDRep& sigma, const LocalFieldSpec& field);
std::optional<QuadSurd> formal_degree_rhs_exact(const WDRep& sigma, const LocalFieldSpec& field);

/// Adjoint representation of the dual group through which phi is read:
/// wedge2 (orthogonal), sym2 (symplectic) or phi ⊗ phi^v.
WDRep adjoint_rep(const WDRep& phi);
/// Component group order used in the denominator for adjoint_rep.
long adjoint_component_order(const WDRep& phi);
/// deg_rho · |gamma(0, Ad∘phi)| / (index · |S_phi|)
double hii_rhs(const WDRep& phi, long index_xstar, long deg_rho, const LocalFieldSpec& field);

Integer factorial(long n);

}  // namespace planch
