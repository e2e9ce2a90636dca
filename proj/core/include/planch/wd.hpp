#pragma once

// Weil-Deligne representations sum of (unramified character) ⊗ Sp(m).
//
// Compact text grammar accepted by parse_rep:
//   rep  := term ( '+' term )*
//   term := angle [ '*' 'Sp(' m ')' ]  |  'Sp(' m ')'
//   angle:= integer | integer '/' integer      (turns, reduced mod 1)
// e.g. "1/3*Sp(2) + 2/3*Sp(2) + 0".

#include <string>
#include <string_view>
#include <vector>

#include "planch/field_spec.hpp"
#include "planch/rational.hpp"
#include "planch/spectral.hpp"

namespace planch {

enum class SelfDuality { none, orthogonal, symplectic, orthogonal_and_symplectic };
std::string to_string(SelfDuality t);
inline bool has_orthogonal(SelfDuality t) {
  return t == SelfDuality::orthogonal || t == SelfDuality::orthogonal_and_symplectic;
}
inline bool has_symplectic(SelfDuality t) {
  return t == SelfDuality::symplectic || t == SelfDuality::orthogonal_and_symplectic;
}

struct WDAtom {
  Rational angle;  // reduced in [0,1)
  int sp = 1;

  WDAtom() = default;
  WDAtom(const Rational& a, int m);

  int dim() const { return sp; }
  bool is_self_dual() const;
  /// none / orthogonal / symplectic as for an irreducible atom.
  SelfDuality type() const;
  WDAtom dual() const { return WDAtom(-angle, sp); }

  bool operator==(const WDAtom& o) const { return sp == o.sp && angle == o.angle; }
  bool operator!=(const WDAtom& o) const { return !(*this == o); }
  /// Canonical order: (sp, angle).
  bool operator<(const WDAtom& o) const { return sp != o.sp ? sp < o.sp : angle < o.angle; }
};

/// Multiset of atoms, stored sorted.
class WDRep {
 public:
  WDRep() = default;
  explicit WDRep(std::vector<WDAtom> atoms);

  const std::vector<WDAtom>& atoms() const { return atoms_; }
  int dim() const;
  bool empty() const { return atoms_.empty(); }
  int multiplicity(const WDAtom& a) const;
  /// distinct atoms with their multiplicities
  std::vector<std::pair<WDAtom, int>> isotypic() const;

  WDRep operator+(const WDRep& o) const;
  bool operator==(const WDRep& o) const { return atoms_ == o.atoms_; }
  bool operator!=(const WDRep& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::vector<WDAtom> atoms_;
};

std::vector<int> sp_tensor(int m, int n);
std::vector<int> sp_sym2(int m);
std::vector<int> sp_wedge2(int m);

WDRep dual(const WDRep& rho);
WDRep tensor(const WDRep& a, const WDRep& b);
WDRep sym2(const WDRep& rho);
WDRep wedge2(const WDRep& rho);
WDRep ad_M(const WDRep& rho);
WDRep ad_M_over_A(const WDRep& rho);

SpectralFunction L_factor(const WDRep& rho, const LocalFieldSpec& field);
SpectralFunction eps_factor(const WDRep& rho, const LocalFieldSpec& field);
SpectralFunction gamma_factor(const WDRep& rho, const LocalFieldSpec& field);

SelfDuality self_duality(const WDRep& rho);
Rational determinant(const WDRep& rho);

struct ComponentGroups {
  long s_plus = 1;  // |pi_0 Z_{O}(phi)|
  long s = 1;       // |pi_0 Z_{SO}(phi)|
  int fiber_ratio = 2;
};
ComponentGroups component_groups(const WDRep& rho);

WDRep parse_rep(std::string_view text);

}  // namespace planch
