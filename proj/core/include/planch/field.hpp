#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "planch/field_spec.hpp"
#include "planch/qsurd.hpp"
#include "planch/rational.hpp"
#include "planch/spectral.hpp"

namespace planch {

/// A nonzero-or-zero exact rational read inside F.
struct PadicScalar {
  Rational value;
};

long valuation(const LocalFieldSpec& field, const PadicScalar& x);

/// Element of F^x / F^x2.
/// Odd p: (valuation parity, unit is a nonsquare mod p); representatives 1, u, p, u·p
/// with u the least positive nonresidue.
/// p = 2: (valuation parity, unit mod 8 in {1,3,5,7}); representatives ±1, ±5, ±2, ±10.
class SquareClass {
 public:
  SquareClass() = default;
  SquareClass(long p, int parity, int unit);

  long prime() const { return p_; }
  int parity() const { return parity_; }
  /// odd p: 0 square unit / 1 nonsquare unit; p = 2: residue mod 8.
  int unit() const { return unit_; }
  /// 0..3 (odd p) or 0..7 (p = 2)
  int index() const;
  static SquareClass from_index(long p, int index);
  static int group_order(long p) { return p == 2 ? 8 : 4; }

  Rational representative() const;
  std::string name() const;

  SquareClass operator*(const SquareClass& o) const;
  bool operator==(const SquareClass& o) const { return p_ == o.p_ && parity_ == o.parity_ && unit_ == o.unit_; }
  bool operator!=(const SquareClass& o) const { return !(*this == o); }
  bool operator<(const SquareClass& o) const { return index() < o.index(); }

 private:
  long p_ = 3;
  int parity_ = 0;
  int unit_ = 0;
};

/// Least positive quadratic nonresidue modulo an odd prime.
long least_nonresidue(long p);
/// Legendre symbol (a / p) for odd prime p, a prime to p.
int legendre(const Integer& a, long p);

SquareClass square_class(const LocalFieldSpec& field, const PadicScalar& x);
SquareClass square_class(long p, const Rational& x);

/// Quadratic character of F^x given by its table on square classes.
class QuadraticCharacter {
 public:
  QuadraticCharacter() = default;
  /// Builds from a full table; throws InputError if not a homomorphism into {+-1}.
  QuadraticCharacter(long p, std::vector<int> table);

  static QuadraticCharacter trivial(long p);
  /// chi(pi) = -1, trivial on units.
  static QuadraticCharacter unramified(long p);
  /// Odd p: values on u and on the uniformizer.
  static QuadraticCharacter from_generators(long p, int at_u, int at_uniformizer);

  long prime() const { return p_; }
  int operator()(const SquareClass& c) const { return table_.at(static_cast<size_t>(c.index())); }
  const std::vector<int>& table() const { return table_; }
  bool is_unramified() const;
  bool operator==(const QuadraticCharacter& o) const { return p_ == o.p_ && table_ == o.table_; }

 private:
  long p_ = 3;
  std::vector<int> table_;
};

int char_eval(const QuadraticCharacter& chi, const LocalFieldSpec& field, const PadicScalar& x);
int char_eval(const QuadraticCharacter& chi, const Rational& x);

/// gamma(s, 1_F, psi) = q^{n(1/2-s)} zeta_F(1-s)/zeta_F(s)
SpectralFunction gamma_trivial(const LocalFieldSpec& field);

/// gamma*(1_F, psi) = q^{n/2} (1 - q^{-1})^{-1}, exactly.
QuadSurd gamma_star_trivial(const LocalFieldSpec& field);

}  // namespace planch
