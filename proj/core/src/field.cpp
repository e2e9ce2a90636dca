#include "planch/field.hpp"

#include <cmath>

#include "planch/errors.hpp"

namespace planch {

// ------------------------------------------------------------ field spec

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long LocalFieldSpec::q() const {
  long out = 1;
  for (long i = 0; i < f; ++i) out *= p;
  return out;
}

double LocalFieldSpec::log_q() const { return static_cast<double>(f) * std::log(static_cast<double>(p)); }

LocalFieldSpec LocalFieldSpec::from_pf(long p, long f, long psi_level) {
  if (!is_prime(p)) throw InputError("residue characteristic " + std::to_string(p) + " is not prime");
  if (f < 1) throw InputError("residue degree must be at least 1");
  if (std::log(static_cast<double>(p)) * static_cast<double>(f) > 40.0) throw InputError("q too large");
  return LocalFieldSpec{p, f, psi_level};
}

LocalFieldSpec LocalFieldSpec::from_q(long q, long psi_level) {
  if (q < 2) throw InputError("q must be a prime power >= 2");
  long p = 2;
  while (q % p != 0) ++p;
  long f = 0, m = q;
  while (m % p == 0) {
    m /= p;
    ++f;
  }
  if (m != 1) throw InputError(std::to_string(q) + " is not a prime power");
  return from_pf(p, f, psi_level);
}

std::string LocalFieldSpec::str() const {
  return "q=" + std::to_string(q()) + " (p=" + std::to_string(p) + ", f=" + std::to_string(f) +
         "), n(psi)=" + std::to_string(psi_level);
}

// ----------------------------------------------------------- valuations

long valuation(const LocalFieldSpec& field, const PadicScalar& x) {
  if (x.value == 0) throw PreconditionError("valuation undefined");
  return valuation(x.value, field.p);
}

// --------------------------------------------------------- square classes

long least_nonresidue(long p) {
  if (p == 2) throw PreconditionError("no quadratic nonresidue used for p = 2");
  for (long a = 2; a < p; ++a)
    if (legendre(Integer(a), p) == -1) return a;
  throw PreconditionError("no nonresidue found");
}

int legendre(const Integer& a, long p) {
  Integer m = a % p;
  if (m < 0) m += p;
  if (m == 0) throw PreconditionError("Legendre symbol of a multiple of p");
  Integer r;
  Integer e = (p - 1) / 2;
  mpz_powm(r.get_mpz_t(), m.get_mpz_t(), e.get_mpz_t(), Integer(p).get_mpz_t());
  return r == 1 ? 1 : -1;
}

SquareClass::SquareClass(long p, int parity, int unit) : p_(p), parity_(parity & 1), unit_(unit) {
  if (p == 2) {
    if (unit != 1 && unit != 3 && unit != 5 && unit != 7) throw InputError("unit class mod 8 must be odd");
  } else if (unit != 0 && unit != 1) {
    throw InputError("unit class must be 0 or 1");
  }
}

int SquareClass::index() const {
  if (p_ == 2) return parity_ * 4 + (unit_ - 1) / 2;
  return parity_ * 2 + unit_;
}

SquareClass SquareClass::from_index(long p, int index) {
  if (p == 2) return SquareClass(2, index / 4, 2 * (index % 4) + 1);
  return SquareClass(p, index / 2, index % 2);
}

Rational SquareClass::representative() const {
  if (p_ == 2) {
    static const int units[8] = {0, 1, 0, -5, 0, 5, 0, -1};
    return Rational(units[unit_] * (parity_ ? 2 : 1));
  }
  long u = unit_ ? least_nonresidue(p_) : 1;
  return Rational(u * (parity_ ? p_ : 1));
}

std::string SquareClass::name() const {
  if (p_ == 2) return to_string(representative());
  if (parity_ == 0) return unit_ ? "u" : "1";
  return unit_ ? "u*pi" : "pi";
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
  if (p_ != o.p_) throw PreconditionError("square classes of different fields");
  if (p_ == 2) return SquareClass(2, parity_ ^ o.parity_, (unit_ * o.unit_) % 8);
  return SquareClass(p_, parity_ ^ o.parity_, unit_ ^ o.unit_);
}

SquareClass square_class(long p, const Rational& x) {
  if (x == 0) throw PreconditionError("square class of zero");
  long v = valuation(x, p);
  Rational unit = x / pow(Rational(p), v);
  unit.canonicalize();
  if (p == 2) {
    // a/b with a, b odd: class of a·b mod 8 (b^2 = 1 mod 8)
    Integer ab = unit.get_num() * unit.get_den();
    Integer m = ab % 8;
    if (m < 0) m += 8;
    return SquareClass(2, static_cast<int>(v & 1), static_cast<int>(m.get_si()));
  }
  int leg = legendre(unit.get_num(), p) * legendre(unit.get_den(), p);
  return SquareClass(p, static_cast<int>(v & 1), leg == 1 ? 0 : 1);
}

SquareClass square_class(const LocalFieldSpec& field, const PadicScalar& x) { return square_class(field.p, x.value); }

// --------------------------------------------------------- characters

QuadraticCharacter::QuadraticCharacter(long p, std::vector<int> table) : p_(p), table_(std::move(table)) {
  int n = SquareClass::group_order(p);
  if (static_cast<int>(table_.size()) != n) throw InputError("character table has wrong size");
  for (int v : table_)
    if (v != 1 && v != -1) throw InputError("character values must be +-1");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SquareClass a = SquareClass::from_index(p, i), b = SquareClass::from_index(p, j);
      if (table_[static_cast<size_t>((a * b).index())] != table_[static_cast<size_t>(i)] * table_[static_cast<size_t>(j)])
        throw InputError("character table is not multiplicative");
    }
}

QuadraticCharacter QuadraticCharacter::trivial(long p) {
  return QuadraticCharacter(p, std::vector<int>(static_cast<size_t>(SquareClass::group_order(p)), 1));
}

QuadraticCharacter QuadraticCharacter::unramified(long p) {
  std::vector<int> t(static_cast<size_t>(SquareClass::group_order(p)));
  for (int i = 0; i < static_cast<int>(t.size()); ++i) t[static_cast<size_t>(i)] = SquareClass::from_index(p, i).parity() ? -1 : 1;
  return QuadraticCharacter(p, t);
}

QuadraticCharacter QuadraticCharacter::from_generators(long p, int at_u, int at_uniformizer) {
  if (p == 2) throw InputError("use the full table for p = 2");
  std::vector<int> t(4);
  for (int i = 0; i < 4; ++i) {
    SquareClass c = SquareClass::from_index(p, i);
    t[static_cast<size_t>(i)] = (c.unit() ? at_u : 1) * (c.parity() ? at_uniformizer : 1);
  }
  return QuadraticCharacter(p, t);
}

bool QuadraticCharacter::is_unramified() const {
  for (int i = 0; i < static_cast<int>(table_.size()); ++i)
    if (SquareClass::from_index(p_, i).parity() == 0 && table_[static_cast<size_t>(i)] != 1) return false;
  return true;
}

int char_eval(const QuadraticCharacter& chi, const Rational& x) {
  if (x == 0) throw PreconditionError("character of zero");
  return chi(square_class(chi.prime(), x));
}

int char_eval(const QuadraticCharacter& chi, const LocalFieldSpec& field, const PadicScalar& x) {
  if (field.p != chi.prime()) throw PreconditionError("character and field disagree on p");
  return char_eval(chi, x.value);
}

// --------------------------------------------------- trivial-character factors

SpectralFunction gamma_trivial(const LocalFieldSpec& field) {
  const Rational n(field.psi_level);
  // q^{n/2} q^{-ns}
  SpectralFunction eps =
      SpectralFunction::monomial(field, SpectralScalar::unit_times_q_power(field, 0, n / 2), n);
  SpectralFunction zeta_s = SpectralFunction::zeta(field);
  return eps * zeta_s.reflected() * zeta_s.inverse();
}

QuadSurd gamma_star_trivial(const LocalFieldSpec& field) {
  Rational q(field.q());
  return QuadSurd::q_power(field.p, field.f, ratio(field.psi_level, 2)) *
         QuadSurd::from_rational(field.p, q / (q - 1));
}

}  // namespace planch
