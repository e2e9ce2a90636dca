#include "planch/temp.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "planch/errors.hpp"
#include "planch/field.hpp"

namespace planch {

Integer factorial(long n) {
  Integer out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

int TempPoint::dim() const {
  int d = 0;
  for (const auto& b : blocks) d += b.k;
  return d;
}

std::vector<int> TempPoint::shape() const {
  std::vector<int> s;
  for (const auto& b : blocks) s.push_back(b.k);
  return s;
}

Rational TempPoint::central_angle() const {
  Rational a = 0;
  for (const auto& b : blocks) a += b.k * (b.angle + b.twist);
  return mod1(a);
}

WDRep parameter_of(const TempPoint& pt) {
  std::vector<WDAtom> v;
  for (const auto& b : pt.blocks) v.push_back(b.atom());
  return WDRep(std::move(v));
}

WeylOrders weyl_orders(const TempPoint& pt) {
  WeylOrders out;
  out.blocks = parameter_of(pt).isotypic();
  out.w = 1;
  for (const auto& [atom, mult] : out.blocks) out.w *= factorial(mult);
  return out;
}

Complex plancherel_density(const TempPoint& pt, const LocalFieldSpec& field) {
  if (pt.blocks.empty()) throw InputError("empty tempered point");
  // omega_pi(-1) = 1: -1 is a unit and unramified characters are trivial on units.
  return gamma_factor(ad_M(parameter_of(pt)), field).regularized_value();
}

namespace {

void require_central_character(const TempPoint& pt, const Rational& chi_angle) {
  if (mod1(2 * chi_angle) != 0) throw PreconditionError("chi must be quadratic");
  if (pt.central_angle() != mod1(chi_angle))
    throw PreconditionError("central character " + to_string(pt.central_angle()) + " does not match chi " +
                            to_string(mod1(chi_angle)));
}

}  // namespace

Complex plancherel_density_chi(const TempPoint& pt, const Rational& chi_angle, const LocalFieldSpec& field) {
  if (pt.blocks.empty()) throw InputError("empty tempered point");
  require_central_character(pt, chi_angle);
  // chi(-1) = 1 for unramified chi
  Complex g = gamma_factor(ad_M_over_A(parameter_of(pt)), field).regularized_value();
  return g / static_cast<double>(pt.dim());
}

bool central_quotient_relation_check(const TempPoint& pt, const Rational& chi_angle, const LocalFieldSpec& field) {
  require_central_character(pt, chi_angle);
  WDRep rho = parameter_of(pt);
  SpectralFunction whole = gamma_factor(ad_M(rho), field);
  SpectralFunction split = gamma_trivial(field) * gamma_factor(ad_M_over_A(rho), field);
  if (!whole.equals(split)) return false;
  Complex mu = plancherel_density(pt, field);
  Complex mu_chi = plancherel_density_chi(pt, chi_angle, field);
  Complex rhs = mu / (gamma_star_trivial(field).to_double() * pt.dim());
  return std::abs(mu_chi - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs));
}

// ------------------------------------------------------------- triples

int OrthTriple::dim() const {
  int d = 0;
  for (const auto& e : pairs) d += 2 * e.mult * e.dim;
  for (const auto& e : symplectic) d += e.mult * e.dim;
  for (const auto& e : orthogonal) d += e.mult * e.dim;
  return d;
}

void OrthTriple::validate() const {
  auto check_dims = [](const std::vector<OrthEntry>& v) {
    for (const auto& e : v) {
      if (e.mult < 1) throw InputError("multiplicities must be >= 1");
      if (e.dim != e.atom.sp) throw InputError("block dimension differs from the Sp size of its atom");
    }
  };
  check_dims(pairs);
  check_dims(symplectic);
  check_dims(orthogonal);
  std::set<std::pair<int, Rational>> seen;
  auto fresh = [&](const WDAtom& a) {
    if (!seen.insert({a.sp, a.angle}).second) throw InputError("atom " + WDRep({a}).str() + " listed twice");
  };
  for (const auto& e : pairs) {
    if (e.atom.is_self_dual()) throw InputError("pair atoms must not be self-dual");
    fresh(e.atom);
    fresh(e.atom.dual());
  }
  for (const auto& e : symplectic) {
    if (e.atom.type() != SelfDuality::symplectic) throw InputError("symplectic part needs symplectic-type atoms");
    if (e.mult % 2) throw InputError("symplectic multiplicities must be even");
    fresh(e.atom);
  }
  for (const auto& e : orthogonal) {
    if (e.atom.type() != SelfDuality::orthogonal) throw InputError("orthogonal part needs orthogonal-type atoms");
    fresh(e.atom);
  }
  if (dim() == 0) throw InputError("empty triple");
}

TempPoint OrthTriple::base_point() const {
  TempPoint pt;
  for (const auto& e : pairs) {
    for (int l = 0; l < e.mult; ++l) pt.blocks.push_back({e.atom.sp, e.atom.angle, 0});
    for (int l = 0; l < e.mult; ++l) pt.blocks.push_back({e.atom.sp, mod1(-e.atom.angle), 0});
  }
  for (const auto& e : symplectic)
    for (int l = 0; l < e.mult; ++l) pt.blocks.push_back({e.atom.sp, e.atom.angle, 0});
  for (const auto& e : orthogonal)
    for (int l = 0; l < e.mult; ++l) pt.blocks.push_back({e.atom.sp, e.atom.angle, 0});
  return pt;
}

std::optional<OrthTriple> orth_triple_of(const TempPoint& pt, const std::optional<Rational>& chi_angle) {
  WDRep rho = parameter_of(pt);
  if (rho.empty() || !has_orthogonal(self_duality(rho))) return std::nullopt;
  if (chi_angle && determinant(rho) != mod1(*chi_angle)) return std::nullopt;
  OrthTriple t;
  for (const auto& [atom, mult] : rho.isotypic()) {
    switch (atom.type()) {
      case SelfDuality::orthogonal: t.orthogonal.push_back({atom, mult, atom.sp}); break;
      case SelfDuality::symplectic: t.symplectic.push_back({atom, mult, atom.sp}); break;
      default:
        if (atom.angle < atom.dual().angle) t.pairs.push_back({atom, mult, atom.sp});
        break;
    }
  }
  return t;
}

TripleConstants triple_constants(const OrthTriple& t) {
  TripleConstants k;
  k.P = 1;
  k.D = 1;
  k.W = 1;
  k.W_prime = 1;
  auto ipow = [](long base, long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
  };
  for (const auto& e : t.pairs) {
    long m = e.mult, n = e.mult;
    k.P *= ipow(e.dim, m + n);
    k.S += m + n;
    k.D *= ipow(e.dim, n);
    k.N += n;
    k.W *= factorial(m) * factorial(n);
    k.W_prime *= factorial(n);
  }
  for (const auto& e : t.symplectic) {
    if (e.mult % 2) throw InputError("odd multiplicity in the symplectic part");
    long p = e.mult;
    k.P *= ipow(e.dim, p);
    k.S += p;
    k.D *= ipow(e.dim, p / 2);
    k.N += p / 2;
    k.W *= factorial(p);
    k.W_prime *= factorial(p / 2) * ipow(2, p / 2);
  }
  for (const auto& e : t.orthogonal) {
    long q = e.mult;
    k.P *= ipow(e.dim, q);
    k.S += q;
    k.D *= ipow(e.dim, (q + 1) / 2);
    k.N += (q + 1) / 2;
    k.c += q % 2;
    k.W *= factorial(q);
    k.W_prime *= factorial(q / 2) * ipow(2, q / 2);
  }
  return k;
}

// ------------------------------------------------------ formal degrees

namespace {

void require_fd_parameter(const WDRep& sigma) {
  if (sigma.dim() == 0) throw PreconditionError("formal degree of the zero parameter");
  if (!has_orthogonal(self_duality(sigma))) throw PreconditionError("formal degree needs an orthogonal parameter");
}

}  // namespace

double formal_degree_rhs(const WDRep& sigma, const LocalFieldSpec& field) {
  require_fd_parameter(sigma);
  Complex g = gamma_factor(wedge2(sigma), field).regularized_value();
  return std::abs(g) / static_cast<double>(component_groups(sigma).s);
}

std::optional<QuadSurd> formal_degree_rhs_exact(const WDRep& sigma, const LocalFieldSpec& field) {
  require_fd_parameter(sigma);
  auto g = gamma_factor(wedge2(sigma), field).regularized_value_exact();
  if (!g) return std::nullopt;
  return g->magnitude() * QuadSurd::from_rational(field.p, Rational(1, component_groups(sigma).s));
}

WDRep adjoint_rep(const WDRep& phi) {
  SelfDuality t = self_duality(phi);
  if (has_orthogonal(t)) return wedge2(phi);
  if (t == SelfDuality::symplectic) return sym2(phi);
  return ad_M(phi);
}

long adjoint_component_order(const WDRep& phi) {
  SelfDuality t = self_duality(phi);
  if (has_orthogonal(t)) return component_groups(phi).s;
  if (t == SelfDuality::symplectic) {
    long k = 0;
    for (const auto& [atom, mult] : phi.isotypic()) k += atom.type() == SelfDuality::symplectic;
    return 1L << k;
  }
  return 1;
}

double hii_rhs(const WDRep& phi, long index_xstar, long deg_rho, const LocalFieldSpec& field) {
  if (phi.empty()) throw PreconditionError("empty parameter");
  if (index_xstar < 1 || deg_rho < 1) throw InputError("index and degree must be positive");
  SpectralFunction g = gamma_factor(adjoint_rep(phi), field);
  int ord = g.ord_zero_at_zero();
  if (ord != 0)
    throw PreconditionError("gamma(s, Ad) has order " + std::to_string(ord) + " at 0: parameter is not discrete");
  double v = std::abs(g.evaluate(Rational(0)));
  return static_cast<double>(deg_rho) * v / static_cast<double>(index_xstar * adjoint_component_order(phi));
}

}  // namespace planch
