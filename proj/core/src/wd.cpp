#include "planch/wd.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "planch/errors.hpp"

namespace planch {

std::string to_string(SelfDuality t) {
  switch (t) {
    case SelfDuality::none: return "none";
    case SelfDuality::orthogonal: return "orthogonal";
    case SelfDuality::symplectic: return "symplectic";
    case SelfDuality::orthogonal_and_symplectic: return "orthogonal_and_symplectic";
  }
  return "none";
}

WDAtom::WDAtom(const Rational& a, int m) : angle(mod1(a)), sp(m) {
  if (m < 1) throw InputError("Sp(m) needs m >= 1");
}

bool WDAtom::is_self_dual() const { return mod1(2 * angle) == 0; }

SelfDuality WDAtom::type() const {
  if (!is_self_dual()) return SelfDuality::none;
  return sp % 2 ? SelfDuality::orthogonal : SelfDuality::symplectic;
}

WDRep::WDRep(std::vector<WDAtom> atoms) : atoms_(std::move(atoms)) { std::sort(atoms_.begin(), atoms_.end()); }

int WDRep::dim() const {
  int d = 0;
  for (const auto& a : atoms_) d += a.sp;
  return d;
}

int WDRep::multiplicity(const WDAtom& a) const {
  return static_cast<int>(std::count(atoms_.begin(), atoms_.end(), a));
}

std::vector<std::pair<WDAtom, int>> WDRep::isotypic() const {
  std::vector<std::pair<WDAtom, int>> out;
  for (const auto& a : atoms_) {
    if (!out.empty() && out.back().first == a)
      ++out.back().second;
    else
      out.emplace_back(a, 1);
  }
  return out;
}

WDRep WDRep::operator+(const WDRep& o) const {
  std::vector<WDAtom> v = atoms_;
  v.insert(v.end(), o.atoms_.begin(), o.atoms_.end());
  return WDRep(std::move(v));
}

std::string WDRep::str() const {
  if (atoms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < atoms_.size(); ++i) {
    if (i) s += " + ";
    s += to_string(atoms_[i].angle) + "*Sp(" + std::to_string(atoms_[i].sp) + ")";
  }
  return s;
}

// ------------------------------------------------------------ SL2 rules

std::vector<int> sp_tensor(int m, int n) {
  if (m < 1 || n < 1) throw InputError("Sp dimensions must be >= 1");
  std::vector<int> out;
  for (int j = 0; j < std::min(m, n); ++j) out.push_back(m + n - 1 - 2 * j);
  return out;
}

std::vector<int> sp_sym2(int m) {
  if (m < 1) throw InputError("Sp dimension must be >= 1");
  std::vector<int> out;
  for (int v = 2 * m - 1; v >= 1; v -= 4) out.push_back(v);
  return out;
}

std::vector<int> sp_wedge2(int m) {
  if (m < 1) throw InputError("Sp dimension must be >= 1");
  std::vector<int> out;
  for (int v = 2 * m - 3; v >= 1; v -= 4) out.push_back(v);
  return out;
}

// --------------------------------------------------------- rep calculus

WDRep dual(const WDRep& rho) {
  std::vector<WDAtom> v;
  for (const auto& a : rho.atoms()) v.push_back(a.dual());
  return WDRep(std::move(v));
}

namespace {

void append_tensor(std::vector<WDAtom>& out, const WDAtom& a, const WDAtom& b) {
  for (int m : sp_tensor(a.sp, b.sp)) out.emplace_back(a.angle + b.angle, m);
}

}  // namespace

WDRep tensor(const WDRep& a, const WDRep& b) {
  std::vector<WDAtom> v;
  for (const auto& x : a.atoms())
    for (const auto& y : b.atoms()) append_tensor(v, x, y);
  return WDRep(std::move(v));
}

WDRep sym2(const WDRep& rho) {
  const auto& at = rho.atoms();
  std::vector<WDAtom> v;
  for (size_t i = 0; i < at.size(); ++i) {
    for (int m : sp_sym2(at[i].sp)) v.emplace_back(2 * at[i].angle, m);
    for (size_t j = i + 1; j < at.size(); ++j) append_tensor(v, at[i], at[j]);
  }
  return WDRep(std::move(v));
}

WDRep wedge2(const WDRep& rho) {
  const auto& at = rho.atoms();
  std::vector<WDAtom> v;
  for (size_t i = 0; i < at.size(); ++i) {
    for (int m : sp_wedge2(at[i].sp)) v.emplace_back(2 * at[i].angle, m);
    for (size_t j = i + 1; j < at.size(); ++j) append_tensor(v, at[i], at[j]);
  }
  return WDRep(std::move(v));
}

WDRep ad_M(const WDRep& rho) { return tensor(rho, dual(rho)); }

WDRep ad_M_over_A(const WDRep& rho) {
  if (rho.empty()) throw PreconditionError("ad_M_over_A of the zero representation");
  std::vector<WDAtom> v = ad_M(rho).atoms();
  auto it = std::find(v.begin(), v.end(), WDAtom(Rational(0), 1));
  if (it == v.end()) throw std::logic_error("ad_M without a trivial constituent");
  v.erase(it);
  return WDRep(std::move(v));
}

// ------------------------------------------------------------- factors

SpectralFunction L_factor(const WDRep& rho, const LocalFieldSpec& field) {
  SpectralFunction out(field);
  for (const auto& a : rho.atoms()) out *= SpectralFunction::factor(field, a.angle, ratio(a.sp - 1, 2), true);
  return out;
}

SpectralFunction eps_factor(const WDRep& rho, const LocalFieldSpec& field) {
  // eps(s, chi ⊗ Sp(m)) = eps(s, chi)^m · (-chi(pi) q^{-s})^{m-1} · q^{(m-1)/2},
  // eps(s, chi) = chi(pi)^n q^{n(1/2-s)} for unramified chi.
  SpectralFunction out(field);
  for (const auto& a : rho.atoms()) {
    long e = field.psi_level * a.sp + a.sp - 1;
    Rational phase = a.angle * e + ratio(a.sp - 1, 2);
    out *= SpectralFunction::monomial(field, SpectralScalar::unit_times_q_power(field, phase, ratio(e, 2)),
                                      Rational(e));
  }
  return out;
}

SpectralFunction gamma_factor(const WDRep& rho, const LocalFieldSpec& field) {
  return eps_factor(rho, field) * L_factor(dual(rho), field).reflected() * L_factor(rho, field).inverse();
}

// -------------------------------------------------------- self-duality

SelfDuality self_duality(const WDRep& rho) {
  if (dual(rho) != rho) return SelfDuality::none;
  bool orth = true, symp = true;
  for (const auto& [atom, mult] : rho.isotypic()) {
    SelfDuality t = atom.type();
    if (t == SelfDuality::symplectic && mult % 2) orth = false;
    if (t == SelfDuality::orthogonal && mult % 2) symp = false;
  }
  if (orth && symp) return SelfDuality::orthogonal_and_symplectic;
  if (orth) return SelfDuality::orthogonal;
  if (symp) return SelfDuality::symplectic;
  return SelfDuality::none;
}

Rational determinant(const WDRep& rho) {
  Rational d = 0;
  for (const auto& a : rho.atoms()) d += a.sp * a.angle;
  return mod1(d);
}

ComponentGroups component_groups(const WDRep& rho) {
  if (!has_orthogonal(self_duality(rho))) throw PreconditionError("component_groups needs an orthogonal parameter");
  int k = 0;
  bool odd = false;
  for (const auto& [atom, mult] : rho.isotypic()) {
    if (atom.type() != SelfDuality::orthogonal) continue;
    ++k;
    if (atom.sp % 2) odd = true;
  }
  ComponentGroups g;
  g.s_plus = 1L << k;
  g.s = (k > 0 && odd) ? (1L << (k - 1)) : (1L << k);
  g.fiber_ratio = static_cast<int>(2 * g.s / g.s_plus);
  return g;
}

// -------------------------------------------------------------- parsing

namespace {

class RepParser {
 public:
  explicit RepParser(std::string_view t) : t_(t) {}

  WDRep parse() {
    std::vector<WDAtom> atoms;
    skip();
    if (pos_ == t_.size()) fail("empty representation");
    atoms.push_back(term());
    skip();
    while (pos_ < t_.size()) {
      expect('+');
      atoms.push_back(term());
      skip();
    }
    return WDRep(std::move(atoms));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("rep syntax error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= t_.size() || t_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool at_sp() {
    skip();
    return t_.substr(pos_, 3) == "Sp(";
  }
  int sp() {
    pos_ += 3;
    skip();
    size_t start = pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    if (start == pos_) fail("expected Sp dimension");
    int m = std::stoi(std::string(t_.substr(start, pos_ - start)));
    expect(')');
    if (m < 1) fail("Sp dimension must be >= 1");
    return m;
  }
  Rational angle() {
    skip();
    size_t start = pos_;
    if (pos_ < t_.size() && (t_[pos_] == '-' || t_[pos_] == '+')) ++pos_;
    while (pos_ < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '/' ||
                                std::isspace(static_cast<unsigned char>(t_[pos_])))) {
      if (std::isspace(static_cast<unsigned char>(t_[pos_]))) {
        size_t k = pos_;
        while (k < t_.size() && std::isspace(static_cast<unsigned char>(t_[k]))) ++k;
        if (k < t_.size() && (t_[k] == '/' || (pos_ > start && t_[pos_ - 1] == '/'))) {
          pos_ = k;
          continue;
        }
        break;
      }
      ++pos_;
    }
    if (start == pos_) fail("expected angle");
    try {
      return parse_rational(t_.substr(start, pos_ - start));
    } catch (const InputError&) {
      pos_ = start;
      fail("malformed angle");
    }
  }
  WDAtom term() {
    if (at_sp()) return WDAtom(Rational(0), sp());
    Rational a = angle();
    skip();
    if (pos_ < t_.size() && t_[pos_] == '*') {
      ++pos_;
      if (!at_sp()) fail("expected Sp(m) after '*'");
      return WDAtom(a, sp());
    }
    return WDAtom(a, 1);
  }

  std::string_view t_;
  size_t pos_ = 0;
};

}  // namespace

WDRep parse_rep(std::string_view text) { return RepParser(text).parse(); }

}  // namespace planch
