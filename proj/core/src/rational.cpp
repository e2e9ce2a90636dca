#include "planch/rational.hpp"

#include <cctype>
#include <cmath>

#include "planch/errors.hpp"

namespace planch {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_signed_digits(num) || !is_signed_digits(den) || den.front() == '-' || den.front() == '+')
    throw InputError("not a rational number: '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer dn{std::string(den)};
  if (dn == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(n), dn);
  r.canonicalize();
  return r;
}

Rational ratio(const Integer& n, const Integer& d) {
  if (d == 0) throw InputError("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational mod1(const Rational& r) {
  Rational out = r - Rational(floor(r));
  out.canonicalize();
  return out;
}

long valuation(const Integer& n, long p) {
  if (n == 0) throw PreconditionError("valuation undefined for zero");
  Integer m = abs(n);
  long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    m /= p;
    ++v;
  }
  return v;
}

long valuation(const Rational& r, long p) {
  if (r == 0) throw PreconditionError("valuation undefined for zero");
  return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw PreconditionError("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational out(1);
  Rational b = base;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1u) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

double to_double(const Rational& r) { return r.get_d(); }

Rational approximate(double x, long max_den) {
  if (!std::isfinite(x)) throw InputError("cannot approximate a non-finite value");
  long sign = x < 0 ? -1 : 1;
  double y = std::fabs(x);
  // Convergents h/k of the continued fraction of y.
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(y);
    Integer ai(static_cast<unsigned long>(a));
    Integer h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    double frac = y - a;
    if (frac < 1e-15) break;
    y = 1.0 / frac;
  }
  Rational r(sign * h1, k1);
  r.canonicalize();
  return r;
}

}  // namespace planch
