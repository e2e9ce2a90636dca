#pragma once

// Small dense matrices and polynomials over Q with exact arithmetic.

#include <initializer_list>
#include <string>
#include <vector>

#include "planch/rational.hpp"

namespace planch {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, Rational(0)) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static QMatrix identity(size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  Rational& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  QMatrix transpose() const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const Rational& s) const;
  QMatrix operator-() const { return *this * Rational(-1); }
  bool operator==(const QMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const QMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;

  /// Copy of rows [r0, r0+nr) and columns [c0, c0+nc).
  QMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  void set_block(size_t r0, size_t c0, const QMatrix& b);

  std::string str() const;

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

Rational det(const QMatrix& m);
size_t rank(const QMatrix& m);
/// Throws PreconditionError when singular.
QMatrix inverse(const QMatrix& m);
/// Dimension of the kernel.
size_t nullity(const QMatrix& m);

/// Dense polynomial, coefficient i multiplies T^i; trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly monomial(const Rational& c, size_t degree);
  /// (T - root)^k
  static Poly power_of_linear(const Rational& root, size_t k);

  const std::vector<Rational>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational operator[](size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Poly operator+(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// p(-T)
  Poly negated_variable() const;
  Rational evaluate(const Rational& x) const;

  /// e.g. "T^2 + 2*T + 1"
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// det(T·I - m) by the Faddeev-LeVerrier recursion.
Poly char_poly(const QMatrix& m);

}  // namespace planch
