#include "planch/matrix.hpp"

#include "planch/errors.hpp"

namespace planch {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != c_) throw InputError("ragged matrix");
    for (const auto& x : row) a_.push_back(x);
  }
}

QMatrix QMatrix::identity(size_t n) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  size_t c = rows.empty() ? 0 : rows.front().size();
  QMatrix m(rows.size(), c);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix");
    for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw PreconditionError("matrix size mismatch in +");
  QMatrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw PreconditionError("matrix size mismatch in -");
  QMatrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (c_ != o.r_) throw PreconditionError("matrix size mismatch in *");
  QMatrix m(r_, o.c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t k = 0; k < c_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
    }
  return m;
}

QMatrix QMatrix::operator*(const Rational& s) const {
  QMatrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool QMatrix::is_symmetric() const { return square() && *this == transpose(); }
bool QMatrix::is_antisymmetric() const { return square() && *this == -transpose(); }

QMatrix QMatrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  if (r0 + nr > r_ || c0 + nc > c_) throw PreconditionError("block out of range");
  QMatrix b(nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void QMatrix::set_block(size_t r0, size_t c0, const QMatrix& b) {
  if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw PreconditionError("block out of range");
  for (size_t i = 0; i < b.r_; ++i)
    for (size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::string QMatrix::str() const {
  std::string s = "[";
  for (size_t i = 0; i < r_; ++i) {
    s += i ? ", [" : "[";
    for (size_t j = 0; j < c_; ++j) s += (j ? ", " : "") + to_string((*this)(i, j));
    s += "]";
  }
  return s + "]";
}

namespace {

// Row echelon form in place; returns the rank and accumulates the determinant sign/pivots.
size_t eliminate(QMatrix& m, Rational* det_out) {
  size_t rank = 0;
  Rational d = 1;
  for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    size_t piv = rank;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) {
      d = 0;
      continue;
    }
    if (piv != rank) {
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
      d = -d;
    }
    Rational p = m(rank, col);
    d *= p;
    for (size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / p;
      for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  if (det_out) *det_out = rank == m.rows() ? d : Rational(0);
  return rank;
}

}  // namespace

Rational det(const QMatrix& m) {
  if (!m.square()) throw PreconditionError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  QMatrix w = m;
  Rational d;
  eliminate(w, &d);
  return d;
}

size_t rank(const QMatrix& m) {
  QMatrix w = m;
  return eliminate(w, nullptr);
}

size_t nullity(const QMatrix& m) { return m.cols() - rank(m); }

QMatrix inverse(const QMatrix& m) {
  if (!m.square()) throw PreconditionError("inverse of a non-square matrix");
  const size_t n = m.rows();
  QMatrix w(n, 2 * n);
  w.set_block(0, 0, m);
  w.set_block(0, n, QMatrix::identity(n));
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && w(piv, col) == 0) ++piv;
    if (piv == n) throw PreconditionError("matrix is singular");
    if (piv != col)
      for (size_t j = 0; j < 2 * n; ++j) std::swap(w(piv, j), w(col, j));
    Rational p = w(col, col);
    for (size_t j = 0; j < 2 * n; ++j) w(col, j) /= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || w(i, col) == 0) continue;
      Rational f = w(i, col);
      for (size_t j = 0; j < 2 * n; ++j) w(i, j) -= f * w(col, j);
    }
  }
  return w.block(0, n, n, n);
}

// ------------------------------------------------------------ polynomials

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Rational& c, size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::power_of_linear(const Rational& root, size_t k) {
  Poly out({Rational(1)});
  Poly lin({-root, Rational(1)});
  for (size_t i = 0; i < k; ++i) out = out * lin;
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= s;
  return Poly(std::move(v));
}

Poly Poly::negated_variable() const {
  std::vector<Rational> v = c_;
  for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return Poly(std::move(v));
}

Rational Poly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    bool unit = a == 1;
    if (i == 0 || !unit) s += to_string(a);
    if (i > 0) {
      if (!unit) s += "*";
      s += "T";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

Poly char_poly(const QMatrix& m) {
  if (!m.square()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  const size_t n = m.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix mk(n, n);
  for (size_t k = 1; k <= n; ++k) {
    mk = m * mk + QMatrix::identity(n) * c[n - k + 1];
    QMatrix am = m * mk;
    Rational tr = 0;
    for (size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return Poly(std::move(c));
}

}  // namespace planch
