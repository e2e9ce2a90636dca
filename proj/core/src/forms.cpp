#include "planch/forms.hpp"

#include <cmath>

#include "planch/errors.hpp"

namespace planch {

std::pair<QMatrix, QMatrix> split_sym_alt(const QMatrix& gram) {
  if (!gram.square()) throw InputError("Gram matrix must be square");
  QMatrix t = gram.transpose();
  return {gram + t, gram - t};
}

QMatrix ad_action(const QMatrix& m, const QMatrix& gram) {
  QMatrix mi = inverse(m);
  return mi.transpose() * gram * mi;
}

std::string OrbitLabel::str() const {
  switch (kind) {
    case OrbitKind::gamma_t: return "gamma_t(" + t->name() + ")";
    case OrbitKind::gamma_0: return "gamma_0";
    default: return "outside_sharp";
  }
}

bool OrbitLabel::operator==(const OrbitLabel& o) const {
  if (kind != o.kind) return false;
  if (kind != OrbitKind::gamma_t) return true;
  return t->index() == o.t->index();
}

std::vector<Rational> congruence_diagonal(const QMatrix& sym) {
  if (!sym.is_symmetric()) throw InputError("congruence diagonalization needs a symmetric matrix");
  QMatrix a = sym;
  const size_t n = a.rows();
  // simultaneous row/column operations keep the matrix symmetric
  auto add = [&](size_t dst, size_t src, const Rational& f) {
    for (size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
  };
  auto swap = [&](size_t i, size_t j) {
    for (size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  for (size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      size_t piv = k + 1;
      while (piv < n && a(piv, piv) == 0) ++piv;
      if (piv < n) {
        swap(k, piv);
      } else {
        size_t j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) continue;  // row k already zero
        add(k, j, Rational(1));  // a_kk becomes 2 a_kj
      }
    }
    for (size_t i = k + 1; i < n; ++i)
      if (a(i, k) != 0) add(i, k, -a(i, k) / a(k, k));
  }
  std::vector<Rational> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = a(i, i);
  return out;
}

namespace {

void require_nondegenerate(const QMatrix& gram) {
  if (!gram.square() || gram.rows() == 0) throw InputError("Gram matrix must be square and non-empty");
  if (det(gram) == 0) throw PreconditionError("bilinear form is degenerate");
}

}  // namespace

OrbitLabel classify_sharp(const QMatrix& gram, long p) {
  require_nondegenerate(gram);
  const size_t d = gram.rows();
  auto [bs, ba] = split_sym_alt(gram);
  OrbitLabel out;
  if (bs.is_zero()) {
    out.kind = d % 2 == 0 ? OrbitKind::gamma_0 : OrbitKind::outside_sharp;
    return out;
  }
  size_t max_alt = d % 2 == 0 ? d : d - 1;
  if (rank(bs) != 1 || rank(ba) != max_alt) return out;
  for (const auto& x : congruence_diagonal(bs))
    if (x != 0) {
      out.kind = OrbitKind::gamma_t;
      out.t = square_class(p, x);
      return out;
    }
  throw std::logic_error("rank-one symmetric matrix without a nonzero diagonal entry");
}

QMatrix standard_alternating(size_t n2) {
  if (n2 % 2) throw InputError("alternating form needs even size");
  size_t n = n2 / 2;
  QMatrix j(n2, n2);
  for (size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

QMatrix gamma_t_representative(const SquareClass& t, size_t d) {
  if (d < 1) throw InputError("dimension must be at least 1");
  Rational half = t.representative() / 2;
  QMatrix g(d, d);
  if (d % 2 == 0) {
    g = standard_alternating(d);
    g(0, 0) = half;
  } else {
    if (d > 1) g.set_block(0, 0, standard_alternating(d - 1));
    g(d - 1, d - 1) = half;
  }
  return g;
}

SquareClass disc_twisted(const QMatrix& gram, long p) {
  require_nondegenerate(gram);
  return square_class(p, det(gram));
}

Poly char_poly_twisted(const QMatrix& gram) {
  require_nondegenerate(gram);
  return char_poly(inverse(gram.transpose()) * gram);
}

Poly correspond_char_poly(const Poly& chi, Flavor flavor) {
  if (!chi.is_monic()) throw InputError("characteristic polynomial must be monic");
  if (chi.degree() % 2) throw InputError("characteristic polynomial must have even degree");
  if (flavor == Flavor::orthogonal_even) return chi.negated_variable();
  return chi * Poly({Rational(-1), Rational(1)});
}

WeylDiscriminant weyl_discriminant_twisted(const QMatrix& gram, const LocalFieldSpec& field) {
  require_nondegenerate(gram);
  const size_t d = gram.rows(), n = d * d;
  QMatrix gi = inverse(gram);
  // column (i,j) holds vec(θ(E_ij)); θ(E_ij) = -Γ^{-1} E_ji Γ has entries -gi(a,j) Γ(i,b)
  QMatrix one_minus(n, n);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b) one_minus(a * d + b, i * d + j) = gi(a, j) * gram(i, b);
  for (size_t k = 0; k < n; ++k) one_minus(k, k) += 1;
  WeylDiscriminant out;
  out.fixed_dim = nullity(one_minus);
  Poly cp = char_poly(one_minus);
  size_t mult = 0;
  while (cp[mult] == 0) ++mult;
  if (out.fixed_dim != d / 2 || mult != out.fixed_dim)
    throw PreconditionError("form is not regular: fixed space of dimension " + std::to_string(out.fixed_dim) +
                            " (expected " + std::to_string(d / 2) + "), eigenvalue 0 of multiplicity " +
                            std::to_string(mult));
  out.product = cp[mult] * (((n - mult) % 2) ? -1 : 1);
  out.valuation = valuation(field, PadicScalar{out.product});
  out.value = std::pow(static_cast<double>(field.q()), -static_cast<double>(out.valuation));
  return out;
}

QuadSpace QuadSpace::make(const QMatrix& gram, long p) {
  if (!gram.is_symmetric()) throw InputError("quadratic space needs a symmetric Gram matrix");
  if (gram.rows() % 2) throw InputError("quadratic space must have even dimension");
  Rational dt = det(gram);
  if (dt == 0) throw PreconditionError("quadratic form is degenerate");
  long n = static_cast<long>(gram.rows() / 2);
  return QuadSpace{gram, square_class(p, n % 2 ? -dt : dt)};
}

// ------------------------------------------------------------ SO(2d+1)

OddSOEmbedding build_odd_so(size_t d) {
  if (d < 1) throw InputError("d must be at least 1");
  OddSOEmbedding e;
  e.d = d;
  e.Q = QMatrix(2 * d + 1, 2 * d + 1);
  e.Q.set_block(0, d + 1, QMatrix::identity(d));
  e.Q.set_block(d + 1, 0, QMatrix::identity(d));
  e.Q(d, d) = 1;
  return e;
}

std::string group_violation(const OddSOEmbedding& emb, const QMatrix& g) {
  size_t n = 2 * emb.d + 1;
  if (g.rows() != n || g.cols() != n) return "matrix is not of size " + std::to_string(n);
  if (g.transpose() * emb.Q * g != emb.Q) return "g^T Q g != Q";
  if (det(g) != 1) return "det g != 1";
  return "";
}

bool in_G(const OddSOEmbedding& emb, const QMatrix& g) { return group_violation(emb, g).empty(); }

namespace {

void require_in_G(const OddSOEmbedding& emb, const QMatrix& g) {
  std::string v = group_violation(emb, g);
  if (!v.empty()) throw PreconditionError("not an element of SO(U,Q): " + v);
}

}  // namespace

QMatrix b_of_g(const OddSOEmbedding& emb, const QMatrix& g) {
  require_in_G(emb, g);
  // Q(gx, y) for x, y ∈ V only sees the V* component of gx
  return g.block(emb.d + 1, 0, emb.d, emb.d).transpose();
}

bool in_G_prime(const OddSOEmbedding& emb, const QMatrix& g) { return det(b_of_g(emb, g)) != 0; }

QMatrix nbar_element(const OddSOEmbedding& emb, const QMatrix& alpha, const QMatrix& antisym) {
  const size_t d = emb.d;
  if (alpha.rows() != 1 || alpha.cols() != d) throw InputError("alpha must be a 1 x d row");
  if (antisym.rows() != d || !antisym.is_antisymmetric()) throw InputError("A must be antisymmetric d x d");
  QMatrix beta = alpha.transpose() * alpha * Rational(-1, 2) + antisym;
  QMatrix u = QMatrix::identity(2 * d + 1);
  u.set_block(d, 0, alpha);
  u.set_block(d + 1, 0, beta);
  u.set_block(d + 1, d, -alpha.transpose());
  return u;
}

bool in_nbar_shape(const OddSOEmbedding& emb, const QMatrix& g) {
  const size_t n = 2 * emb.d + 1;
  if (g.rows() != n || g.cols() != n) return false;
  auto range = [&](size_t i) { return i < emb.d ? 0 : (i == emb.d ? 1 : 2); };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int bi = range(i), bj = range(j);
      if (bi == bj && g(i, j) != (i == j ? 1 : 0)) return false;
      if (bi < bj && g(i, j) != 0) return false;
    }
  return true;
}

QMatrix ell_of(const OddSOEmbedding& emb, const QMatrix& ubar) { return ubar.block(emb.d, 0, 1, emb.d); }

std::optional<BruhatFactors> m_tilde_of(const OddSOEmbedding& emb, const QMatrix& ubar) {
  require_in_G(emb, ubar);
  if (!in_nbar_shape(emb, ubar)) throw PreconditionError("element is not in the unipotent radical N-bar");
  const size_t d = emb.d;
  QMatrix alpha = ell_of(emb, ubar);
  QMatrix beta = ubar.block(d + 1, 0, d, d);
  if (det(beta) == 0) return std::nullopt;
  QMatrix bi = inverse(beta);
  // ε = 1 + α β^{-1} α^T is ±1 for ū ∈ G
  Rational eps = 1 + (alpha * bi * alpha.transpose())(0, 0);
  if (eps != 1 && eps != -1) throw std::logic_error("Bruhat factorization: middle entry is not +-1");
  QMatrix a2 = -(bi * alpha.transpose());  // d×1
  QMatrix c2 = alpha * bi * (-eps);         // 1×d
  QMatrix a1 = a2 * (-eps);
  QMatrix c1 = alpha * bi;
  QMatrix x = a2 * c2 - bi;

  auto n_elem = [&](const QMatrix& a, const QMatrix& c, const QMatrix& b) {
    QMatrix u = QMatrix::identity(2 * d + 1);
    u.set_block(0, d, a);
    u.set_block(0, d + 1, b);
    u.set_block(d, d + 1, c);
    return u;
  };
  BruhatFactors f;
  f.u1 = n_elem(a1, c1, bi);
  f.u2 = n_elem(a2, c2, bi);
  f.w = QMatrix(2 * d + 1, 2 * d + 1);
  f.w.set_block(0, d + 1, x);
  f.w(d, d) = eps;
  f.w.set_block(d + 1, 0, beta);
  if (f.u1 * f.w * f.u2 != ubar) throw std::logic_error("Bruhat factorization does not reproduce the input");
  f.m_tilde = b_of_g(emb, f.w);
  return f;
}

QMatrix closure_family(size_t d, const Rational& lambda) {
  if (d % 2) throw InputError("the closure family exists for even d only");
  if (lambda == 0) throw InputError("lambda must be nonzero");
  QMatrix g = standard_alternating(d);
  g(0, 0) = Rational(-1, 2);
  QMatrix a = QMatrix::identity(d);
  a(0, 0) = lambda;
  a(d / 2, d / 2) = 1 / lambda;
  return a.transpose() * g * a;
}

QMatrix closure_limit(size_t d) { return standard_alternating(d); }

std::string i_chi_label(const QuadraticCharacter& chi) {
  std::string s;
  long p = chi.prime();
  for (int i = 0; i < SquareClass::group_order(p); ++i) {
    SquareClass t = SquareClass::from_index(p, i);
    int sign = char_eval(chi, -t.representative());
    s += s.empty() ? (sign < 0 ? "-" : "") : (sign < 0 ? " - " : " + ");
    s += "O(gamma_t(" + t.name() + "), f)";
  }
  return s;
}

}  // namespace planch
