#pragma once

// Bilinear forms on V = F^d, the twisted space of nondegenerate forms under
// Ad(m)Γ = m^{-T} Γ m^{-1}, orbit labels, discriminants, twisted characteristic
// polynomials, Weyl discriminants and the embedding into SO(2d+1).
//
// A form is stored by its Gram matrix Γ: B(x, y) = x^T Γ y. Exact linear algebra
// over Q; square classes are those of Q_p.

#include <optional>
#include <string>
#include <vector>

#include "planch/field.hpp"
#include "planch/field_spec.hpp"
#include "planch/matrix.hpp"

namespace planch {

/// (Γ + Γ^T, Γ - Γ^T)
std::pair<QMatrix, QMatrix> split_sym_alt(const QMatrix& gram);

/// Ad(m) on forms: m^{-T} Γ m^{-1}.
QMatrix ad_action(const QMatrix& m, const QMatrix& gram);

enum class OrbitKind { gamma_t, gamma_0, outside_sharp };

struct OrbitLabel {
  OrbitKind kind = OrbitKind::outside_sharp;
  std::optional<SquareClass> t;

  std::string str() const;
  bool operator==(const OrbitLabel& o) const;
};

/// Diagonal entries of D with P^T S P = D for symmetric S (exact congruence).
std::vector<Rational> congruence_diagonal(const QMatrix& sym);

/// Throws PreconditionError for degenerate Γ.
OrbitLabel classify_sharp(const QMatrix& gram, long p);

/// Standard alternating matrix [[0, I], [-I, 0]] of even size.
QMatrix standard_alternating(size_t n2);
/// d even: J + (t/2) E_11; d odd: J_{d-1} ⊕ [t/2], with t the class representative.
QMatrix gamma_t_representative(const SquareClass& t, size_t d);

SquareClass disc_twisted(const QMatrix& gram, long p);

/// det(T - Γ^{-T} Γ)
Poly char_poly_twisted(const QMatrix& gram);

enum class Flavor { orthogonal_even, symplectic_odd };
/// orthogonal_even: χ(-T); symplectic_odd: χ(T)(T-1). Input must be monic of even degree.
Poly correspond_char_poly(const Poly& chi, Flavor flavor);

struct WeylDiscriminant {
  size_t fixed_dim = 0;    // dim of the fixed space of θ_Γ on gl_d
  Rational product;        // product of the nonzero eigenvalues of 1 - θ_Γ
  long valuation = 0;      // v_p(product)
  double value = 1;        // q^{-valuation}
};
/// θ_Γ(X) = -Γ^{-1} X^T Γ. Throws PreconditionError unless the fixed space has
/// dimension floor(d/2) and 1 - θ_Γ acts semisimply at eigenvalue 0.
WeylDiscriminant weyl_discriminant_twisted(const QMatrix& gram, const LocalFieldSpec& field);

/// Quadratic space of even dimension 2n with disc = class of (-1)^n det.
struct QuadSpace {
  QMatrix gram;
  SquareClass disc;

  static QuadSpace make(const QMatrix& gram, long p);
};

// ------------------------------------------------------------ SO(2d+1)

/// U = V ⊕ L ⊕ V*, Q((x,l,x*),(y,m,y*)) = <x,y*> + <y,x*> + l m.
struct OddSOEmbedding {
  size_t d = 0;
  QMatrix Q;
};
OddSOEmbedding build_odd_so(size_t d);

/// Empty string when g^T Q g = Q and det g = 1, otherwise the violated identity.
std::string group_violation(const OddSOEmbedding& emb, const QMatrix& g);
bool in_G(const OddSOEmbedding& emb, const QMatrix& g);
/// Gram matrix of B_g(x, y) = Q(gx, y) on V.
QMatrix b_of_g(const OddSOEmbedding& emb, const QMatrix& g);
bool in_G_prime(const OddSOEmbedding& emb, const QMatrix& g);

/// ū with rows (I,0,0), (α,1,0), (β,-α^T,I), β = -α^T α/2 + A for a row α and antisymmetric A.
QMatrix nbar_element(const OddSOEmbedding& emb, const QMatrix& alpha, const QMatrix& antisym);
/// True when g has the block shape of N̄ (unipotent lower block-triangular).
bool in_nbar_shape(const OddSOEmbedding& emb, const QMatrix& g);
/// ℓ_ū as a 1×d row: the V → L block of ū.
QMatrix ell_of(const OddSOEmbedding& emb, const QMatrix& ubar);

struct BruhatFactors {
  QMatrix u1, w, u2;  // ū = u1 · w · u2 with u1, u2 ∈ N and w ∈ Norm_G(M) \ M
  QMatrix m_tilde;    // Gram matrix of B_w = B_ū
};
/// None iff B_ū is degenerate. Throws PreconditionError if ū ∉ N̄ ∩ G.
std::optional<BruhatFactors> m_tilde_of(const OddSOEmbedding& emb, const QMatrix& ubar);

/// For d even: a_λ^T γ_{-1} a_λ with γ_{-1} = J - E_11/2 and a_λ = diag(λ on e_1, 1/λ on f_1, 1 else).
/// Tends to J (an alternating form, class gamma_0) as λ -> 0.
QMatrix closure_family(size_t d, const Rational& lambda);
QMatrix closure_limit(size_t d);

/// Symbolic sum over the gamma_t orbits weighted by χ(-t).
std::string i_chi_label(const QuadraticCharacter& chi);

}  // namespace planch
