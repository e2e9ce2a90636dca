#include "planch/limit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "planch/errors.hpp"
#include "planch/field.hpp"
#include "planch/wd.hpp"

namespace planch {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

// ------------------------------------------------------------ test functions

TestFunction TestFunction::constant(double c) {
  TestFunction f;
  f.kind_ = "constant";
  f.c0_ = c;
  return f;
}

TestFunction TestFunction::trig(double c0, std::vector<Term> terms, bool symmetrize) {
  TestFunction f;
  f.kind_ = "trig";
  f.c0_ = c0;
  f.terms_ = std::move(terms);
  f.symmetrize_ = symmetrize;
  for (const auto& t : f.terms_)
    if (t.block < -1) throw InputError("trig term block index must be >= -1");
  return f;
}

TestFunction TestFunction::gaussian(double amplitude, double sigma, double center, int modes) {
  if (!(sigma > 0)) throw InputError("gaussian width must be positive");
  if (modes < 0 || modes > 512) throw InputError("gaussian mode count must lie in [0, 512]");
  TestFunction f;
  f.kind_ = "gaussian";
  f.c0_ = amplitude;
  f.sigma_ = sigma;
  f.center_ = center;
  f.modes_ = modes;
  return f;
}

double TestFunction::operator()(const std::vector<int>& k, const std::vector<double>& v) const {
  if (kind_ == "constant") return c0_;
  if (kind_ == "gaussian") {
    double total = 0;
    for (double x : v) {
      double g = 1;
      for (int j = 1; j <= modes_; ++j)
        g += 2 * std::exp(-0.5 * kTwoPi * kTwoPi * sigma_ * sigma_ * j * j) * std::cos(kTwoPi * j * (x - center_));
      total += g;
    }
    return c0_ * total;
  }
  double total = c0_;
  const int S = static_cast<int>(v.size());
  for (const auto& t : terms_) {
    auto wave = [&](int b) { return std::cos(kTwoPi * (t.freq * v[static_cast<size_t>(b)] + t.phase)); };
    if (t.block == -1) {
      for (int b = 0; b < S; ++b) total += t.coef * wave(b);
      continue;
    }
    if (t.block >= S) throw InputError("trig term refers to block " + std::to_string(t.block) + " of " + std::to_string(S));
    if (!symmetrize_) {
      total += t.coef * wave(t.block);
      continue;
    }
    // averaging over size-preserving permutations = averaging over blocks of the same size
    double sum = 0;
    int count = 0;
    for (int b = 0; b < S; ++b)
      if (k[static_cast<size_t>(b)] == k[static_cast<size_t>(t.block)]) {
        sum += wave(b);
        ++count;
      }
    total += t.coef * sum / count;
  }
  return total;
}

std::vector<std::vector<int>> size_preserving_permutations(const std::vector<int>& k, size_t limit) {
  std::vector<int> idx(k.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (size_t i = 0; i < k.size() && ok; ++i) ok = k[i] == k[static_cast<size_t>(idx[i])];
    if (ok) {
      out.push_back(idx);
      if (out.size() >= limit) break;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

void TestFunction::check_invariance(const std::vector<int>& k, unsigned seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto perms = size_preserving_permutations(k, 5040);
  for (int trial = 0; trial < 16; ++trial) {
    std::vector<double> v(k.size());
    for (auto& x : v) x = unif(rng);
    double base = (*this)(k, v);
    for (const auto& p : perms) {
      std::vector<double> w(v.size());
      for (size_t i = 0; i < v.size(); ++i) w[i] = v[static_cast<size_t>(p[i])];
      double other = (*this)(k, w);
      if (std::abs(other - base) > 1e-12 * std::max(1.0, std::abs(base)))
        throw InputError("test function is not invariant under block permutations");
    }
  }
}

// ------------------------------------------------------------ torus model

namespace {

struct Form {
  std::vector<long> c;  // coefficients on the free coordinates
  double r = 0;
};

struct Model {
  LocalFieldSpec field;
  double q = 0, L = 0, n = 0, gstar1 = 0;
  int d = 0, S = 0, D = 0, dep = -1;
  std::vector<int> k;
  std::vector<Rational> u;
  std::vector<double> ud;
  std::vector<int> free_blocks;
  std::vector<Form> poles;
  long covering = 1;
  Complex ad_const = 1;

  Complex gamma(double s, double a, int m) const {
    double e = n * m + m - 1;
    Complex eps = turn(a * e + 0.5 * (m - 1)) * std::pow(q, e * (0.5 - s));
    Complex al = turn(a);
    Complex num = 1.0 - al * std::pow(q, -s - 0.5 * (m - 1));
    Complex den = 1.0 - std::conj(al) * std::pow(q, -(1 - s) - 0.5 * (m - 1));
    return eps * num / den;
  }

  Form block_form(int b) const {
    Form f;
    f.c.assign(static_cast<size_t>(D), 0);
    f.r = ud[static_cast<size_t>(b)];
    if (b == dep) {
      for (int i = 0; i < D; ++i) f.c[static_cast<size_t>(i)] = -k[static_cast<size_t>(free_blocks[static_cast<size_t>(i)])];
    } else {
      auto it = std::find(free_blocks.begin(), free_blocks.end(), b);
      f.c[static_cast<size_t>(it - free_blocks.begin())] = 1;
    }
    return f;
  }

  std::vector<double> angles(const std::vector<double>& x) const {
    std::vector<double> v(static_cast<size_t>(S));
    double dep_twist = 0;
    for (int i = 0; i < D; ++i) {
      int b = free_blocks[static_cast<size_t>(i)];
      v[static_cast<size_t>(b)] = ud[static_cast<size_t>(b)] + x[static_cast<size_t>(i)];
      dep_twist -= k[static_cast<size_t>(b)] * x[static_cast<size_t>(i)];
    }
    if (dep >= 0) v[static_cast<size_t>(dep)] = ud[static_cast<size_t>(dep)] + dep_twist;
    return v;
  }

  // Phi · gamma(s, Sym2)^{-1} · gamma*(Ad_{M/A}) at absolute block angles v.
  Complex lhs_kernel(const TestFunction& phi, double s, const std::vector<double>& v) const {
    double ph = phi(k, v);
    if (ph == 0) return 0;
    Complex val = ph * ad_const;
    for (int b = 0; b < S; ++b) {
      int kb = k[static_cast<size_t>(b)];
      double vb = v[static_cast<size_t>(b)];
      for (int m : sp_sym2(kb)) val /= gamma(s, 2 * vb, m);
      for (int c = b + 1; c < S; ++c) {
        int kc = k[static_cast<size_t>(c)];
        double vc = v[static_cast<size_t>(c)];
        for (int m : sp_tensor(kb, kc)) {
          val /= gamma(s, vb + vc, m);
          val *= gamma(0, vb - vc, m) * gamma(0, vc - vb, m);
        }
      }
    }
    return val;
  }

  // Phi · 2 · 2^{-c} · gamma*(wedge2) on a pairing structure.
  Complex rhs_kernel(const TestFunction& phi, const std::vector<double>& v, const std::vector<int>& partner,
                     int singletons) const {
    double ph = phi(k, v);
    if (ph == 0) return 0;
    Complex val = ph * 2.0 * std::ldexp(1.0, -singletons);
    for (int b = 0; b < S; ++b) {
      int kb = k[static_cast<size_t>(b)];
      double vb = v[static_cast<size_t>(b)];
      for (int m : sp_wedge2(kb)) val *= gamma(0, 2 * vb, m);
      for (int c = b + 1; c < S; ++c) {
        double vc = v[static_cast<size_t>(c)];
        bool paired = partner[static_cast<size_t>(b)] == c;
        for (int m : sp_tensor(kb, k[static_cast<size_t>(c)])) val *= (paired && m == 1) ? Complex(gstar1) : gamma(0, vb + vc, m);
      }
    }
    return val;
  }

  std::vector<Peak> peaks(int level, const std::vector<double>& outer, double s) const {
    std::vector<Form> cand;
    auto inner_zero = [&](const Form& f) {
      for (int i = level + 1; i < D; ++i)
        if (f.c[static_cast<size_t>(i)] != 0) return false;
      return true;
    };
    for (const auto& f : poles)
      if (inner_zero(f)) cand.push_back(f);
    // two peaks whose zero sets in the inner variables are parallel collide on a locus
    // described by a combination without inner variables
    for (size_t a = 0; a < poles.size(); ++a) {
      if (inner_zero(poles[a])) continue;
      for (size_t b = a + 1; b < poles.size(); ++b) {
        if (inner_zero(poles[b])) continue;
        const Form& f1 = poles[a];
        const Form& f2 = poles[b];
        int i0 = level + 1;
        while (f2.c[static_cast<size_t>(i0)] == 0) ++i0;
        long p = f1.c[static_cast<size_t>(i0)], qq = f2.c[static_cast<size_t>(i0)];
        if (p == 0) continue;
        long g = std::gcd(p, qq);
        p /= g;
        qq /= g;
        if (qq < 0) {
          p = -p;
          qq = -qq;
        }
        bool parallel = true;
        for (int i = level + 1; i < D && parallel; ++i)
          parallel = qq * f1.c[static_cast<size_t>(i)] == p * f2.c[static_cast<size_t>(i)];
        if (!parallel) continue;
        Form h;
        h.c.resize(static_cast<size_t>(D));
        for (int i = 0; i < D; ++i)
          h.c[static_cast<size_t>(i)] = qq * f1.c[static_cast<size_t>(i)] - p * f2.c[static_cast<size_t>(i)];
        h.r = static_cast<double>(qq) * f1.r - static_cast<double>(p) * f2.r;
        cand.push_back(h);
      }
    }
    std::vector<Peak> out;
    for (const auto& f : cand) {
      long cj = f.c[static_cast<size_t>(level)];
      if (cj == 0) continue;
      double r = f.r;
      for (int i = 0; i < level; ++i) r += static_cast<double>(f.c[static_cast<size_t>(i)]) * outer[static_cast<size_t>(i)];
      double ac = std::abs(static_cast<double>(cj));
      double width = std::max(1e-12, s * L / (kTwoPi * ac));
      for (long m = 0; m < std::abs(cj); ++m) {
        double x = (static_cast<double>(m) - r) / static_cast<double>(cj);
        x -= std::floor(x);
        out.push_back({x, width});
      }
    }
    return out;
  }
};

Model make_model(const OrthTriple& t, const LocalFieldSpec& field) {
  t.validate();
  Model M;
  M.field = field;
  M.q = static_cast<double>(field.q());
  M.L = field.log_q();
  M.n = static_cast<double>(field.psi_level);
  M.gstar1 = gamma_star_trivial(field).to_double();
  TempPoint base = t.base_point();
  M.d = base.dim();
  M.S = static_cast<int>(base.blocks.size());
  for (const auto& b : base.blocks) {
    M.k.push_back(b.k);
    M.u.push_back(b.angle);
    M.ud.push_back(to_double(b.angle));
  }
  if (M.S > 1) {
    for (int b = 0; b < M.S; ++b)
      if (M.k[static_cast<size_t>(b)] == 1) {
        M.dep = b;
        break;
      }
    if (M.dep < 0) throw PreconditionError("the twisting torus needs a block of size 1 to be parametrized");
  } else {
    M.dep = 0;
  }
  for (int b = 0; b < M.S; ++b)
    if (b != M.dep) M.free_blocks.push_back(b);
  M.D = static_cast<int>(M.free_blocks.size());
  for (int b = 0; b < M.S; ++b) {
    Form fb = M.block_form(b);
    if (M.k[static_cast<size_t>(b)] % 2) {
      Form f = fb;
      for (auto& c : f.c) c *= 2;
      f.r *= 2;
      M.poles.push_back(f);
    }
    for (int c = b + 1; c < M.S; ++c) {
      if (M.k[static_cast<size_t>(c)] != M.k[static_cast<size_t>(b)]) continue;
      Form fc = M.block_form(c);
      Form f = fb;
      for (size_t i = 0; i < f.c.size(); ++i) f.c[i] += fc.c[i];
      f.r += fc.r;
      M.poles.push_back(f);
    }
  }
  M.covering = static_cast<long>(size_preserving_permutations(M.k, 1u << 30).size());
  // S-1 trivial Sp(1) constituents of Ad_{M/A} regularize to gamma*(1); the
  // diagonal Sp(m>1) constituents sit at angle 0 and are constant
  M.ad_const = std::pow(M.gstar1, M.S - 1);
  for (int b = 0; b < M.S; ++b)
    for (int m : sp_tensor(M.k[static_cast<size_t>(b)], M.k[static_cast<size_t>(b)]))
      if (m > 1) M.ad_const *= M.gamma(0, 0, m);
  return M;
}

QuadConfig quad_config(const LimitConfig& cfg) {
  QuadConfig qc;
  qc.rtol = cfg.quad_rtol;
  qc.max_panels = cfg.grid;
  qc.threads = std::max(1, cfg.threads);
  return qc;
}

}  // namespace

// ------------------------------------------------------------ points

TorusPoint embed(const OrthTriple& t, const SubtorusPoint& mu) {
  if (mu.x.size() != t.pairs.size() || mu.y.size() != t.symplectic.size() || mu.z.size() != t.orthogonal.size())
    throw InputError("subtorus point does not match the triple's shape");
  TorusPoint pt;
  for (size_t i = 0; i < t.pairs.size(); ++i) {
    if (mu.x[i].size() != static_cast<size_t>(t.pairs[i].mult)) throw InputError("wrong number of x coordinates");
    for (const auto& x : mu.x[i]) pt.twist.push_back(x);
    for (const auto& x : mu.x[i]) pt.twist.push_back(-x);
  }
  for (size_t j = 0; j < t.symplectic.size(); ++j) {
    int p = t.symplectic[j].mult;
    if (mu.y[j].size() != static_cast<size_t>(p / 2)) throw InputError("wrong number of y coordinates");
    std::vector<Rational> y(static_cast<size_t>(p));
    for (int l = 0; l < p / 2; ++l) {
      y[static_cast<size_t>(l)] = mu.y[j][static_cast<size_t>(l)];
      y[static_cast<size_t>(p - 1 - l)] = -mu.y[j][static_cast<size_t>(l)];
    }
    pt.twist.insert(pt.twist.end(), y.begin(), y.end());
  }
  for (size_t kk = 0; kk < t.orthogonal.size(); ++kk) {
    int q = t.orthogonal[kk].mult;
    if (mu.z[kk].size() != static_cast<size_t>(q / 2)) throw InputError("wrong number of z coordinates");
    std::vector<Rational> z(static_cast<size_t>(q), Rational(0));
    for (int l = 0; l < q / 2; ++l) {
      z[static_cast<size_t>(l)] = mu.z[kk][static_cast<size_t>(l)];
      z[static_cast<size_t>(q - 1 - l)] = -mu.z[kk][static_cast<size_t>(l)];
    }
    pt.twist.insert(pt.twist.end(), z.begin(), z.end());
  }
  return pt;
}

SubtorusPoint zero_subtorus_point(const OrthTriple& t) {
  SubtorusPoint mu;
  for (const auto& e : t.pairs) mu.x.emplace_back(static_cast<size_t>(e.mult), Rational(0));
  for (const auto& e : t.symplectic) mu.y.emplace_back(static_cast<size_t>(e.mult / 2), Rational(0));
  for (const auto& e : t.orthogonal) mu.z.emplace_back(static_cast<size_t>(e.mult / 2), Rational(0));
  return mu;
}

namespace {

WDRep twisted_parameter(const OrthTriple& t, const TorusPoint& pt) {
  TempPoint base = t.base_point();
  if (pt.twist.size() != base.blocks.size()) throw InputError("torus point has the wrong number of twists");
  for (size_t b = 0; b < base.blocks.size(); ++b) base.blocks[b].twist = pt.twist[b];
  return parameter_of(base);
}

}  // namespace

// ------------------------------------------------------------ integrands

Complex lhs_integrand(const OrthTriple& t, const TestFunction& phi, const Rational& s, const TorusPoint& pt,
                      const LocalFieldSpec& field) {
  if (s <= 0) throw PreconditionError("lhs_integrand needs s > 0");
  WDRep rho = twisted_parameter(t, pt);
  TempPoint base = t.base_point();
  std::vector<int> k;
  std::vector<double> v;
  for (size_t b = 0; b < base.blocks.size(); ++b) {
    k.push_back(base.blocks[b].k);
    v.push_back(to_double(base.blocks[b].angle + pt.twist[b]));
  }
  Complex sym = gamma_factor(sym2(rho), field).evaluate(s);
  Complex ad = gamma_factor(ad_M_over_A(rho), field).regularized_value();
  return phi(k, v) / sym * ad;
}

Complex lhs_integrand_fast(const OrthTriple& t, const TestFunction& phi, double s, const std::vector<double>& theta,
                           const LocalFieldSpec& field) {
  if (!(s > 0)) throw PreconditionError("lhs_integrand needs s > 0");
  Model M = make_model(t, field);
  if (theta.size() != static_cast<size_t>(M.S)) throw InputError("wrong number of twists");
  std::vector<double> v(static_cast<size_t>(M.S));
  for (int b = 0; b < M.S; ++b) v[static_cast<size_t>(b)] = M.ud[static_cast<size_t>(b)] + theta[static_cast<size_t>(b)];
  return M.lhs_kernel(phi, s, v);
}

long covering_order(const OrthTriple& t) {
  TempPoint base = t.base_point();
  return static_cast<long>(size_preserving_permutations(base.shape(), 1u << 30).size());
}

QuadResult lhs_value(const OrthTriple& t, const TestFunction& phi, double s, const LocalFieldSpec& field,
                     const LimitConfig& cfg) {
  if (!(s > 0)) throw PreconditionError("lhs_value needs s > 0");
  Model M = make_model(t, field);
  TorusIntegrand f = [&](const std::vector<double>& x) { return M.lhs_kernel(phi, s, M.angles(x)); };
  PeakFinder pk = [&](int level, const std::vector<double>& outer) { return M.peaks(level, outer, s); };
  QuadResult r = integrate_torus(M.D, f, pk, quad_config(cfg));
  // d · gamma(s, 1) · chi(-1)^{d-1} with chi unramified
  Complex pre = static_cast<double>(M.d) * M.gamma(s, 0, 1) / static_cast<double>(M.covering);
  r.value *= pre;
  r.error *= std::abs(pre);
  return r;
}

std::vector<PairingStructure> orthogonal_components(const OrthTriple& t) {
  TempPoint base = t.base_point();
  const int S = static_cast<int>(base.blocks.size());
  Rational central = 0;
  for (const auto& b : base.blocks) central += b.k * b.angle;
  central = mod1(central);

  std::vector<PairingStructure> out;
  std::vector<bool> used(static_cast<size_t>(S), false);
  PairingStructure cur;
  auto rec = [&](auto&& self, int b) -> void {
    while (b < S && used[static_cast<size_t>(b)]) ++b;
    if (b == S) {
      Rational acc = 0;
      for (size_t i = 0; i < cur.singletons.size(); ++i) {
        const auto& [bi, ei] = cur.singletons[i];
        acc += base.blocks[static_cast<size_t>(bi)].k * ei;
        for (size_t j = 0; j < i; ++j) {
          const auto& [bj, ej] = cur.singletons[j];
          if (ei == ej && base.blocks[static_cast<size_t>(bi)].k == base.blocks[static_cast<size_t>(bj)].k) return;
        }
      }
      if (mod1(acc) == central) out.push_back(cur);
      return;
    }
    int kb = base.blocks[static_cast<size_t>(b)].k;
    used[static_cast<size_t>(b)] = true;
    if (kb % 2) {
      for (const Rational& e : {Rational(0), Rational(1, 2)}) {
        cur.singletons.emplace_back(b, e);
        self(self, b + 1);
        cur.singletons.pop_back();
      }
    }
    for (int c = b + 1; c < S; ++c) {
      if (used[static_cast<size_t>(c)] || base.blocks[static_cast<size_t>(c)].k != kb) continue;
      used[static_cast<size_t>(c)] = true;
      cur.pairs.emplace_back(b, c);
      self(self, b + 1);
      cur.pairs.pop_back();
      used[static_cast<size_t>(c)] = false;
    }
    used[static_cast<size_t>(b)] = false;
  };
  rec(rec, 0);
  return out;
}

QuadResult rhs_value(const OrthTriple& t, const TestFunction& phi, const LocalFieldSpec& field, const LimitConfig& cfg) {
  Model M = make_model(t, field);
  QuadResult total;
  total.value = 0;
  for (const auto& ps : orthogonal_components(t)) {
    std::vector<int> partner(static_cast<size_t>(M.S), -1);
    for (const auto& [i, j] : ps.pairs) {
      partner[static_cast<size_t>(i)] = j;
      partner[static_cast<size_t>(j)] = i;
    }
    std::vector<double> fixed(static_cast<size_t>(M.S), 0.0);
    for (const auto& [b, e] : ps.singletons) fixed[static_cast<size_t>(b)] = to_double(e);
    const int singles = static_cast<int>(ps.singletons.size());
    TorusIntegrand f = [&](const std::vector<double>& w) {
      std::vector<double> v = fixed;
      for (size_t p = 0; p < ps.pairs.size(); ++p) {
        v[static_cast<size_t>(ps.pairs[p].first)] = w[p];
        v[static_cast<size_t>(ps.pairs[p].second)] = -w[p];
      }
      return M.rhs_kernel(phi, v, partner, singles);
    };
    QuadResult r = integrate_torus(static_cast<int>(ps.pairs.size()), f, nullptr, quad_config(cfg));
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    total.max_panels_used = std::max(total.max_panels_used, r.max_panels_used);
  }
  total.value /= static_cast<double>(M.covering);
  total.error /= static_cast<double>(M.covering);
  return total;
}

// ------------------------------------------------------------ exact checks

GenericPointCheck generic_point_check(const OrthTriple& t, const SubtorusPoint& mu, const LocalFieldSpec& field) {
  t.validate();
  WDRep rho = twisted_parameter(t, embed(t, mu));
  GenericPointCheck r;
  r.N = static_cast<int>(triple_constants(t).N);
  SpectralFunction sym = gamma_factor(sym2(rho), field);
  r.order = sym.ord_zero_at_zero();
  if (r.order != r.N)
    throw PreconditionError("subtorus point is not generic: gamma(Sym2) vanishes to order " + std::to_string(r.order) +
                            " instead of " + std::to_string(r.N));
  Complex lim = sym.inverse().limit_with_power(r.N);
  r.lhs = gamma_star_trivial(field).to_double() * lim * gamma_factor(ad_M_over_A(rho), field).regularized_value();
  r.rhs = std::pow(field.log_q(), -r.N) * gamma_factor(wedge2(rho), field).regularized_value();
  r.deviation = std::abs(r.lhs - r.rhs) / std::max(1.0, std::abs(r.rhs));
  return r;
}

int singular_exponent(const OrthTriple& t, const TorusPoint& pt) {
  if (pt.twist.size() != static_cast<size_t>(t.base_point().blocks.size()))
    throw InputError("torus point has the wrong number of twists");
  int count = 0;
  size_t pos = 0;
  auto at = [&](size_t i) -> const Rational& { return pt.twist[i]; };
  // twists live on R/Z, so a form vanishes when the sum is an integer
  auto vanishes = [](const Rational& x) { return x.get_den() == 1; };
  for (const auto& e : t.pairs) {
    size_t m = static_cast<size_t>(e.mult);
    for (size_t l = 0; l < m; ++l)
      for (size_t l2 = 0; l2 < m; ++l2) count += vanishes(at(pos + l) + at(pos + m + l2));
    pos += 2 * m;
  }
  for (const auto& e : t.symplectic) {
    size_t p = static_cast<size_t>(e.mult);
    for (size_t l = 0; l < p; ++l)
      for (size_t l2 = l + 1; l2 < p; ++l2) count += vanishes(at(pos + l) + at(pos + l2));
    pos += p;
  }
  for (const auto& e : t.orthogonal) {
    size_t q = static_cast<size_t>(e.mult);
    for (size_t l = 0; l < q; ++l)
      for (size_t l2 = l; l2 < q; ++l2) count += vanishes(at(pos + l) + at(pos + l2));
    pos += q;
  }
  return count;
}

ComponentMass component_mass(const OrthTriple& t, const LocalFieldSpec& field, const LimitConfig& cfg) {
  Model M = make_model(t, field);
  const double s = 1.0;
  TorusIntegrand one = [](const std::vector<double>&) { return Complex(1.0); };
  PeakFinder pk = [&](int level, const std::vector<double>& outer) { return M.peaks(level, outer, s); };
  QuadResult r = integrate_torus(M.D, one, pk, quad_config(cfg));
  TripleConstants k = triple_constants(t);
  ComponentMass out;
  out.quadrature = r.value.real();
  out.constant = std::pow(kTwoPi / M.L, 1 - M.S) / (k.P.get_d() * k.W.get_d());
  out.jacobian = 1;
  for (int b : M.free_blocks) out.jacobian *= kTwoPi * M.k[static_cast<size_t>(b)] / M.L;
  out.mass = out.constant * out.jacobian * out.quadrature;
  out.expected = 1.0 / weyl_orders(t.base_point()).w.get_d();
  return out;
}

// ------------------------------------------------------------ driver

std::pair<Complex, double> richardson(const std::vector<Complex>& values) {
  if (values.empty()) throw InputError("richardson needs at least one value");
  std::vector<Complex> prev = values, diag{values.front()};
  for (size_t j = 1; j < values.size(); ++j) {
    double f = std::ldexp(1.0, static_cast<int>(j));
    std::vector<Complex> next;
    for (size_t i = 1; i < prev.size(); ++i) next.push_back((f * prev[i] - prev[i - 1]) / (f - 1));
    diag.push_back(next.back());
    prev = std::move(next);
  }
  double err = diag.size() > 1 ? std::abs(diag.back() - diag[diag.size() - 2]) : 0.0;
  return {diag.back(), err};
}

double fit_exponent(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InputError("fit needs at least two points");
  double n = static_cast<double>(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

LimitReport verify(const OrthTriple& t, const TestFunction& phi, const LocalFieldSpec& field, const LimitConfig& cfg) {
  if (!(cfg.s0 > 0) || cfg.s_count < 1) throw InputError("s-sequence needs s0 > 0 and at least one term");
  if (!(cfg.tol > 0)) throw InputError("tolerance must be positive");
  t.validate();
  phi.check_invariance(t.base_point().shape());
  Model M = make_model(t, field);
  LimitReport rep;
  rep.field = field;
  rep.tol = cfg.tol;
  rep.grid = cfg.grid;
  rep.covering = M.covering;
  std::vector<double> scaled;
  for (int i = 0; i < cfg.s_count; ++i) {
    double s = std::ldexp(cfg.s0, -i);
    QuadResult r = lhs_value(t, phi, s, field, cfg);
    rep.s.push_back(s);
    rep.lhs.push_back(r.value);
    rep.lhs_error.push_back(r.error);
    rep.evaluations += r.evaluations;
    rep.max_panels_used = std::max(rep.max_panels_used, r.max_panels_used);
    scaled.push_back(std::abs(r.value / (static_cast<double>(M.d) * M.gamma(s, 0, 1))));
  }
  auto [ext, ext_err] = richardson(rep.lhs);
  rep.lhs_extrapolated = ext;
  rep.extrapolation_error = ext_err;
  if (rep.s.size() >= 2) rep.fit_exponent = fit_exponent(rep.s, scaled);
  QuadResult rhs = rhs_value(t, phi, field, cfg);
  rep.rhs = rhs.value;
  rep.rhs_error = rhs.error;
  rep.evaluations += rhs.evaluations;
  rep.max_panels_used = std::max(rep.max_panels_used, rhs.max_panels_used);
  rep.components = static_cast<int>(orthogonal_components(t).size());
  rep.abs_discrepancy = std::abs(rep.lhs_extrapolated - rep.rhs);
  rep.rel_discrepancy = rep.abs_discrepancy / std::max(std::abs(rep.rhs), 1e-12);
  rep.pass = rep.rel_discrepancy < cfg.tol;
  return rep;
}

}  // namespace planch
