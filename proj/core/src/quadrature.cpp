#include "planch/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <numeric>
#include <string>
#include <thread>

#include "planch/errors.hpp"

namespace planch {

using Complex = std::complex<double>;

Complex pairwise_sum(const Complex* v, size_t n) {
  if (n == 0) return {0.0, 0.0};
  if (n <= 8) {
    Complex s = 0;
    for (size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

int threads_from_env() {
  if (const char* e = std::getenv("PLANCH_THREADS")) {
    try {
      int n = std::stoi(e);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("PLANCH_THREADS must be a positive integer, got '") + e + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// 15 Kronrod nodes on [-1,1] with Kronrod weights and embedded 7-point Gauss weights.
struct Rule {
  std::vector<double> x, wk, wg;
};

const Rule& rule() {
  static const Rule r = [] {
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    using G = boost::math::quadrature::gauss<double, 7>;
    const auto& ka = GK::abscissa();
    const auto& kw = GK::weights();
    const auto& ga = G::abscissa();
    const auto& gw = G::weights();
    auto gauss_weight = [&](double x) {
      for (size_t j = 0; j < ga.size(); ++j)
        if (std::abs(ga[j] - x) < 1e-12) return gw[j];
      return 0.0;
    };
    Rule out;
    for (size_t i = 0; i < ka.size(); ++i) {
      double w = gauss_weight(ka[i]);
      out.x.push_back(ka[i]);
      out.wk.push_back(kw[i]);
      out.wg.push_back(w);
      if (ka[i] != 0) {
        out.x.push_back(-ka[i]);
        out.wk.push_back(kw[i]);
        out.wg.push_back(w);
      }
    }
    return out;
  }();
  return r;
}

struct NodeValue {
  Complex value;
  double inner_error = 0;
};

struct Panel {
  double a, b;
  Complex k;
  double err;        // |K15 - G7|
  double inner_err;  // Kronrod integral of the inner error estimates
};

using LineFn = std::function<NodeValue(double)>;

struct Counters {
  std::atomic<long> evaluations{0};
  std::atomic<int> max_panels{0};
};

void note_panels(Counters& c, int n) {
  int cur = c.max_panels.load();
  while (n > cur && !c.max_panels.compare_exchange_weak(cur, n)) {
  }
}

Panel finish_panel(double a, double b, const NodeValue* vals) {
  const Rule& r = rule();
  double half = 0.5 * (b - a);
  Complex k = 0, g = 0;
  double ie = 0;
  for (size_t i = 0; i < r.x.size(); ++i) {
    k += r.wk[i] * vals[i].value;
    g += r.wg[i] * vals[i].value;
    ie += r.wk[i] * vals[i].inner_error;
  }
  return Panel{a, b, half * k, half * std::abs(k - g), half * ie};
}

// Evaluates the panels [a_i, b_i]; node evaluations are spread over `threads` workers.
std::vector<Panel> eval_panels(const std::vector<std::pair<double, double>>& spans, const LineFn& g, int threads) {
  const Rule& r = rule();
  const size_t m = r.x.size();
  std::vector<NodeValue> vals(spans.size() * m);
  auto work = [&](size_t lo, size_t hi) {
    for (size_t idx = lo; idx < hi; ++idx) {
      const auto& [a, b] = spans[idx / m];
      double x = 0.5 * (a + b) + 0.5 * (b - a) * r.x[idx % m];
      vals[idx] = g(x);
    }
  };
  size_t total = vals.size();
  int nt = std::max(1, std::min<int>(threads, static_cast<int>(total / m)));
  if (nt <= 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(static_cast<size_t>(nt));
    size_t chunk = (total + static_cast<size_t>(nt) - 1) / static_cast<size_t>(nt);
    for (int t = 0; t < nt; ++t) {
      size_t lo = static_cast<size_t>(t) * chunk, hi = std::min(total, lo + chunk);
      pool.emplace_back([&, lo, hi, t] {
        try {
          work(lo, hi);
        } catch (...) {
          errs[static_cast<size_t>(t)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  std::vector<Panel> out;
  out.reserve(spans.size());
  for (size_t i = 0; i < spans.size(); ++i) out.push_back(finish_panel(spans[i].first, spans[i].second, &vals[i * m]));
  return out;
}

std::vector<double> breakpoints(const std::vector<Peak>& peaks) {
  static const double scales[] = {0.0, 1.0, 4.0, 16.0, 64.0, 256.0};
  std::vector<double> bp{0.0, 1.0};
  for (const auto& pk : peaks) {
    for (double f : scales) {
      double off = f * pk.width;
      if (off >= 0.25) break;
      for (double sgn : {-1.0, 1.0}) {
        double x = pk.center + sgn * off;
        x -= std::floor(x);
        bp.push_back(x);
        if (f == 0.0) break;
      }
    }
  }
  std::sort(bp.begin(), bp.end());
  std::vector<double> out;
  for (double x : bp)
    if (out.empty() || x - out.back() > 1e-14) out.push_back(x);
  if (out.back() < 1.0) out.back() = 1.0;
  return out;
}

NodeValue integrate_line(const LineFn& g, const std::vector<Peak>& peaks, const QuadConfig& cfg, int threads,
                         Counters& counters) {
  std::vector<double> bp = breakpoints(peaks);
  std::vector<std::pair<double, double>> spans;
  for (size_t i = 0; i + 1 < bp.size(); ++i) spans.emplace_back(bp[i], bp[i + 1]);
  std::vector<Panel> panels = eval_panels(spans, g, threads);
  counters.evaluations += static_cast<long>(spans.size() * rule().x.size());

  for (;;) {
    std::sort(panels.begin(), panels.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
    std::vector<Complex> ks;
    ks.reserve(panels.size());
    double err = 0, inner = 0;
    for (const auto& p : panels) {
      ks.push_back(p.k);
      err += p.err;
      inner += p.inner_err;
    }
    Complex total = pairwise_sum(ks.data(), ks.size());
    double target = std::max(cfg.atol, cfg.rtol * std::abs(total));
    note_panels(counters, static_cast<int>(panels.size()));
    if (err <= target) return NodeValue{total, err + inner};
    if (static_cast<int>(panels.size()) >= cfg.max_panels)
    {
      char msg[160];
      std::snprintf(msg, sizeof msg, "quadrature panel budget %d exhausted (error estimate %.3e, target %.3e)",
                    cfg.max_panels, err, target);
      throw BudgetError(msg, err + inner);
    }

    // bisect the worst panels until at least half of the excess error is addressed
    std::vector<size_t> order(panels.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) { return panels[i].err > panels[j].err; });
    double excess = err - target, removed = 0;
    size_t room = static_cast<size_t>(cfg.max_panels) - panels.size();
    std::vector<bool> split(panels.size(), false);
    size_t nsplit = 0;
    for (size_t i : order) {
      if (nsplit >= room || (removed >= 0.5 * excess && nsplit > 0)) break;
      split[i] = true;
      removed += panels[i].err;
      ++nsplit;
    }
    std::vector<Panel> keep;
    spans.clear();
    for (size_t i = 0; i < panels.size(); ++i) {
      if (!split[i]) {
        keep.push_back(panels[i]);
        continue;
      }
      double mid = 0.5 * (panels[i].a + panels[i].b);
      spans.emplace_back(panels[i].a, mid);
      spans.emplace_back(mid, panels[i].b);
    }
    std::vector<Panel> fresh = eval_panels(spans, g, threads);
    counters.evaluations += static_cast<long>(spans.size() * rule().x.size());
    keep.insert(keep.end(), fresh.begin(), fresh.end());
    panels = std::move(keep);
  }
}

NodeValue integrate_level(int level, int dim, std::vector<double>& x, const TorusIntegrand& f, const PeakFinder& peaks,
                          const QuadConfig& cfg, Counters& counters) {
  if (level == dim) {
    ++counters.evaluations;
    return NodeValue{f(x), 0.0};
  }
  std::vector<double> outer(x.begin(), x.begin() + level);
  std::vector<Peak> pk = peaks ? peaks(level, outer) : std::vector<Peak>{};
  int threads = level == 0 ? cfg.threads : 1;
  LineFn g = [&, level, outer](double t) {
    std::vector<double> local = outer;
    local.resize(static_cast<size_t>(dim), 0.0);
    local[static_cast<size_t>(level)] = t;
    if (level + 1 == dim) return NodeValue{f(local), 0.0};
    return integrate_level(level + 1, dim, local, f, peaks, cfg, counters);
  };
  return integrate_line(g, pk, cfg, threads, counters);
}

}  // namespace

QuadResult integrate_torus(int dim, const TorusIntegrand& f, const PeakFinder& peaks, const QuadConfig& cfg) {
  if (dim < 0) throw InputError("negative integration dimension");
  if (!(cfg.rtol > 0) || cfg.max_panels < 1) throw InputError("invalid quadrature configuration");
  Counters counters;
  std::vector<double> x(static_cast<size_t>(dim), 0.0);
  NodeValue v = integrate_level(0, dim, x, f, peaks, cfg, counters);
  QuadResult out;
  out.value = v.value;
  out.error = v.inner_error;
  out.evaluations = counters.evaluations.load();
  out.max_panels_used = counters.max_panels.load();
  return out;
}

}  // namespace planch
