#pragma once

// Nested adaptive Gauss-Kronrod (7/15) quadrature on the unit torus [0,1)^D
// for integrands that are periodic in every coordinate and carry narrow peaks
// at known places. Panels start from breakpoints placed at caller-supplied
// centers and are bisected where |K15 - G7| is largest.

#include <complex>
#include <functional>
#include <vector>

namespace planch {

struct QuadConfig {
  double rtol = 1e-8;
  double atol = 1e-15;
  int max_panels = 4096;  // per one-dimensional integration
  int threads = 1;        // used at the outermost level only
};

struct QuadResult {
  std::complex<double> value;
  double error = 0;
  long evaluations = 0;
  int max_panels_used = 0;
};

/// A peak of the integrand along one coordinate.
struct Peak {
  double center;  // in [0,1)
  double width;   // > 0
};

using TorusIntegrand = std::function<std::complex<double>(const std::vector<double>&)>;
/// Peaks along coordinate `level` given the already fixed coordinates x[0..level-1].
using PeakFinder = std::function<std::vector<Peak>(int level, const std::vector<double>& outer)>;

/// Integral over [0,1)^dim with Lebesgue measure. dim == 0 evaluates f at the empty point.
/// Throws BudgetError when some one-dimensional pass exceeds max_panels.
QuadResult integrate_torus(int dim, const TorusIntegrand& f, const PeakFinder& peaks, const QuadConfig& cfg);

/// Pairwise sum in index order (deterministic).
std::complex<double> pairwise_sum(const std::complex<double>* v, size_t n);

/// Number of worker threads requested through PLANCH_THREADS (default: hardware concurrency, at least 1).
int threads_from_env();

}  // namespace planch
