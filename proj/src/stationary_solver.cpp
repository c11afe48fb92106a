#include "specgap/stationary_solver.hpp"

#include <string>

#include "specgap/errors.hpp"

namespace specgap {

namespace {

// Shared elimination body. The trailing update writes disjoint rows, so the
// parallel loop is bit-identical to the serial one.
std::vector<double> gth_impl(DenseMatrix& a, bool parallel) {
  const int n = a.order();

  for (int m = n - 1; m >= 1; --m) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += a(m, j);
    if (!(s > 0.0))
      throw SingularSystem(
          "gth_stationary: state " + std::to_string(m) +
          " cannot reach the lower block (reducible truncation)");
    for (int i = 0; i < m; ++i) a(i, m) /= s;

#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < m; ++i) {
      const double f = a(i, m);
      if (f == 0.0) continue;
      for (int j = 0; j < m; ++j) a(i, j) += f * a(m, j);
    }
  }

  std::vector<double> w(n, 0.0);
  w[0] = 1.0;
  for (int m = 1; m < n; ++m) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += w[i] * a(i, m);
    w[m] = s;
  }
  double total = 0.0;
  for (double x : w) total += x;
  for (double& x : w) x /= total;
  return w;
}

}  // namespace

std::vector<double> gth_stationary(DenseMatrix p, Exec exec) {
  return gth_impl(p, exec == Exec::parallel);
}

std::vector<double> gth_stationary_serial(DenseMatrix p) {
  const int n = p.order();

  for (int m = n - 1; m >= 1; --m) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += p(m, j);
    if (!(s > 0.0))
      throw SingularSystem(
          "gth_stationary: state " + std::to_string(m) +
          " cannot reach the lower block (reducible truncation)");
    for (int i = 0; i < m; ++i) p(i, m) /= s;
    for (int i = 0; i < m; ++i) {
      const double f = p(i, m);
      if (f == 0.0) continue;
      for (int j = 0; j < m; ++j) p(i, j) += f * p(m, j);
    }
  }

  std::vector<double> w(n, 0.0);
  w[0] = 1.0;
  for (int m = 1; m < n; ++m) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += w[i] * p(i, m);
    w[m] = s;
  }
  double total = 0.0;
  for (double x : w) total += x;
  for (double& x : w) x /= total;
  return w;
}

}  // namespace specgap
