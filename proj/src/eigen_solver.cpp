#include "specgap/eigen_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specgap/errors.hpp"

namespace specgap {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

inline double sign_of(double a, double b) { return b >= 0.0 ? std::fabs(a) : -std::fabs(a); }

// Francis implicit double-shift QR on an upper Hessenberg matrix.
// Eigenvalues only; deflates from the bottom. Complex pairs are produced
// without complex arithmetic. Budget: 30n sweeps total.
std::vector<std::complex<double>> francis_qr(DenseMatrix& h, int* sweeps_out) {
  const int n = h.order();
  std::vector<std::complex<double>> wri(n);

  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::fabs(h(i, j));

  int total_sweeps = 0;
  const int sweep_budget = 30 * n;
  double t = 0.0;  // accumulated exceptional shifts
  int nn = n - 1;

  while (nn >= 0) {
    int its = 0;
    for (;;) {
      // Look for a negligible subdiagonal entry to split at.
      int l;
      for (l = nn; l > 0; --l) {
        double s = std::fabs(h(l - 1, l - 1)) + std::fabs(h(l, l));
        if (s == 0.0) s = anorm;
        if (std::fabs(h(l, l - 1)) <= kEps * s) {
          h(l, l - 1) = 0.0;
          break;
        }
      }
      double x = h(nn, nn);
      if (l == nn) {  // one real eigenvalue isolated
        wri[nn] = x + t;
        --nn;
        break;
      }
      double y = h(nn - 1, nn - 1);
      double w = h(nn, nn - 1) * h(nn - 1, nn);
      if (l == nn - 1) {  // a 2x2 block isolated
        double p = 0.5 * (y - x);
        double q = p * p + w;
        double z = std::sqrt(std::fabs(q));
        x += t;
        if (q >= 0.0) {  // real pair
          z = p + sign_of(z, p);
          wri[nn - 1] = wri[nn] = x + z;
          if (z != 0.0) wri[nn] = x - w / z;
        } else {  // complex conjugate pair
          wri[nn] = std::complex<double>(x + p, -z);
          wri[nn - 1] = std::conj(wri[nn]);
        }
        nn -= 2;
        break;
      }

      // No deflation: run one double-shift sweep on rows l..nn.
      if (total_sweeps >= sweep_budget)
        throw NoConvergence("eigenvalues: QR exceeded " +
                            std::to_string(sweep_budget) + " sweeps");
      if (its == 10 || its == 20) {  // exceptional shift
        t += x;
        for (int i = 0; i <= nn; ++i) h(i, i) -= x;
        double s = std::fabs(h(nn, nn - 1)) + std::fabs(h(nn - 1, nn - 2));
        y = x = 0.75 * s;
        w = -0.4375 * s * s;
      }
      ++its;
      ++total_sweeps;

      // Seek two consecutive small subdiagonals for the sweep start.
      int m;
      double p = 0.0, q = 0.0, r = 0.0;
      for (m = nn - 2; m >= l; --m) {
        double z = h(m, m);
        double rr = x - z;
        double ss = y - z;
        p = (rr * ss - w) / h(m + 1, m) + h(m, m + 1);
        q = h(m + 1, m + 1) - z - rr - ss;
        r = h(m + 2, m + 1);
        double sc = std::fabs(p) + std::fabs(q) + std::fabs(r);
        p /= sc;
        q /= sc;
        r /= sc;
        if (m == l) break;
        double u = std::fabs(h(m, m - 1)) * (std::fabs(q) + std::fabs(r));
        double v = std::fabs(p) * (std::fabs(h(m - 1, m - 1)) + std::fabs(z) +
                                   std::fabs(h(m + 1, m + 1)));
        if (u <= kEps * v) break;
      }
      for (int i = m; i < nn - 1; ++i) {
        h(i + 2, i) = 0.0;
        if (i != m) h(i + 2, i - 1) = 0.0;
      }

      // Chase the bulge.
      for (int k = m; k < nn; ++k) {
        if (k != m) {
          p = h(k, k - 1);
          q = h(k + 1, k - 1);
          r = (k + 1 != nn) ? h(k + 2, k - 1) : 0.0;
          x = std::fabs(p) + std::fabs(q) + std::fabs(r);
          if (x != 0.0) {
            p /= x;
            q /= x;
            r /= x;
          }
        }
        double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
        if (s == 0.0) continue;
        if (k == m) {
          if (l != m) h(k, k - 1) = -h(k, k - 1);
        } else {
          h(k, k - 1) = -s * x;
        }
        p += s;
        x = p / s;
        y = q / s;
        double z = r / s;
        q /= p;
        r /= p;
        for (int j = k; j <= nn; ++j) {  // row transform
          double pp = h(k, j) + q * h(k + 1, j);
          if (k + 1 != nn) {
            pp += r * h(k + 2, j);
            h(k + 2, j) -= pp * z;
          }
          h(k + 1, j) -= pp * y;
          h(k, j) -= pp * x;
        }
        const int mmin = std::min(nn, k + 3);
        for (int i = l; i <= mmin; ++i) {  // column transform
          double pp = x * h(i, k) + y * h(i, k + 1);
          if (k + 1 != nn) {
            pp += z * h(i, k + 2);
            h(i, k + 2) -= pp * r;
          }
          h(i, k + 1) -= pp * q;
          h(i, k) -= pp;
        }
      }
    }
  }
  if (sweeps_out) *sweeps_out = total_sweeps;
  return wri;
}

}  // namespace

void balance_in_place(DenseMatrix& a) {
  const int n = a.order();
  const double radix = 2.0;
  const double sq = radix * radix;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::fabs(a(j, i));
        r += std::fabs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sq;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sq;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        const double ginv = 1.0 / f;
        for (int j = 0; j < n; ++j) a(i, j) *= ginv;
        for (int j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

void hessenberg_reduce(DenseMatrix& a, Exec exec) {
  const int n = a.order();
  const bool parallel = exec == Exec::parallel;
  std::vector<double> u(n, 0.0), w(n, 0.0);

  for (int k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (int i = k + 1; i < n; ++i) scale += std::fabs(a(i, k));
    if (scale == 0.0) continue;

    double sigma = 0.0;
    for (int i = k + 1; i < n; ++i) {
      u[i] = a(i, k) / scale;
      sigma += u[i] * u[i];
    }
    const double f = u[k + 1];
    const double g = f >= 0.0 ? -std::sqrt(sigma) : std::sqrt(sigma);
    const double hh = sigma - f * g;  // = |u|^2 / 2 after the update below
    u[k + 1] = f - g;

    // Left transform: rows k+1..n-1, columns k..n-1.
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = k; j < n; ++j) {
      double s = 0.0;
      for (int i = k + 1; i < n; ++i) s += u[i] * a(i, j);
      w[j] = s / hh;
    }
#pragma omp parallel for schedule(static) if (parallel)
    for (int i = k + 1; i < n; ++i) {
      const double ui = u[i];
      for (int j = k; j < n; ++j) a(i, j) -= ui * w[j];
    }

    // Right transform: all rows, columns k+1..n-1.
#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = k + 1; j < n; ++j) s += a(i, j) * u[j];
      s /= hh;
      for (int j = k + 1; j < n; ++j) a(i, j) -= s * u[j];
    }

    a(k + 1, k) = scale * g;
    for (int i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

Spectrum eigenvalues(const DenseMatrix& m, const EigenOptions& opt) {
  const int n = m.order();
  if (n > opt.max_order)
    throw ParameterDomain("eigenvalues: order " + std::to_string(n) +
                          " exceeds the configured cap " +
                          std::to_string(opt.max_order));
  if (!m.all_finite())
    throw ParameterDomain("eigenvalues: matrix has non-finite entries");

  const double tr = m.trace();
  const double det = determinant(m);

  DenseMatrix h = m;
  if (opt.balance) balance_in_place(h);
  hessenberg_reduce(h, opt.exec);

  Spectrum s;
  if (n == 1) {
    s.values = {std::complex<double>(m(0, 0), 0.0)};
  } else {
    s.values = francis_qr(h, &s.qr_sweeps);
  }

  std::sort(s.values.begin(), s.values.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              const double ma = std::abs(a), mb = std::abs(b);
              if (ma != mb) return ma > mb;
              if (a.real() != b.real()) return a.real() > b.real();
              return a.imag() > b.imag();
            });

  std::complex<double> sum = 0.0, prod = 1.0;
  for (const auto& v : s.values) {
    sum += v;
    prod *= v;
  }
  s.trace_gap = std::abs(sum - tr);
  s.det_gap = std::abs(prod - det) / std::max(1.0, std::fabs(det));
  return s;
}

SpectrumDiagnostics spectrum_checks(const DenseMatrix& m, const Spectrum& s) {
  SpectrumDiagnostics d;
  std::complex<double> sum = 0.0, prod = 1.0;
  for (const auto& v : s.values) {
    sum += v;
    prod *= v;
  }
  const double det = determinant(m);
  d.trace_gap = std::abs(sum - m.trace());
  d.det_gap = std::abs(prod - det) / std::max(1.0, std::fabs(det));

  // Conjugate pairing: greedily match each strictly complex value with an
  // unused conjugate within 1e-10.
  std::vector<char> used(s.values.size(), 0);
  d.nearest_to_one = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < s.values.size(); ++i) {
    d.nearest_to_one = std::min(d.nearest_to_one, std::abs(s.values[i] - 1.0));
    if (used[i] || std::fabs(s.values[i].imag()) <= 1e-10) continue;
    bool matched = false;
    for (size_t j = 0; j < s.values.size(); ++j) {
      if (j == i || used[j]) continue;
      if (std::abs(s.values[j] - std::conj(s.values[i])) <= 1e-10) {
        used[i] = used[j] = 1;
        matched = true;
        break;
      }
    }
    if (!matched) ++d.pairing_violations;
  }
  return d;
}

std::vector<double> symmetric_tridiagonal_eigenvalues(std::vector<double> d,
                                                      std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return {};
  if (static_cast<int>(e.size()) != std::max(0, n - 1))
    throw ParameterDomain("symmetric_tridiagonal_eigenvalues: off-diagonal size mismatch");
  e.push_back(0.0);

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw NoConvergence("symmetric_tridiagonal_eigenvalues: too many QL iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + sign_of(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> eigenvalues_tridiagonal_similarity(const DenseMatrix& m) {
  const int n = m.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(i - j) > 1 && m(i, j) != 0.0)
        throw ParameterDomain("eigenvalues_tridiagonal_similarity: matrix not tridiagonal");
  std::vector<double> d(n), e(std::max(0, n - 1));
  for (int i = 0; i < n; ++i) d[i] = m(i, i);
  for (int i = 0; i + 1 < n; ++i) {
    const double prod = m(i, i + 1) * m(i + 1, i);
    if (prod < 0.0)
      throw ParameterDomain(
          "eigenvalues_tridiagonal_similarity: off-diagonal product negative");
    e[i] = std::sqrt(prod);
  }
  return symmetric_tridiagonal_eigenvalues(std::move(d), std::move(e));
}

}  // namespace specgap
