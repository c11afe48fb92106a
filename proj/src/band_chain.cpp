#include "specgap/band_chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specgap/stationary_solver.hpp"
#include "specgap/truncation.hpp"

namespace specgap {

namespace {
constexpr double kRowSumTol = 1e-12;
constexpr double kFixedPointTol = 1e-10;
}  // namespace

BandChain::BandChain(int band_half_width, int boundary_cutoff,
                     std::vector<SparseRow> boundary_rows, BandRowFn band_row)
    : half_width_(band_half_width),
      cutoff_(boundary_cutoff),
      boundary_rows_(std::move(boundary_rows)),
      band_row_(std::move(band_row)) {
  if (half_width_ < 1) throw ParameterDomain("BandChain: band half-width must be >= 1");
  if (cutoff_ < 0) throw ParameterDomain("BandChain: boundary cutoff must be >= 0");
  if (static_cast<int>(boundary_rows_.size()) != cutoff_)
    throw ParameterDomain("BandChain: need exactly one explicit row per state below the cutoff");
  if (!band_row_) throw ParameterDomain("BandChain: band row function required");
  for (auto& r : boundary_rows_) {
    std::sort(r.begin(), r.end());
    for (auto& [j, p] : r) {
      if (j < 0) throw ParameterDomain("BandChain: boundary row column < 0");
      if (!std::isfinite(p)) throw ParameterDomain("BandChain: boundary row entry not finite");
    }
  }
}

SparseRow BandChain::row(int i) const {
  if (i < 0) throw ParameterDomain("BandChain::row: state must be >= 0");
  if (i < cutoff_) {
    SparseRow r;
    for (const auto& [j, p] : boundary_rows_[i])
      if (p != 0.0) r.emplace_back(j, p);
    return r;
  }
  const std::vector<double> band = band_row_(i);
  if (static_cast<int>(band.size()) != 2 * half_width_ + 1)
    throw ParameterDomain("BandChain::row: band row function returned wrong width");
  SparseRow r;
  r.reserve(band.size());
  for (int m = -half_width_; m <= half_width_; ++m) {
    const double p = band[m + half_width_];
    if (p != 0.0 && i + m >= 0) r.emplace_back(i + m, p);
  }
  return r;
}

double BandChain::entry(int i, int j) const {
  if (j < 0) return 0.0;
  if (i >= cutoff_ && std::abs(i - j) > half_width_) return 0.0;
  for (const auto& [col, p] : row(i))
    if (col == j) return p;
  return 0.0;
}

StationaryDist::StationaryDist(std::vector<double> weights, bool normalized)
    : weights_(std::move(weights)), normalized_(normalized) {
  if (weights_.empty()) throw ParameterDomain("StationaryDist: empty window");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw ParameterDomain("StationaryDist: weights must be strictly positive and finite");
    sum += w;
  }
  if (normalized_ && std::fabs(sum - 1.0) > 1e-10)
    throw ParameterDomain("StationaryDist: normalized weights must sum to 1");
}

double StationaryDist::at(int i) const {
  if (i < 0 || i >= window())
    throw OutOfWindow("StationaryDist: index " + std::to_string(i) +
                      " outside window of size " + std::to_string(window()));
  return weights_[i];
}

double StationaryDist::ratio(int i) const {
  if (i < 0 || i + 1 >= window())
    throw OutOfWindow("StationaryDist::ratio: index " + std::to_string(i) +
                      " outside window of size " + std::to_string(window()));
  return weights_[i + 1] / weights_[i];
}

LimitProfile::LimitProfile(int half_width, std::vector<double> coefficients,
                           std::optional<double> tail_ratio)
    : half_width_(half_width), a_(std::move(coefficients)), tail_ratio_(tail_ratio) {
  if (half_width_ < 1) throw ParameterDomain("LimitProfile: half-width must be >= 1");
  if (static_cast<int>(a_.size()) != 2 * half_width_ + 1)
    throw InvalidCoefficients("LimitProfile: expected 2N+1 coefficients");
  double sum = 0.0;
  for (double c : a_) {
    if (!(c >= 0.0) || c > 1.0 + 1e-12)
      throw InvalidCoefficients("LimitProfile: coefficients must lie in [0,1]");
    sum += c;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw InvalidCoefficients("LimitProfile: coefficients must sum to 1");
  if (tail_ratio_) {
    if (!(*tail_ratio_ >= 0.0) || *tail_ratio_ >= 1.0)
      throw ParameterDomain("LimitProfile: tail ratio must lie in [0,1)");
    if (*tail_ratio_ == 0.0)
      for (int m = 1; m <= half_width_; ++m)
        if (coefficient(m) != 0.0)
          throw InconsistentTauZero(
              "LimitProfile: tail ratio 0 requires zero forward coefficients");
  }
}

double LimitProfile::coefficient(int m) const {
  if (m < -half_width_ || m > half_width_)
    throw ParameterDomain("LimitProfile: offset outside [-N, N]");
  return a_[m + half_width_];
}

// --- operations --------------------------------------------------------------

ValidationReport validate(const BandChain& chain, int i_max) {
  ValidationReport report;
  const int n = chain.band_half_width();
  for (int i = 0; i <= i_max; ++i) {
    const SparseRow r = chain.row(i);
    double sum = 0.0;
    for (const auto& [j, p] : r) {
      sum += p;
      if (p < 0.0 || p > 1.0 + 1e-12)
        report.violations.push_back({i, "negative-entry", p});
      if (i >= chain.boundary_cutoff() && std::abs(i - j) > n)
        report.violations.push_back({i, "band", p});
    }
    const double dev = std::fabs(sum - 1.0);
    report.max_row_sum_deviation = std::max(report.max_row_sum_deviation, dev);
    if (dev > kRowSumTol) report.violations.push_back({i, "row-sum", dev});
  }
  return report;
}

StationaryDist stationary_truncated(const BandChain& chain, int k) {
  if (k <= chain.boundary_cutoff() + chain.band_half_width())
    throw ParameterDomain("stationary_truncated: window must exceed i0 + N");
  const DenseMatrix pk = truncate(chain, k);
  std::vector<double> pi = gth_stationary(pk);

  double residual = 0.0;
  for (int j = 0; j < k; ++j) {
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += pi[i] * pk(i, j);
    residual = std::max(residual, std::fabs(s - pi[j]));
  }
  if (residual > kFixedPointTol)
    throw SingularSystem("stationary_truncated: fixed-point residual " +
                         std::to_string(residual) + " exceeds tolerance");
  for (double w : pi)
    if (!(w > 0.0))
      throw SingularSystem("stationary_truncated: fixed vector not strictly positive");
  return StationaryDist(std::move(pi), /*normalized=*/true);
}

double adjoint_entry(const BandChain& chain, const StationaryDist& pi, int i,
                     int j) {
  if (i < 0 || i >= pi.window() || j < 0 || j >= pi.window())
    throw OutOfWindow("adjoint_entry: states must lie inside the window");
  return pi.at(j) * chain.entry(j, i) / pi.at(i);
}

double check_invariance(const BandChain& chain, const StationaryDist& pi,
                        int i) {
  const int n = chain.band_half_width();
  if (i < 0 || i + n >= pi.window())
    throw OutOfWindow("check_invariance: window must cover i +- N");
  double sum = 0.0;
  for (int m = -n; m <= n; ++m) {
    const int src = i + m;
    if (src < 0) continue;
    const double p = chain.entry(src, i);
    if (p != 0.0) sum += p * pi.at(src) / pi.at(i);
  }
  return std::fabs(sum - 1.0);
}

bool is_reversible(const BandChain& chain, const StationaryDist& pi, int i_max,
                   double tol) {
  if (i_max + chain.band_half_width() >= pi.window())
    throw OutOfWindow("is_reversible: window must cover i_max + N");
  for (int i = 0; i <= i_max; ++i) {
    for (const auto& [j, pij] : chain.row(i)) {
      if (j >= pi.window())
        throw OutOfWindow("is_reversible: row support leaves the window");
      const double forward = pi.at(i) * pij;
      const double backward = pi.at(j) * chain.entry(j, i);
      const double scale = std::max(pi.at(i), pi.at(j));
      if (std::fabs(forward - backward) > tol * scale) return false;
    }
  }
  return true;
}

}  // namespace specgap
