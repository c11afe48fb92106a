#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "specgap/errors.hpp"

namespace specgap {

// One transition row as (column, probability) pairs, sorted by column,
// zero entries dropped.
using SparseRow = std::vector<std::pair<int, double>>;

// Markov kernel on {0,1,2,...} with band structure: beyond the boundary
// cutoff i0 every row i has support inside [i-N, i+N] and is produced by a
// row function over offsets; rows below i0 are stored explicitly and may
// have wider support. No global matrix is ever materialized; windows of the
// chain are generated on demand.
class BandChain {
 public:
  // Band row function: state i >= i0 -> probabilities over offsets -N..N
  // (vector of size 2N+1). Entries that would land at negative states must
  // be zero.
  using BandRowFn = std::function<std::vector<double>(int)>;

  BandChain(int band_half_width, int boundary_cutoff,
            std::vector<SparseRow> boundary_rows, BandRowFn band_row);

  int band_half_width() const { return half_width_; }   // N
  int boundary_cutoff() const { return cutoff_; }        // i0

  // Row i as a sparse row; nonnegative entries summing to 1 for a
  // well-formed chain (see validate()).
  SparseRow row(int i) const;

  // P(i,j); zero outside the stored support.
  double entry(int i, int j) const;

 private:
  int half_width_;
  int cutoff_;
  std::vector<SparseRow> boundary_rows_;
  BandRowFn band_row_;
};

// Invariant weights pi(0..k-1) on a finite window. Weights may be
// unnormalized: every downstream formula consumes ratios only, which is
// what makes targets known up to a constant usable.
class StationaryDist {
 public:
  StationaryDist(std::vector<double> weights, bool normalized);

  int window() const { return static_cast<int>(weights_.size()); }
  bool normalized() const { return normalized_; }

  double at(int i) const;        // throws OutOfWindow
  double ratio(int i) const;     // pi(i+1)/pi(i), throws OutOfWindow

  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
  bool normalized_;
};

// Asymptotic increment probabilities a_m, m = -N..N, summing to 1; the
// optional tail ratio is the limit of pi(i+1)/pi(i).
class LimitProfile {
 public:
  LimitProfile(int half_width, std::vector<double> coefficients,
               std::optional<double> tail_ratio = std::nullopt);

  int half_width() const { return half_width_; }
  // a_m for m in [-N, N].
  double coefficient(int m) const;
  const std::vector<double>& coefficients() const { return a_; }
  std::optional<double> tail_ratio() const { return tail_ratio_; }

 private:
  int half_width_;
  std::vector<double> a_;  // size 2N+1, index m + N
  std::optional<double> tail_ratio_;
};

// --- band_chain operations -------------------------------------------------

struct RowViolation {
  int row;
  std::string kind;   // "row-sum" | "negative-entry" | "band"
  double value;       // offending magnitude (deviation or entry)
};

struct ValidationReport {
  double max_row_sum_deviation = 0.0;
  std::vector<RowViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks rows 0..i_max for row sums (tolerance 1e-12), entry range and band
// structure. Reports everything it finds; never throws on bad data.
ValidationReport validate(const BandChain& chain, int i_max);

// Positive left fixed vector of the k-th truncated-and-augmented matrix,
// normalized to sum 1. Elimination is done in GTH form (no subtractions),
// so tiny tail weights keep full relative accuracy. Requires k > i0 + N.
StationaryDist stationary_truncated(const BandChain& chain, int k);

// P*(i,j) = pi(j) P(j,i) / pi(i).
double adjoint_entry(const BandChain& chain, const StationaryDist& pi,
                     int i, int j);

// | sum_m P(i+m,i) pi(i+m)/pi(i) - 1 | over offsets m = -N..N.
double check_invariance(const BandChain& chain, const StationaryDist& pi,
                        int i);

// Detailed balance on rows 0..i_max. Each pair residual
// |pi(i)P(i,j) - pi(j)P(j,i)| is measured relative to max(pi(i), pi(j)) so
// the verdict is meaningful when the window spans hundreds of orders of
// magnitude.
bool is_reversible(const BandChain& chain, const StationaryDist& pi,
                   int i_max, double tol);

}  // namespace specgap
