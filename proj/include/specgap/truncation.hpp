#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specgap/band_chain.hpp"
#include "specgap/dense_matrix.hpp"
#include "specgap/exec.hpp"

namespace specgap {

enum class RateVerdict {
  point_estimate,  // stabilized rho_k above alpha0: rho2 ~ rho_k
  upper_bound,     // stabilized rho_k at or below alpha0: rho2 <= alpha0
  inconclusive,    // k_max reached before stabilization
};

const char* to_string(RateVerdict v);

struct RateEstimate {
  double alpha0 = 0.0;
  double eps = 0.0;
  std::vector<std::pair<int, double>> trajectory;  // (k, rho_k), k increasing
  int final_k = 0;
  double final_rho = 0.0;
  RateVerdict verdict = RateVerdict::inconclusive;
  bool stabilized = false;

  // The reported rate: rho_k for a point estimate, alpha0 for an upper bound.
  double value() const {
    return verdict == RateVerdict::upper_bound ? alpha0 : final_rho;
  }
};

// k x k truncated-and-augmented matrix: columns j <= k-2 copied, the last
// column absorbs all tail mass sum_{l >= k-1} P(i,l). Rows stay stochastic.
DenseMatrix truncate(const BandChain& chain, int k);

// Largest modulus among the eigenvalues of a stochastic matrix after
// removing the single Perron root nearest 1. Throws PerronNotIsolated when
// that root is farther than 1e-8 from 1 or a second eigenvalue has modulus
// within 1e-10 of 1; NoSubdominant for order 1.
double rho_k(const DenseMatrix& m);

struct EstimateOptions {
  double eps = 1e-5;
  int k_start = 2;
  int k_max = 400;
  // Consecutive increments below eps required before declaring
  // stabilization (stricter than a single comparison, guards plateaus).
  int stable_steps = 3;
  // Margin on the rho_k vs alpha0 comparison so the verdict cannot
  // flip-flop at equality.
  double verdict_margin = 1e-6;
};

// Grows k until rho_k stabilizes, then compares against alpha0. Errors
// from rho_k are propagated annotated with the offending k.
RateEstimate estimate_rho2(const BandChain& chain, double alpha0,
                           const EstimateOptions& opt = {});

struct ChainWithAlpha0 {
  BandChain chain;
  double alpha0;
};

struct SweepPoint {
  double parameter = 0.0;
  std::optional<RateEstimate> estimate;
  std::string error;  // nonempty when this point failed
};

// Independent estimate per grid point, order preserved; points run
// concurrently under the parallel policy. A failing point records its
// error and the sweep continues.
std::vector<SweepPoint> parameter_sweep(
    const std::function<ChainWithAlpha0(double)>& builder,
    const std::vector<double>& grid, const EstimateOptions& opt = {},
    Exec exec = Exec::parallel);

}  // namespace specgap
