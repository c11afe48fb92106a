#pragma once

#include <optional>
#include <string>

#include "specgap/band_chain.hpp"

namespace specgap {

// How an essential-spectral-radius bound was obtained.
enum class Alpha0Method { profile, reversible, empirical };

struct Alpha0Result {
  double value = 0.0;
  Alpha0Method method = Alpha0Method::profile;
  std::optional<double> tau;        // tail ratio used, when one was
  bool window_estimate = false;     // true for the empirical sup over a window
  int ell = 0;                      // empirical scan start
  int i_max = 0;                    // empirical scan end
};

// Drift inequality certificate: (PV)(i) <= alpha V(i) + L for all probed i,
// with V(i) = pi(i)^(-1/2).
struct DriftCertificate {
  double alpha = 0.0;
  double L = 0.0;
  int probe_depth = 0;
  double max_tail_ratio = 0.0;  // max (PV)(i)/V(i) over the last quarter
};

struct NeriResult {
  bool holds = false;
  double drift = 0.0;  // sum_k k a_k
};

// psi(t) = sum_{k=-N..N} a_k t^(-k). Throws NonpositiveArgument for t <= 0.
double psi(const LimitProfile& profile, double t);

// The unique root of psi(t) = 1 in (0,1). Brackets by geometric scan (the
// root at t = 1 excluded), then bisects; psi is convex so the bracket is
// clean whenever the drift is negative. Throws NoRootInUnitInterval when
// psi > 1 throughout (0,1), DegenerateTailZero when all forward
// coefficients vanish (callers take the tau = 0 branch).
double solve_tau(const LimitProfile& profile);

// Negative expected asymptotic increment: sum_k k a_k < 0.
NeriResult neri(const LimitProfile& profile);

// alpha0 = psi(sqrt(tau)) for tau in (0,1); alpha0 = a_0 for tau = 0 (which
// requires all forward coefficients to vanish, else InconsistentTauZero).
Alpha0Result alpha0_from_profile(const LimitProfile& profile, double tau);

// Reversible form: alpha0 = 1 - sum_{m>=1} (sqrt(a_m) - sqrt(a_-m))^2.
Alpha0Result alpha0_reversible(const LimitProfile& profile);

// Window proxy sum_m sup_{ell<=i<=i_max} beta_m(i) with
// beta_m(i) = sqrt( P(i,i+m) P*(i+m,i) ). This is an estimate over the
// window, not a proof of the limsup bound; the result is flagged as such.
Alpha0Result alpha0_empirical(const BandChain& chain, const StationaryDist& pi,
                              int ell, int i_max);

// Smallest L making PV <= alpha V + L hold on the probe window, with a tail
// check that (PV)(i)/V(i) <= alpha on the last quarter (the ratio tends to
// alpha0, so a tail violation signals alpha <= alpha0).
DriftCertificate drift_constants(const BandChain& chain,
                                 const StationaryDist& pi, double alpha,
                                 int i_max);

}  // namespace specgap
