#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "specgap/band_chain.hpp"

namespace specgap {

// Birth-death rates as functions of the state: p(i) for i >= 1,
// r(i) and q(i) for i >= 0, with p_i + r_i + q_i = 1 (i >= 1) and
// r_0 + q_0 = 1.
struct BdmcSpec {
  std::function<double(int)> p;
  std::function<double(int)> r;
  std::function<double(int)> q;

  // State-independent rates with a free holding probability r0 at 0
  // (q_0 = 1 - r0).
  static BdmcSpec constant(double p, double q, double r, double r0);
};

// Proposal kernel of a Metropolis-Hastings chain; support must be
// symmetric (Q(i,j) = 0 iff Q(j,i) = 0), which mh_chain checks lazily on
// the rows it touches.
struct ProposalKernel {
  BandChain chain;
};

// Target distribution known up to a constant, supplied as successor
// ratios pi(i+1)/pi(i).
struct TargetRatios {
  std::function<double(int)> ratio;
  std::optional<double> tau;  // closed-form tail ratio when known

  // pi(j)/pi(i) as a product of successor ratios.
  double mass_ratio(int i, int j) const;

  // Unnormalized weights on {0..window-1}, anchored at the middle of the
  // window so superexponential targets stay inside double range.
  StationaryDist window_weights(int window) const;
};

// Ready-made targets.
TargetRatios poisson_unit_target();                 // ratio 1/(i+1), tau = 0
TargetRatios linear_geometric_target(double tau);   // pi ~ (i+1) tau^i

// --- constructors ------------------------------------------------------------

// Random walk with bounded increments: row i >= g is the coefficient
// vector a_{-g}..a_d shifted to position i; rows i < g are the supplied
// boundary rows. a is indexed a[0] = a_{-g} .. a[g+d] = a_d and must
// satisfy a_{-g} > 0, a_d > 0, sum = 1.
BandChain rw_chain(int g, int d, const std::vector<double>& a,
                   const std::vector<SparseRow>& boundary);

// The g=2, d=1 instance with two-parameter boundary
//   P(0,0)=a, P(0,1)=1-a, P(1,0)=b, P(1,2)=1-b
// and interior coefficients (a_-2, a_-1, a_0, a_1), default (1/2,1/3,0,1/6).
BandChain rw_g2d1_chain(double a, double b,
                        const std::vector<double>& coeffs = {
                            0.5, 1.0 / 3.0, 0.0, 1.0 / 6.0});

// Limit profile of an rw_chain (the coefficients themselves, padded to
// half-width max(g,d)).
LimitProfile rw_profile(int g, int d, const std::vector<double>& a);

// Tridiagonal birth-death chain from its rate functions.
BandChain bdmc_chain(const BdmcSpec& spec);

// Closed-form stationary weights pi(i) = prod_{j<=i} q_{j-1}/p_j, normalized
// by the partial sum over the window (a truncation of the full series).
// Throws NotPositiveRecurrent when the ratio test fails on the probe window.
StationaryDist bdmc_stationary(const BdmcSpec& spec, int k);

// Limit profile (p, r, q) of a birth-death chain with convergent rates.
LimitProfile bdmc_profile(double p, double q, double r);

// Metropolis-Hastings kernel: off-diagonal min(Q(i,j), pi(j)Q(j,i)/pi(i)),
// diagonal absorbing the remainder. Throws NegativeDiagonal if rounding
// drives a diagonal below -1e-12.
BandChain mh_chain(const TargetRatios& target, const ProposalKernel& proposal);

// Symmetric nearest-neighbour proposal: Q(i,i-1)=Q(i,i+1)=q, Q(i,i)=1-2q
// for i >= 1 and Q(0,0)=r, Q(0,1)=1-r. Requires r in (0,1), q in (0,1/2].
ProposalKernel proposal_rw(double r, double q);

// Limit coefficients of the M-H chain from the proposal limits q_m and the
// target tail ratio: p_k = min(q_k, tau^k q_{-k}) for k != 0, remainder on
// p_0. q_limits has size 2N+1 indexed m + N. For tau = 0 the forward
// coefficients vanish and p_{-m} = q_{-m}.
LimitProfile mh_limit_profile(const std::vector<double>& q_limits, double tau,
                              int half_width);

// Closed-form rate bound for the state-independent birth-death chain with
// boundary parameter r0: exact boundary eigenvalue when it dominates,
// otherwise the essential bound r + 2 sqrt(pq).
struct RateBound {
  double value = 0.0;
  bool is_exact = false;
};

RateBound bdmc_rate_bound(double p, double q, double r, double r0);

}  // namespace specgap
