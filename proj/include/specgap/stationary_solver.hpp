#pragma once

#include <vector>

#include "specgap/dense_matrix.hpp"
#include "specgap/exec.hpp"

namespace specgap {

// Stationary vector of a finite stochastic matrix by state-by-state
// censoring (GTH elimination). All updates are sums of products of
// nonnegative numbers, so every component of the result carries full
// relative accuracy even when the stationary weights span hundreds of
// orders of magnitude. Throws SingularSystem when some state cannot reach
// the lower states (reducible matrix).
//
// The returned vector is normalized to sum 1.
std::vector<double> gth_stationary(DenseMatrix p, Exec exec = Exec::parallel);

// Plain serial reference, kept verbatim for kernel testing; the parallel
// path must match it bit for bit.
std::vector<double> gth_stationary_serial(DenseMatrix p);

}  // namespace specgap
