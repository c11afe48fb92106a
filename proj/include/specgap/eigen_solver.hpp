#pragma once

#include <complex>
#include <vector>

#include "specgap/dense_matrix.hpp"
#include "specgap/exec.hpp"

namespace specgap {

// Full spectrum of a dense real matrix.
struct Spectrum {
  std::vector<std::complex<double>> values;  // sorted by modulus, descending
  int qr_sweeps = 0;
  double trace_gap = 0.0;      // |sum(values) - trace(m)|
  double det_gap = 0.0;        // |prod(values) - det(m)| / max(1, |det|)
};

struct EigenOptions {
  bool balance = true;         // diagonal similarity scaling before reduction
  Exec exec = Exec::parallel;  // Hessenberg reduction kernel
  int max_order = 1024;
};

// All eigenvalues via Householder reduction to upper Hessenberg form
// followed by implicitly shifted (Francis double-shift) QR with deflation.
// Throws NoConvergence after 30n sweeps, ParameterDomain beyond max_order.
Spectrum eigenvalues(const DenseMatrix& m, const EigenOptions& opt = {});

// Diagnostics of a computed spectrum against its matrix.
struct SpectrumDiagnostics {
  double trace_gap = 0.0;
  double det_gap = 0.0;            // relative, as in Spectrum
  int pairing_violations = 0;      // complex values without a conjugate mate
  double nearest_to_one = 0.0;     // min |lambda - 1|
};

SpectrumDiagnostics spectrum_checks(const DenseMatrix& m, const Spectrum& s);

// Eigenvalues of a symmetric tridiagonal matrix (QL with implicit shifts).
// d = diagonal (size n), e = off-diagonal (size n-1). Ascending order.
std::vector<double> symmetric_tridiagonal_eigenvalues(std::vector<double> d,
                                                      std::vector<double> e);

// Fast path for tridiagonal matrices whose paired off-diagonal entries have
// nonnegative products (every reversible truncation qualifies): conjugate
// by the diagonal similarity that symmetrizes the matrix and run the QL
// solver. Agrees with the general path to ~1e-8 and returns real values.
std::vector<double> eigenvalues_tridiagonal_similarity(const DenseMatrix& m);

// --- kernels exposed for testing and benchmarking ---------------------------

// In-place reduction to upper Hessenberg form by Householder similarity.
// Serial and parallel paths are bit-identical.
void hessenberg_reduce(DenseMatrix& a, Exec exec = Exec::parallel);

// Osborne-style diagonal balancing (radix-2 scaling), in place.
void balance_in_place(DenseMatrix& a);

}  // namespace specgap
