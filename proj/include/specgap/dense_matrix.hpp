#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "specgap/errors.hpp"

namespace specgap {

// Dense square real matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;

  explicit DenseMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
    if (n < 1) throw ParameterDomain("DenseMatrix: order must be >= 1");
  }

  DenseMatrix(int n, std::initializer_list<double> entries) : DenseMatrix(n) {
    if (entries.size() != a_.size())
      throw ParameterDomain("DenseMatrix: entry count does not match order");
    std::copy(entries.begin(), entries.end(), a_.begin());
  }

  int order() const { return n_; }

  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double row_sum(int i) const {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j);
    return s;
  }

  // max_i sum_j |a(i,j)|
  double inf_norm() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i) {
      double s = 0.0;
      for (int j = 0; j < n_; ++j) s += std::fabs((*this)(i, j));
      m = std::max(m, s);
    }
    return m;
  }

  bool all_finite() const {
    for (double x : a_)
      if (!std::isfinite(x)) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

// Determinant by LU with partial pivoting (sign tracked). Returns 0 for a
// numerically singular matrix.
double determinant(DenseMatrix m);

}  // namespace specgap
