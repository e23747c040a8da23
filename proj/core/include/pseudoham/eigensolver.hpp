#pragma once

#include <cstddef>
#include <vector>

namespace pseudoham {

/// Dense square matrix of doubles, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double* row(std::size_t i) { return data_.data() + i * n_; }
  const double* row(std::size_t i) const { return data_.data() + i * n_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// All eigenvalues of a symmetric matrix, descending. Householder reduction to
/// tridiagonal form followed by implicit QL with Wilkinson-type shifts. Only the
/// lower triangle is read; the argument is consumed as workspace.
std::vector<double> symmetric_eigenvalues(DenseMatrix a);

}  // namespace pseudoham
