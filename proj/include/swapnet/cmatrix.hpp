// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace swapnet {

using cxd = std::complex<double>;

// Dense row-major complex matrix. The toolkit only ever needs 2x2 through
// 16x16, so everything here favors clarity over asymptotic cleverness.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static CMatrix identity(std::size_t n);
  static CMatrix from_rows(std::initializer_list<std::initializer_list<cxd>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cxd& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const cxd& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<cxd>& entries() const { return entries_; }
  std::vector<cxd>& entries() { return entries_; }

  CMatrix adjoint() const;
  CMatrix conjugate() const;
  CMatrix transpose() const;
  cxd trace() const;
  double max_abs() const;
  bool is_finite() const;

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(cxd scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cxd> entries_;
};

CMatrix operator+(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix lhs, const CMatrix& rhs);
CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);
CMatrix operator*(cxd scale, CMatrix m);
CMatrix operator*(double scale, CMatrix m);

// Kronecker product: out[(i*b.rows+k),(j*b.cols+m)] = a(i,j)*b(k,m).
CMatrix kron(const CMatrix& a, const CMatrix& b);

double max_abs_diff(const CMatrix& a, const CMatrix& b);

// max-norm of h - h^dagger; 0 for exactly Hermitian input.
double hermiticity_defect(const CMatrix& h);

struct EigenSystem {
  std::vector<double> eigenvalues;  // descending
  CMatrix eigenvectors;             // orthonormal columns, paired with values
};

// Cyclic Jacobi diagonalization for Hermitian matrices. Throws
// Error("NotHermitian") when the defect exceeds tol::hermiticity and
// Error("NoConvergence") past tol::jacobi_max_sweeps sweeps.
EigenSystem hermitian_eigensystem(const CMatrix& h);

// Same solver without eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const CMatrix& h);

// Hermitian PSD square root via the eigensystem. Eigenvalues inside the
// clamp window [tol::psd_eigen_floor, 0) are treated as 0; anything lower
// raises Error("NotPSD").
CMatrix psd_sqrt(const CMatrix& h);

// Singular values, descending, by one-sided Jacobi on the columns. Unlike
// sqrt-of-Gram-eigenvalues this keeps absolute accuracy ~eps*sigma_max on
// the small singular values of rank-deficient input.
std::vector<double> singular_values(const CMatrix& m);

}  // namespace swapnet
