// SPDX-License-Identifier: Apache-2.0

#include "swapnet/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "swapnet/error.hpp"
#include "swapnet/numeric.hpp"

namespace swapnet {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<cxd>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  CMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error("ShapeMismatch", "ragged initializer rows");
    std::size_t j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix CMatrix::conjugate() const {
  CMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    out.entries_[k] = std::conj(entries_[k]);
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

cxd CMatrix::trace() const {
  cxd t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : entries_) m = std::max(m, std::abs(v));
  return m;
}

bool CMatrix::is_finite() const {
  for (const auto& v : entries_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(cxd scale) {
  for (auto& v : entries_) v *= scale;
  return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw Error("ShapeMismatch", "matrix product");
  CMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const cxd a = lhs(i, k);
      if (a == cxd{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

CMatrix operator*(cxd scale, CMatrix m) { return m *= scale; }
CMatrix operator*(double scale, CMatrix m) { return m *= cxd{scale, 0.0}; }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  if (!a.is_finite() || !b.is_finite())
    throw Error("NotFinite", "kron input contains NaN/Inf");
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cxd aij = a(i, j);
      if (aij == cxd{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t m = 0; m < b.cols(); ++m)
          out(i * b.rows() + k, j * b.cols() + m) = aij * b(k, m);
    }
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

double hermiticity_defect(const CMatrix& h) {
  double m = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      m = std::max(m, std::abs(h(i, j) - std::conj(h(j, i))));
  return m;
}

namespace {

double max_offdiag(const CMatrix& h) {
  double m = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = i + 1; j < h.cols(); ++j) m = std::max(m, std::abs(h(i, j)));
  return m;
}

// One full cyclic sweep of two-sided Jacobi rotations; returns the rotated
// matrix in place and accumulates V when requested.
void jacobi_sweep(CMatrix& h, CMatrix* v, double zero_below) {
  const std::size_t n = h.rows();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const cxd hpq = h(p, q);
      const double r = std::abs(hpq);
      if (r <= zero_below) continue;
      const cxd phase = hpq / r;
      const double hpp = h(p, p).real();
      const double hqq = h(q, q).real();
      const double tau = (hqq - hpp) / (2.0 * r);
      const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                       (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const cxd s = phase * (t * c);

      // H <- J^dagger H J with J = I except J(p,p)=c, J(p,q)=s,
      // J(q,p)=-conj(s), J(q,q)=c.
      for (std::size_t k = 0; k < n; ++k) {
        const cxd hkp = h(k, p);
        const cxd hkq = h(k, q);
        h(k, p) = c * hkp - std::conj(s) * hkq;
        h(k, q) = s * hkp + c * hkq;
      }
      for (std::size_t k = 0; k < n; ++k) {
        const cxd hpk = h(p, k);
        const cxd hqk = h(q, k);
        h(p, k) = c * hpk - s * hqk;
        h(q, k) = std::conj(s) * hpk + c * hqk;
      }
      h(p, q) = 0.0;
      h(q, p) = 0.0;
      h(p, p) = cxd{h(p, p).real(), 0.0};
      h(q, q) = cxd{h(q, q).real(), 0.0};

      if (v != nullptr) {
        for (std::size_t k = 0; k < n; ++k) {
          const cxd vkp = (*v)(k, p);
          const cxd vkq = (*v)(k, q);
          (*v)(k, p) = c * vkp - std::conj(s) * vkq;
          (*v)(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
}

EigenSystem jacobi_diagonalize(const CMatrix& input, bool want_vectors) {
  if (input.rows() != input.cols())
    throw Error("ShapeMismatch", "eigensystem of non-square matrix");
  const double defect = hermiticity_defect(input);
  if (defect > tol::hermiticity)
    throw Error("NotHermitian",
                "defect " + std::to_string(defect) + " exceeds tolerance");

  const std::size_t n = input.rows();
  CMatrix h = input;
  // Work on the exactly-Hermitian part so round-off in the input cannot
  // leak into complex diagonal entries.
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = cxd{h(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const cxd avg = 0.5 * (h(i, j) + std::conj(h(j, i)));
      h(i, j) = avg;
      h(j, i) = std::conj(avg);
    }
  }

  CMatrix v = want_vectors ? CMatrix::identity(n) : CMatrix();
  const double threshold = tol::jacobi_offdiag * std::max(1.0, h.max_abs());

  int sweep = 0;
  while (max_offdiag(h) > threshold) {
    if (++sweep > tol::jacobi_max_sweeps)
      throw Error("NoConvergence", "Jacobi sweep cap reached");
    jacobi_sweep(h, want_vectors ? &v : nullptr, threshold * 1e-3);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return h(a, a).real() > h(b, b).real();
  });

  EigenSystem out;
  out.eigenvalues.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.eigenvalues[k] = h(order[k], order[k]).real();
  if (want_vectors) {
    out.eigenvectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace

EigenSystem hermitian_eigensystem(const CMatrix& h) {
  return jacobi_diagonalize(h, true);
}

std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
  return jacobi_diagonalize(h, false).eigenvalues;
}

std::vector<double> singular_values(const CMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  CMatrix a = m;

  auto column_dot = [&](std::size_t p, std::size_t q) {
    cxd acc = 0.0;
    for (std::size_t i = 0; i < rows; ++i) acc += std::conj(a(i, p)) * a(i, q);
    return acc;
  };

  // One-sided Jacobi: orthogonalize column pairs until the implicit Gram
  // matrix is diagonal; singular values are the final column norms.
  for (int sweep = 0;; ++sweep) {
    if (sweep > tol::jacobi_max_sweeps)
      throw Error("NoConvergence", "Jacobi SVD sweep cap reached");
    bool rotated = false;
    for (std::size_t p = 0; p < cols; ++p)
      for (std::size_t q = p + 1; q < cols; ++q) {
        const double hpp = column_dot(p, p).real();
        const double hqq = column_dot(q, q).real();
        const cxd hpq = column_dot(p, q);
        const double r = std::abs(hpq);
        if (r <= 1e-30 || r * r <= 1e-60 * hpp * hqq ||
            r <= 0.5e-15 * std::sqrt(hpp * hqq))
          continue;
        rotated = true;
        const cxd phase = hpq / r;
        const double tau = (hqq - hpp) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cxd s = phase * (t * c);
        for (std::size_t i = 0; i < rows; ++i) {
          const cxd aip = a(i, p);
          const cxd aiq = a(i, q);
          a(i, p) = c * aip - std::conj(s) * aiq;
          a(i, q) = s * aip + c * aiq;
        }
      }
    if (!rotated) break;
  }

  std::vector<double> sigma(cols);
  for (std::size_t k = 0; k < cols; ++k)
    sigma[k] = std::sqrt(column_dot(k, k).real());
  std::sort(sigma.begin(), sigma.end(), std::greater<double>());
  return sigma;
}

CMatrix psd_sqrt(const CMatrix& h) {
  EigenSystem es = hermitian_eigensystem(h);
  const std::size_t n = h.rows();
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    double lam = es.eigenvalues[k];
    if (lam < tol::psd_eigen_floor)
      throw Error("NotPSD", "eigenvalue " + std::to_string(lam) + " below floor");
    roots[k] = lam > 0.0 ? std::sqrt(lam) : 0.0;
  }
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cxd acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += es.eigenvectors(i, k) * roots[k] * std::conj(es.eigenvectors(j, k));
      out(i, j) = acc;
    }
  // Exact Hermitian symmetrization of the reconstruction.
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = cxd{out(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const cxd avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
      out(i, j) = avg;
      out(j, i) = std::conj(avg);
    }
  }
  return out;
}

}  // namespace swapnet
