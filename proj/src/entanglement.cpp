// SPDX-License-Identifier: Apache-2.0

#include "swapnet/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "swapnet/error.hpp"
#include "swapnet/numeric.hpp"

namespace swapnet {

namespace {

// sigma_y (x) sigma_y has a single anti-diagonal (-1, 1, 1, -1), so the
// conjugation Y rho^* Y reduces to index reversal with signs.
inline double yy_sign(std::size_t k) { return (k == 0 || k == 3) ? -1.0 : 1.0; }

}  // namespace

CMatrix spin_flip(const DensityMatrix& rho) {
  const CMatrix& m = rho.mat();
  CMatrix out(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      out(i, j) = yy_sign(i) * yy_sign(j) * std::conj(m(3 - i, 3 - j));
  return out;
}

ConcurrenceSpectrum concurrence_spectrum(const DensityMatrix& rho) {
  // Subnormalized eigenvector route: with rho = sum_k |w_k><w_k| and
  // w_k = sqrt(lambda_k) v_k, the mu's are the singular values of the
  // symmetric matrix W_km = w_k^T (sy (x) sy) w_m. W carries the grading
  // sqrt(lambda_k * lambda_m) explicitly, so small mu's of rank-deficient
  // states come out with absolute accuracy ~eps instead of ~sqrt(eps) from
  // eigenvalues of the squared product.
  const EigenSystem es = hermitian_eigensystem(rho.mat());
  std::array<double, 4> root{};
  for (std::size_t k = 0; k < 4; ++k) {
    const double lam = es.eigenvalues[k];
    if (lam < tol::psd_eigen_floor)
      throw Error("NotPSD", "state eigenvalue " + std::to_string(lam));
    root[k] = lam > 0.0 ? std::sqrt(lam) : 0.0;
  }

  CMatrix yv(4, 4);  // (sy (x) sy) V via the anti-diagonal shortcut
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      yv(i, k) = yy_sign(i) * es.eigenvectors(3 - i, k);

  CMatrix w(4, 4);
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t m = 0; m < 4; ++m) {
      cxd acc = 0.0;
      for (std::size_t i = 0; i < 4; ++i) acc += es.eigenvectors(i, k) * yv(i, m);
      w(k, m) = root[k] * root[m] * acc;
    }

  const auto sigma = singular_values(w);
  ConcurrenceSpectrum spec;
  for (std::size_t k = 0; k < 4; ++k) spec.mu[k] = sigma[k];
  return spec;
}

double concurrence(const DensityMatrix& rho) {
  const ConcurrenceSpectrum s = concurrence_spectrum(rho);
  return std::max(0.0, s.mu[0] - s.mu[1] - s.mu[2] - s.mu[3]);
}

double concurrence_closed_form(const StateFamily& family) {
  const auto& p = family.params;
  switch (family.tag) {
    case FamilyTag::PureSchmidt:
      return 2.0 * std::sqrt(p.at(0) * (1.0 - p.at(0)));
    case FamilyTag::Werner:
    case FamilyTag::Isotropic:
      return std::max(0.0, 1.0 - 1.5 * p.at(0));
    case FamilyTag::BellDiagonal:
      return std::max({0.0, std::abs(p.at(0) - p.at(1)) - (p.at(2) + p.at(3)),
                       std::abs(p.at(2) - p.at(3)) - (p.at(0) + p.at(1))});
    case FamilyTag::XState:
      return 2.0 * std::max({0.0, std::abs(p.at(4)) - std::sqrt(p.at(1) * p.at(2)),
                             std::abs(p.at(5)) - std::sqrt(p.at(0) * p.at(3))});
    case FamilyTag::General:
      throw Error("UnsupportedFamily", "no closed form for general states");
  }
  throw Error("UnsupportedFamily", "unknown tag");
}

StateFamily param_for_concurrence(FamilyTag tag, double c) {
  if (!(c >= 0.0 && c <= 1.0))
    throw Error("ParamOutOfRange", "target concurrence must lie in [0,1]");
  switch (tag) {
    case FamilyTag::PureSchmidt:
      return StateFamily{tag, {(1.0 + std::sqrt(1.0 - c * c)) / 2.0}};
    case FamilyTag::Werner:
    case FamilyTag::Isotropic:
      return StateFamily{tag, {2.0 * (1.0 - c) / 3.0}};
    default:
      throw Error("UnsupportedFamily",
                  std::string(family_name(tag)) + " has no concurrence inverse");
  }
}

}  // namespace swapnet
