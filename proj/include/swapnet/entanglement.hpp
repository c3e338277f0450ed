// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "swapnet/states.hpp"

namespace swapnet {

// Square-root eigenvalues of R = rho * spin_flip(rho), descending.
// C = max(0, mu[0] - mu[1] - mu[2] - mu[3]).
struct ConcurrenceSpectrum {
  std::array<double, 4> mu{};
};

// (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y); Hermitian, PSD, trace 1.
CMatrix spin_flip(const DensityMatrix& rho);

ConcurrenceSpectrum concurrence_spectrum(const DensityMatrix& rho);

// Wootters concurrence of an arbitrary two-qubit state, computed through
// the Hermitian reformulation sqrt(sqrt(rho) rho~ sqrt(rho)), which has the
// same spectrum as the non-Hermitian product rho*rho~ but needs only the
// Hermitian Jacobi kernel.
double concurrence(const DensityMatrix& rho);

// Closed-form concurrence for the parametric families; UnsupportedFamily
// for General.
double concurrence_closed_form(const StateFamily& family);

// Inverse of the single-parameter closed forms: builds a family instance
// whose closed-form concurrence equals c (PureSchmidt, Werner, Isotropic).
StateFamily param_for_concurrence(FamilyTag tag, double c);

}  // namespace swapnet
