// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "swapnet/rng.hpp"
#include "swapnet/states.hpp"

namespace swapnet {

// Haar-random 2x2 unitary via the Ginibre/QR route: complex standard-normal
// matrix, QR factorization, diagonal phase fix D = diag(R_kk/|R_kk|),
// u = Q*D. Redraws internally if a pivot degenerates.
CMatrix haar_unitary(Rng& rng);

// Ginibre-induced full-rank mixed state G*G^dagger / Tr(G*G^dagger).
DensityMatrix random_full_rank_state(Rng& rng);

// Random valid X-state: Dirichlet-flat diagonal, off-diagonals uniform
// inside the 2x2 block positivity bounds.
DensityMatrix random_x_state(Rng& rng);

// (ua (x) ub)|Phi+>: a Haar-random maximally entangled pure state.
PureState random_max_entangled(Rng& rng);

// Local-unitary orbit sample of a fiducial state: n_per_side unitaries per
// qubit, one member per (ua, ub) pair. Concurrence, purity and rank of
// every member match the fiducial.
struct OrbitEnsemble {
  DensityMatrix fiducial;
  std::vector<DensityMatrix> members;
  std::vector<std::pair<CMatrix, CMatrix>> unitaries;  // aligned with members
};

OrbitEnsemble local_orbit(const DensityMatrix& rho, int n_per_side, Rng& rng);

// Deterministic orbit from caller-supplied unitary lists (test hook and
// the building block behind local_orbit).
OrbitEnsemble orbit_from_unitaries(const DensityMatrix& rho,
                                   const std::vector<CMatrix>& side_a,
                                   const std::vector<CMatrix>& side_b);

// N full-rank states sharing one concurrence but spanning purities, pairwise
// purity gap > tol::purity_gap_min (distinct purity implies distinct
// local-unitary orbit). Members are built by mixing a Ginibre state with a
// random maximally entangled pure state and bisecting the mixing weight
// until the concurrence hits the target.
struct FiducialSet {
  double target_concurrence = 0.0;
  std::vector<DensityMatrix> members;
};

FiducialSet fixed_concurrence_set(double c, int n, Rng& rng);

// Dump format: one header line "C=<value> N=<count> seed=<seed>", then each
// member in the 4-line density-matrix text format, blank line separated.
void save_fiducial_set(const std::string& path, const FiducialSet& set,
                       std::uint64_t seed);
FiducialSet load_fiducial_set(const std::string& path);

}  // namespace swapnet
