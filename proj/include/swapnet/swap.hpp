// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "swapnet/entanglement.hpp"
#include "swapnet/numeric.hpp"
#include "swapnet/states.hpp"

namespace swapnet {

// One Bell-measurement branch. `state` is absent when the probability is
// at or below tol::branch_prune (degenerate outcome, 0/0 normalization).
struct SwapOutcome {
  int bell_index = 0;
  double probability = 0.0;
  std::optional<DensityMatrix> state;
};

// Bell-state measurement on the interior qubits of two pairs.
// Convention: rho1 lives on qubits (a,b), rho2 on (c,d); the joint index
// over (a,b,c,d) is 8*ia + 4*ib + 2*ic + id and the measurement acts on
// (b,c). Outcome states live on (a,d). Probabilities sum to 1.
std::array<SwapOutcome, 4> swap_pair(const DensityMatrix& rho1,
                                     const DensityMatrix& rho2);

// Probability-weighted concurrence of the four outcomes; pruned outcomes
// contribute nothing.
double average_swap_concurrence(const DensityMatrix& rho1,
                                const DensityMatrix& rho2);

struct PathSpec {
  std::vector<DensityMatrix> edge_states;
};

struct PathAverage {
  double value = 0.0;
  double pruned_mass = 0.0;  // total branch probability dropped by pruning
};

// Full enumeration of the 4^(l-1) outcome tree, reduced left to right:
// the running end-to-end state is swapped with the next edge state, so the
// running state's second qubit meets the new edge's first qubit at the
// measurement. Branches whose cumulative probability falls to
// tol::branch_prune or below are pruned and contribute 0.
PathAverage path_average_detailed(const PathSpec& path,
                                  int max_length = tol::max_path_length);
double path_average_concurrence(const PathSpec& path,
                                int max_length = tol::max_path_length);

enum class SwapOracle { Product, WernerPair };

// Product:    c1*c2 (pure x pure, pure x X-state, pure x mixed).
// WernerPair: max(0, (c1 + c2 + 2*c1*c2 - 1) / 3).
double predicted_single_swap(SwapOracle kind, double c1, double c2);

// max(0, (3/2) prod_k (1 + 2 c_k)/3 - 1/2): end-to-end average concurrence
// of a path of Werner edges with per-edge concurrences cs.
double werner_path_concurrence(const std::vector<double>& cs);

// (3^(1-1/l) - 1)/2: minimum per-edge Werner concurrence for a nonzero
// end-to-end average on an l-edge path.
double werner_threshold(int l);

}  // namespace swapnet
