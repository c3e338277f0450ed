// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared per-work-item evaluators behind the OpenMP kernels and their
// serial reference twins. Both drivers run the exact same item functions
// with the same derived Rng streams and aggregate in item order, which is
// what makes the two paths bitwise-identical.

#include <cstddef>
#include <utility>
#include <vector>

#include "swapnet/experiments.hpp"

namespace swapnet::detail {

// Stream-id tags; every derived Rng is keyed by (tag, indices...).
inline constexpr std::uint64_t kStreamFiducials = 1;
inline constexpr std::uint64_t kStreamTuples = 2;
inline constexpr std::uint64_t kStreamOrbit = 3;
inline constexpr std::uint64_t kStreamInner = 4;
inline constexpr std::uint64_t kStreamDistFiducials = 5;
inline constexpr std::uint64_t kStreamDistOrbit = 6;
inline constexpr std::uint64_t kStreamDistPick = 7;

struct SweepPlan {
  std::vector<FiducialSet> sets;                       // one per grid point
  std::vector<std::vector<std::vector<int>>> tuples;   // [c][tuple][edge]
  std::vector<std::pair<std::size_t, std::size_t>> items;  // flattened (c, tuple)
};

SweepPlan build_sweep_plan(const SweepConfig& cfg);

struct TupleOutcome {
  double mean = 0.0;
  double range = 0.0;
  double pruned = 0.0;  // worst single-evaluation pruned mass
  bool failed = false;
};

TupleOutcome evaluate_sweep_tuple(const SweepConfig& cfg, const FiducialSet& set,
                                  const std::vector<int>& tuple,
                                  std::size_t c_index, std::size_t tuple_index);

std::vector<SweepRecord> aggregate_sweep(const SweepConfig& cfg,
                                         const SweepPlan& plan,
                                         const std::vector<TupleOutcome>& outcomes);

struct DistributionPlan {
  OrbitEnsemble orbit1;
  OrbitEnsemble orbit2;
  std::vector<std::pair<std::size_t, std::size_t>> picks;  // member index pairs
};

DistributionPlan build_distribution_plan(const DensityMatrix& fid1,
                                         const DensityMatrix& fid2,
                                         int n_samples, std::uint64_t seed);

Histogram histogram_from_values(std::vector<double> values, double c, int bins);

double winner_axis_value(const DensityMatrix& fiducial, double theta1,
                         double theta2);

WinnerMap assemble_winner_map(const std::vector<double>& theta1_grid,
                              const std::vector<double>& theta2_grid,
                              const std::vector<double>& vals1,
                              const std::vector<double>& vals2);

}  // namespace swapnet::detail
