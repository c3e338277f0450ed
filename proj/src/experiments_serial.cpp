// SPDX-License-Identifier: Apache-2.0

// Serial reference implementations of the experiment kernels: the same
// per-item evaluators as the OpenMP drivers, run as plain loop nests. Kept
// for testing (the suites assert bitwise agreement with the parallel path)
// and as the baseline for the benchmark tool.

#include <algorithm>
#include <limits>

#include "experiments_detail.hpp"
#include "swapnet/error.hpp"
#include "swapnet/rng.hpp"

namespace swapnet {

std::vector<SweepRecord> path_sweep_serial(const SweepConfig& cfg) {
  const detail::SweepPlan plan = detail::build_sweep_plan(cfg);
  std::vector<detail::TupleOutcome> outcomes;
  outcomes.reserve(plan.items.size());
  for (const auto& [ci, ti] : plan.items)
    outcomes.push_back(detail::evaluate_sweep_tuple(cfg, plan.sets[ci],
                                                    plan.tuples[ci][ti], ci, ti));
  return detail::aggregate_sweep(cfg, plan, outcomes);
}

PairStats pair_ensemble_stats_serial(const OrbitEnsemble& e1,
                                     const OrbitEnsemble& e2) {
  if (e1.members.empty() || e2.members.empty())
    throw Error("ParamOutOfRange", "ensembles must be nonempty");
  PairStats stats;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  for (const DensityMatrix& a : e1.members)
    for (const DensityMatrix& b : e2.members) {
      const double v = average_swap_concurrence(a, b);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
    }
  stats.mean = sum / static_cast<double>(e1.members.size() * e2.members.size());
  stats.range = hi - lo;
  return stats;
}

Histogram concurrence_distribution_serial(double c, int n_samples, int bins,
                                          std::uint64_t seed) {
  if (!(c > 0.0 && c < 1.0)) throw Error("ParamOutOfRange", "c must lie in (0,1)");
  if (n_samples < 100) throw Error("ParamOutOfRange", "need at least 100 samples");
  if (bins < 1) throw Error("ParamOutOfRange", "need at least one bin");
  Rng fid_rng(seed, stream_id({detail::kStreamDistFiducials}));
  const FiducialSet set = fixed_concurrence_set(c, 2, fid_rng);
  const detail::DistributionPlan plan =
      detail::build_distribution_plan(set.members[0], set.members[1], n_samples, seed);
  std::vector<double> values;
  values.reserve(plan.picks.size());
  for (const auto& [m1, m2] : plan.picks)
    values.push_back(average_swap_concurrence(plan.orbit1.members[m1],
                                              plan.orbit2.members[m2]));
  return detail::histogram_from_values(std::move(values), c, bins);
}

WinnerMap optimal_path_map_serial(const DensityMatrix& fiducial,
                                  const std::vector<double>& theta1_grid,
                                  const std::vector<double>& theta2_grid,
                                  double fixed_t2, double fixed_t1) {
  if (theta1_grid.empty() || theta2_grid.empty())
    throw Error("ParamOutOfRange", "winner map needs nonempty angle grids");
  std::vector<double> vals1, vals2;
  vals1.reserve(theta1_grid.size());
  vals2.reserve(theta2_grid.size());
  for (double t1 : theta1_grid)
    vals1.push_back(detail::winner_axis_value(fiducial, t1, fixed_t2));
  for (double t2 : theta2_grid)
    vals2.push_back(detail::winner_axis_value(fiducial, fixed_t1, t2));
  return detail::assemble_winner_map(theta1_grid, theta2_grid, vals1, vals2);
}

}  // namespace swapnet
