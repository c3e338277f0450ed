// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swapnet/ensembles.hpp"
#include "swapnet/swap.hpp"

namespace swapnet {

// ---------------------------------------------------------------------------
// Sweep configuration and records
// ---------------------------------------------------------------------------

struct SweepConfig {
  int n_fiducial = 10;        // fixed-concurrence set size N
  int n_per_side = 20;        // unitaries per qubit per orbit ensemble
  int n_fiducial_tuples = 50; // Monte Carlo fiducial tuples when length > 2
  int n_input_tuples = 200;   // input tuples sampled per fiducial tuple
  std::uint64_t seed = 0;
  int length = 2;             // edges on the path
  std::vector<double> grid;   // strictly increasing concurrences in (0,1)
  int threads = 0;            // 0 = machine parallelism

  void validate() const;
};

std::vector<double> default_concurrence_grid();  // 0.05 .. 0.95 step 0.05

// Per-(C, l) statistics. stat_avg_mean is the grand mean of per-tuple means,
// avg_range the mean of per-tuple (max - min) spreads, std_of_means the
// sample standard deviation over tuple means.
struct SweepRecord {
  double c = 0.0;
  int length = 0;
  double stat_avg_mean = 0.0;
  double avg_range = 0.0;
  double std_of_means = 0.0;
  std::vector<double> tuple_means;
  std::vector<double> tuple_ranges;
  double pruned_mass = 0.0;  // worst per-evaluation pruned probability
  int n_tuples = 0;
  int n_inner = 0;
  int n_failures = 0;
};

// OpenMP kernel over (grid point, fiducial tuple) work items; aggregation
// order is fixed by item index, so records are identical for any thread
// count. path_sweep_serial is the plain loop-nest reference.
std::vector<SweepRecord> path_sweep(const SweepConfig& cfg);
std::vector<SweepRecord> path_sweep_serial(const SweepConfig& cfg);

// ---------------------------------------------------------------------------
// Single-swap ensemble statistics
// ---------------------------------------------------------------------------

struct PairStats {
  double mean = 0.0;
  double range = 0.0;
};

// Cross-pair mean and range of the swap average concurrence over two orbit
// ensembles (all |e1| x |e2| pairs).
PairStats pair_ensemble_stats(const OrbitEnsemble& e1, const OrbitEnsemble& e2,
                              int threads = 0);
PairStats pair_ensemble_stats_serial(const OrbitEnsemble& e1,
                                     const OrbitEnsemble& e2);

// ---------------------------------------------------------------------------
// Output-concurrence distribution
// ---------------------------------------------------------------------------

struct Histogram {
  std::vector<double> edges;        // bins + 1 ascending edges over [0, c^2]
  std::vector<std::size_t> counts;  // one per bin
  std::vector<double> samples;      // raw values, kept for quantile checks
};

Histogram concurrence_distribution(double c, int n_samples, int bins,
                                   std::uint64_t seed, int threads = 0);
Histogram concurrence_distribution_serial(double c, int n_samples, int bins,
                                          std::uint64_t seed);
// Test hook: explicit fiducials instead of generated ones.
Histogram concurrence_distribution_from(const DensityMatrix& fid1,
                                        const DensityMatrix& fid2, double c,
                                        int n_samples, int bins,
                                        std::uint64_t seed, int threads);

// ---------------------------------------------------------------------------
// Threshold fits
// ---------------------------------------------------------------------------

struct FitResult {
  int length = 0;
  double slope = 0.0;  // m_l
  double c_th = 0.0;
  double residual = 0.0;  // RMSE of the hinge model
  bool degenerate = false;
  bool constrained = false;
  double xi = std::numeric_limits<double>::quiet_NaN();  // global fits only
};

// Least-squares hinge fit mean = max(0, m * (C^l - c_th^l)). Outer grid
// search on c_th (step tol::fit_grid_step, refined to tol::fit_refine_step);
// the slope is solved in closed form, or pinned to 1/(1 - c_th^l) when
// `constrain` is set (unit mean at C = 1).
FitResult fit_threshold(const std::vector<std::pair<double, double>>& points,
                        int length, bool constrain);

// Weighted least-squares scale xi for the family c_th(l) = 1 - xi/l: each
// length contributes its implied xi = l*(1 - c_th(l)) with weight 1/l,
// giving xi = sum_l (1 - c_th(l)) / sum_l (1/l). Needs >= 3 lengths.
double fit_xi(const std::vector<FitResult>& fits);

// Largest fitted length whose predicted mean at per-edge concurrence c
// clears the task threshold c_star; nullopt when no length qualifies.
std::optional<int> max_useful_length(double c, double c_star,
                                     const std::vector<FitResult>& fits);

// (C, avg_range / stat_avg_mean) for records above the threshold filter
// (pass the fitted c_th; 0 keeps every point) with usable means.
std::vector<std::pair<double, double>> relative_range_curve(
    const std::vector<SweepRecord>& records, double c_th = 0.0);

// ---------------------------------------------------------------------------
// Two-path winner map
// ---------------------------------------------------------------------------

enum class PathWinner { P1, P2, Tie };

struct WinnerCell {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double cbar_p1 = 0.0;
  double cbar_p2 = 0.0;
  PathWinner winner = PathWinner::Tie;
};

struct WinnerMap {
  std::vector<WinnerCell> cells;  // row-major over (theta1, theta2)
  std::size_t n_theta1 = 0;
  std::size_t n_theta2 = 0;
};

// u(theta1, theta2) = [[cos(t1/2), -e^{-i t2} sin(t1/2)],
//                      [e^{i t2} sin(t1/2), cos(t1/2)]].
CMatrix rotation_u(double theta1, double theta2);

// Two alternate 2-edge paths from one fiducial: path 1 carries two copies
// of (u1 (x) u1) rho (.)^dagger with u1 = u(theta1, fixed_t2), path 2 two
// copies with u2 = u(fixed_t1, theta2). Each cell compares the two swap
// averages with a dead band of tol::winner_dead_band.
WinnerMap optimal_path_map(const DensityMatrix& fiducial,
                           const std::vector<double>& theta1_grid,
                           const std::vector<double>& theta2_grid,
                           double fixed_t2, double fixed_t1, int threads = 0);
WinnerMap optimal_path_map_serial(const DensityMatrix& fiducial,
                                  const std::vector<double>& theta1_grid,
                                  const std::vector<double>& theta2_grid,
                                  double fixed_t2, double fixed_t1);

std::vector<double> linspace(double lo, double hi, std::size_t n);

// Built-in rank-4 demo fiducial with concurrence ~0.497 used by the
// optimal-path experiment when no state file is given.
DensityMatrix demo_fiducial();

}  // namespace swapnet
