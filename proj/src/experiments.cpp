// SPDX-License-Identifier: Apache-2.0

#include "swapnet/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "experiments_detail.hpp"
#include "swapnet/error.hpp"
#include "swapnet/parallel.hpp"

namespace swapnet {

void SweepConfig::validate() const {
  if (n_fiducial < 1 || n_per_side < 1 || n_fiducial_tuples < 1 || n_input_tuples < 1)
    throw Error("ParamOutOfRange", "all sweep counts must be >= 1");
  if (length < 2) throw Error("ParamOutOfRange", "sweep length must be >= 2");
  if (length > tol::max_path_length)
    throw Error("PathTooLong", "sweep length exceeds path cap");
  if (grid.empty()) throw Error("ParamOutOfRange", "empty concurrence grid");
  double prev = 0.0;
  for (double c : grid) {
    if (!(c > 0.0 && c < 1.0))
      throw Error("ParamOutOfRange", "grid concurrences must lie in (0,1)");
    if (c <= prev) throw Error("ParamOutOfRange", "grid must be strictly increasing");
    prev = c;
  }
}

std::vector<double> default_concurrence_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 19; ++k) grid.push_back(0.05 * k);
  return grid;
}

namespace detail {

SweepPlan build_sweep_plan(const SweepConfig& cfg) {
  cfg.validate();
  SweepPlan plan;
  plan.sets.reserve(cfg.grid.size());
  plan.tuples.resize(cfg.grid.size());
  const int n = cfg.n_fiducial;
  for (std::size_t ci = 0; ci < cfg.grid.size(); ++ci) {
    Rng fid_rng(cfg.seed, stream_id({kStreamFiducials, ci}));
    plan.sets.push_back(fixed_concurrence_set(cfg.grid[ci], n, fid_rng));

    auto& tuples = plan.tuples[ci];
    if (cfg.length == 2) {
      // Full cross product over ordered fiducial pairs.
      tuples.reserve(static_cast<std::size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tuples.push_back({i, j});
    } else {
      Rng tuple_rng(cfg.seed, stream_id({kStreamTuples, ci}));
      tuples.reserve(static_cast<std::size_t>(cfg.n_fiducial_tuples));
      for (int t = 0; t < cfg.n_fiducial_tuples; ++t) {
        std::vector<int> tuple(static_cast<std::size_t>(cfg.length));
        for (auto& e : tuple)
          e = static_cast<int>(tuple_rng.below(static_cast<std::uint64_t>(n)));
        tuples.push_back(std::move(tuple));
      }
    }
    for (std::size_t t = 0; t < tuples.size(); ++t) plan.items.emplace_back(ci, t);
  }
  return plan;
}

TupleOutcome evaluate_sweep_tuple(const SweepConfig& cfg, const FiducialSet& set,
                                  const std::vector<int>& tuple,
                                  std::size_t c_index, std::size_t tuple_index) {
  TupleOutcome out;
  try {
    std::vector<OrbitEnsemble> orbits;
    orbits.reserve(tuple.size());
    for (std::size_t e = 0; e < tuple.size(); ++e) {
      Rng orbit_rng(cfg.seed, stream_id({kStreamOrbit, c_index, tuple_index, e}));
      orbits.push_back(local_orbit(set.members[static_cast<std::size_t>(tuple[e])],
                                   cfg.n_per_side, orbit_rng));
    }
    const std::uint64_t n_members = orbits.front().members.size();

    Rng pick(cfg.seed, stream_id({kStreamInner, c_index, tuple_index}));
    double sum = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < cfg.n_input_tuples; ++s) {
      PathSpec path;
      path.edge_states.reserve(tuple.size());
      for (const auto& orbit : orbits)
        path.edge_states.push_back(orbit.members[pick.below(n_members)]);
      const PathAverage pa = path_average_detailed(path);
      sum += pa.value;
      lo = std::min(lo, pa.value);
      hi = std::max(hi, pa.value);
      out.pruned = std::max(out.pruned, pa.pruned_mass);
    }
    out.mean = sum / cfg.n_input_tuples;
    out.range = hi - lo;
  } catch (const Error&) {
    out.failed = true;
  }
  return out;
}

std::vector<SweepRecord> aggregate_sweep(const SweepConfig& cfg,
                                         const SweepPlan& plan,
                                         const std::vector<TupleOutcome>& outcomes) {
  std::vector<SweepRecord> records(cfg.grid.size());
  std::size_t item = 0;
  for (std::size_t ci = 0; ci < cfg.grid.size(); ++ci) {
    SweepRecord& rec = records[ci];
    rec.c = cfg.grid[ci];
    rec.length = cfg.length;
    rec.n_inner = cfg.n_input_tuples;
    for (std::size_t t = 0; t < plan.tuples[ci].size(); ++t, ++item) {
      const TupleOutcome& out = outcomes[item];
      if (out.failed) {
        ++rec.n_failures;
        continue;
      }
      rec.tuple_means.push_back(out.mean);
      rec.tuple_ranges.push_back(out.range);
      rec.pruned_mass = std::max(rec.pruned_mass, out.pruned);
    }
    rec.n_tuples = static_cast<int>(rec.tuple_means.size());
    if (rec.n_tuples == 0) continue;
    double sum_mean = 0.0, sum_range = 0.0;
    for (int t = 0; t < rec.n_tuples; ++t) {
      sum_mean += rec.tuple_means[static_cast<std::size_t>(t)];
      sum_range += rec.tuple_ranges[static_cast<std::size_t>(t)];
    }
    rec.stat_avg_mean = sum_mean / rec.n_tuples;
    rec.avg_range = sum_range / rec.n_tuples;
    if (rec.n_tuples > 1) {
      double ss = 0.0;
      for (double m : rec.tuple_means) {
        const double d = m - rec.stat_avg_mean;
        ss += d * d;
      }
      rec.std_of_means = std::sqrt(ss / (rec.n_tuples - 1));
    }
  }
  return records;
}

DistributionPlan build_distribution_plan(const DensityMatrix& fid1,
                                         const DensityMatrix& fid2,
                                         int n_samples, std::uint64_t seed) {
  DistributionPlan plan{OrbitEnsemble{fid1, {}, {}}, OrbitEnsemble{fid2, {}, {}}, {}};
  Rng orbit1_rng(seed, stream_id({kStreamDistOrbit, 0}));
  Rng orbit2_rng(seed, stream_id({kStreamDistOrbit, 1}));
  plan.orbit1 = local_orbit(fid1, 20, orbit1_rng);
  plan.orbit2 = local_orbit(fid2, 20, orbit2_rng);
  Rng pick(seed, stream_id({kStreamDistPick}));
  const std::uint64_t n1 = plan.orbit1.members.size();
  const std::uint64_t n2 = plan.orbit2.members.size();
  plan.picks.reserve(static_cast<std::size_t>(n_samples));
  for (int s = 0; s < n_samples; ++s)
    plan.picks.emplace_back(pick.below(n1), pick.below(n2));
  return plan;
}

Histogram histogram_from_values(std::vector<double> values, double c, int bins) {
  Histogram h;
  const double top = c * c;
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int k = 0; k <= bins; ++k)
    h.edges[static_cast<std::size_t>(k)] = top * k / bins;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double v : values) {
    int bin = static_cast<int>(std::floor(v / top * bins));
    bin = std::clamp(bin, 0, bins - 1);  // right edge closes the last bin
    ++h.counts[static_cast<std::size_t>(bin)];
  }
  h.samples = std::move(values);
  return h;
}

double winner_axis_value(const DensityMatrix& fiducial, double theta1,
                         double theta2) {
  const CMatrix u = rotation_u(theta1, theta2);
  const DensityMatrix edge = rotate_bilateral(fiducial, u, u);
  return average_swap_concurrence(edge, edge);
}

WinnerMap assemble_winner_map(const std::vector<double>& theta1_grid,
                              const std::vector<double>& theta2_grid,
                              const std::vector<double>& vals1,
                              const std::vector<double>& vals2) {
  WinnerMap map;
  map.n_theta1 = theta1_grid.size();
  map.n_theta2 = theta2_grid.size();
  map.cells.reserve(map.n_theta1 * map.n_theta2);
  for (std::size_t i = 0; i < map.n_theta1; ++i)
    for (std::size_t j = 0; j < map.n_theta2; ++j) {
      WinnerCell cell;
      cell.theta1 = theta1_grid[i];
      cell.theta2 = theta2_grid[j];
      cell.cbar_p1 = vals1[i];
      cell.cbar_p2 = vals2[j];
      if (cell.cbar_p1 > cell.cbar_p2 + tol::winner_dead_band)
        cell.winner = PathWinner::P1;
      else if (cell.cbar_p2 > cell.cbar_p1 + tol::winner_dead_band)
        cell.winner = PathWinner::P2;
      else
        cell.winner = PathWinner::Tie;
      map.cells.push_back(cell);
    }
  return map;
}

}  // namespace detail

std::vector<SweepRecord> path_sweep(const SweepConfig& cfg) {
  const detail::SweepPlan plan = detail::build_sweep_plan(cfg);
  std::vector<detail::TupleOutcome> outcomes(plan.items.size());
  parallel_for_index(plan.items.size(), cfg.threads, [&](std::size_t i) {
    const auto [ci, ti] = plan.items[i];
    outcomes[i] = detail::evaluate_sweep_tuple(cfg, plan.sets[ci],
                                               plan.tuples[ci][ti], ci, ti);
  });
  return detail::aggregate_sweep(cfg, plan, outcomes);
}

PairStats pair_ensemble_stats(const OrbitEnsemble& e1, const OrbitEnsemble& e2,
                              int threads) {
  if (e1.members.empty() || e2.members.empty())
    throw Error("ParamOutOfRange", "ensembles must be nonempty");
  const std::size_t n2 = e2.members.size();
  std::vector<double> values(e1.members.size() * n2);
  parallel_for_index(values.size(), threads, [&](std::size_t k) {
    values[k] = average_swap_concurrence(e1.members[k / n2], e2.members[k % n2]);
  });
  PairStats stats;
  double lo = values[0], hi = values[0], sum = 0.0;
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
  }
  stats.mean = sum / static_cast<double>(values.size());
  stats.range = hi - lo;
  return stats;
}

Histogram concurrence_distribution(double c, int n_samples, int bins,
                                   std::uint64_t seed, int threads) {
  if (!(c > 0.0 && c < 1.0)) throw Error("ParamOutOfRange", "c must lie in (0,1)");
  Rng fid_rng(seed, stream_id({detail::kStreamDistFiducials}));
  const FiducialSet set = fixed_concurrence_set(c, 2, fid_rng);
  return concurrence_distribution_from(set.members[0], set.members[1], c,
                                       n_samples, bins, seed, threads);
}

Histogram concurrence_distribution_from(const DensityMatrix& fid1,
                                        const DensityMatrix& fid2, double c,
                                        int n_samples, int bins,
                                        std::uint64_t seed, int threads) {
  if (n_samples < 100) throw Error("ParamOutOfRange", "need at least 100 samples");
  if (bins < 1) throw Error("ParamOutOfRange", "need at least one bin");
  const detail::DistributionPlan plan =
      detail::build_distribution_plan(fid1, fid2, n_samples, seed);
  std::vector<double> values(plan.picks.size());
  parallel_for_index(values.size(), threads, [&](std::size_t i) {
    const auto [m1, m2] = plan.picks[i];
    values[i] = average_swap_concurrence(plan.orbit1.members[m1],
                                         plan.orbit2.members[m2]);
  });
  return detail::histogram_from_values(std::move(values), c, bins);
}

FitResult fit_threshold(const std::vector<std::pair<double, double>>& points,
                        int length, bool constrain) {
  if (points.size() < 5)
    throw Error("InsufficientData", "threshold fit needs >= 5 points");
  const double l = static_cast<double>(length);

  FitResult fit;
  fit.length = length;
  fit.constrained = constrain;

  double max_mean = 0.0;
  for (const auto& [c, mean] : points) max_mean = std::max(max_mean, std::abs(mean));
  if (max_mean <= 1e-12) {
    fit.degenerate = true;
    fit.c_th = 0.995;  // upper edge of the search grid
    fit.slope = constrain ? 1.0 / (1.0 - std::pow(fit.c_th, l)) : 0.0;
    return fit;
  }

  auto evaluate = [&](double c_th, double& slope_out) {
    const double edge = std::pow(c_th, l);
    double slope;
    if (constrain) {
      slope = 1.0 / (1.0 - edge);
    } else {
      double num = 0.0, den = 0.0;
      for (const auto& [c, mean] : points) {
        const double x = std::pow(c, l) - edge;
        if (x <= 0.0) continue;
        num += x * mean;
        den += x * x;
      }
      slope = den > 0.0 ? std::max(0.0, num / den) : 0.0;
    }
    double ss = 0.0;
    for (const auto& [c, mean] : points) {
      const double model = std::max(0.0, slope * (std::pow(c, l) - edge));
      const double r = mean - model;
      ss += r * r;
    }
    slope_out = slope;
    return std::sqrt(ss / static_cast<double>(points.size()));
  };

  auto scan = [&](double lo, double hi, double step) {
    double best_cth = lo, best_slope = 0.0;
    double best_rmse = std::numeric_limits<double>::infinity();
    for (double c_th = lo; c_th < hi + 0.5 * step; c_th += step) {
      const double clamped = std::min(c_th, 1.0 - 1e-9);
      double slope;
      const double rmse = evaluate(clamped, slope);
      if (rmse < best_rmse) {
        best_rmse = rmse;
        best_cth = clamped;
        best_slope = slope;
      }
    }
    fit.c_th = best_cth;
    fit.slope = best_slope;
    fit.residual = best_rmse;
  };

  scan(0.0, 0.995, tol::fit_grid_step);
  scan(std::max(0.0, fit.c_th - tol::fit_grid_step),
       std::min(0.9999, fit.c_th + tol::fit_grid_step), tol::fit_refine_step);
  return fit;
}

double fit_xi(const std::vector<FitResult>& fits) {
  std::vector<int> lengths;
  double num = 0.0, den = 0.0;
  for (const FitResult& f : fits) {
    if (std::find(lengths.begin(), lengths.end(), f.length) == lengths.end())
      lengths.push_back(f.length);
    num += 1.0 - f.c_th;
    den += 1.0 / static_cast<double>(f.length);
  }
  if (lengths.size() < 3)
    throw Error("InsufficientData", "xi fit needs >= 3 distinct lengths");
  return num / den;
}

std::optional<int> max_useful_length(double c, double c_star,
                                     const std::vector<FitResult>& fits) {
  std::optional<int> best;
  for (const FitResult& f : fits) {
    const double l = static_cast<double>(f.length);
    const double predicted = f.slope * (std::pow(c, l) - std::pow(f.c_th, l));
    if (predicted >= c_star && (!best || f.length > *best)) best = f.length;
  }
  return best;
}

std::vector<std::pair<double, double>> relative_range_curve(
    const std::vector<SweepRecord>& records, double c_th) {
  std::vector<std::pair<double, double>> curve;
  for (const SweepRecord& rec : records)
    if (rec.c > c_th && rec.stat_avg_mean > tol::ratio_mean_floor)
      curve.emplace_back(rec.c, rec.avg_range / rec.stat_avg_mean);
  return curve;
}

CMatrix rotation_u(double theta1, double theta2) {
  const double ch = std::cos(theta1 / 2.0);
  const double sh = std::sin(theta1 / 2.0);
  CMatrix u(2, 2);
  u(0, 0) = ch;
  u(0, 1) = -std::exp(cxd{0.0, -theta2}) * sh;
  u(1, 0) = std::exp(cxd{0.0, theta2}) * sh;
  u(1, 1) = ch;
  return u;
}

WinnerMap optimal_path_map(const DensityMatrix& fiducial,
                           const std::vector<double>& theta1_grid,
                           const std::vector<double>& theta2_grid,
                           double fixed_t2, double fixed_t1, int threads) {
  if (theta1_grid.empty() || theta2_grid.empty())
    throw Error("ParamOutOfRange", "winner map needs nonempty angle grids");
  // cbar_p1 depends on theta1 only and cbar_p2 on theta2 only, so evaluate
  // the two axes and combine.
  const std::size_t n1 = theta1_grid.size();
  const std::size_t n2 = theta2_grid.size();
  std::vector<double> vals1(n1), vals2(n2);
  parallel_for_index(n1 + n2, threads, [&](std::size_t k) {
    if (k < n1)
      vals1[k] = detail::winner_axis_value(fiducial, theta1_grid[k], fixed_t2);
    else
      vals2[k - n1] =
          detail::winner_axis_value(fiducial, fixed_t1, theta2_grid[k - n1]);
  });
  return detail::assemble_winner_map(theta1_grid, theta2_grid, vals1, vals2);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t k = 0; k < n; ++k)
    out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  return out;
}

DensityMatrix demo_fiducial() {
  const CMatrix m = CMatrix::from_rows({
      {0.115, -0.093, -0.113, -0.145},
      {-0.093, 0.373, 0.154, 0.320},
      {-0.113, 0.154, 0.152, 0.161},
      {-0.145, 0.320, 0.161, 0.360},
  });
  return validate_density_matrix(m);
}

}  // namespace swapnet
