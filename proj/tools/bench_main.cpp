// SPDX-License-Identifier: Apache-2.0

// Compares the OpenMP experiment kernels against their serial reference
// implementations on a medium workload: wall times, speedup, and a checksum
// confirming both paths produce identical records.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "swapnet/experiments.hpp"

using namespace swapnet;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t checksum(const std::vector<SweepRecord>& records) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    for (int k = 0; k < 8; ++k) {
      h ^= (bits >> (8 * k)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& r : records) {
    mix(r.stat_avg_mean);
    mix(r.avg_range);
    mix(r.std_of_means);
  }
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 0;  // machine parallelism
  if (argc > 1) threads = std::atoi(argv[1]);

  SweepConfig cfg;
  cfg.length = 2;
  cfg.n_fiducial = 6;
  cfg.n_per_side = 8;
  cfg.n_input_tuples = 60;
  cfg.seed = 7;
  cfg.grid = {0.2, 0.4, 0.6, 0.8};

  std::printf("workload: l=%d, %zu grid points, N=%d, %d inner tuples\n",
              cfg.length, cfg.grid.size(), cfg.n_fiducial, cfg.n_input_tuples);

  auto t0 = std::chrono::steady_clock::now();
  const auto serial = path_sweep_serial(cfg);
  const double t_serial = seconds_since(t0);

  cfg.threads = threads;
  t0 = std::chrono::steady_clock::now();
  const auto parallel = path_sweep(cfg);
  const double t_parallel = seconds_since(t0);

  const bool identical = checksum(serial) == checksum(parallel);
  std::printf("sweep     serial %.3fs | parallel %.3fs | speedup %.2fx | %s\n",
              t_serial, t_parallel, t_serial / t_parallel,
              identical ? "records identical" : "RECORDS DIFFER");

  const auto grid1 = linspace(0.0, 3.14159265358979323846, 48);
  const auto grid2 = linspace(0.0, 2.0 * 3.14159265358979323846, 48);
  const DensityMatrix fid = demo_fiducial();

  t0 = std::chrono::steady_clock::now();
  const WinnerMap wm_serial =
      optimal_path_map_serial(fid, grid1, grid2, 1.5707963267948966, 1.5707963267948966);
  const double w_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const WinnerMap wm_parallel =
      optimal_path_map(fid, grid1, grid2, 1.5707963267948966, 1.5707963267948966, threads);
  const double w_parallel = seconds_since(t0);

  bool map_identical = wm_serial.cells.size() == wm_parallel.cells.size();
  for (std::size_t k = 0; map_identical && k < wm_serial.cells.size(); ++k)
    map_identical = wm_serial.cells[k].cbar_p1 == wm_parallel.cells[k].cbar_p1 &&
                    wm_serial.cells[k].cbar_p2 == wm_parallel.cells[k].cbar_p2 &&
                    wm_serial.cells[k].winner == wm_parallel.cells[k].winner;
  std::printf("winnermap serial %.3fs | parallel %.3fs | speedup %.2fx | %s\n",
              w_serial, w_parallel, w_serial / w_parallel,
              map_identical ? "maps identical" : "MAPS DIFFER");

  return identical && map_identical ? 0 : 1;
}
