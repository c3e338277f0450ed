// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swapnet/experiments.hpp"

namespace swapnet {

// All writers: header row then one row per record, floats at 9 significant
// digits, UTF-8, LF line endings. Reruns with identical inputs produce
// byte-identical files. Empty record lists are an error and no file is
// written.

// Columns: C,l,stat_avg_mean,avg_range,std_of_means,n_tuples,n_inner,pruned_mass
void write_sweep_csv(const std::vector<SweepRecord>& records,
                     const std::string& path);
std::vector<SweepRecord> read_sweep_csv(const std::string& path);

// Columns: theta1,theta2,cbar_p1,cbar_p2,winner  (winner in {P1,P2,TIE})
void write_winner_csv(const WinnerMap& map, const std::string& path);

// Columns: bin_lo,bin_hi,count
void write_histogram_csv(const Histogram& hist, const std::string& path);

// Columns: l,m_l,c_th,residual,constrained,degenerate,xi
// xi repeats the global value on every row (empty when not fitted).
void write_fit_csv(const std::vector<FitResult>& fits, double xi,
                   const std::string& path);

// Columns: C,ratio
void write_ratio_csv(const std::vector<std::pair<double, double>>& curve,
                     const std::string& path);

std::string format_g9(double v);

}  // namespace swapnet
