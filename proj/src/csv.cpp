// SPDX-License-Identifier: Apache-2.0

#include "swapnet/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "swapnet/error.hpp"

namespace swapnet {

std::string format_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
  if (!out) throw Error("IoError", "cannot open " + path + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Error("IoError", "write failed for " + path);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

void write_sweep_csv(const std::vector<SweepRecord>& records,
                     const std::string& path) {
  if (records.empty()) throw Error("InsufficientData", "no sweep records to write");
  auto out = open_for_write(path);
  out << "C,l,stat_avg_mean,avg_range,std_of_means,n_tuples,n_inner,pruned_mass\n";
  for (const SweepRecord& r : records) {
    out << format_g9(r.c) << ',' << r.length << ',' << format_g9(r.stat_avg_mean)
        << ',' << format_g9(r.avg_range) << ',' << format_g9(r.std_of_means) << ','
        << r.n_tuples << ',' << r.n_inner << ',' << format_g9(r.pruned_mass)
        << '\n';
  }
  finish(out, path);
}

std::vector<SweepRecord> read_sweep_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw Error("ParseError", "empty CSV " + path);
  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() < 8) throw Error("ParseError", "short sweep row: " + line);
    try {
      SweepRecord r;
      r.c = std::stod(f[0]);
      r.length = std::stoi(f[1]);
      r.stat_avg_mean = std::stod(f[2]);
      r.avg_range = std::stod(f[3]);
      r.std_of_means = std::stod(f[4]);
      r.n_tuples = std::stoi(f[5]);
      r.n_inner = std::stoi(f[6]);
      r.pruned_mass = std::stod(f[7]);
      records.push_back(std::move(r));
    } catch (const std::exception&) {
      throw Error("ParseError", "bad sweep row: " + line);
    }
  }
  return records;
}

void write_winner_csv(const WinnerMap& map, const std::string& path) {
  if (map.cells.empty()) throw Error("InsufficientData", "no winner cells to write");
  auto out = open_for_write(path);
  out << "theta1,theta2,cbar_p1,cbar_p2,winner\n";
  for (const WinnerCell& c : map.cells) {
    const char* w = c.winner == PathWinner::P1   ? "P1"
                    : c.winner == PathWinner::P2 ? "P2"
                                                 : "TIE";
    out << format_g9(c.theta1) << ',' << format_g9(c.theta2) << ','
        << format_g9(c.cbar_p1) << ',' << format_g9(c.cbar_p2) << ',' << w << '\n';
  }
  finish(out, path);
}

void write_histogram_csv(const Histogram& hist, const std::string& path) {
  if (hist.counts.empty()) throw Error("InsufficientData", "empty histogram");
  auto out = open_for_write(path);
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t k = 0; k < hist.counts.size(); ++k)
    out << format_g9(hist.edges[k]) << ',' << format_g9(hist.edges[k + 1]) << ','
        << hist.counts[k] << '\n';
  finish(out, path);
}

void write_fit_csv(const std::vector<FitResult>& fits, double xi,
                   const std::string& path) {
  if (fits.empty()) throw Error("InsufficientData", "no fits to write");
  auto out = open_for_write(path);
  out << "l,m_l,c_th,residual,constrained,degenerate,xi\n";
  for (const FitResult& f : fits) {
    out << f.length << ',' << format_g9(f.slope) << ',' << format_g9(f.c_th) << ','
        << format_g9(f.residual) << ',' << (f.constrained ? 1 : 0) << ','
        << (f.degenerate ? 1 : 0) << ',';
    if (!std::isnan(xi)) out << format_g9(xi);
    out << '\n';
  }
  finish(out, path);
}

void write_ratio_csv(const std::vector<std::pair<double, double>>& curve,
                     const std::string& path) {
  if (curve.empty()) throw Error("InsufficientData", "no ratio points to write");
  auto out = open_for_write(path);
  out << "C,ratio\n";
  for (const auto& [c, ratio] : curve)
    out << format_g9(c) << ',' << format_g9(ratio) << '\n';
  finish(out, path);
}

}  // namespace swapnet
