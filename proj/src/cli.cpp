// SPDX-License-Identifier: Apache-2.0

#include "swapnet/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "swapnet/csv.hpp"
#include "swapnet/error.hpp"
#include "swapnet/experiments.hpp"
#include "swapnet/svg.hpp"

namespace swapnet::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string joined(const std::string& out_dir, const std::string& file) {
  if (out_dir.empty() || out_dir == ".") return file;
  std::filesystem::create_directories(out_dir);
  return (std::filesystem::path(out_dir) / file).string();
}

std::vector<double> parse_grid(const std::string& text) {
  double lo = 0, hi = 0, step = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0)
    throw Error("ParamOutOfRange", "grid must be lo:hi:step, got '" + text + "'");
  std::vector<double> grid;
  for (double c = lo; c <= hi + 0.5 * step; c += step) grid.push_back(c);
  return grid;
}

FamilyTag tag_from_name(const std::string& name) {
  if (name == "pure") return FamilyTag::PureSchmidt;
  if (name == "werner") return FamilyTag::Werner;
  if (name == "isotropic") return FamilyTag::Isotropic;
  throw Error("UnsupportedFamily", "family must be pure, werner or isotropic");
}

DensityMatrix family_state(const std::string& family, double c) {
  return param_for_concurrence(tag_from_name(family), c).to_density();
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// ---------------------------------------------------------------------------
// selftest checks (oracle suite, bounded runtime)
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass;
  std::string note;
};

CheckResult check_pure_product(std::uint64_t seed) {
  Rng rng(seed, stream_id({100}));
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double l1 = rng.uniform(), l2 = rng.uniform();
    const auto s1 = to_density(make_pure_schmidt(l1));
    const auto s2 = to_density(make_pure_schmidt(l2));
    const double want = 2.0 * std::sqrt(l1 * (1.0 - l1)) * 2.0 * std::sqrt(l2 * (1.0 - l2));
    worst = std::max(worst, std::abs(average_swap_concurrence(s1, s2) - want));
  }
  return {"pure-product-law", worst <= 1e-9, "max|err|=" + format_g9(worst)};
}

CheckResult check_werner_forms(std::uint64_t) {
  double worst = 0.0;
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j) {
      const double c1 = 0.1 * i, c2 = 0.1 * j;
      const double got = average_swap_concurrence(family_state("werner", c1),
                                                  family_state("werner", c2));
      worst = std::max(worst,
                       std::abs(got - predicted_single_swap(SwapOracle::WernerPair, c1, c2)));
    }
  for (int l = 2; l <= 4; ++l)
    for (double c : {0.5, 0.9}) {
      PathSpec path;
      for (int e = 0; e < l; ++e) path.edge_states.push_back(family_state("werner", c));
      const double got = path_average_concurrence(path);
      const double want = werner_path_concurrence(std::vector<double>(l, c));
      worst = std::max(worst, std::abs(got - want));
    }
  return {"werner-closed-forms", worst <= 1e-8, "max|err|=" + format_g9(worst)};
}

CheckResult check_pure_x(std::uint64_t seed) {
  Rng rng(seed, stream_id({101}));
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double lam = rng.uniform();
    const auto pure = to_density(make_pure_schmidt(lam));
    const auto x = random_x_state(rng);
    const double want = 2.0 * std::sqrt(lam * (1.0 - lam)) * concurrence(x);
    worst = std::max(worst, std::abs(average_swap_concurrence(pure, x) - want));
  }
  return {"pure-x-product-law", worst <= 1e-9, "max|err|=" + format_g9(worst)};
}

CheckResult check_upper_bound(std::uint64_t seed) {
  Rng rng(seed, stream_id({102}));
  double worst = -1.0;
  for (int k = 0; k < 200; ++k) {
    const auto a = random_full_rank_state(rng);
    const auto b = random_full_rank_state(rng);
    const double excess =
        average_swap_concurrence(a, b) - concurrence(a) * concurrence(b);
    worst = std::max(worst, excess);
  }
  return {"product-upper-bound", worst <= 1e-9, "max excess=" + format_g9(worst)};
}

CheckResult check_haar_moment(std::uint64_t seed) {
  Rng rng(seed, stream_id({103}));
  double sum = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) sum += std::norm(haar_unitary(rng)(0, 0));
  const double mean = sum / n;
  return {"haar-moment", std::abs(mean - 0.5) <= 0.01, "E|u00|^2=" + format_g9(mean)};
}

CheckResult check_local_invariance(std::uint64_t seed) {
  Rng rng(seed, stream_id({104}));
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const auto rho = random_full_rank_state(rng);
    const auto ua = haar_unitary(rng);
    const auto ub = haar_unitary(rng);
    const auto rotated = rotate_bilateral(rho, ua, ub);
    worst = std::max(worst, std::abs(concurrence(rho) - concurrence(rotated)));
    worst = std::max(worst, std::abs(purity(rho) - purity(rotated)));
  }
  return {"local-unitary-invariance", worst <= 1e-8, "max|drift|=" + format_g9(worst)};
}

int run_selftest(std::uint64_t seed, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const CheckResult checks[] = {
      check_pure_product(seed),   check_werner_forms(seed),
      check_pure_x(seed),         check_upper_bound(seed),
      check_haar_moment(seed),    check_local_invariance(seed),
  };
  bool all = true;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.note << ")\n";
    all = all && c.pass;
  }
  const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  out << (all ? "selftest OK" : "selftest FAILED") << " in " << dt << " ms\n";
  return all ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"entanglement swapping statistics along quantum network paths"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file mirroring flag names");

  std::uint64_t seed = 0;
  int threads = 0;
  std::string out_dir = ".";
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  app.add_option("--threads", threads, "worker threads (0 = machine)")
      ->capture_default_str();
  app.add_option("--out-dir", out_dir, "directory for output files")
      ->capture_default_str();

  int exit_code = 0;

  // Let --seed/--threads/--out-dir appear after the subcommand name too.
  const auto with_fallthrough = [](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };

  // --- concurrence -----------------------------------------------------
  auto* c_cmd = with_fallthrough(app.add_subcommand("concurrence", "concurrence of a state file"));
  std::string c_state_file;
  c_cmd->add_option("--state-file", c_state_file, "4x4 density-matrix text file")
      ->required();
  c_cmd->callback([&] {
    const DensityMatrix rho = load_density_matrix(c_state_file);
    out << "concurrence=" << fixed6(concurrence(rho)) << '\n';
    out << "purity=" << fixed6(purity(rho)) << '\n';
  });

  // --- swap --------------------------------------------------------------
  auto* s_cmd = with_fallthrough(app.add_subcommand("swap", "single swap of two states"));
  std::string s_family = "werner", s_family2, s_file1, s_file2;
  double s_c1 = 0.7, s_c2 = 0.7;
  s_cmd->add_option("--family", s_family, "pure|werner|isotropic for both inputs")
      ->capture_default_str();
  s_cmd->add_option("--family2", s_family2, "override family of input 2");
  s_cmd->add_option("--c1", s_c1, "concurrence of input 1")->capture_default_str();
  s_cmd->add_option("--c2", s_c2, "concurrence of input 2")->capture_default_str();
  s_cmd->add_option("--state-file1", s_file1, "explicit state for input 1");
  s_cmd->add_option("--state-file2", s_file2, "explicit state for input 2");
  s_cmd->callback([&] {
    DensityMatrix rho1 = s_file1.empty() ? family_state(s_family, s_c1)
                                         : load_density_matrix(s_file1);
    const std::string fam2 = s_family2.empty() ? s_family : s_family2;
    DensityMatrix rho2 = s_file2.empty() ? family_state(fam2, s_c2)
                                         : load_density_matrix(s_file2);
    out << "avg_concurrence=" << fixed6(average_swap_concurrence(rho1, rho2)) << '\n';
    if (s_file1.empty() && s_file2.empty()) {
      std::optional<double> oracle;
      if (s_family == "pure" && fam2 == "pure")
        oracle = predicted_single_swap(SwapOracle::Product, s_c1, s_c2);
      else if (s_family == fam2 && (s_family == "werner" || s_family == "isotropic"))
        oracle = predicted_single_swap(SwapOracle::WernerPair, s_c1, s_c2);
      if (oracle)
        out << "oracle=" << fixed6(*oracle) << '\n';
      else
        out << "upper_bound=" << fixed6(s_c1 * s_c2) << '\n';
    } else {
      out << "upper_bound="
          << fixed6(concurrence(rho1) * concurrence(rho2)) << '\n';
    }
  });

  // --- path ----------------------------------------------------------------
  auto* p_cmd = with_fallthrough(app.add_subcommand("path", "multi-swap along a path"));
  bool p_werner = false, p_pure = false;
  double p_c = 0.8;
  int p_l = 3;
  std::vector<std::string> p_files;
  p_cmd->add_flag("--werner", p_werner, "Werner edges at concurrence --c");
  p_cmd->add_flag("--pure", p_pure, "pure edges at concurrence --c");
  p_cmd->add_option("--c", p_c, "per-edge concurrence")->capture_default_str();
  p_cmd->add_option("--l", p_l, "number of edges")->capture_default_str();
  p_cmd->add_option("--state-file", p_files, "explicit edge states, in order");
  p_cmd->callback([&] {
    PathSpec path;
    std::optional<double> oracle;
    if (!p_files.empty()) {
      for (const auto& f : p_files) path.edge_states.push_back(load_density_matrix(f));
    } else if (p_pure && !p_werner) {
      for (int e = 0; e < p_l; ++e)
        path.edge_states.push_back(family_state("pure", p_c));
      oracle = std::pow(p_c, p_l);
    } else if (p_werner && !p_pure) {
      for (int e = 0; e < p_l; ++e)
        path.edge_states.push_back(family_state("werner", p_c));
      oracle = werner_path_concurrence(std::vector<double>(p_l, p_c));
    } else {
      throw Error("ParamOutOfRange",
                  "pick exactly one of --werner/--pure or give --state-file edges");
    }
    const PathAverage pa = path_average_detailed(path);
    out << "path_avg_concurrence=" << fixed6(pa.value) << '\n';
    if (oracle) out << "oracle=" << fixed6(*oracle) << '\n';
    if (pa.pruned_mass > 0.0) out << "pruned_mass=" << format_g9(pa.pruned_mass) << '\n';
  });

  // --- dist ------------------------------------------------------------
  auto* d_cmd = with_fallthrough(app.add_subcommand("dist", "output-concurrence distribution"));
  double d_c = 0.9;
  int d_samples = 10000, d_bins = 50;
  std::string d_csv, d_svg;
  d_cmd->add_option("--c", d_c, "input concurrence")->capture_default_str();
  d_cmd->add_option("--samples", d_samples, "sample count")->capture_default_str();
  d_cmd->add_option("--bins", d_bins, "histogram bins")->capture_default_str();
  d_cmd->add_option("--csv", d_csv, "histogram CSV file");
  d_cmd->add_option("--svg", d_svg, "histogram SVG file");
  d_cmd->callback([&] {
    const Histogram h = concurrence_distribution(d_c, d_samples, d_bins, seed, threads);
    double lo = h.samples[0], hi = h.samples[0], sum = 0.0;
    for (double v : h.samples) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
    }
    out << "samples=" << h.samples.size() << '\n';
    out << "mean=" << fixed6(sum / static_cast<double>(h.samples.size())) << '\n';
    out << "support=[" << fixed6(lo) << ',' << fixed6(hi) << "]\n";
    if (!d_csv.empty()) write_histogram_csv(h, joined(out_dir, d_csv));
    if (!d_svg.empty()) render_histogram_svg(h, "avg output concurrence",
                                             joined(out_dir, d_svg));
  });

  // --- sweep -----------------------------------------------------------
  auto* w_cmd = with_fallthrough(app.add_subcommand("sweep", "ensemble sweep over a concurrence grid"));
  SweepConfig w_cfg;
  std::string w_grid = "0.05:0.95:0.05";
  double w_ratio_cth = 0.0;
  std::string w_csv, w_svg_mean, w_svg_range, w_svg_ratio;
  w_cmd->add_option("--l", w_cfg.length, "path length (edges)")->capture_default_str();
  w_cmd->add_option("--grid", w_grid, "concurrence grid lo:hi:step")
      ->capture_default_str();
  w_cmd->add_option("--n-fiducial", w_cfg.n_fiducial, "fixed-C set size")
      ->capture_default_str();
  w_cmd->add_option("--n-per-side", w_cfg.n_per_side, "unitaries per qubit side")
      ->capture_default_str();
  w_cmd->add_option("--n-fiducial-tuples", w_cfg.n_fiducial_tuples,
                    "fiducial tuples when l > 2")
      ->capture_default_str();
  w_cmd->add_option("--n-input-tuples", w_cfg.n_input_tuples,
                    "input tuples per fiducial tuple")
      ->capture_default_str();
  w_cmd->add_option("--csv", w_csv, "sweep records CSV file");
  w_cmd->add_option("--svg-mean", w_svg_mean, "mean-vs-C SVG file");
  w_cmd->add_option("--svg-range", w_svg_range, "range-vs-C SVG file");
  w_cmd->add_option("--svg-ratio", w_svg_ratio, "range/mean-vs-C SVG file");
  w_cmd->add_option("--ratio-c-th", w_ratio_cth,
                    "threshold filter for the ratio plot (from a prior fit)")
      ->capture_default_str();
  w_cmd->callback([&] {
    w_cfg.seed = seed;
    w_cfg.threads = threads;
    w_cfg.grid = parse_grid(w_grid);
    const auto records = path_sweep(w_cfg);
    for (const SweepRecord& r : records)
      out << "C=" << format_g9(r.c) << " mean=" << format_g9(r.stat_avg_mean)
          << " range=" << format_g9(r.avg_range)
          << " std=" << format_g9(r.std_of_means) << '\n';
    if (!w_csv.empty()) write_sweep_csv(records, joined(out_dir, w_csv));
    auto series_of = [&](auto pick, const char* label) {
      Series s{label, {}};
      for (const auto& r : records) s.points.emplace_back(r.c, pick(r));
      return std::vector<Series>{s};
    };
    const std::string l_label = "l=" + std::to_string(w_cfg.length);
    if (!w_svg_mean.empty())
      render_line_svg(series_of([](const SweepRecord& r) { return r.stat_avg_mean; },
                                l_label.c_str()),
                      "edge concurrence C", "mean output concurrence",
                      joined(out_dir, w_svg_mean));
    if (!w_svg_range.empty())
      render_line_svg(series_of([](const SweepRecord& r) { return r.avg_range; },
                                l_label.c_str()),
                      "edge concurrence C", "avg range", joined(out_dir, w_svg_range));
    if (!w_svg_ratio.empty()) {
      Series s{l_label, relative_range_curve(records, w_ratio_cth)};
      render_line_svg({s}, "edge concurrence C", "range / mean",
                      joined(out_dir, w_svg_ratio));
    }
  });

  // --- fit -------------------------------------------------------------
  auto* f_cmd = with_fallthrough(app.add_subcommand("fit", "threshold fits from sweep CSVs"));
  std::vector<std::string> f_inputs;
  bool f_unconstrained = false;
  std::string f_csv, f_svg;
  f_cmd->add_option("--input", f_inputs, "sweep CSV file(s)")->required();
  f_cmd->add_flag("--unconstrained", f_unconstrained,
                  "also fit with a free slope");
  f_cmd->add_option("--csv", f_csv, "fit results CSV file");
  f_cmd->add_option("--svg", f_svg, "mean-vs-C SVG, one series per length");
  f_cmd->callback([&] {
    std::map<int, std::vector<std::pair<double, double>>> by_length;
    for (const auto& file : f_inputs)
      for (const SweepRecord& r : read_sweep_csv(file))
        by_length[r.length].emplace_back(r.c, r.stat_avg_mean);
    if (by_length.empty()) throw Error("InsufficientData", "no sweep rows found");
    if (!f_svg.empty()) {
      std::vector<Series> series;
      for (auto& [l, points] : by_length) {
        std::sort(points.begin(), points.end());
        series.push_back({"l=" + std::to_string(l), points});
      }
      render_line_svg(series, "edge concurrence C", "mean output concurrence",
                      joined(out_dir, f_svg));
    }

    std::vector<FitResult> fits;
    std::vector<FitResult> constrained;
    for (auto& [l, points] : by_length) {
      std::sort(points.begin(), points.end());
      FitResult fc = fit_threshold(points, l, true);
      constrained.push_back(fc);
      fits.push_back(fc);
      out << "l=" << l << " constrained m=" << format_g9(fc.slope)
          << " c_th=" << format_g9(fc.c_th)
          << " residual=" << format_g9(fc.residual)
          << (fc.degenerate ? " DEGENERATE" : "") << '\n';
      if (f_unconstrained) {
        FitResult fu = fit_threshold(points, l, false);
        fits.push_back(fu);
        out << "l=" << l << " unconstrained m=" << format_g9(fu.slope)
            << " c_th=" << format_g9(fu.c_th)
            << " residual=" << format_g9(fu.residual)
            << (fu.degenerate ? " DEGENERATE" : "") << '\n';
      }
    }
    double xi = std::numeric_limits<double>::quiet_NaN();
    if (constrained.size() >= 3) {
      xi = fit_xi(constrained);
      out << "xi=" << format_g9(xi) << '\n';
    }
    if (!f_csv.empty()) write_fit_csv(fits, xi, joined(out_dir, f_csv));
  });

  // --- optimal-path ------------------------------------------------------
  auto* o_cmd = with_fallthrough(app.add_subcommand("optimal-path", "two-path winner map"));
  int o_grid = 64;
  double o_fixed_t1 = kPi / 2.0, o_fixed_t2 = kPi / 2.0;
  std::string o_fiducial_file, o_csv, o_svg;
  o_cmd->add_option("--grid-size", o_grid, "points per angle axis")
      ->capture_default_str();
  o_cmd->add_option("--fixed-t1", o_fixed_t1, "theta1 used for path 2 (radians)")
      ->capture_default_str();
  o_cmd->add_option("--fixed-t2", o_fixed_t2, "theta2 used for path 1 (radians)")
      ->capture_default_str();
  o_cmd->add_option("--fiducial-file", o_fiducial_file,
                    "fiducial state file (default: built-in demo state)");
  o_cmd->add_option("--csv", o_csv, "winner map CSV file");
  o_cmd->add_option("--svg", o_svg, "winner map SVG file");
  o_cmd->callback([&] {
    if (o_grid < 2) throw Error("ParamOutOfRange", "grid size must be >= 2");
    DensityMatrix fid = demo_fiducial();
    if (!o_fiducial_file.empty()) {
      std::ifstream in(o_fiducial_file);
      if (!in) throw Error("IoError", "cannot open " + o_fiducial_file);
      double moved = 0.0;
      fid = validate_density_matrix_projected(read_matrix_block(in), 1e-3, &moved);
      if (moved > 0.0) out << "psd_projection_distance=" << format_g9(moved) << '\n';
    }
    const auto t1 = linspace(0.0, kPi, static_cast<std::size_t>(o_grid));
    const auto t2 = linspace(0.0, 2.0 * kPi, static_cast<std::size_t>(o_grid));
    const WinnerMap map = optimal_path_map(fid, t1, t2, o_fixed_t2, o_fixed_t1, threads);
    std::size_t p1 = 0, p2 = 0, tie = 0;
    for (const auto& cell : map.cells)
      (cell.winner == PathWinner::P1 ? p1 : cell.winner == PathWinner::P2 ? p2 : tie)++;
    out << "fiducial_concurrence=" << fixed6(concurrence(fid)) << '\n';
    out << "cells_p1=" << p1 << " cells_p2=" << p2 << " cells_tie=" << tie << '\n';
    if (!o_csv.empty()) write_winner_csv(map, joined(out_dir, o_csv));
    if (!o_svg.empty()) render_winner_svg(map, joined(out_dir, o_svg));
  });

  // --- selftest ----------------------------------------------------------
  auto* t_cmd = with_fallthrough(app.add_subcommand("selftest", "run the analytic oracle suite"));
  t_cmd->callback([&] { exit_code = run_selftest(seed, out); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("swapnet");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    err << "run 'swapnet --help' for the grammar\n";
    return 1;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

}  // namespace swapnet::cli
