// SPDX-License-Identifier: Apache-2.0

#include "swapnet/swap.hpp"

#include <cmath>

#include "swapnet/error.hpp"

namespace swapnet {

namespace {

// Bell amplitudes as 2x2 tables B[ib][ic].
struct BellTable {
  std::array<std::array<cxd, 2>, 2> amp{};
};

const std::array<BellTable, 4>& bell_tables() {
  static const std::array<BellTable, 4> tables = [] {
    std::array<BellTable, 4> t{};
    for (int k = 0; k < 4; ++k) {
      const PureState b = bell_state(k);
      for (std::size_t ib = 0; ib < 2; ++ib)
        for (std::size_t ic = 0; ic < 2; ++ic) t[k].amp[ib][ic] = b.vec[2 * ib + ic];
    }
    return t;
  }();
  return tables;
}

}  // namespace

std::array<SwapOutcome, 4> swap_pair(const DensityMatrix& rho1,
                                     const DensityMatrix& rho2) {
  const CMatrix& r1 = rho1.mat();
  const CMatrix& r2 = rho2.mat();
  if (!r1.is_finite() || !r2.is_finite())
    throw Error("InvalidState", "swap input contains NaN/Inf");

  std::array<SwapOutcome, 4> outcomes;
  for (int k = 0; k < 4; ++k) {
    const BellTable& b = bell_tables()[k];
    // Unnormalized branch operator on (a,d):
    //   O[(ia,id),(ja,jd)] = sum over ib,ic,jb,jc of
    //     conj(B[ib,ic]) B[jb,jc] r1(2ia+ib, 2ja+jb) r2(2ic+id, 2jc+jd),
    // the partial projection of (rho1 (x) rho2) onto Bell state k of (b,c).
    CMatrix op(4, 4);
    for (std::size_t ia = 0; ia < 2; ++ia)
      for (std::size_t id = 0; id < 2; ++id)
        for (std::size_t ja = 0; ja < 2; ++ja)
          for (std::size_t jd = 0; jd < 2; ++jd) {
            cxd acc = 0.0;
            for (std::size_t ib = 0; ib < 2; ++ib)
              for (std::size_t ic = 0; ic < 2; ++ic) {
                const cxd left = std::conj(b.amp[ib][ic]);
                if (left == cxd{}) continue;
                for (std::size_t jb = 0; jb < 2; ++jb)
                  for (std::size_t jc = 0; jc < 2; ++jc) {
                    const cxd right = b.amp[jb][jc];
                    if (right == cxd{}) continue;
                    acc += left * right * r1(2 * ia + ib, 2 * ja + jb) *
                           r2(2 * ic + id, 2 * jc + jd);
                  }
              }
            op(2 * ia + id, 2 * ja + jd) = acc;
          }

    SwapOutcome& out = outcomes[static_cast<std::size_t>(k)];
    out.bell_index = k;
    out.probability = op.trace().real();
    if (out.probability > tol::branch_prune) {
      const double inv = 1.0 / out.probability;
      for (std::size_t i = 0; i < 4; ++i) {
        op(i, i) = cxd{op(i, i).real() * inv, 0.0};
        for (std::size_t j = i + 1; j < 4; ++j) {
          const cxd avg = 0.5 * inv * (op(i, j) + std::conj(op(j, i)));
          op(i, j) = avg;
          op(j, i) = std::conj(avg);
        }
      }
      out.state = DensityMatrix::trusted(std::move(op));
    }
  }
  return outcomes;
}

double average_swap_concurrence(const DensityMatrix& rho1,
                                const DensityMatrix& rho2) {
  double avg = 0.0;
  for (const SwapOutcome& out : swap_pair(rho1, rho2))
    if (out.state) avg += out.probability * concurrence(*out.state);
  return avg;
}

namespace {

void walk_branches(const DensityMatrix& running, double running_prob,
                   const std::vector<DensityMatrix>& edges, std::size_t next,
                   PathAverage& acc) {
  if (next == edges.size()) {
    acc.value += running_prob * concurrence(running);
    return;
  }
  for (const SwapOutcome& out : swap_pair(running, edges[next])) {
    const double p = running_prob * out.probability;
    if (!out.state || p <= tol::branch_prune) {
      acc.pruned_mass += p;
      continue;
    }
    walk_branches(*out.state, p, edges, next + 1, acc);
  }
}

}  // namespace

PathAverage path_average_detailed(const PathSpec& path, int max_length) {
  const std::size_t l = path.edge_states.size();
  if (l < 1) throw Error("ParamOutOfRange", "path needs at least one edge");
  if (l > static_cast<std::size_t>(max_length))
    throw Error("PathTooLong", "path length " + std::to_string(l) + " exceeds cap " +
                                   std::to_string(max_length));
  PathAverage acc;
  walk_branches(path.edge_states[0], 1.0, path.edge_states, 1, acc);
  return acc;
}

double path_average_concurrence(const PathSpec& path, int max_length) {
  return path_average_detailed(path, max_length).value;
}

double predicted_single_swap(SwapOracle kind, double c1, double c2) {
  switch (kind) {
    case SwapOracle::Product: return c1 * c2;
    case SwapOracle::WernerPair:
      return std::max(0.0, (c1 + c2 + 2.0 * c1 * c2 - 1.0) / 3.0);
  }
  throw Error("ParamOutOfRange", "unknown oracle kind");
}

double werner_path_concurrence(const std::vector<double>& cs) {
  if (cs.empty()) throw Error("ParamOutOfRange", "empty concurrence list");
  double prod = 1.0;
  for (double c : cs) prod *= (1.0 + 2.0 * c) / 3.0;
  return std::max(0.0, 1.5 * prod - 0.5);
}

double werner_threshold(int l) {
  if (l < 1) throw Error("ParamOutOfRange", "path length must be >= 1");
  return 0.5 * (std::pow(3.0, 1.0 - 1.0 / static_cast<double>(l)) - 1.0);
}

}  // namespace swapnet
