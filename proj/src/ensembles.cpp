// SPDX-License-Identifier: Apache-2.0

#include "swapnet/ensembles.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "swapnet/entanglement.hpp"
#include "swapnet/error.hpp"
#include "swapnet/numeric.hpp"

namespace swapnet {

CMatrix haar_unitary(Rng& rng) {
  for (;;) {
    // 2x2 complex Ginibre matrix.
    CMatrix m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = cxd{rng.normal(), rng.normal()};

    // QR by modified Gram-Schmidt; R's diagonal comes out real positive,
    // the explicit phase fix keeps the algorithm shape uniform.
    const double r00 = std::sqrt(std::norm(m(0, 0)) + std::norm(m(1, 0)));
    if (r00 < tol::qr_pivot_min) continue;
    cxd q00 = m(0, 0) / r00;
    cxd q10 = m(1, 0) / r00;
    const cxd proj = std::conj(q00) * m(0, 1) + std::conj(q10) * m(1, 1);
    cxd v0 = m(0, 1) - proj * q00;
    cxd v1 = m(1, 1) - proj * q10;
    const double r11 = std::sqrt(std::norm(v0) + std::norm(v1));
    if (r11 < tol::qr_pivot_min) continue;
    cxd q01 = v0 / r11;
    cxd q11 = v1 / r11;

    const cxd d0 = cxd{r00, 0.0} / std::abs(r00);
    const cxd d1 = cxd{r11, 0.0} / std::abs(r11);

    CMatrix u(2, 2);
    u(0, 0) = q00 * d0;
    u(1, 0) = q10 * d0;
    u(0, 1) = q01 * d1;
    u(1, 1) = q11 * d1;
    return u;
  }
}

DensityMatrix random_full_rank_state(Rng& rng) {
  CMatrix g(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = cxd{rng.normal(), rng.normal()};
  CMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= cxd{1.0 / tr, 0.0};
  for (std::size_t i = 0; i < 4; ++i) rho(i, i) = cxd{rho(i, i).real(), 0.0};
  return DensityMatrix::trusted(std::move(rho));
}

DensityMatrix random_x_state(Rng& rng) {
  // Flat Dirichlet diagonal from normalized exponentials.
  std::array<double, 4> d{};
  double sum = 0.0;
  for (auto& x : d) {
    x = -std::log(1.0 - rng.uniform());
    sum += x;
  }
  for (auto& x : d) x /= sum;
  const double g14 = (2.0 * rng.uniform() - 1.0) * std::sqrt(d[0] * d[3]);
  const double g23 = (2.0 * rng.uniform() - 1.0) * std::sqrt(d[1] * d[2]);
  return make_x_state(d[0], d[1], d[2], d[3], g14, g23);
}

PureState random_max_entangled(Rng& rng) {
  const CMatrix ua = haar_unitary(rng);
  const CMatrix ub = haar_unitary(rng);
  const PureState bell = bell_state(0);
  const CMatrix u = kron(ua, ub);
  PureState out;
  for (std::size_t i = 0; i < 4; ++i) {
    cxd acc = 0.0;
    for (std::size_t j = 0; j < 4; ++j) acc += u(i, j) * bell.vec[j];
    out.vec[i] = acc;
  }
  return out;
}

OrbitEnsemble orbit_from_unitaries(const DensityMatrix& rho,
                                   const std::vector<CMatrix>& side_a,
                                   const std::vector<CMatrix>& side_b) {
  OrbitEnsemble e{rho, {}, {}};
  e.members.reserve(side_a.size() * side_b.size());
  e.unitaries.reserve(side_a.size() * side_b.size());
  for (const CMatrix& ua : side_a)
    for (const CMatrix& ub : side_b) {
      e.members.push_back(rotate_bilateral(rho, ua, ub));
      e.unitaries.emplace_back(ua, ub);
    }
  return e;
}

OrbitEnsemble local_orbit(const DensityMatrix& rho, int n_per_side, Rng& rng) {
  if (n_per_side < 1) throw Error("ParamOutOfRange", "n_per_side must be >= 1");
  std::vector<CMatrix> side_a, side_b;
  side_a.reserve(static_cast<std::size_t>(n_per_side));
  side_b.reserve(static_cast<std::size_t>(n_per_side));
  for (int i = 0; i < n_per_side; ++i) side_a.push_back(haar_unitary(rng));
  for (int i = 0; i < n_per_side; ++i) side_b.push_back(haar_unitary(rng));
  return orbit_from_unitaries(rho, side_a, side_b);
}

namespace {

// First crossing of C(rho(t)) = c on the mixing segment
//   rho(t) = (1-t) rho0 + t |phi><phi|.
DensityMatrix bisect_to_concurrence(const DensityMatrix& rho0,
                                    const DensityMatrix& pure, double c) {
  auto mix = [&](double t) {
    CMatrix m = (1.0 - t) * rho0.mat() + t * pure.mat();
    return DensityMatrix::trusted(std::move(m));
  };
  double lo = 0.0, hi = 1.0;
  DensityMatrix best = mix(1.0);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    best = mix(mid);
    const double cm = concurrence(best);
    if (std::abs(cm - c) <= tol::bisection_target) return best;
    if (cm < c)
      lo = mid;
    else
      hi = mid;
  }
  throw Error("GenerationFailed", "concurrence bisection did not converge");
}

double min_eigenvalue(const DensityMatrix& rho) {
  return hermitian_eigenvalues(rho.mat()).back();
}

}  // namespace

FiducialSet fixed_concurrence_set(double c, int n, Rng& rng) {
  if (!(c > 0.0 && c < 1.0))
    throw Error("ParamOutOfRange", "target concurrence must lie in (0,1)");
  if (n < 1) throw Error("ParamOutOfRange", "set size must be >= 1");

  FiducialSet set{c, {}};
  std::vector<double> purities;
  for (int member = 0; member < n; ++member) {
    bool placed = false;
    for (int attempt = 0; attempt < tol::generation_attempts; ++attempt) {
      const DensityMatrix rho0 = random_full_rank_state(rng);
      if (concurrence(rho0) > c) continue;  // need endpoints straddling c
      const DensityMatrix pure = to_density(random_max_entangled(rng));
      const DensityMatrix candidate = bisect_to_concurrence(rho0, pure, c);
      if (min_eigenvalue(candidate) <= tol::full_rank_min_eigen) continue;
      const double p = purity(candidate);
      bool gap_ok = true;
      for (double q : purities)
        if (std::abs(p - q) <= tol::purity_gap_min) {
          gap_ok = false;
          break;
        }
      if (!gap_ok) continue;
      set.members.push_back(candidate);
      purities.push_back(p);
      placed = true;
      break;
    }
    if (!placed)
      throw Error("GenerationFailed",
                  "could not place member " + std::to_string(member) + " at C=" +
                      std::to_string(c));
  }
  return set;
}

void save_fiducial_set(const std::string& path, const FiducialSet& set,
                       std::uint64_t seed) {
  std::ofstream out(path);
  if (!out) throw Error("IoError", "cannot open " + path + " for writing");
  char header[128];
  std::snprintf(header, sizeof(header), "C=%.17g N=%zu seed=%llu\n",
                set.target_concurrence, set.members.size(),
                static_cast<unsigned long long>(seed));
  out << header;
  for (const DensityMatrix& m : set.members) {
    write_density_matrix(out, m);
    out << '\n';
  }
  if (!out) throw Error("IoError", "write failed for " + path);
}

FiducialSet load_fiducial_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path);
  std::string header;
  if (!std::getline(in, header)) throw Error("ParseError", "missing header in " + path);
  double c = 0.0;
  std::size_t n = 0;
  unsigned long long seed = 0;
  if (std::sscanf(header.c_str(), "C=%lf N=%zu seed=%llu", &c, &n, &seed) != 3)
    throw Error("ParseError", "bad fiducial-set header: " + header);
  FiducialSet set{c, {}};
  for (std::size_t k = 0; k < n; ++k)
    set.members.push_back(validate_density_matrix(read_matrix_block(in)));
  return set;
}

}  // namespace swapnet
