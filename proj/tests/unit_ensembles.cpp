// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "swapnet/ensembles.hpp"
#include "swapnet/entanglement.hpp"
#include "swapnet/error.hpp"
#include "swapnet/numeric.hpp"

using namespace swapnet;

TEST_CASE("haar_unitary is unitary to working precision") {
  Rng rng(51, 0);
  for (int k = 0; k < 200; ++k) {
    const CMatrix u = haar_unitary(rng);
    CHECK(max_abs_diff(u.adjoint() * u, CMatrix::identity(2)) < tol::unitarity);
  }
}

TEST_CASE("haar_unitary replays deterministically per (seed, stream)") {
  Rng a(42, 0), b(42, 0);
  const CMatrix ua = haar_unitary(a);
  const CMatrix ub = haar_unitary(b);
  CHECK(max_abs_diff(ua, ub) == 0.0);

  Rng c(42, 1);
  CHECK(max_abs_diff(ua, haar_unitary(c)) > 1e-3);
}

TEST_CASE("haar moments match the invariant measure") {
  Rng rng(52, 0);
  double m_entry = 0.0, m_trace = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    const CMatrix u = haar_unitary(rng);
    m_entry += std::norm(u(0, 0));
    m_trace += std::norm(u(0, 0) + u(1, 1));
  }
  CHECK(std::abs(m_entry / n - 0.5) < 0.01);
  CHECK(std::abs(m_trace / n - 1.0) < 0.02);  // E|tr u|^2 = 1
}

TEST_CASE("random generators produce valid states") {
  Rng rng(53, 0);
  for (int k = 0; k < 20; ++k) {
    CHECK_NOTHROW(validate_density_matrix(random_full_rank_state(rng).mat()));
    CHECK_NOTHROW(validate_density_matrix(random_x_state(rng).mat()));
    const PureState phi = random_max_entangled(rng);
    CHECK(phi.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence(to_density(phi)) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("local_orbit membership and conserved quantities") {
  Rng rng(54, 0);
  const DensityMatrix rho = random_full_rank_state(rng);
  const OrbitEnsemble orbit = local_orbit(rho, 20, rng);
  CHECK(orbit.members.size() == 400);
  CHECK(orbit.unitaries.size() == 400);

  const double c0 = concurrence(rho);
  const double p0 = purity(rho);
  const double min0 = hermitian_eigenvalues(rho.mat()).back();
  for (std::size_t k = 0; k < orbit.members.size(); k += 37) {
    const DensityMatrix& m = orbit.members[k];
    CHECK(std::abs(concurrence(m) - c0) < tol::orbit_concurrence_match);
    CHECK(std::abs(purity(m) - p0) < tol::orbit_concurrence_match);
    CHECK(std::abs(hermitian_eigenvalues(m.mat()).back() - min0) < 1e-8);
  }
}

TEST_CASE("identity orbit hook returns the fiducial itself") {
  Rng rng(55, 0);
  const DensityMatrix rho = random_full_rank_state(rng);
  const OrbitEnsemble orbit =
      orbit_from_unitaries(rho, {CMatrix::identity(2)}, {CMatrix::identity(2)});
  REQUIRE(orbit.members.size() == 1);
  CHECK(max_abs_diff(orbit.members[0].mat(), rho.mat()) < 1e-15);
}

TEST_CASE("fixed_concurrence_set hits the target with spread purities") {
  Rng rng(56, 0);
  const FiducialSet set = fixed_concurrence_set(0.5, 10, rng);
  REQUIRE(set.members.size() == 10);
  std::vector<double> purities;
  for (const DensityMatrix& m : set.members) {
    CHECK(std::abs(concurrence(m) - 0.5) <= 2e-9);
    CHECK(hermitian_eigenvalues(m.mat()).back() > tol::full_rank_min_eigen);
    purities.push_back(purity(m));
  }
  for (std::size_t i = 0; i < purities.size(); ++i)
    for (std::size_t j = i + 1; j < purities.size(); ++j) {
      CHECK(std::abs(purities[i] - purities[j]) > tol::purity_gap_min);
      CHECK(max_abs_diff(set.members[i].mat(), set.members[j].mat()) > 1e-6);
    }
}

TEST_CASE("fixed_concurrence_set converges near the entangled edge") {
  Rng rng(57, 0);
  const FiducialSet set = fixed_concurrence_set(0.95, 4, rng);
  for (const DensityMatrix& m : set.members) {
    // Independent recheck on a fresh copy of the matrix.
    const DensityMatrix copy = validate_density_matrix(m.mat());
    CHECK(std::abs(concurrence(copy) - 0.95) <= 2e-9);
    CHECK(hermitian_eigenvalues(copy.mat()).back() > tol::full_rank_min_eigen);
  }
}

TEST_CASE("fixed_concurrence_set rejects out-of-range targets") {
  Rng rng(58, 0);
  CHECK_THROWS_WITH_AS(fixed_concurrence_set(0.0, 2, rng),
                       doctest::Contains("ParamOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(fixed_concurrence_set(1.0, 2, rng),
                       doctest::Contains("ParamOutOfRange"), Error);
}

TEST_CASE("fiducial sets round-trip through the dump format") {
  Rng rng(59, 0);
  const FiducialSet set = fixed_concurrence_set(0.6, 3, rng);
  const std::string path = "fiducials_roundtrip.txt";
  save_fiducial_set(path, set, 59);
  const FiducialSet back = load_fiducial_set(path);
  CHECK(back.target_concurrence == set.target_concurrence);
  REQUIRE(back.members.size() == set.members.size());
  for (std::size_t k = 0; k < set.members.size(); ++k)
    CHECK(max_abs_diff(back.members[k].mat(), set.members[k].mat()) == 0.0);
  std::filesystem::remove(path);
}
