// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "swapnet/ensembles.hpp"
#include "swapnet/entanglement.hpp"
#include "swapnet/error.hpp"
#include "swapnet/states.hpp"
#include "test_support.hpp"

using namespace swapnet;

TEST_CASE("pure Schmidt constructor endpoints") {
  const PureState bell = make_pure_schmidt(0.5);
  CHECK(bell.vec[0].real() == doctest::Approx(0.7071067811865476));
  CHECK(bell.vec[3].real() == doctest::Approx(0.7071067811865476));
  CHECK(std::abs(bell.vec[1]) == 0.0);

  const PureState product = make_pure_schmidt(0.0);
  CHECK(std::abs(product.vec[3]) == doctest::Approx(1.0));

  CHECK(concurrence(to_density(make_pure_schmidt(0.1))) == doctest::Approx(0.6).epsilon(1e-10));

  CHECK_THROWS_WITH_AS(make_pure_schmidt(1.5), doctest::Contains("ParamOutOfRange"), Error);
}

TEST_CASE("Werner endpoints and concurrence") {
  const DensityMatrix singlet = make_werner(0.0);
  CHECK(max_abs_diff(singlet.mat(), to_density(bell_state(3)).mat()) < 1e-15);

  const DensityMatrix mixed = make_werner(1.0);
  CHECK(max_abs_diff(mixed.mat(), 0.25 * CMatrix::identity(4)) < 1e-15);

  CHECK(concurrence(make_werner(0.2)) == doctest::Approx(0.7).epsilon(1e-9));
}

TEST_CASE("Isotropic endpoints and separability point") {
  CHECK(max_abs_diff(make_isotropic(0.0).mat(), to_density(bell_state(0)).mat()) < 1e-15);
  CHECK(max_abs_diff(make_isotropic(1.0).mat(), 0.25 * CMatrix::identity(4)) < 1e-15);
  CHECK(concurrence(make_isotropic(2.0 / 3.0)) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("Bell-diagonal constructor") {
  CHECK(max_abs_diff(make_bell_diagonal({1, 0, 0, 0}).mat(),
                     to_density(bell_state(0)).mat()) < 1e-15);
  CHECK(max_abs_diff(make_bell_diagonal({0.25, 0.25, 0.25, 0.25}).mat(),
                     0.25 * CMatrix::identity(4)) < 1e-15);
  CHECK(concurrence(make_bell_diagonal({0.7, 0.1, 0.1, 0.1})) ==
        doctest::Approx(0.4).epsilon(1e-9));
  CHECK_THROWS_WITH_AS(make_bell_diagonal({0.5, 0.4, 0.2, 0.1}),
                       doctest::Contains("NotNormalized"), Error);
  CHECK_THROWS_WITH_AS(make_bell_diagonal({1.2, -0.2, 0.0, 0.0}),
                       doctest::Contains("ParamOutOfRange"), Error);
}

TEST_CASE("X-state constructor") {
  const DensityMatrix phi = make_x_state(0.5, 0, 0, 0.5, 0.5, 0);
  CHECK(max_abs_diff(phi.mat(), to_density(bell_state(0)).mat()) < 1e-15);

  CHECK(concurrence(make_x_state(0.45, 0.05, 0.05, 0.45, 0.4, 0.0)) ==
        doctest::Approx(0.7).epsilon(1e-9));

  // Diagonal X-states are separable.
  CHECK(concurrence(make_x_state(0.4, 0.3, 0.2, 0.1, 0.0, 0.0)) == 0.0);

  CHECK_THROWS_WITH_AS(make_x_state(0.25, 0.25, 0.25, 0.25, 0.3, 0.0),
                       doctest::Contains("NotPSD"), Error);
}

TEST_CASE("validate_density_matrix names the violated invariant") {
  CHECK_NOTHROW(validate_density_matrix(0.25 * CMatrix::identity(4)));

  CMatrix neg(4, 4);
  neg(0, 0) = 0.5;
  neg(1, 1) = 0.6;
  neg(2, 2) = -0.1;
  CHECK_THROWS_WITH_AS(validate_density_matrix(neg), doctest::Contains("NotPSD"), Error);

  CMatrix skew = 0.25 * CMatrix::identity(4);
  skew(0, 1) = cxd{0.0, 1e-3};
  CHECK_THROWS_WITH_AS(validate_density_matrix(skew), doctest::Contains("NotHermitian"),
                       Error);

  CHECK_THROWS_WITH_AS(validate_density_matrix(0.3 * CMatrix::identity(4)),
                       doctest::Contains("NotNormalized"), Error);
}

TEST_CASE("purity of the standard states") {
  CHECK(purity(validate_density_matrix(0.25 * CMatrix::identity(4))) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(purity(to_density(bell_state(2))) == doctest::Approx(1.0).epsilon(1e-12));

  // Direct matrix-square trace as the oracle.
  const DensityMatrix w = make_werner(0.5);
  const CMatrix sq = w.mat() * w.mat();
  CHECK(purity(w) == doctest::Approx(sq.trace().real()).epsilon(1e-14));
  CHECK(purity(w) == doctest::Approx(0.4375).epsilon(1e-12));
}

TEST_CASE("every constructor output passes validation") {
  Rng rng(21, 0);
  for (int k = 0; k < 25; ++k) {
    CHECK_NOTHROW(validate_density_matrix(to_density(make_pure_schmidt(rng.uniform())).mat()));
    CHECK_NOTHROW(validate_density_matrix(make_werner(rng.uniform()).mat()));
    CHECK_NOTHROW(validate_density_matrix(make_isotropic(rng.uniform()).mat()));
    CHECK_NOTHROW(validate_density_matrix(random_x_state(rng).mat()));
  }
}

TEST_CASE("Werner and Isotropic match Bell-diagonal weight vectors") {
  for (double g : {0.0, 0.1, 0.35, 0.7, 1.0}) {
    const auto bd_w = make_bell_diagonal({g / 4, g / 4, g / 4, 1 - 3 * g / 4});
    CHECK(max_abs_diff(make_werner(g).mat(), bd_w.mat()) < 1e-12);
    const auto bd_i = make_bell_diagonal({1 - 3 * g / 4, g / 4, g / 4, g / 4});
    CHECK(max_abs_diff(make_isotropic(g).mat(), bd_i.mat()) < 1e-12);
  }
}

TEST_CASE("purity is invariant under bilateral rotation") {
  Rng rng(22, 0);
  for (int k = 0; k < 50; ++k) {
    const DensityMatrix rho = random_full_rank_state(rng);
    const DensityMatrix rotated =
        rotate_bilateral(rho, haar_unitary(rng), haar_unitary(rng));
    CHECK(std::abs(purity(rho) - purity(rotated)) < 1e-10);
  }
}

TEST_CASE("complex token format round-trips") {
  Rng rng(23, 0);
  for (int k = 0; k < 200; ++k) {
    const cxd v{rng.normal() * std::pow(10.0, rng.below(6)) - 500.0 * rng.uniform(),
                rng.normal()};
    const cxd back = parse_complex(format_complex(v));
    CHECK(v.real() == back.real());
    CHECK(v.imag() == back.imag());
  }
  CHECK(parse_complex("1.5") == cxd{1.5, 0.0});
  CHECK(parse_complex("-2j") == cxd{0.0, -2.0});
  CHECK(parse_complex("1e-3+2e-4j") == cxd{1e-3, 2e-4});
  CHECK_THROWS_WITH_AS(parse_complex("banana+1j"), doctest::Contains("ParseError"), Error);
}

TEST_CASE("density matrix text file round-trips") {
  Rng rng(24, 0);
  const DensityMatrix rho = random_full_rank_state(rng);
  const std::string path = "states_roundtrip.txt";
  save_density_matrix(path, rho);
  const DensityMatrix back = load_density_matrix(path);
  CHECK(max_abs_diff(rho.mat(), back.mat()) == 0.0);
  std::filesystem::remove(path);

  CHECK_THROWS_WITH_AS(load_density_matrix("does_not_exist.txt"),
                       doctest::Contains("IoError"), Error);
}

TEST_CASE("projected validation fixes printed-precision states") {
  // A state pushed slightly below PSD, as rounding a printed matrix can do.
  CMatrix m(4, 4);
  m(0, 0) = 0.6;
  m(1, 1) = 0.4;
  m(2, 2) = 1e-5;
  m(3, 3) = -1e-5;
  double moved = 0.0;
  const DensityMatrix fixed = validate_density_matrix_projected(m, 1e-3, &moved);
  CHECK(moved > 0.0);
  CHECK(moved < 1e-3);
  CHECK_NOTHROW(validate_density_matrix(fixed.mat()));
  CHECK_THROWS_WITH_AS(validate_density_matrix_projected(m, 1e-7, nullptr),
                       doctest::Contains("NotPSD"), Error);
}
