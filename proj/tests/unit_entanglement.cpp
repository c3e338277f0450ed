// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "swapnet/ensembles.hpp"
#include "swapnet/entanglement.hpp"
#include "swapnet/error.hpp"
#include "test_support.hpp"

using namespace swapnet;

namespace {

// Direct matrix evaluation oracle for the spin flip, built from the
// explicit Pauli product rather than the index shortcut in the engine.
CMatrix oracle_spin_flip(const DensityMatrix& rho) {
  const CMatrix sy =
      CMatrix::from_rows({{cxd{0, 0}, cxd{0, -1}}, {cxd{0, 1}, cxd{0, 0}}});
  const CMatrix yy = kron(sy, sy);
  return yy * rho.mat().conjugate() * yy;
}

DensityMatrix basis_projector(int k) {
  CMatrix m(4, 4);
  m(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = 1.0;
  return DensityMatrix::trusted(std::move(m));
}

}  // namespace

TEST_CASE("spin flip matches the direct Pauli conjugation") {
  Rng rng(31, 0);
  for (int k = 0; k < 30; ++k) {
    const DensityMatrix rho = random_full_rank_state(rng);
    CHECK(max_abs_diff(spin_flip(rho), oracle_spin_flip(rho)) < 1e-14);
  }

  // Named cases.
  const DensityMatrix phi = to_density(bell_state(0));
  CHECK(max_abs_diff(spin_flip(phi), phi.mat()) < 1e-14);

  const DensityMatrix mixed = validate_density_matrix(0.25 * CMatrix::identity(4));
  CHECK(max_abs_diff(spin_flip(mixed), mixed.mat()) < 1e-15);

  CHECK(max_abs_diff(spin_flip(basis_projector(0)), basis_projector(3).mat()) < 1e-15);
}

TEST_CASE("concurrence of the named states") {
  for (int k = 0; k < 4; ++k)
    CHECK(concurrence(to_density(bell_state(k))) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(concurrence(make_werner(0.2)) == doctest::Approx(0.7).epsilon(1e-9));
  CHECK(concurrence(make_x_state(0.45, 0.05, 0.05, 0.45, 0.4, 0.0)) ==
        doctest::Approx(0.7).epsilon(1e-9));
}

TEST_CASE("concurrence spectrum is ordered and bounded") {
  Rng rng(32, 0);
  for (int k = 0; k < 30; ++k) {
    const auto spec = concurrence_spectrum(random_full_rank_state(rng));
    CHECK(spec.mu[0] >= spec.mu[1]);
    CHECK(spec.mu[1] >= spec.mu[2]);
    CHECK(spec.mu[2] >= spec.mu[3]);
    CHECK(spec.mu[3] >= 0.0);
    const double c = concurrence(random_full_rank_state(rng));
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
  }
  // Separable diagonal state.
  CHECK(concurrence(make_x_state(0.4, 0.3, 0.2, 0.1, 0, 0)) == 0.0);
}

TEST_CASE("closed forms match the Wootters engine across parameter grids") {
  for (int k = 0; k <= 50; ++k) {
    const double t = k / 50.0;

    const StateFamily pure{FamilyTag::PureSchmidt, {t}};
    CHECK(concurrence_closed_form(pure) ==
          doctest::Approx(concurrence(pure.to_density())).epsilon(1e-9));

    const StateFamily werner{FamilyTag::Werner, {t}};
    CHECK(concurrence_closed_form(werner) ==
          doctest::Approx(concurrence(werner.to_density())).epsilon(1e-9));

    const StateFamily iso{FamilyTag::Isotropic, {t}};
    CHECK(concurrence_closed_form(iso) ==
          doctest::Approx(concurrence(iso.to_density())).epsilon(1e-9));

    const double w0 = 0.25 + 0.75 * t;
    const StateFamily bd{FamilyTag::BellDiagonal,
                         {w0, (1 - w0) / 2, (1 - w0) / 4, (1 - w0) / 4}};
    CHECK(concurrence_closed_form(bd) ==
          doctest::Approx(concurrence(bd.to_density())).epsilon(1e-9));
  }

  Rng rng(33, 0);
  for (int k = 0; k < 50; ++k) {
    const DensityMatrix x = random_x_state(rng);
    const StateFamily fam{FamilyTag::XState,
                          {x.mat()(0, 0).real(), x.mat()(1, 1).real(),
                           x.mat()(2, 2).real(), x.mat()(3, 3).real(),
                           x.mat()(0, 3).real(), x.mat()(1, 2).real()}};
    CHECK(concurrence_closed_form(fam) ==
          doctest::Approx(concurrence(x)).epsilon(1e-9));
  }
}

TEST_CASE("closed-form examples") {
  CHECK(concurrence_closed_form({FamilyTag::PureSchmidt, {0.5}}) == 1.0);
  CHECK(concurrence_closed_form({FamilyTag::BellDiagonal, {0.7, 0.1, 0.1, 0.1}}) ==
        doctest::Approx(0.4).epsilon(1e-12));
  CHECK(concurrence_closed_form({FamilyTag::Isotropic, {2.0 / 3.0}}) == 0.0);
  CHECK_THROWS_WITH_AS(concurrence_closed_form({FamilyTag::General, {}}),
                       doctest::Contains("UnsupportedFamily"), Error);
}

TEST_CASE("param_for_concurrence inverts the closed forms") {
  CHECK(param_for_concurrence(FamilyTag::Werner, 0.5).params[0] ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(param_for_concurrence(FamilyTag::PureSchmidt, 1.0).params[0] ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(param_for_concurrence(FamilyTag::Isotropic, 0.0).params[0] ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  for (int k = 0; k <= 20; ++k) {
    const double c = k / 20.0;
    for (FamilyTag tag :
         {FamilyTag::PureSchmidt, FamilyTag::Werner, FamilyTag::Isotropic}) {
      const StateFamily fam = param_for_concurrence(tag, c);
      CHECK(concurrence_closed_form(fam) == doctest::Approx(c).epsilon(1e-12));
    }
  }

  CHECK_THROWS_WITH_AS(param_for_concurrence(FamilyTag::XState, 0.5),
                       doctest::Contains("UnsupportedFamily"), Error);
  CHECK_THROWS_WITH_AS(param_for_concurrence(FamilyTag::Werner, 1.5),
                       doctest::Contains("ParamOutOfRange"), Error);
}

TEST_CASE("concurrence is invariant under local unitaries") {
  Rng rng(34, 0);
  for (int k = 0; k < 60; ++k) {
    const DensityMatrix rho = random_full_rank_state(rng);
    const DensityMatrix rot =
        rotate_bilateral(rho, haar_unitary(rng), haar_unitary(rng));
    CHECK(std::abs(concurrence(rho) - concurrence(rot)) < 1e-9);
  }
}

TEST_CASE("concurrence is convex on random mixtures") {
  Rng rng(35, 0);
  for (int k = 0; k < 40; ++k) {
    const DensityMatrix a = random_full_rank_state(rng);
    const DensityMatrix b = testing::random_pure_density(rng);
    const double t = rng.uniform();
    const DensityMatrix mix =
        DensityMatrix::trusted(t * a.mat() + (1.0 - t) * b.mat());
    CHECK(concurrence(mix) <= t * concurrence(a) + (1.0 - t) * concurrence(b) + 1e-9);
  }
}
