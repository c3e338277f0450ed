// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "swapnet/cmatrix.hpp"

namespace swapnet {

// Two-qubit computational basis order |00>,|01>,|10>,|11>, index
// 2*(first qubit) + (second qubit). Bell indices follow the fixed order
// 0:Phi+, 1:Phi-, 2:Psi+, 3:Psi- everywhere, including swap outcome labels.

struct PureState {
  std::array<cxd, 4> vec{};

  double norm() const;
};

PureState bell_state(int index);

// Validated 4x4 density matrix: Hermitian, unit trace, PSD within the
// tolerances in numeric.hpp. Obtain one through a family constructor,
// validate_density_matrix, or trusted() when the caller guarantees the
// invariants (swap outputs, bilateral rotations).
class DensityMatrix {
 public:
  const CMatrix& mat() const { return mat_; }

  static DensityMatrix trusted(CMatrix m) { return DensityMatrix(std::move(m)); }

 private:
  explicit DensityMatrix(CMatrix m) : mat_(std::move(m)) {}
  CMatrix mat_;
};

DensityMatrix to_density(const PureState& psi);

enum class FamilyTag { PureSchmidt, Werner, Isotropic, BellDiagonal, XState, General };

// Family tag plus its real parameter list:
//   PureSchmidt  {lambda}
//   Werner       {gamma}
//   Isotropic    {alpha}
//   BellDiagonal {w0, w1, w2, w3}
//   XState       {g11, g22, g33, g44, g14, g23}
//   General      {16 reals, row-major symmetric matrix}
struct StateFamily {
  FamilyTag tag;
  std::vector<double> params;

  DensityMatrix to_density() const;
};

const char* family_name(FamilyTag tag);

PureState make_pure_schmidt(double lambda);
DensityMatrix make_werner(double gamma);
DensityMatrix make_isotropic(double alpha);
DensityMatrix make_bell_diagonal(const std::array<double, 4>& weights);
DensityMatrix make_x_state(double g11, double g22, double g33, double g44,
                           double g14, double g23);

// Checks the three invariants and names the violated one (NotHermitian,
// NotNormalized, NotPSD) with the measured residual.
DensityMatrix validate_density_matrix(const CMatrix& m);

// Relaxed entry point for externally supplied matrices whose printed
// precision may break PSD-ness at round-off scale: eigenvalues in
// (-slack, 0) are projected to 0 and the trace renormalized. Reports the
// max-norm distance moved through *projection_distance when non-null.
DensityMatrix validate_density_matrix_projected(const CMatrix& m, double slack,
                                                double* projection_distance);

double purity(const DensityMatrix& rho);

// (ua (x) ub) rho (ua (x) ub)^dagger for 2x2 unitaries ua, ub.
DensityMatrix rotate_bilateral(const DensityMatrix& rho, const CMatrix& ua,
                               const CMatrix& ub);

// Text format: 4 lines x 4 whitespace-separated entries "re+imj".
std::string format_complex(cxd v);
cxd parse_complex(const std::string& token);
void write_density_matrix(std::ostream& out, const DensityMatrix& rho);
CMatrix read_matrix_block(std::istream& in);
void save_density_matrix(const std::string& path, const DensityMatrix& rho);
DensityMatrix load_density_matrix(const std::string& path);

}  // namespace swapnet
