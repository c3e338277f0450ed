// SPDX-License-Identifier: Apache-2.0

#include "swapnet/states.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "swapnet/error.hpp"
#include "swapnet/numeric.hpp"

namespace swapnet {

double PureState::norm() const {
  double s = 0.0;
  for (const auto& a : vec) s += std::norm(a);
  return std::sqrt(s);
}

PureState bell_state(int index) {
  constexpr double r = 0.70710678118654752440;
  switch (index) {
    case 0: return PureState{{r, 0.0, 0.0, r}};    // Phi+
    case 1: return PureState{{r, 0.0, 0.0, -r}};   // Phi-
    case 2: return PureState{{0.0, r, r, 0.0}};    // Psi+
    case 3: return PureState{{0.0, r, -r, 0.0}};   // Psi-
    default: throw Error("ParamOutOfRange", "Bell index must be 0..3");
  }
}

DensityMatrix to_density(const PureState& psi) {
  CMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = psi.vec[i] * std::conj(psi.vec[j]);
  return DensityMatrix::trusted(std::move(m));
}

const char* family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::PureSchmidt: return "pure";
    case FamilyTag::Werner: return "werner";
    case FamilyTag::Isotropic: return "isotropic";
    case FamilyTag::BellDiagonal: return "bell-diagonal";
    case FamilyTag::XState: return "x-state";
    case FamilyTag::General: return "general";
  }
  return "?";
}

PureState make_pure_schmidt(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw Error("ParamOutOfRange", "lambda must lie in [0,1]");
  PureState psi;
  psi.vec[0] = std::sqrt(lambda);
  psi.vec[3] = std::sqrt(1.0 - lambda);
  return psi;
}

namespace {

DensityMatrix noisy_bell(int bell_index, double noise) {
  if (!(noise >= 0.0 && noise <= 1.0))
    throw Error("ParamOutOfRange", "noise weight must lie in [0,1]");
  const PureState b = bell_state(bell_index);
  CMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j)
      m(i, j) = (1.0 - noise) * b.vec[i] * std::conj(b.vec[j]);
    m(i, i) += noise / 4.0;
  }
  return DensityMatrix::trusted(std::move(m));
}

}  // namespace

DensityMatrix make_werner(double gamma) { return noisy_bell(3, gamma); }

DensityMatrix make_isotropic(double alpha) { return noisy_bell(0, alpha); }

DensityMatrix make_bell_diagonal(const std::array<double, 4>& weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw Error("ParamOutOfRange", "Bell-diagonal weight < 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw Error("NotNormalized", "Bell-diagonal weights sum to " + std::to_string(sum));
  CMatrix m(4, 4);
  for (int k = 0; k < 4; ++k) {
    const PureState b = bell_state(k);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        m(i, j) += weights[static_cast<std::size_t>(k)] * b.vec[i] * std::conj(b.vec[j]);
  }
  return DensityMatrix::trusted(std::move(m));
}

DensityMatrix make_x_state(double g11, double g22, double g33, double g44,
                           double g14, double g23) {
  if (g11 < 0 || g22 < 0 || g33 < 0 || g44 < 0)
    throw Error("ParamOutOfRange", "X-state diagonal entry < 0");
  const double sum = g11 + g22 + g33 + g44;
  if (std::abs(sum - 1.0) > 1e-10)
    throw Error("NotNormalized", "X-state diagonal sums to " + std::to_string(sum));
  if (g11 * g44 < g14 * g14 || g22 * g33 < g23 * g23)
    throw Error("NotPSD", "X-state off-diagonal violates 2x2 block positivity");
  CMatrix m(4, 4);
  m(0, 0) = g11;
  m(1, 1) = g22;
  m(2, 2) = g33;
  m(3, 3) = g44;
  m(0, 3) = m(3, 0) = g14;
  m(1, 2) = m(2, 1) = g23;
  return DensityMatrix::trusted(std::move(m));
}

DensityMatrix StateFamily::to_density() const {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw Error("ParamOutOfRange", std::string(family_name(tag)) +
                                         " expects " + std::to_string(n) +
                                         " parameters");
  };
  switch (tag) {
    case FamilyTag::PureSchmidt:
      need(1);
      return swapnet::to_density(make_pure_schmidt(params[0]));
    case FamilyTag::Werner:
      need(1);
      return make_werner(params[0]);
    case FamilyTag::Isotropic:
      need(1);
      return make_isotropic(params[0]);
    case FamilyTag::BellDiagonal:
      need(4);
      return make_bell_diagonal({params[0], params[1], params[2], params[3]});
    case FamilyTag::XState:
      need(6);
      return make_x_state(params[0], params[1], params[2], params[3], params[4],
                          params[5]);
    case FamilyTag::General: {
      need(16);
      CMatrix m(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = params[i * 4 + j];
      return validate_density_matrix(m);
    }
  }
  throw Error("UnsupportedFamily", "unknown tag");
}

DensityMatrix validate_density_matrix(const CMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw Error("ShapeMismatch", "density matrix must be 4x4");
  if (!m.is_finite()) throw Error("NotFinite", "density matrix has NaN/Inf");
  const double defect = hermiticity_defect(m);
  if (defect > tol::hermiticity)
    throw Error("NotHermitian", "residual " + std::to_string(defect));
  const double tr_err = std::abs(m.trace() - cxd{1.0, 0.0});
  if (tr_err > tol::trace_unit)
    throw Error("NotNormalized", "trace residual " + std::to_string(tr_err));
  const auto eigs = hermitian_eigenvalues(m);
  if (eigs.back() < tol::psd_eigen_floor)
    throw Error("NotPSD", "smallest eigenvalue " + std::to_string(eigs.back()));
  return DensityMatrix::trusted(m);
}

DensityMatrix validate_density_matrix_projected(const CMatrix& m, double slack,
                                                double* projection_distance) {
  if (m.rows() != 4 || m.cols() != 4)
    throw Error("ShapeMismatch", "density matrix must be 4x4");
  const double defect = hermiticity_defect(m);
  if (defect > slack) throw Error("NotHermitian", "residual " + std::to_string(defect));
  const double tr_err = std::abs(m.trace() - cxd{1.0, 0.0});
  if (tr_err > slack) throw Error("NotNormalized", "trace residual " + std::to_string(tr_err));

  EigenSystem es = hermitian_eigensystem(m);
  if (es.eigenvalues.back() < -slack)
    throw Error("NotPSD", "smallest eigenvalue " + std::to_string(es.eigenvalues.back()));

  double total = 0.0;
  std::vector<double> lam = es.eigenvalues;
  for (double& x : lam) {
    if (x < 0.0) x = 0.0;
    total += x;
  }
  CMatrix fixed(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      cxd acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k)
        acc += es.eigenvectors(i, k) * (lam[k] / total) * std::conj(es.eigenvectors(j, k));
      fixed(i, j) = acc;
    }
  for (std::size_t i = 0; i < 4; ++i) {
    fixed(i, i) = cxd{fixed(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < 4; ++j) {
      const cxd avg = 0.5 * (fixed(i, j) + std::conj(fixed(j, i)));
      fixed(i, j) = avg;
      fixed(j, i) = std::conj(avg);
    }
  }
  if (projection_distance != nullptr) *projection_distance = max_abs_diff(fixed, m);
  return DensityMatrix::trusted(std::move(fixed));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const auto& v : rho.mat().entries()) s += std::norm(v);
  return s;
}

DensityMatrix rotate_bilateral(const DensityMatrix& rho, const CMatrix& ua,
                               const CMatrix& ub) {
  const CMatrix u = kron(ua, ub);
  CMatrix out = u * rho.mat() * u.adjoint();
  // Round-off symmetrization; rotations preserve the spectrum exactly.
  for (std::size_t i = 0; i < 4; ++i) {
    out(i, i) = cxd{out(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < 4; ++j) {
      const cxd avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
      out(i, j) = avg;
      out(j, i) = std::conj(avg);
    }
  }
  return DensityMatrix::trusted(std::move(out));
}

std::string format_complex(cxd v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gj", v.real(), v.imag());
  return buf;
}

cxd parse_complex(const std::string& token) {
  if (token.empty()) throw Error("ParseError", "empty complex token");
  std::string body = token;
  bool has_j = body.back() == 'j' || body.back() == 'J';
  if (has_j) body.pop_back();
  // Split at the last top-level +/- that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    const char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  try {
    if (!has_j) return cxd{std::stod(body), 0.0};
    if (split == std::string::npos) {
      // Bare imaginary such as "1j" or "-0.5j".
      if (body.empty() || body == "+" || body == "-")
        return cxd{0.0, body == "-" ? -1.0 : 1.0};
      return cxd{0.0, std::stod(body)};
    }
    const double re = std::stod(body.substr(0, split));
    std::string im = body.substr(split);
    if (im == "+") return cxd{re, 1.0};
    if (im == "-") return cxd{re, -1.0};
    return cxd{re, std::stod(im)};
  } catch (const std::exception&) {
    throw Error("ParseError", "bad complex token '" + token + "'");
  }
}

void write_density_matrix(std::ostream& out, const DensityMatrix& rho) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (j) out << ' ';
      out << format_complex(rho.mat()(i, j));
    }
    out << '\n';
  }
}

CMatrix read_matrix_block(std::istream& in) {
  CMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      std::string token;
      if (!(in >> token))
        throw Error("ParseError", "truncated density-matrix block");
      m(i, j) = parse_complex(token);
    }
  return m;
}

void save_density_matrix(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw Error("IoError", "cannot open " + path + " for writing");
  write_density_matrix(out, rho);
  if (!out) throw Error("IoError", "write failed for " + path);
}

DensityMatrix load_density_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path);
  return validate_density_matrix(read_matrix_block(in));
}

}  // namespace swapnet
