#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "casimir/errors.hpp"

namespace casimir::geometry {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

// Rank-3 tensor stored as three 3x3 slices: slice[l](i, j) = T_lij.
template <typename Scalar>
struct Rank3Tensor {
  std::array<Matrix3<Scalar>, 3> slice;

  Scalar operator()(int l, int i, int j) const { return slice[static_cast<std::size_t>(l)](i, j); }
  Scalar& operator()(int l, int i, int j) { return slice[static_cast<std::size_t>(l)](i, j); }

  Scalar max_abs() const {
    Scalar m(0);
    for (const auto& s : slice) m = std::max(m, s.cwiseAbs().maxCoeff());
    return m;
  }

  Rank3Tensor operator-(const Rank3Tensor& rhs) const {
    Rank3Tensor out;
    for (int l = 0; l < 3; ++l) out.slice[static_cast<std::size_t>(l)] = slice[static_cast<std::size_t>(l)] - rhs.slice[static_cast<std::size_t>(l)];
    return out;
  }
};

template <typename Scalar>
void require_nonzero_separation(const Vector3<Scalar>& sep, const char* where) {
  if (sep.norm() == Scalar(0)) {
    throw DomainError(std::string(where) + ": separation must be nonzero");
  }
}

// Static dipole-dipole coupling psi_ij = -(3 x_i x_j / r^5 - delta_ij / r^3).
// Traceless and symmetric; homogeneous of degree -3.
template <typename Scalar>
Matrix3<Scalar> dipole_tensor(const Vector3<Scalar>& sep) {
  require_nonzero_separation(sep, "dipole_tensor");
  const Scalar r2 = sep.squaredNorm();
  const Scalar r = std::sqrt(r2);
  const Scalar inv_r3 = Scalar(1) / (r2 * r);
  const Scalar inv_r5 = inv_r3 / r2;
  return -(Scalar(3) * inv_r5 * (sep * sep.transpose()) -
           inv_r3 * Matrix3<Scalar>::Identity());
}

// Gradient of the dipole coupling:
//   T_lij = d psi_ij / d x_l
//         = 15 x_l x_i x_j / r^7 - 3 (d_li x_j + d_lj x_i + d_ij x_l) / r^5.
// Fully symmetric in (l, i, j); homogeneous of degree -4 and odd under
// sep -> -sep.
template <typename Scalar>
Rank3Tensor<Scalar> force_tensor(const Vector3<Scalar>& sep) {
  require_nonzero_separation(sep, "force_tensor");
  const Scalar r2 = sep.squaredNorm();
  const Scalar r = std::sqrt(r2);
  const Scalar inv_r5 = Scalar(1) / (r2 * r2 * r);
  const Scalar inv_r7 = inv_r5 / r2;

  Rank3Tensor<Scalar> t;
  for (int l = 0; l < 3; ++l) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Scalar value = Scalar(15) * sep[l] * sep[i] * sep[j] * inv_r7;
        if (l == i) value -= Scalar(3) * sep[j] * inv_r5;
        if (l == j) value -= Scalar(3) * sep[i] * inv_r5;
        if (i == j) value -= Scalar(3) * sep[l] * inv_r5;
        t(l, i, j) = value;
      }
    }
  }
  return t;
}

// G_lq = T_lij T_qij, the squared force-tensor contraction.  Symmetric
// positive-semidefinite; transforms as a rank-2 tensor under rotations.
template <typename Scalar>
Matrix3<Scalar> coupling_strength(const Vector3<Scalar>& sep) {
  const Rank3Tensor<Scalar> t = force_tensor(sep);
  Matrix3<Scalar> g;
  for (int l = 0; l < 3; ++l) {
    for (int q = l; q < 3; ++q) {
      const Scalar val = t.slice[static_cast<std::size_t>(l)]
                             .cwiseProduct(t.slice[static_cast<std::size_t>(q)])
                             .sum();
      g(l, q) = val;
      g(q, l) = val;
    }
  }
  return g;
}

// Half-space coupling per unit area: G = 3 pi rho1 rho2 / (8 d^4).  This is
// the xx component of coupling_strength integrated over two parallel
// half-spaces at gap d (motion along x); see the half-space oracle for the
// brute-force check of the 3 pi / 8 constant.
inline double halfspace_coupling(double d_m, double rho1_per_m3, double rho2_per_m3) {
  if (d_m <= 0.0) throw DomainError("halfspace_coupling: separation must be > 0");
  if (rho1_per_m3 <= 0.0 || rho2_per_m3 <= 0.0) {
    throw DomainError("halfspace_coupling: densities must be > 0");
  }
  const double d2 = d_m * d_m;
  return 3.0 * M_PI * rho1_per_m3 * rho2_per_m3 / (8.0 * d2 * d2);
}

}  // namespace casimir::geometry
