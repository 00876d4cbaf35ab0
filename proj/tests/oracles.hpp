// Test-only oracles, independent of the library code paths they check.
#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "dynspec/frenet.hpp"
#include "dynspec/pencil.hpp"

namespace oracles {

// ---------------------------------------------------------------------------
// Frame transport: closed-form solution for constant curvature/torsion.
//
// Stacking the frame vectors as rows of F, the transport equations read
// F' = K F with the constant skew matrix K below, so F(s) = exp(sK) F(0).
// exp(sK) is evaluated with the Rodrigues rotation formula.
// ---------------------------------------------------------------------------

struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }
};

inline Mat3 rotation_exp(double kappa, double tau, double s) {
  // K = [[0, k, 0], [-k, 0, t], [0, -t, 0]] acts as w x (.) with
  // w = (-tau, 0, -kappa).
  const double rate = std::sqrt(kappa * kappa + tau * tau);
  if (rate == 0.0) return Mat3::identity();

  const double wx = -tau / rate, wy = 0.0, wz = -kappa / rate;
  const double theta = rate * s;
  const double c = std::cos(theta), sn = std::sin(theta);

  Mat3 r;
  // Rodrigues: R = c I + sn [w]_x + (1-c) w w^T
  const double w[3] = {wx, wy, wz};
  const double skew[3][3] = {
      {0.0, -wz, wy}, {wz, 0.0, -wx}, {-wy, wx, 0.0}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r.m[i][j] = c * (i == j ? 1.0 : 0.0) + sn * skew[i][j] +
                  (1.0 - c) * w[i] * w[j];
    }
  }
  return r;
}

// Frame at arclength s for constant (kappa, tau), starting from frame0.
inline dynspec::FrenetFrame frame_at(const dynspec::FrenetFrame& frame0,
                                     double kappa, double tau, double s) {
  const Mat3 R = rotation_exp(kappa, tau, s);
  const dynspec::Vec3 rows[3] = {frame0.t, frame0.n, frame0.b};
  auto combine = [&](int i) {
    dynspec::Vec3 v{0.0, 0.0, 0.0};
    for (int j = 0; j < 3; ++j) v += rows[j] * R.m[i][j];
    return v;
  };
  return {combine(0), combine(1), combine(2)};
}

// ---------------------------------------------------------------------------
// Symbolic double differentiation through the transport relations, on
// coefficient triples (a_t, a_n, a_b). Mirrors the derivation by hand:
//   (a_t, a_n, a_b)' = (-k a_n, k a_t - t a_b, t a_n).
// ---------------------------------------------------------------------------

struct Coeff3 {
  double t, n, b;
};

inline Coeff3 d_ds(const Coeff3& a, double kappa, double tau) {
  return {-kappa * a.n, kappa * a.t - tau * a.b, tau * a.n};
}

inline double laplacian_residual_t(double kappa, double tau) {
  Coeff3 t1 = d_ds({1.0, 0.0, 0.0}, kappa, tau);
  Coeff3 t2 = d_ds(t1, kappa, tau);
  return std::hypot(t2.t + kappa * kappa, t2.n, t2.b);
}

inline double laplacian_residual_n(double kappa, double tau) {
  Coeff3 n1 = d_ds({0.0, 1.0, 0.0}, kappa, tau);
  Coeff3 n2 = d_ds(n1, kappa, tau);
  return std::hypot(n2.t, n2.n + kappa * kappa, n2.b);
}

// ---------------------------------------------------------------------------
// Quadratic coefficients of det(A + g C) recovered from three determinant
// evaluations (Lagrange fit at g = -1, 0, +1), independent of the
// closed-form entry expansion.
// ---------------------------------------------------------------------------

inline std::array<double, 3> det_quadratic_fit(const dynspec::SpectralPencil& p) {
  auto det_at = [&](double g) {
    const double m00 = p.A.m00 + g * p.C.m00;
    const double m01 = p.A.m01 + g * p.C.m01;
    const double m10 = p.A.m10 + g * p.C.m10;
    const double m11 = p.A.m11 + g * p.C.m11;
    return m00 * m11 - m01 * m10;
  };
  const double d0 = det_at(0.0);
  const double dp = det_at(1.0);
  const double dm = det_at(-1.0);
  // det(g) = c2 g^2 + c1 g + c0
  return {0.5 * (dp + dm) - d0, 0.5 * (dp - dm), d0};
}

// ---------------------------------------------------------------------------
// Eigen-decomposition of a real 2x2 with distinct real eigenvalues:
// eigenvector for eigenvalue ev, picking the better-conditioned kernel row.
// ---------------------------------------------------------------------------

inline std::array<double, 2> eigenvector_2x2(const dynspec::Mat2& g,
                                             double ev) {
  const double r1[2] = {g.m00 - ev, g.m01};
  const double r2[2] = {g.m10, g.m11 - ev};
  const double n1 = std::abs(r1[0]) + std::abs(r1[1]);
  const double n2 = std::abs(r2[0]) + std::abs(r2[1]);
  // Kernel vector of the row with the larger norm.
  double vx, vy;
  if (n1 >= n2) {
    vx = -r1[1];
    vy = r1[0];
  } else {
    vx = -r2[1];
    vy = r2[0];
  }
  const double norm = std::hypot(vx, vy);
  if (norm == 0.0) return {1.0, 0.0};  // defective or diagonal; caller beware
  return {vx / norm, vy / norm};
}

}  // namespace oracles
