#pragma once

#include <array>
#include <complex>
#include <string_view>

#include "dynspec/plasma.hpp"

namespace dynspec {

struct Mat2 {
  double m00 = 0.0, m01 = 0.0;
  double m10 = 0.0, m11 = 0.0;

  double det() const { return m00 * m11 - m01 * m10; }
  double trace() const { return m00 + m11; }
  double frobenius_sq() const {
    return m00 * m00 + m01 * m01 + m10 * m10 + m11 * m11;
  }
  std::array<double, 4> row_major() const { return {m00, m01, m10, m11}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Which of the four printed operator matrices the pencil encodes.
enum class Variant {
  GeneralBeta,            // full matrix: diffusivity and helicity terms
  Laminar,                // beta = 0
  ZeroHelicityTurbulent,  // alpha*lambda = 0
  OscillatoryLimit,       // both = 0
};

std::string_view to_string(Variant v);
Variant variant_from_string(std::string_view name);  // throws InvalidInput

struct PencilOptions {
  /// The printed (2,2) diffusion entry carries kappa0^4 while the (1,1)
  /// entry carries kappa0^2. Off by default: the matrices are built exactly
  /// as printed. Turning this on replaces kappa0^4 -> kappa0^2.
  bool assume_kappa4_typo = false;
};

/// Affine matrix pencil M(gamma) = A + gamma*C. Every variant has
/// C = diag(1, -1), so det(C) != 0 always holds for built pencils.
struct SpectralPencil {
  Mat2 A;
  Mat2 C;
  Variant variant = Variant::Laminar;
  PlasmaParams params;  // provenance copy, as given by the caller
  PencilOptions options;
};

/// Populates the pencil from the printed matrix entries. Per variant the
/// suppressed parameters are forced to zero regardless of `params` (beta for
/// Laminar, alpha*lambda for ZeroHelicityTurbulent, both for
/// OscillatoryLimit); the params copy keeps the caller's values.
SpectralPencil build_pencil(Variant variant, const PlasmaParams& params,
                            const PencilOptions& opts = {});

/// Coefficients of det(A + gamma C) = c2 g^2 + c1 g + c0.
struct QuadCoeffs {
  double c2 = 0.0, c1 = 0.0, c0 = 0.0;

  /// Divides through by c2 so the leading coefficient is 1.
  QuadCoeffs normalized() const;

  friend bool operator==(const QuadCoeffs&, const QuadCoeffs&) = default;
};

/// Exact 2x2 expansion of det(A + gamma C).
QuadCoeffs characteristic_coeffs(const SpectralPencil& pencil);

/// The second-order growth polynomial exactly as printed in the audited
/// derivation: gamma^2 + (alpha lambda) gamma - (alpha lambda + kappa0) kappa0.
/// Deliberately kept separate from characteristic_coeffs so the audit can
/// compare the two.
QuadCoeffs printed_growth_polynomial(const PlasmaParams& params);

/// det(A + gamma C) at a (possibly complex) gamma; used for residual checks.
std::complex<double> pencil_det_at(const SpectralPencil& pencil,
                                   std::complex<double> gamma);

}  // namespace dynspec
