#include "dynspec/pencil.hpp"

#include <string>

#include "dynspec/errors.hpp"
#include "dynspec/spectrum.hpp"

namespace dynspec {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::GeneralBeta:
      return "general-beta";
    case Variant::Laminar:
      return "laminar";
    case Variant::ZeroHelicityTurbulent:
      return "zero-helicity";
    case Variant::OscillatoryLimit:
      return "oscillatory";
  }
  throw InvalidInput("unknown pencil variant");
}

Variant variant_from_string(std::string_view name) {
  if (name == "general-beta" || name == "general") return Variant::GeneralBeta;
  if (name == "laminar") return Variant::Laminar;
  if (name == "zero-helicity" || name == "zero-helicity-turbulent")
    return Variant::ZeroHelicityTurbulent;
  if (name == "oscillatory" || name == "oscillatory-limit")
    return Variant::OscillatoryLimit;
  throw InvalidInput("unknown pencil variant '" + std::string(name) + "'");
}

double effective_alpha_lambda(Variant variant, const PlasmaParams& params) {
  switch (variant) {
    case Variant::GeneralBeta:
    case Variant::Laminar:
      return params.alpha_lambda();
    case Variant::ZeroHelicityTurbulent:
    case Variant::OscillatoryLimit:
      return 0.0;
  }
  throw InvalidInput("unknown pencil variant");
}

double effective_beta(Variant variant, const PlasmaParams& params) {
  switch (variant) {
    case Variant::GeneralBeta:
    case Variant::ZeroHelicityTurbulent:
      return params.beta;
    case Variant::Laminar:
    case Variant::OscillatoryLimit:
      return 0.0;
  }
  throw InvalidInput("unknown pencil variant");
}

bool beta_dependent(Variant variant) {
  return variant == Variant::GeneralBeta ||
         variant == Variant::ZeroHelicityTurbulent;
}

SpectralPencil build_pencil(Variant variant, const PlasmaParams& params,
                            const PencilOptions& opts) {
  params.validate();

  const double al = effective_alpha_lambda(variant, params);
  const double beta = effective_beta(variant, params);
  const double k = params.kappa0;
  const double k2 = k * k;
  // Printed diffusion order in the (2,2) entry is kappa0^4; the opt-in
  // toggle drops it to kappa0^2 to match the (1,1) entry.
  const double k_diff = opts.assume_kappa4_typo ? k2 : k2 * k2;

  SpectralPencil p;
  p.variant = variant;
  p.params = params;
  p.options = opts;
  p.A = Mat2{
      2.0 * beta * k2 - al, -k,               //
      -(al + k * params.v_s), -(beta * k_diff)  //
  };
  p.C = Mat2{1.0, 0.0, 0.0, -1.0};
  return p;
}

QuadCoeffs QuadCoeffs::normalized() const {
  if (c2 == 0.0) {
    throw DegeneratePencil("cannot normalize a degenerate quadratic (c2 = 0)");
  }
  return {1.0, c1 / c2, c0 / c2};
}

QuadCoeffs characteristic_coeffs(const SpectralPencil& pencil) {
  const Mat2& A = pencil.A;
  const Mat2& C = pencil.C;
  return {
      C.det(),
      A.m00 * C.m11 + A.m11 * C.m00 - A.m01 * C.m10 - A.m10 * C.m01,
      A.det(),
  };
}

QuadCoeffs printed_growth_polynomial(const PlasmaParams& params) {
  params.validate();
  const double al = params.alpha_lambda();
  const double k = params.kappa0;
  return {1.0, al, -(al + k) * k};
}

std::complex<double> pencil_det_at(const SpectralPencil& pencil,
                                   std::complex<double> gamma) {
  const Mat2& A = pencil.A;
  const Mat2& C = pencil.C;
  const auto m00 = A.m00 + gamma * C.m00;
  const auto m01 = A.m01 + gamma * C.m01;
  const auto m10 = A.m10 + gamma * C.m10;
  const auto m11 = A.m11 + gamma * C.m11;
  return m00 * m11 - m01 * m10;
}

}  // namespace dynspec
