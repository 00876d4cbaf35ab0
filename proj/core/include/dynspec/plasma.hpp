#pragma once

#include <optional>

namespace dynspec {

/// Flow and turbulence parameters of the filament plasma.
///
/// The helicity coefficient alpha and the Lyapunov factor lambda_lyap only
/// ever enter the operator matrices through their product; alpha_lambda()
/// exposes that product. An explicit override (set by the CLI) supersedes
/// alpha * lambda_lyap and is carried along so outputs can record it.
struct PlasmaParams {
  double alpha = 0.0;
  double beta = 0.0;  // turbulent diffusivity, >= 0
  double v_s = 0.0;   // tangential flow speed
  double lambda_lyap = 0.0;
  double kappa0 = 0.0;
  std::optional<double> alpha_lambda_override;

  double alpha_lambda() const {
    return alpha_lambda_override ? *alpha_lambda_override
                                 : alpha * lambda_lyap;
  }

  void validate() const;  // throws InvalidInput
};

/// Magnetic field components along the normal/binormal directions.
struct FieldComponents {
  double B_n = 0.0;
  double B_b = 0.0;

  bool equipartition() const { return B_n == B_b; }
};

/// Solenoidal-constraint residual d_s B_b - kappa0 B_n under constant
/// components, i.e. -kappa0 * B_n. Zero means the constraint is satisfied;
/// anything else is recorded by the audit, not rejected.
double divergence_residual(const FieldComponents& fields, double kappa0);

/// Flow speed selected by B_n v_s = -B_b. Throws DegenerateConstraint when
/// B_n = 0 (v_s undetermined).
double equipartition_flow_constraint(const FieldComponents& fields);

}  // namespace dynspec
