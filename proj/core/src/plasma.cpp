#include "dynspec/plasma.hpp"

#include <cmath>

#include "dynspec/errors.hpp"

namespace dynspec {

void PlasmaParams::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(v_s) ||
      !std::isfinite(lambda_lyap) || !std::isfinite(kappa0)) {
    throw InvalidInput("plasma parameters must be finite");
  }
  if (alpha_lambda_override && !std::isfinite(*alpha_lambda_override)) {
    throw InvalidInput("alpha_lambda override must be finite");
  }
  if (beta < 0.0) {
    throw InvalidInput("turbulent diffusivity beta must be >= 0");
  }
}

double divergence_residual(const FieldComponents& fields, double kappa0) {
  // d_s B_b vanishes for constant components, leaving -kappa0 * B_n.
  return -kappa0 * fields.B_n;
}

double equipartition_flow_constraint(const FieldComponents& fields) {
  if (fields.B_n == 0.0) {
    throw DegenerateConstraint(
        "flow constraint is degenerate: B_n = 0 leaves v_s undetermined");
  }
  return -fields.B_b / fields.B_n;
}

}  // namespace dynspec
