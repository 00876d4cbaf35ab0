#pragma once

#include <complex>

#include <nlohmann/json.hpp>

#include "dynspec/evolution.hpp"
#include "dynspec/pencil.hpp"
#include "dynspec/spectrum.hpp"
#include "dynspec/sweep.hpp"

namespace dynspec {

/// {"re": ..., "im": ...}
nlohmann::ordered_json root_to_json(std::complex<double> z);

/// {alpha, beta, v_s, lambda, kappa0} plus alpha_lambda_override when one
/// was supplied.
nlohmann::ordered_json params_to_json(const PlasmaParams& p);
PlasmaParams params_from_json(const nlohmann::json& j);

/// {variant, A (row-major), C (row-major), params{...}}
nlohmann::ordered_json pencil_to_json(const SpectralPencil& pencil);
SpectralPencil pencil_from_json(const nlohmann::json& j);

/// {variant, roots: [{re,im},{re,im}], regime, anosov, params}
nlohmann::ordered_json spectrum_to_json(const Spectrum& spectrum,
                                        const DynamoClass& cls);

/// {lambda_fit, stderr, window{t0, t1, samples}}
nlohmann::ordered_json fit_to_json(const GrowthFit& fit);

nlohmann::ordered_json sweep_rows_to_json(std::span<const SweepRow> rows);

}  // namespace dynspec
