#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynspec/pencil.hpp"

namespace dynspec {

/// Classification threshold for growth-rate signs and the anosov-branch
/// default tolerance. Far above root residuals, far below parameter scales.
inline constexpr double kRegimeTol = 1e-9;

/// Both growth-rate roots, ordered by descending real part (ties broken by
/// descending imaginary part).
struct Spectrum {
  std::array<std::complex<double>, 2> roots;
  Variant source_variant = Variant::Laminar;
  PlasmaParams params;
};

enum class Regime { Fast, Marginal, Decaying, Oscillatory };

std::string_view to_string(Regime r);

struct DynamoClass {
  Regime regime = Regime::Marginal;
  bool anosov = false;
  std::string notes;
};

/// Roots of c2 g^2 + c1 g + c0 = 0 by the numerically stable quadratic
/// formula: the larger-magnitude root is computed first and the other is
/// recovered as c0 / (c2 * g1). Throws DegeneratePencil when c2 = 0.
std::array<std::complex<double>, 2> solve_quadratic(double c2, double c1,
                                                    double c0);

/// Solves det(A + gamma C) = 0 for the pencil's two growth rates.
Spectrum solve_pencil(const SpectralPencil& pencil);

struct GoldenRoots {
  std::array<double, 2> roots;  // descending
  bool degenerate = false;      // alpha_lambda == 0 collapses both to zero
};

/// Roots of gamma^2 + (al) gamma - (al)^2 = 0, i.e. al * (-1 +- sqrt(5)) / 2:
/// the golden-ratio stretching/squeezing pair scaled by al = alpha*lambda.
GoldenRoots golden_polynomial_roots(double alpha_lambda);

struct AnosovCheck {
  bool matched = false;
  /// Distance from each root (in Spectrum order) to its golden-branch target
  /// under the better of the two pairings.
  std::array<double, 2> deviations{0.0, 0.0};
};

/// True iff the root multiset equals {kappa*(-1+sqrt 5)/2, kappa*(-1-sqrt 5)/2}
/// within `tol` per root, after optimal pairing.
AnosovCheck anosov_branch_check(const Spectrum& spectrum, double kappa,
                                double tol);

/// Regime assignment. For beta-dependent variants (GeneralBeta,
/// ZeroHelicityTurbulent) the vanishing-diffusivity limit of Re gamma_max
/// must be supplied and decides fast/marginal/decaying; otherwise the max
/// real part does. An oscillatory spectrum (both real parts ~0, imaginary
/// parts nonzero) overrides the sign rule. The anosov flag checks the roots
/// against the golden pair scaled by the effective alpha*lambda.
DynamoClass classify(const Spectrum& spectrum,
                     std::optional<double> beta_limit = std::nullopt);

struct BetaLimitResult {
  double limit = 0.0;
  /// (beta, max Re gamma) at each requested diffusivity, in input order.
  std::vector<std::pair<double, double>> sequence;
};

/// Extrapolates Re gamma_max to beta -> 0 over a strictly decreasing
/// positive beta sequence (linear Richardson step on the two smallest
/// values). Beta-independent variants return their max Re root directly.
BetaLimitResult beta_limit(Variant variant, const PlasmaParams& params,
                           std::span<const double> betas,
                           const PencilOptions& opts = {});

/// Default sequence used by sweeps and the CLI when classifying
/// beta-dependent variants.
inline constexpr std::array<double, 4> kDefaultBetaSequence{1e-1, 1e-2, 1e-3,
                                                            1e-4};

/// alpha*lambda actually used in the variant's matrix (forced to zero for
/// ZeroHelicityTurbulent and OscillatoryLimit).
double effective_alpha_lambda(Variant variant, const PlasmaParams& params);

/// beta actually used in the variant's matrix (forced to zero for Laminar
/// and OscillatoryLimit).
double effective_beta(Variant variant, const PlasmaParams& params);

bool beta_dependent(Variant variant);

}  // namespace dynspec
