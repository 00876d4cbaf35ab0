#include "dynspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dynspec/errors.hpp"

namespace dynspec {

namespace {

using Complex = std::complex<double>;

// Descending real part, ties by descending imaginary part.
void order_roots(std::array<Complex, 2>& r) {
  auto key = [](const Complex& z) { return std::pair(z.real(), z.imag()); };
  if (key(r[0]) < key(r[1])) std::swap(r[0], r[1]);
}

std::string describe_limit(double limit, bool from_beta) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s=%.6g",
                from_beta ? "beta->0 limit of Re gamma_max" : "max Re gamma",
                limit);
  return buf;
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Fast:
      return "FAST";
    case Regime::Marginal:
      return "MARGINAL";
    case Regime::Decaying:
      return "DECAYING";
    case Regime::Oscillatory:
      return "OSCILLATORY";
  }
  throw InvalidInput("unknown regime");
}

std::array<Complex, 2> solve_quadratic(double c2, double c1, double c0) {
  if (c2 == 0.0) {
    throw DegeneratePencil(
        "degenerate pencil: leading coefficient det(C) vanishes");
  }
  std::array<Complex, 2> roots;
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    // q carries the larger-magnitude numerator; no cancellation.
    const double q = -0.5 * (c1 + std::copysign(sq, c1));
    if (q == 0.0) {
      // c1 = 0 and disc = 0, hence c0 = 0: double root at the origin.
      roots = {Complex(0.0, 0.0), Complex(0.0, 0.0)};
    } else {
      roots = {Complex(q / c2, 0.0), Complex(c0 / q, 0.0)};
    }
  } else {
    const double re = -c1 / (2.0 * c2);
    const double im = std::sqrt(-disc) / (2.0 * c2);
    roots = {Complex(re, im), Complex(re, -im)};
  }
  order_roots(roots);
  return roots;
}

Spectrum solve_pencil(const SpectralPencil& pencil) {
  if (pencil.C.det() == 0.0) {
    throw DegeneratePencil("pencil has singular C matrix");
  }
  const QuadCoeffs c = characteristic_coeffs(pencil);
  Spectrum s;
  s.roots = solve_quadratic(c.c2, c.c1, c.c0);
  s.source_variant = pencil.variant;
  s.params = pencil.params;
  return s;
}

GoldenRoots golden_polynomial_roots(double alpha_lambda) {
  if (!std::isfinite(alpha_lambda)) {
    throw InvalidInput("alpha_lambda must be finite");
  }
  static const double branch_plus = (-1.0 + std::sqrt(5.0)) / 2.0;
  static const double branch_minus = (-1.0 - std::sqrt(5.0)) / 2.0;

  GoldenRoots g;
  g.degenerate = (alpha_lambda == 0.0);
  g.roots = {alpha_lambda * branch_plus, alpha_lambda * branch_minus};
  if (g.roots[0] < g.roots[1]) std::swap(g.roots[0], g.roots[1]);
  return g;
}

AnosovCheck anosov_branch_check(const Spectrum& spectrum, double kappa,
                                double tol) {
  if (!(tol > 0.0)) {
    throw InvalidInput("anosov_branch_check requires tol > 0");
  }
  const GoldenRoots target = golden_polynomial_roots(kappa);
  const Complex t0(target.roots[0], 0.0);
  const Complex t1(target.roots[1], 0.0);
  const auto& r = spectrum.roots;

  const std::array<double, 2> direct{std::abs(r[0] - t0), std::abs(r[1] - t1)};
  const std::array<double, 2> swapped{std::abs(r[0] - t1),
                                      std::abs(r[1] - t0)};
  const auto& best =
      std::max(direct[0], direct[1]) <= std::max(swapped[0], swapped[1])
          ? direct
          : swapped;

  AnosovCheck out;
  out.deviations = best;
  out.matched = best[0] <= tol && best[1] <= tol;
  return out;
}

DynamoClass classify(const Spectrum& spectrum,
                     std::optional<double> beta_lim) {
  if (beta_dependent(spectrum.source_variant) && !beta_lim) {
    throw ContractViolation(
        "classify() needs the beta->0 limit for beta-dependent variants");
  }

  const auto& r = spectrum.roots;
  const double max_re = std::max(r[0].real(), r[1].real());
  const double limit = beta_lim ? *beta_lim : max_re;

  DynamoClass cls;
  const bool oscillatory = std::abs(r[0].real()) <= kRegimeTol &&
                           std::abs(r[1].real()) <= kRegimeTol &&
                           std::abs(r[0].imag()) > kRegimeTol &&
                           std::abs(r[1].imag()) > kRegimeTol;
  if (oscillatory) {
    cls.regime = Regime::Oscillatory;
    cls.notes = "purely imaginary root pair";
  } else if (limit > kRegimeTol) {
    cls.regime = Regime::Fast;
    cls.notes = describe_limit(limit, beta_lim.has_value());
  } else if (limit < -kRegimeTol) {
    cls.regime = Regime::Decaying;
    cls.notes = describe_limit(limit, beta_lim.has_value());
  } else {
    cls.regime = Regime::Marginal;
    cls.notes = describe_limit(limit, beta_lim.has_value());
  }

  const double al =
      effective_alpha_lambda(spectrum.source_variant, spectrum.params);
  cls.anosov = anosov_branch_check(spectrum, al, kRegimeTol).matched;
  return cls;
}

BetaLimitResult beta_limit(Variant variant, const PlasmaParams& params,
                           std::span<const double> betas,
                           const PencilOptions& opts) {
  params.validate();

  BetaLimitResult out;
  if (!beta_dependent(variant)) {
    const Spectrum s = solve_pencil(build_pencil(variant, params, opts));
    out.limit = std::max(s.roots[0].real(), s.roots[1].real());
    return out;
  }

  if (betas.size() < 3) {
    throw InvalidInput("beta_limit needs at least 3 diffusivity values");
  }
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > 0.0)) {
      throw InvalidInput("beta sequence must be strictly positive");
    }
    if (i > 0 && !(betas[i] < betas[i - 1])) {
      throw InvalidInput("beta sequence must be strictly decreasing");
    }
  }

  out.sequence.reserve(betas.size());
  for (double b : betas) {
    PlasmaParams p = params;
    p.beta = b;
    const Spectrum s = solve_pencil(build_pencil(variant, p, opts));
    out.sequence.emplace_back(b, std::max(s.roots[0].real(), s.roots[1].real()));
  }

  // Linear Richardson step on the two smallest diffusivities: removes the
  // O(beta) term, leaving O(beta_{n-1} * beta_n).
  const auto [b1, f1] = out.sequence[out.sequence.size() - 2];
  const auto [b2, f2] = out.sequence.back();
  out.limit = f2 + (f2 - f1) * b2 / (b1 - b2);
  return out;
}

}  // namespace dynspec
