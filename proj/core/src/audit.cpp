#include "dynspec/audit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "dynspec/errors.hpp"
#include "dynspec/frenet.hpp"
#include "dynspec/plasma.hpp"
#include "dynspec/serialize.hpp"
#include "dynspec/spectrum.hpp"

namespace dynspec {

using nlohmann::ordered_json;
using Complex = std::complex<double>;

namespace {

constexpr double kDefaultRootTol = 1e-9;

ordered_json roots_json(const std::array<Complex, 2>& r) {
  return ordered_json::array({root_to_json(r[0]), root_to_json(r[1])});
}

ordered_json real_pair_json(double a, double b) {
  return ordered_json::array({a, b});
}

bool roots_match(const std::array<Complex, 2>& computed,
                 const std::array<Complex, 2>& claimed, double tol) {
  const double direct = std::max(std::abs(computed[0] - claimed[0]),
                                 std::abs(computed[1] - claimed[1]));
  const double swapped = std::max(std::abs(computed[0] - claimed[1]),
                                  std::abs(computed[1] - claimed[0]));
  return std::min(direct, swapped) <= tol;
}

std::array<Complex, 2> as_complex(const std::array<double, 2>& r) {
  return {Complex(r[0], 0.0), Complex(r[1], 0.0)};
}

// Golden shape with the scale inferred from the roots themselves: is there a
// real c with {c*(-1+sqrt5)/2, c*(-1-sqrt5)/2} equal to the pair within tol?
bool golden_shaped(const std::array<Complex, 2>& roots, double tol) {
  static const double bp = (-1.0 + std::sqrt(5.0)) / 2.0;
  static const double bm = (-1.0 - std::sqrt(5.0)) / 2.0;
  if (std::abs(roots[0].imag()) > tol || std::abs(roots[1].imag()) > tol) {
    return false;
  }
  const double r0 = roots[0].real();
  const double r1 = roots[1].real();
  for (double c : {r0 / bp, r0 / bm, r1 / bp, r1 / bm, 0.0}) {
    if (!std::isfinite(c)) continue;
    if (roots_match({Complex(r0, 0.0), Complex(r1, 0.0)},
                    as_complex({c * bp, c * bm}), tol)) {
      return true;
    }
  }
  return false;
}

struct Tolerances {
  double root_tol = kDefaultRootTol;
  std::map<std::string, double> per_claim;

  double for_claim(const std::string& id) const {
    auto it = per_claim.find(id);
    return it != per_claim.end() ? it->second : root_tol;
  }
};

PlasmaParams golden_params() {
  PlasmaParams p;
  p.alpha = -1.0;
  p.lambda_lyap = 1.0;
  p.v_s = -1.0;
  p.kappa0 = 1.0;
  p.beta = 0.0;
  return p;
}

AuditEntry claim_a() {
  AuditEntry e;
  e.claim_id = "a";
  e.title = "printed growth polynomial vs laminar pencil determinant";
  e.paper_location = "Eq. (18) vs Eq. (17)";
  e.tolerance = 0.0;  // coefficient identity, compared exactly

  const PlasmaParams p = golden_params();
  const QuadCoeffs printed = printed_growth_polynomial(p);
  const QuadCoeffs det =
      characteristic_coeffs(build_pencil(Variant::Laminar, p)).normalized();

  AuditCase c;
  c.label = "kappa0=1, alpha_lambda=-1, v_s=-1";
  c.params = params_to_json(p);
  c.claimed = ordered_json::array({printed.c2, printed.c1, printed.c0});
  c.computed = ordered_json::array({det.c2, det.c1, det.c0});
  c.match = printed == det;
  e.cases.push_back(std::move(c));
  e.match = e.cases[0].match;
  e.note =
      "Monic coefficients of the printed polynomial vs the determinant of "
      "the printed laminar matrix at v_s=-1. The gamma and constant terms "
      "enter with opposite signs; the two agree only when alpha*lambda = 0.";
  return e;
}

AuditEntry claim_b(const Tolerances& tol) {
  AuditEntry e;
  e.claim_id = "b";
  e.title = "golden-ratio roots vs roots of the printed polynomial";
  e.paper_location = "Eqs. (19)-(20) vs Eq. (18)";
  e.tolerance = tol.for_claim("b");

  const PlasmaParams p = golden_params();
  const QuadCoeffs printed = printed_growth_polynomial(p);
  const auto computed = solve_quadratic(printed.c2, printed.c1, printed.c0);
  const auto claimed = as_complex(golden_polynomial_roots(-1.0).roots);

  AuditCase c;
  c.label = "alpha_lambda=-1, kappa0=1";
  c.params = params_to_json(p);
  c.claimed = roots_json(claimed);
  c.computed = roots_json(computed);
  c.match = roots_match(computed, claimed, e.tolerance);
  e.cases.push_back(std::move(c));
  e.match = e.cases[0].match;
  e.note =
      "The claimed golden pair alpha_lambda*(-1±sqrt5)/2 does not solve the "
      "printed polynomial, whose roots at these parameters are {0, 1}.";
  return e;
}

AuditEntry claim_c(const Tolerances& tol) {
  AuditEntry e;
  e.claim_id = "c";
  e.title = "curvature scaling of the golden branch";
  e.paper_location = "Sec. 1";
  e.tolerance = tol.for_claim("c");

  static const double bp = (-1.0 + std::sqrt(5.0)) / 2.0;
  static const double bm = (-1.0 - std::sqrt(5.0)) / 2.0;
  for (double kappa : {-1.0, 1.0}) {
    const GoldenRoots g = golden_polynomial_roots(kappa);
    std::array<double, 2> claimed{kappa * bp, kappa * bm};
    if (claimed[0] < claimed[1]) std::swap(claimed[0], claimed[1]);

    AuditCase c;
    c.label = kappa < 0 ? "kappa=-1" : "kappa=+1";
    c.params = ordered_json{{"kappa", kappa}};
    c.claimed = real_pair_json(claimed[0], claimed[1]);
    c.computed = real_pair_json(g.roots[0], g.roots[1]);
    c.match = roots_match(as_complex(g.roots), as_complex(claimed),
                          e.tolerance);
    e.cases.push_back(std::move(c));
  }
  e.match = std::all_of(e.cases.begin(), e.cases.end(),
                        [](const AuditCase& c) { return c.match; });
  e.note =
      "The golden branch scaled by curvature; kappa=-1 reproduces the "
      "(1∓sqrt5)/2 pair quoted for the stretching/squeezing mode.";
  return e;
}

AuditEntry claim_d(const Tolerances& tol) {
  AuditEntry e;
  e.claim_id = "d";
  e.title = "oscillatory branch ±i*kappa0";
  e.paper_location = "Eq. (24)";
  e.tolerance = tol.for_claim("d");

  for (double vs : {1.0, -1.0}) {
    PlasmaParams p;
    p.kappa0 = 1.0;
    p.v_s = vs;
    const Spectrum s = solve_pencil(build_pencil(Variant::OscillatoryLimit, p));
    const std::array<Complex, 2> claimed{Complex(0.0, p.kappa0),
                                         Complex(0.0, -p.kappa0)};

    AuditCase c;
    c.label = vs > 0 ? "v_s=+1" : "v_s=-1 (equipartition value)";
    c.params = params_to_json(p);
    c.claimed = roots_json(claimed);
    c.computed = roots_json(s.roots);
    c.match = roots_match(s.roots, claimed, e.tolerance);
    e.cases.push_back(std::move(c));
  }
  e.match = std::all_of(e.cases.begin(), e.cases.end(),
                        [](const AuditCase& c) { return c.match; });
  e.note =
      "The printed ±i*kappa0 pair requires v_s=+1. Under the equipartition "
      "constraint v_s=-1 stated just before, the same matrix yields the real "
      "pair ±kappa0 instead.";
  return e;
}

AuditEntry claim_e(const Tolerances& tol) {
  AuditEntry e;
  e.claim_id = "e";
  e.title = "golden spectrum claimed for the turbulent zero-helicity family";
  e.paper_location = "Eq. (25)";
  e.tolerance = tol.for_claim("e");

  const std::array<double, 3> kappas{0.5, 1.0, 2.0};
  const std::array<double, 2> vss{-1.0, 1.0};
  const std::array<double, 4> betas{1e-4, 1e-3, 1e-2, 1e-1};

  std::size_t total = 0;
  std::size_t shaped = 0;
  for (double k : kappas) {
    for (double vs : vss) {
      for (double b : betas) {
        PlasmaParams p;
        p.kappa0 = k;
        p.v_s = vs;
        p.beta = b;
        const Spectrum s =
            solve_pencil(build_pencil(Variant::ZeroHelicityTurbulent, p));
        ++total;
        if (golden_shaped(s.roots, e.tolerance)) ++shaped;
      }
    }
  }

  const auto claimed = as_complex(golden_polynomial_roots(-1.0).roots);
  AuditCase c;
  c.label = "zero-helicity spectra over the default grid";
  c.params = ordered_json{{"kappa0", kappas},
                          {"v_s", vss},
                          {"beta", betas},
                          {"variant", "zero-helicity"}};
  c.claimed = roots_json(claimed);
  c.computed = ordered_json{{"grid_points", total},
                            {"golden_shaped_points", shaped}};
  c.match = shaped == total;
  e.cases.push_back(std::move(c));
  e.match = e.cases[0].match;
  e.note =
      "No grid point carries a golden-shaped pair: the root sum is "
      "-beta*kappa0^2*(2+kappa0^2) <= 0 for beta >= 0, so the scale-free "
      "golden condition sum^2 = -product holds only on the surface "
      "v_s = -beta^2*kappa0^2*[(2+kappa0^2)^2 + 2*kappa0^2].";
  return e;
}

AuditEntry claim_f(const Tolerances& tol) {
  AuditEntry e;
  e.claim_id = "f";
  e.title = "frame Laplacian relations Delta t = -kappa0^2 t, Delta n = "
            "-kappa0^2 n";
  e.paper_location = "Eqs. (8)-(9)";
  e.tolerance = tol.for_claim("f");

  auto add_case = [&](double kappa, double tau, const char* label) {
    const LaplacianResidual r =
        frame_laplacian_residual(FilamentProfile{kappa, tau, kappa == tau});
    AuditCase c;
    c.label = label;
    c.params = ordered_json{{"kappa0", kappa}, {"tau0", tau}};
    c.claimed = real_pair_json(0.0, 0.0);
    c.computed = real_pair_json(r.residual_t, r.residual_n);
    c.match = r.residual_t <= e.tolerance && r.residual_n <= e.tolerance;
    e.cases.push_back(std::move(c));
  };
  add_case(1.0, 1.0, "kappa0=tau0=1 (helical regime the derivation assumes)");
  add_case(1.0, 0.0, "tau0=0 reference (plane curve)");

  e.match = std::all_of(e.cases.begin(), e.cases.end(),
                        [](const AuditCase& c) { return c.match; });
  e.note =
      "The relations hold exactly only for tau0=0. In the stated helical "
      "regime the residuals are |kappa0*tau0| and tau0^2.";
  return e;
}

AuditEntry claim_g(const Tolerances& tol) {
  AuditEntry e;
  e.claim_id = "g";
  e.title = "solenoidal constraint under constant components";
  e.paper_location = "Eq. (7)";
  e.tolerance = tol.for_claim("g");

  const FieldComponents fields{1.0, 1.0};
  const double kappa = 1.0;
  const double residual = divergence_residual(fields, kappa);

  AuditCase c;
  c.label = "B_n=B_b=1 (equipartition), kappa0=1";
  c.params = ordered_json{{"B_n", fields.B_n},
                          {"B_b", fields.B_b},
                          {"kappa0", kappa}};
  c.claimed = 0.0;
  c.computed = residual;
  c.match = std::abs(residual) <= e.tolerance;
  e.cases.push_back(std::move(c));
  e.match = e.cases[0].match;
  e.note =
      "Constant components force d_s B_b = 0, so the constraint reduces to "
      "-kappa0*B_n, nonzero whenever kappa0*B_n != 0.";
  return e;
}

AuditEntry claim_h(const Tolerances& tol) {
  AuditEntry e;
  e.claim_id = "h";
  e.title = "vanishing-diffusivity limit wording";
  e.paper_location = "Eq. (21)";
  e.tolerance = tol.for_claim("h");

  const PlasmaParams p = golden_params();
  const BetaLimitResult lim =
      beta_limit(Variant::GeneralBeta, p, kDefaultBetaSequence);

  AuditCase c;
  c.label = "general matrix at kappa0=1, alpha_lambda=-1, v_s=-1";
  c.params = params_to_json(p);
  c.claimed = ordered_json{{"limit", 0.0}, {"mode", "fast"}};
  c.computed =
      ordered_json{{"limit", lim.limit},
                   {"mode_under_standard_criterion",
                    lim.limit > kRegimeTol
                        ? "fast"
                        : (lim.limit < -kRegimeTol ? "decaying" : "marginal")}};
  c.match = std::abs(lim.limit - 0.0) <= e.tolerance;
  e.cases.push_back(std::move(c));
  e.match = e.cases[0].match;
  e.note =
      "The text states the beta->0 limit of Re gamma equals 0 and calls the "
      "mode fast. A zero limit is marginal under the standard fast-dynamo "
      "criterion, and the computed limit here is ~1, not 0: the mode is fast "
      "but the printed limit value is not reproduced.";
  return e;
}

}  // namespace

const AuditEntry& DiscrepancyReport::entry(const std::string& claim_id) const {
  for (const auto& e : entries) {
    if (e.claim_id == claim_id) return e;
  }
  throw InvalidInput("no audit entry with claim id '" + claim_id + "'");
}

DiscrepancyReport audit_claims(const std::map<std::string, double>& tolerances) {
  Tolerances tol;
  for (const auto& [key, value] : tolerances) {
    if (!(value > 0.0)) {
      throw InvalidInput("audit tolerance must be positive");
    }
    if (key == "default") {
      tol.root_tol = value;
    } else if (key.size() == 1 && key[0] >= 'a' && key[0] <= 'h') {
      tol.per_claim[key] = value;
    } else {
      throw InvalidInput("unknown audit tolerance key '" + key + "'");
    }
  }

  DiscrepancyReport report;
  report.default_tolerance = tol.root_tol;
  report.entries.push_back(claim_a());
  report.entries.push_back(claim_b(tol));
  report.entries.push_back(claim_c(tol));
  report.entries.push_back(claim_d(tol));
  report.entries.push_back(claim_e(tol));
  report.entries.push_back(claim_f(tol));
  report.entries.push_back(claim_g(tol));
  report.entries.push_back(claim_h(tol));
  return report;
}

ordered_json to_json(const DiscrepancyReport& report) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json cases = ordered_json::array();
    for (const auto& c : e.cases) {
      cases.push_back(ordered_json{{"label", c.label},
                                   {"params", c.params},
                                   {"claimed", c.claimed},
                                   {"computed", c.computed},
                                   {"match", c.match}});
    }
    entries.push_back(ordered_json{{"claim_id", e.claim_id},
                                   {"title", e.title},
                                   {"paper_location", e.paper_location},
                                   {"tolerance", e.tolerance},
                                   {"cases", std::move(cases)},
                                   {"match", e.match},
                                   {"note", e.note}});
  }
  return ordered_json{{"schema_version", report.schema_version},
                      {"default_tolerance", report.default_tolerance},
                      {"entries", std::move(entries)}};
}

}  // namespace dynspec
