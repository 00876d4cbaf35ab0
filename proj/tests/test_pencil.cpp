#include <doctest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "dynspec/errors.hpp"
#include "dynspec/pencil.hpp"
#include "dynspec/plasma.hpp"
#include "dynspec/serialize.hpp"
#include "oracles.hpp"

using namespace dynspec;

namespace {

PlasmaParams make_params(double kappa0, double alpha_lambda, double beta,
                         double v_s) {
  PlasmaParams p;
  p.alpha = alpha_lambda;
  p.lambda_lyap = 1.0;
  p.beta = beta;
  p.v_s = v_s;
  p.kappa0 = kappa0;
  return p;
}

PlasmaParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> wide(-5.0, 5.0);
  std::uniform_real_distribution<double> pos(0.0, 2.0);
  PlasmaParams p;
  p.alpha = wide(rng) / 2.0;
  p.lambda_lyap = wide(rng) / 2.0;
  p.beta = pos(rng);
  p.v_s = wide(rng) / 2.0;
  p.kappa0 = wide(rng);
  return p;
}

constexpr std::array<Variant, 4> kAllVariants{
    Variant::GeneralBeta, Variant::Laminar, Variant::ZeroHelicityTurbulent,
    Variant::OscillatoryLimit};

}  // namespace

TEST_CASE("divergence residual under constant components") {
  CHECK(divergence_residual({2.0, 5.0}, 0.0) == 0.0);
  CHECK(divergence_residual({0.0, 1.0}, 3.0) == 0.0);
  CHECK(divergence_residual({2.0, 1.0}, 1.0) == -2.0);
}

TEST_CASE("flow constraint selects v_s = -B_b/B_n") {
  CHECK(equipartition_flow_constraint({1.0, 1.0}) == -1.0);
  CHECK(equipartition_flow_constraint({1.0, 0.0}) == 0.0);
  CHECK(equipartition_flow_constraint({2.0, 1.0}) == -0.5);
  CHECK_THROWS_AS(equipartition_flow_constraint({0.0, 1.0}),
                  DegenerateConstraint);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    double B = dist(rng);
    if (B == 0.0) continue;
    CHECK(equipartition_flow_constraint({B, B}) == -1.0);
  }
}

TEST_CASE("laminar pencil matches the printed entries at the golden point") {
  const auto p = build_pencil(Variant::Laminar, make_params(1.0, -1.0, 0.0, -1.0));
  CHECK(p.A == Mat2{1.0, -1.0, 2.0, 0.0});
  CHECK(p.C == Mat2{1.0, 0.0, 0.0, -1.0});
}

TEST_CASE("oscillatory-limit pencil vanishes at zero curvature") {
  const auto p =
      build_pencil(Variant::OscillatoryLimit, make_params(0.0, 3.0, 0.5, 2.0));
  CHECK(p.A == Mat2{0.0, -0.0, -0.0, -0.0});
  CHECK(p.A.det() == 0.0);
  CHECK(p.C == Mat2{1.0, 0.0, 0.0, -1.0});
}

TEST_CASE("zero-helicity pencil matches the printed entries") {
  const auto p = build_pencil(Variant::ZeroHelicityTurbulent,
                              make_params(1.0, -1.0, 0.1, -1.0));
  CHECK(p.A == Mat2{0.2, -1.0, 1.0, -0.1});
}

TEST_CASE("general pencil entries, printed diffusion order kappa0^4") {
  const auto p =
      build_pencil(Variant::GeneralBeta, make_params(2.0, -1.0, 0.3, -1.0));
  CHECK(p.A.m00 == 2.0 * 0.3 * 4.0 + 1.0);
  CHECK(p.A.m01 == -2.0);
  CHECK(p.A.m10 == -(-1.0 + 2.0 * -1.0));
  CHECK(p.A.m11 == -(0.3 * 16.0));

  const auto fixed =
      build_pencil(Variant::GeneralBeta, make_params(2.0, -1.0, 0.3, -1.0),
                   PencilOptions{.assume_kappa4_typo = true});
  CHECK(fixed.A.m11 == -(0.3 * 4.0));
  CHECK(fixed.A.m00 == p.A.m00);  // the (1,1) entry is untouched
}

TEST_CASE("degeneration lattice: limits specialize entry-exactly") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    PlasmaParams p = random_params(rng);

    PlasmaParams beta0 = p;
    beta0.beta = 0.0;
    CHECK(build_pencil(Variant::GeneralBeta, beta0).A ==
          build_pencil(Variant::Laminar, p).A);

    PlasmaParams al0 = p;
    al0.alpha = 0.0;
    al0.lambda_lyap = 0.0;
    CHECK(build_pencil(Variant::GeneralBeta, al0).A ==
          build_pencil(Variant::ZeroHelicityTurbulent, p).A);

    PlasmaParams both = al0;
    both.beta = 0.0;
    CHECK(build_pencil(Variant::GeneralBeta, both).A ==
          build_pencil(Variant::OscillatoryLimit, p).A);
    CHECK(build_pencil(Variant::ZeroHelicityTurbulent, beta0).A ==
          build_pencil(Variant::OscillatoryLimit, p).A);
  }
}

TEST_CASE("characteristic coefficients against the determinant-fit oracle") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const PlasmaParams p = random_params(rng);
    for (Variant v : kAllVariants) {
      const auto pencil = build_pencil(v, p);
      const QuadCoeffs c = characteristic_coeffs(pencil);
      const auto fit = oracles::det_quadratic_fit(pencil);
      const double scale =
          1.0 + std::abs(fit[0]) + std::abs(fit[1]) + std::abs(fit[2]);
      CHECK(std::abs(c.c2 - fit[0]) <= 1e-12 * scale);
      CHECK(std::abs(c.c1 - fit[1]) <= 1e-12 * scale);
      CHECK(std::abs(c.c0 - fit[2]) <= 1e-12 * scale);
      CHECK(c.c2 == pencil.C.det());
      CHECK(c.c2 != 0.0);
    }
  }
}

TEST_CASE("pinned coefficient examples") {
  const auto laminar =
      build_pencil(Variant::Laminar, make_params(1.0, -1.0, 0.0, -1.0));
  const QuadCoeffs c = characteristic_coeffs(laminar);
  CHECK(c == QuadCoeffs{-1.0, -1.0, 2.0});
  const QuadCoeffs monic = c.normalized();
  CHECK(monic.c2 == 1.0);
  CHECK(monic.c1 == 1.0);
  CHECK(monic.c0 == -2.0);

  const auto osc =
      build_pencil(Variant::OscillatoryLimit, make_params(1.0, 0.0, 0.0, 1.0));
  const QuadCoeffs oc = characteristic_coeffs(osc).normalized();
  CHECK(oc.c1 == 0.0);
  CHECK(oc.c0 == 1.0);  // gamma^2 + 1 = 0

  const auto flat =
      build_pencil(Variant::GeneralBeta, make_params(0.0, 0.0, 0.0, 0.7));
  const QuadCoeffs fc = characteristic_coeffs(flat).normalized();
  CHECK(fc.c1 == 0.0);
  CHECK(fc.c0 == 0.0);  // gamma^2 = 0
}

TEST_CASE("printed growth polynomial, exactly as printed") {
  CHECK(printed_growth_polynomial(make_params(1.0, -1.0, 0.0, -1.0)) ==
        QuadCoeffs{1.0, -1.0, 0.0});
  CHECK(printed_growth_polynomial(make_params(0.0, 0.0, 0.0, -1.0)) ==
        QuadCoeffs{1.0, 0.0, 0.0});
  CHECK(printed_growth_polynomial(make_params(0.0, -1.0, 0.0, -1.0)) ==
        QuadCoeffs{1.0, -1.0, 0.0});
}

TEST_CASE("coefficient scaling: simultaneous A,C scaling rescales by s^2") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const PlasmaParams p = random_params(rng);
    SpectralPencil pencil = build_pencil(Variant::GeneralBeta, p);
    const QuadCoeffs base = characteristic_coeffs(pencil);

    const double s = 4.0;  // power of two: exact rescaling
    SpectralPencil scaled = pencil;
    scaled.A = Mat2{s * pencil.A.m00, s * pencil.A.m01, s * pencil.A.m10,
                    s * pencil.A.m11};
    scaled.C = Mat2{s * pencil.C.m00, s * pencil.C.m01, s * pencil.C.m10,
                    s * pencil.C.m11};
    const QuadCoeffs sc = characteristic_coeffs(scaled);
    CHECK(sc.c2 == s * s * base.c2);
    CHECK(sc.c1 == s * s * base.c1);
    CHECK(sc.c0 == s * s * base.c0);
  }
}

TEST_CASE("invalid parameters and variants are rejected") {
  PlasmaParams p;
  p.beta = -1.0;
  CHECK_THROWS_AS(build_pencil(Variant::Laminar, p), InvalidInput);
  p.beta = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(build_pencil(Variant::Laminar, p), InvalidInput);

  CHECK_THROWS_AS(build_pencil(static_cast<Variant>(99), PlasmaParams{}),
                  InvalidInput);
  CHECK_THROWS_AS(variant_from_string("spiral"), InvalidInput);
  CHECK(variant_from_string("laminar") == Variant::Laminar);
  CHECK(variant_from_string("general-beta") == Variant::GeneralBeta);
}

TEST_CASE("alpha_lambda override supersedes the product") {
  PlasmaParams p = make_params(1.0, -1.0, 0.0, -1.0);
  CHECK(p.alpha_lambda() == -1.0);
  p.alpha_lambda_override = 0.25;
  CHECK(p.alpha_lambda() == 0.25);
  const auto pencil = build_pencil(Variant::Laminar, p);
  CHECK(pencil.A.m00 == -0.25);
}

TEST_CASE("pencil JSON round-trips through the documented schema") {
  const PlasmaParams p = make_params(1.5, -0.5, 0.25, -1.0);
  const auto pencil = build_pencil(Variant::GeneralBeta, p);
  const auto j = pencil_to_json(pencil);

  CHECK(j.at("variant") == "general-beta");
  CHECK(j.at("A").size() == 4);
  CHECK(j.at("C") == nlohmann::ordered_json::array({1.0, 0.0, 0.0, -1.0}));
  CHECK(j.at("params").at("lambda") == 1.0);

  const auto back = pencil_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.A == pencil.A);
  CHECK(back.C == pencil.C);
  CHECK(back.variant == pencil.variant);
}
