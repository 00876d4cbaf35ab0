#include "dynspec/serialize.hpp"

#include "dynspec/errors.hpp"

namespace dynspec {

using nlohmann::ordered_json;

ordered_json root_to_json(std::complex<double> z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json params_to_json(const PlasmaParams& p) {
  ordered_json j{
      {"alpha", p.alpha},   {"beta", p.beta},
      {"v_s", p.v_s},       {"lambda", p.lambda_lyap},
      {"kappa0", p.kappa0},
  };
  if (p.alpha_lambda_override) {
    j["alpha_lambda_override"] = *p.alpha_lambda_override;
  }
  return j;
}

PlasmaParams params_from_json(const nlohmann::json& j) {
  PlasmaParams p;
  p.alpha = j.at("alpha").get<double>();
  p.beta = j.at("beta").get<double>();
  p.v_s = j.at("v_s").get<double>();
  p.lambda_lyap = j.at("lambda").get<double>();
  p.kappa0 = j.at("kappa0").get<double>();
  if (j.contains("alpha_lambda_override")) {
    p.alpha_lambda_override = j.at("alpha_lambda_override").get<double>();
  }
  p.validate();
  return p;
}

ordered_json pencil_to_json(const SpectralPencil& pencil) {
  return ordered_json{
      {"variant", to_string(pencil.variant)},
      {"A", pencil.A.row_major()},
      {"C", pencil.C.row_major()},
      {"params", params_to_json(pencil.params)},
  };
}

SpectralPencil pencil_from_json(const nlohmann::json& j) {
  const PlasmaParams params = params_from_json(j.at("params"));
  const Variant variant =
      variant_from_string(j.at("variant").get<std::string>());
  SpectralPencil p = build_pencil(variant, params);

  auto check = [](const nlohmann::json& arr, const Mat2& m, const char* name) {
    if (!arr.is_array() || arr.size() != 4) {
      throw InvalidInput(std::string("pencil JSON: ") + name +
                         " must be a row-major array of 4 numbers");
    }
    const auto rm = m.row_major();
    for (std::size_t i = 0; i < 4; ++i) {
      if (arr[i].get<double>() != rm[i]) {
        throw InvalidInput(std::string("pencil JSON: ") + name +
                           " entries do not match the recorded parameters");
      }
    }
  };
  check(j.at("A"), p.A, "A");
  check(j.at("C"), p.C, "C");
  return p;
}

ordered_json spectrum_to_json(const Spectrum& spectrum,
                              const DynamoClass& cls) {
  return ordered_json{
      {"variant", to_string(spectrum.source_variant)},
      {"roots",
       ordered_json::array(
           {root_to_json(spectrum.roots[0]), root_to_json(spectrum.roots[1])})},
      {"regime", to_string(cls.regime)},
      {"anosov", cls.anosov},
      {"params", params_to_json(spectrum.params)},
  };
}

ordered_json fit_to_json(const GrowthFit& fit) {
  return ordered_json{
      {"lambda_fit", fit.lambda_fit},
      {"stderr", fit.stderr_},
      {"window",
       ordered_json{{"t0", fit.window_t0},
                    {"t1", fit.window_t1},
                    {"samples", fit.n_samples}}},
  };
}

ordered_json sweep_rows_to_json(std::span<const SweepRow> rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back(ordered_json{
        {"kappa0", r.kappa0},
        {"alpha_lambda", r.alpha_lambda},
        {"beta", r.beta},
        {"v_s", r.v_s},
        {"roots", ordered_json::array({root_to_json(r.roots[0]),
                                       root_to_json(r.roots[1])})},
        {"regime", to_string(r.regime)},
        {"anosov", r.anosov},
    });
  }
  return ordered_json{{"rows", std::move(arr)}};
}

}  // namespace dynspec
