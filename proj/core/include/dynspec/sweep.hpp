#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dynspec/spectrum.hpp"

namespace dynspec {

struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 1;
  bool log_spacing = false;

  std::vector<double> values() const;
  bool singleton() const { return count == 1; }
};

/// Which root-producing route a sweep (or the CLI) evaluates.
///   Pencil — solve the printed operator matrix selected by `variant`;
///   Eq18   — the printed second-order growth polynomial;
///   Golden — the golden-branch polynomial gamma^2 + al*gamma - al^2.
enum class PolyRoute { Pencil, Eq18, Golden };

std::string_view to_string(PolyRoute r);
PolyRoute poly_route_from_string(std::string_view name);  // throws

inline constexpr std::size_t kDefaultSweepCap = 10'000'000;

struct SweepGrid {
  AxisSpec kappa0{1.0, 1.0, 1};
  AxisSpec alpha_lambda{0.0, 0.0, 1};
  AxisSpec beta{0.0, 0.0, 1};
  AxisSpec v_s{0.0, 0.0, 1};
  Variant variant = Variant::Laminar;
  PolyRoute polynomial = PolyRoute::Pencil;
  PencilOptions pencil_options;
  std::size_t cap = kDefaultSweepCap;

  std::size_t total_points() const;
  void validate() const;  // throws InvalidInput / CapExceeded
};

struct SweepRow {
  double kappa0 = 0.0;
  double alpha_lambda = 0.0;
  double beta = 0.0;
  double v_s = 0.0;
  std::array<std::complex<double>, 2> roots;
  Regime regime = Regime::Marginal;
  bool anosov = false;
};

/// Evaluates every grid point (lexicographic order over kappa0,
/// alpha_lambda, beta, v_s) through build/solve/classify. Beta-dependent
/// variants on the pencil route are classified with the beta -> 0 limit
/// from kDefaultBetaSequence.
std::vector<SweepRow> run_sweep(const SweepGrid& grid);

/// Header: kappa0,alpha_lambda,beta,v_s,re_gamma_plus,im_gamma_plus,
/// re_gamma_minus,im_gamma_minus,regime,anosov
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);

struct RegimeMap {
  std::string row_axis;
  std::string col_axis;
  std::vector<double> row_values;
  std::vector<double> col_values;
  std::vector<std::string> labels;  // row-major, regime name (+ "+A" if anosov)

  const std::string& at(std::size_t r, std::size_t c) const {
    return labels[r * col_values.size() + c];
  }
};

/// Projects the sweep onto a 2D regime matrix. The non-singleton axes pick
/// the rows/columns; more than two non-singleton axes require an explicit
/// choice via the second overload (all remaining axes must be singletons).
RegimeMap regime_map(const SweepGrid& grid);
RegimeMap regime_map(const SweepGrid& grid, std::string_view row_axis,
                     std::string_view col_axis);

void write_regime_csv(std::ostream& os, const RegimeMap& map);

}  // namespace dynspec
