#include "dynspec/sweep.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "dynspec/errors.hpp"
#include "dynspec/numfmt.hpp"

namespace dynspec {

std::vector<double> AxisSpec::values() const {
  std::vector<double> v;
  v.reserve(count);
  if (count == 1) {
    v.push_back(min);
    return v;
  }
  if (log_spacing) {
    const double lmin = std::log(min);
    const double lmax = std::log(max);
    for (std::size_t i = 0; i < count; ++i) {
      const double f =
          static_cast<double>(i) / static_cast<double>(count - 1);
      v.push_back(std::exp(lmin + f * (lmax - lmin)));
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const double f =
          static_cast<double>(i) / static_cast<double>(count - 1);
      v.push_back(min + f * (max - min));
    }
  }
  return v;
}

std::string_view to_string(PolyRoute r) {
  switch (r) {
    case PolyRoute::Pencil:
      return "pencil";
    case PolyRoute::Eq18:
      return "eq18";
    case PolyRoute::Golden:
      return "golden";
  }
  throw InvalidInput("unknown polynomial route");
}

PolyRoute poly_route_from_string(std::string_view name) {
  if (name == "pencil") return PolyRoute::Pencil;
  if (name == "eq18") return PolyRoute::Eq18;
  if (name == "golden") return PolyRoute::Golden;
  throw InvalidInput("unknown polynomial route '" + std::string(name) + "'");
}

namespace {

void validate_axis(const AxisSpec& a, const char* name) {
  if (a.count < 1) {
    throw InvalidInput(std::string("axis ") + name + ": count must be >= 1");
  }
  if (!std::isfinite(a.min) || !std::isfinite(a.max)) {
    throw InvalidInput(std::string("axis ") + name + ": bounds must be finite");
  }
  if (a.log_spacing && !(a.min > 0.0)) {
    throw InvalidInput(std::string("axis ") + name +
                       ": log spacing requires min > 0");
  }
  if (a.count > 1 && a.min == a.max) {
    throw InvalidInput(std::string("axis ") + name +
                       ": count > 1 needs distinct bounds");
  }
}

}  // namespace

std::size_t SweepGrid::total_points() const {
  return kappa0.count * alpha_lambda.count * beta.count * v_s.count;
}

void SweepGrid::validate() const {
  validate_axis(kappa0, "kappa0");
  validate_axis(alpha_lambda, "alpha_lambda");
  validate_axis(beta, "beta");
  validate_axis(v_s, "v_s");
  if (beta.min < 0.0 || beta.max < 0.0) {
    throw InvalidInput("axis beta: diffusivity must be >= 0");
  }
  const std::size_t total = total_points();
  if (total > cap) {
    throw CapExceeded("sweep grid has " + std::to_string(total) +
                          " points, above the cap of " + std::to_string(cap) +
                          "; raise the cap to at least " +
                          std::to_string(total),
                      total);
  }
}

namespace {

SweepRow evaluate_point(const SweepGrid& grid, double k, double al, double b,
                        double vs) {
  PlasmaParams p;
  p.alpha = al;
  p.lambda_lyap = 1.0;
  p.beta = b;
  p.v_s = vs;
  p.kappa0 = k;

  Spectrum spectrum;
  DynamoClass cls;
  switch (grid.polynomial) {
    case PolyRoute::Pencil: {
      const SpectralPencil pencil =
          build_pencil(grid.variant, p, grid.pencil_options);
      spectrum = solve_pencil(pencil);
      if (beta_dependent(grid.variant)) {
        const BetaLimitResult lim = beta_limit(
            grid.variant, p, kDefaultBetaSequence, grid.pencil_options);
        cls = classify(spectrum, lim.limit);
      } else {
        cls = classify(spectrum);
      }
      break;
    }
    case PolyRoute::Eq18: {
      const QuadCoeffs c = printed_growth_polynomial(p);
      spectrum.roots = solve_quadratic(c.c2, c.c1, c.c0);
      spectrum.source_variant = Variant::Laminar;
      spectrum.params = p;
      cls = classify(spectrum);
      break;
    }
    case PolyRoute::Golden: {
      const GoldenRoots g = golden_polynomial_roots(al);
      spectrum.roots = {std::complex<double>(g.roots[0], 0.0),
                        std::complex<double>(g.roots[1], 0.0)};
      spectrum.source_variant = Variant::Laminar;
      spectrum.params = p;
      cls = classify(spectrum);
      break;
    }
  }

  return {k, al, b, vs, spectrum.roots, cls.regime, cls.anosov};
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepGrid& grid) {
  grid.validate();

  const auto ks = grid.kappa0.values();
  const auto als = grid.alpha_lambda.values();
  const auto bs = grid.beta.values();
  const auto vss = grid.v_s.values();

  std::vector<SweepRow> rows;
  rows.reserve(grid.total_points());
  for (double k : ks)
    for (double al : als)
      for (double b : bs)
        for (double vs : vss)
          rows.push_back(evaluate_point(grid, k, al, b, vs));
  return rows;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
  os << "kappa0,alpha_lambda,beta,v_s,re_gamma_plus,im_gamma_plus,"
        "re_gamma_minus,im_gamma_minus,regime,anosov\n";
  for (const auto& r : rows) {
    os << g17(r.kappa0) << ',' << g17(r.alpha_lambda) << ',' << g17(r.beta)
       << ',' << g17(r.v_s) << ',' << g17(r.roots[0].real()) << ','
       << g17(r.roots[0].imag()) << ',' << g17(r.roots[1].real()) << ','
       << g17(r.roots[1].imag()) << ',' << to_string(r.regime) << ','
       << (r.anosov ? "true" : "false") << '\n';
  }
}

namespace {

struct AxisRef {
  const char* name;
  const AxisSpec* axis;
};

std::array<AxisRef, 4> axis_table(const SweepGrid& grid) {
  return {{{"kappa0", &grid.kappa0},
           {"alpha_lambda", &grid.alpha_lambda},
           {"beta", &grid.beta},
           {"v_s", &grid.v_s}}};
}

std::size_t axis_index(const SweepGrid& grid, std::string_view name) {
  const auto table = axis_table(grid);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (name == table[i].name) return i;
  }
  throw InvalidInput("unknown sweep axis '" + std::string(name) + "'");
}

RegimeMap build_map(const SweepGrid& grid, std::size_t row_i,
                    std::size_t col_i) {
  const auto table = axis_table(grid);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i != row_i && i != col_i && !table[i].axis->singleton()) {
      throw InvalidInput(
          std::string("regime map requires a slice specification: axis ") +
          table[i].name + " is not a singleton");
    }
  }

  RegimeMap map;
  map.row_axis = table[row_i].name;
  map.col_axis = table[col_i].name;
  map.row_values = table[row_i].axis->values();
  map.col_values = table[col_i].axis->values();
  map.labels.reserve(map.row_values.size() * map.col_values.size());

  const auto rows = run_sweep(grid);
  // run_sweep is lexicographic over (kappa0, alpha_lambda, beta, v_s); with
  // all other axes singleton the (row, col) order follows the axis order.
  const bool transposed = row_i > col_i;
  const std::size_t nr = map.row_values.size();
  const std::size_t nc = map.col_values.size();
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) {
      const std::size_t flat = transposed ? c * nr + r : r * nc + c;
      const SweepRow& row = rows[flat];
      std::string label{to_string(row.regime)};
      if (row.anosov) label += "+A";
      map.labels.push_back(std::move(label));
    }
  }
  return map;
}

}  // namespace

RegimeMap regime_map(const SweepGrid& grid, std::string_view row_axis,
                     std::string_view col_axis) {
  const std::size_t r = axis_index(grid, row_axis);
  const std::size_t c = axis_index(grid, col_axis);
  if (r == c) {
    throw InvalidInput("regime map row and column axes must differ");
  }
  return build_map(grid, r, c);
}

RegimeMap regime_map(const SweepGrid& grid) {
  const auto table = axis_table(grid);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i].axis->singleton()) free.push_back(i);
  }
  if (free.size() > 2) {
    throw InvalidInput(
        "regime map requires a slice specification: more than two axes have "
        "count > 1");
  }
  // Degenerate grids fall back to the leading axes.
  std::size_t row_i = free.size() > 0 ? free[0] : 0;
  std::size_t col_i = free.size() > 1 ? free[1] : (row_i == 0 ? 1 : 0);
  return build_map(grid, row_i, col_i);
}

void write_regime_csv(std::ostream& os, const RegimeMap& map) {
  os << map.row_axis << '\\' << map.col_axis;
  for (double c : map.col_values) os << ',' << g17(c);
  os << '\n';
  for (std::size_t r = 0; r < map.row_values.size(); ++r) {
    os << g17(map.row_values[r]);
    for (std::size_t c = 0; c < map.col_values.size(); ++c) {
      os << ',' << map.at(r, c);
    }
    os << '\n';
  }
}

}  // namespace dynspec
