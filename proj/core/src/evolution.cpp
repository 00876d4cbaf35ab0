#include "dynspec/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <ostream>

#include "dynspec/errors.hpp"
#include "dynspec/numfmt.hpp"
#include "dynspec/spectrum.hpp"

namespace dynspec {

EvolutionSystem to_evolution_system(const SpectralPencil& pencil) {
  const Mat2& C = pencil.C;
  const double d = C.det();
  if (d == 0.0) {
    throw DegeneratePencil("cannot invert a singular C matrix");
  }
  // G = -C^{-1} A with the closed-form 2x2 inverse.
  const Mat2 inv{C.m11 / d, -C.m01 / d, -C.m10 / d, C.m00 / d};
  const Mat2& A = pencil.A;
  EvolutionSystem sys;
  sys.G = Mat2{
      -(inv.m00 * A.m00 + inv.m01 * A.m10),
      -(inv.m00 * A.m01 + inv.m01 * A.m11),
      -(inv.m10 * A.m00 + inv.m11 * A.m10),
      -(inv.m10 * A.m01 + inv.m11 * A.m11),
  };
  sys.source_variant = pencil.variant;
  sys.params = pencil.params;
  return sys;
}

EvolutionSystem companion_system(const QuadCoeffs& coeffs, Variant tag,
                                 const PlasmaParams& params) {
  const QuadCoeffs m = coeffs.normalized();  // gamma^2 + p gamma + q
  EvolutionSystem sys;
  sys.G = Mat2{0.0, 1.0, -m.c0, -m.c1};
  sys.source_variant = tag;
  sys.params = params;
  return sys;
}

std::array<std::complex<double>, 2> eigenvalues(const Mat2& m) {
  // Roots of g^2 - tr g + det.
  return solve_quadratic(1.0, -m.trace(), m.det());
}

namespace {

struct Vec2 {
  double n, b;

  Vec2 operator+(const Vec2& o) const { return {n + o.n, b + o.b}; }
  Vec2 operator*(double s) const { return {n * s, b * s}; }
};

Vec2 apply(const Mat2& G, const Vec2& v) {
  return {G.m00 * v.n + G.m01 * v.b, G.m10 * v.n + G.m11 * v.b};
}

constexpr std::size_t kMaxSteps = 100'000'000;

}  // namespace

FieldTrajectory integrate(const EvolutionSystem& system,
                          const FieldComponents& B0, double t_end, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt) || !std::isfinite(t_end)) {
    throw InvalidInput("integrate requires finite dt > 0");
  }
  if (t_end < 10.0 * dt) {
    throw InvalidInput("integrate requires t_end >= 10*dt");
  }
  if (B0.B_n == 0.0 && B0.B_b == 0.0) {
    throw InvalidInput("initial field must not be identically zero");
  }
  if (t_end / dt > static_cast<double>(kMaxSteps)) {
    throw InvalidInput("integrate: step count exceeds sanity cap");
  }

  const Mat2& G = system.G;
  const auto n_full = static_cast<std::size_t>(t_end / dt);

  FieldTrajectory traj;
  traj.dt = dt;
  traj.samples.reserve(n_full + 2);

  Vec2 B{B0.B_n, B0.B_b};
  auto push = [&](double t, const Vec2& v) -> bool {
    const double mag = std::hypot(v.n, v.b);
    if (!std::isfinite(v.n) || !std::isfinite(v.b) || !std::isfinite(mag)) {
      traj.overflow = true;
      return false;
    }
    traj.samples.push_back({t, v.n, v.b, mag});
    return true;
  };
  push(0.0, B);

  auto step = [&](const Vec2& v, double h) {
    Vec2 d1 = apply(G, v);
    Vec2 d2 = apply(G, v + d1 * (0.5 * h));
    Vec2 d3 = apply(G, v + d2 * (0.5 * h));
    Vec2 d4 = apply(G, v + d3 * h);
    return v + (d1 + d2 * 2.0 + d3 * 2.0 + d4) * (h / 6.0);
  };

  double t = 0.0;
  for (std::size_t i = 1; i <= n_full; ++i) {
    const double t_next = static_cast<double>(i) * dt;
    B = step(B, t_next - t);
    t = t_next;
    if (!push(t, B)) return traj;
  }
  if (t_end - t > dt * 1e-9) {
    B = step(B, t_end - t);
    push(t_end, B);
  }
  return traj;
}

GrowthFit fit_growth_rate(const FieldTrajectory& traj,
                          double discard_fraction) {
  if (!(discard_fraction >= 0.0) || discard_fraction >= 1.0) {
    throw InvalidInput("discard_fraction must lie in [0, 1)");
  }
  const auto& s = traj.samples;
  const auto first =
      static_cast<std::size_t>(discard_fraction * static_cast<double>(s.size()));
  if (s.size() < first + 20) {
    throw InvalidInput("fit_growth_rate needs >= 20 samples after discard");
  }

  const std::size_t n = s.size() - first;
  double mean_t = 0.0, mean_y = 0.0;
  for (std::size_t i = first; i < s.size(); ++i) {
    if (s[i].abs_B == 0.0) {
      throw UndefinedLog("|B| = 0 inside the fit window");
    }
    mean_t += s[i].t;
    mean_y += std::log(s[i].abs_B);
  }
  mean_t /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = first; i < s.size(); ++i) {
    const double dt_ = s[i].t - mean_t;
    sxx += dt_ * dt_;
    sxy += dt_ * (std::log(s[i].abs_B) - mean_y);
  }

  GrowthFit fit;
  fit.lambda_fit = sxy / sxx;
  fit.window_t0 = s[first].t;
  fit.window_t1 = s.back().t;
  fit.n_samples = n;

  double sse = 0.0;
  for (std::size_t i = first; i < s.size(); ++i) {
    const double resid = std::log(s[i].abs_B) - mean_y -
                         fit.lambda_fit * (s[i].t - mean_t);
    sse += resid * resid;
  }
  fit.stderr_ = n > 2 ? std::sqrt(sse / (static_cast<double>(n - 2) * sxx))
                      : 0.0;
  return fit;
}

void write_trajectory_csv(std::ostream& os, const FieldTrajectory& traj) {
  os << "t,B_n,B_b,abs_B\n";
  for (const auto& s : traj.samples) {
    os << g17(s.t) << ',' << g17(s.B_n) << ',' << g17(s.B_b) << ','
       << g17(s.abs_B) << '\n';
  }
}

}  // namespace dynspec
