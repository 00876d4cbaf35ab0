#include "dynspec/frenet.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <ostream>

#include "dynspec/errors.hpp"
#include "dynspec/numfmt.hpp"

namespace dynspec {

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 Vec3::normalized() const {
  double r = norm();
  return {x / r, y / r, z / r};
}

double FrenetFrame::orthonormality_defect() const {
  double d = std::abs(t.norm() - 1.0);
  d = std::max(d, std::abs(n.norm() - 1.0));
  d = std::max(d, std::abs(b.norm() - 1.0));
  d = std::max(d, std::abs(t.dot(n)));
  d = std::max(d, std::abs(t.dot(b)));
  d = std::max(d, std::abs(n.dot(b)));
  d = std::max(d, (b - t.cross(n)).norm());
  return d;
}

FrenetFrame FrenetFrame::renormalized() const {
  FrenetFrame f;
  f.t = t.normalized();
  f.n = (n - f.t * f.t.dot(n)).normalized();
  f.b = f.t.cross(f.n);
  return f;
}

void FilamentProfile::validate() const {
  if (!std::isfinite(kappa0) || !std::isfinite(tau0)) {
    throw InvalidInput("filament profile has non-finite curvature or torsion");
  }
  if (helical && kappa0 != tau0) {
    throw InvalidInput("helical profile requires kappa0 == tau0 exactly");
  }
}

namespace {

// State layout for the transport ODE: the three frame vectors as 9 doubles.
struct FrameState {
  Vec3 t, n, b;

  FrameState operator+(const FrameState& o) const {
    return {t + o.t, n + o.n, b + o.b};
  }
  FrameState operator*(double s) const { return {t * s, n * s, b * s}; }
};

FrameState derivative(const FrameState& f, double kappa, double tau) {
  return {
      f.n * kappa,               // t' = kappa n
      f.b * tau - f.t * kappa,   // n' = -kappa t + tau b
      f.n * (-tau),              // b' = -tau n
  };
}

FrameState rk4_step(const FrameState& f, double s, double h,
                    const std::function<double(double)>& kappa,
                    const std::function<double(double)>& tau) {
  const double k0 = kappa(s), t0 = tau(s);
  const double km = kappa(s + 0.5 * h), tm = tau(s + 0.5 * h);
  const double k1 = kappa(s + h), t1 = tau(s + h);

  FrameState d1 = derivative(f, k0, t0);
  FrameState d2 = derivative(f + d1 * (0.5 * h), km, tm);
  FrameState d3 = derivative(f + d2 * (0.5 * h), km, tm);
  FrameState d4 = derivative(f + d3 * h, k1, t1);
  return f + (d1 + d2 * 2.0 + d3 * 2.0 + d4) * (h / 6.0);
}

constexpr double kFrameInputTol = 1e-8;

std::vector<FrameSample> evolve_impl(const FrenetFrame& frame0,
                                     const std::function<double(double)>& kappa,
                                     const std::function<double(double)>& tau,
                                     double s_end, double step,
                                     const EvolveOptions& opts) {
  if (!std::isfinite(s_end) || !std::isfinite(step) || step <= 0.0 ||
      s_end <= 0.0) {
    throw InvalidInput("evolve_frame requires step > 0 and s_end > 0");
  }
  if (frame0.orthonormality_defect() > kFrameInputTol) {
    throw InvalidInput("initial frame violates orthonormality beyond 1e-8");
  }

  std::vector<FrameSample> out;
  const auto n_full = static_cast<std::size_t>(s_end / step);
  out.reserve(n_full + 2);

  FrameState f{frame0.t, frame0.n, frame0.b};
  double s = 0.0;
  out.push_back({s, frame0});

  auto emit = [&](double s_now) {
    FrenetFrame fr{f.t, f.n, f.b};
    if (opts.renormalize) {
      fr = fr.renormalized();
      f = FrameState{fr.t, fr.n, fr.b};
    }
    out.push_back({s_now, fr});
  };

  for (std::size_t i = 1; i <= n_full; ++i) {
    double s_next = static_cast<double>(i) * step;
    f = rk4_step(f, s, s_next - s, kappa, tau);
    s = s_next;
    emit(s);
  }
  // Final partial step when s_end is not a multiple of step.
  if (s_end - s > step * 1e-9) {
    f = rk4_step(f, s, s_end - s, kappa, tau);
    emit(s_end);
  }
  return out;
}

}  // namespace

std::vector<FrameSample> evolve_frame(const FrenetFrame& frame0,
                                      const FilamentProfile& profile,
                                      double s_end, double step,
                                      const EvolveOptions& opts) {
  profile.validate();
  const double k = profile.kappa0;
  const double tau = profile.tau0;
  return evolve_impl(
      frame0, [k](double) { return k; }, [tau](double) { return tau; }, s_end,
      step, opts);
}

std::vector<FrameSample> evolve_frame(
    const FrenetFrame& frame0, const std::function<double(double)>& kappa,
    const std::function<double(double)>& tau, double s_end, double step,
    const EvolveOptions& opts) {
  if (!kappa || !tau) {
    throw InvalidInput("evolve_frame requires callable curvature and torsion");
  }
  return evolve_impl(frame0, kappa, tau, s_end, step, opts);
}

namespace {

// Coefficients of a field a_t t + a_n n + a_b b along the filament. The
// transport derivative acts on constant coefficients as a linear map.
struct Coeffs {
  double a_t, a_n, a_b;
};

Coeffs transport_derivative(const Coeffs& a, double kappa, double tau) {
  return {
      -kappa * a.a_n,
      kappa * a.a_t - tau * a.a_b,
      tau * a.a_n,
  };
}

double coeff_norm(const Coeffs& a) {
  return std::hypot(a.a_t, a.a_n, a.a_b);
}

}  // namespace

LaplacianResidual frame_laplacian_residual(const FilamentProfile& profile) {
  profile.validate();
  const double k = profile.kappa0;
  const double tau = profile.tau0;
  const double k2 = k * k;

  // t'' + kappa0^2 t
  Coeffs t1 = transport_derivative({1.0, 0.0, 0.0}, k, tau);
  Coeffs t2 = transport_derivative(t1, k, tau);
  Coeffs rt{t2.a_t + k2, t2.a_n, t2.a_b};

  // n'' + kappa0^2 n
  Coeffs n1 = transport_derivative({0.0, 1.0, 0.0}, k, tau);
  Coeffs n2 = transport_derivative(n1, k, tau);
  Coeffs rn{n2.a_t, n2.a_n + k2, n2.a_b};

  return {coeff_norm(rt), coeff_norm(rn)};
}

void write_frame_csv(std::ostream& os, std::span<const FrameSample> samples) {
  os << "s,t_x,t_y,t_z,n_x,n_y,n_z,b_x,b_y,b_z\n";
  for (const auto& sm : samples) {
    const auto& f = sm.frame;
    os << g17(sm.s) << ',' << g17(f.t.x) << ',' << g17(f.t.y) << ','
       << g17(f.t.z) << ',' << g17(f.n.x) << ',' << g17(f.n.y) << ','
       << g17(f.n.z) << ',' << g17(f.b.x) << ',' << g17(f.b.y) << ','
       << g17(f.b.z) << '\n';
  }
}

}  // namespace dynspec
