#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "dynspec/pencil.hpp"
#include "dynspec/plasma.hpp"

namespace dynspec {

/// Linear generator of the component evolution d(B_n, B_b)/dt = G B.
/// G = -C^{-1} A is the unique system whose exponential ansatz reproduces
/// the pencil condition det(A + gamma C) = 0.
struct EvolutionSystem {
  Mat2 G;
  Variant source_variant = Variant::Laminar;
  PlasmaParams params;
};

EvolutionSystem to_evolution_system(const SpectralPencil& pencil);

/// Companion system of a monic quadratic gamma^2 + p gamma + q: eigenvalues
/// of G are the polynomial roots. Bridges the polynomial routes (printed /
/// golden) into the same time-domain machinery.
EvolutionSystem companion_system(const QuadCoeffs& coeffs, Variant tag,
                                 const PlasmaParams& params);

/// Closed-form (trace/determinant) eigenvalues of a 2x2 matrix, ordered by
/// descending real part then descending imaginary part.
std::array<std::complex<double>, 2> eigenvalues(const Mat2& m);

struct TrajectorySample {
  double t = 0.0;
  double B_n = 0.0;
  double B_b = 0.0;
  double abs_B = 0.0;
};

struct FieldTrajectory {
  std::vector<TrajectorySample> samples;
  double dt = 0.0;
  bool overflow = false;  // integration stopped before t_end
};

/// Fixed-step classical 4th-order integration of dB/dt = G B from B0 to
/// t_end. If a component leaves the representable range the trajectory is
/// truncated at the last finite sample and flagged.
FieldTrajectory integrate(const EvolutionSystem& system,
                          const FieldComponents& B0, double t_end, double dt);

struct GrowthFit {
  double lambda_fit = 0.0;
  double stderr_ = 0.0;
  double window_t0 = 0.0;
  double window_t1 = 0.0;
  std::size_t n_samples = 0;
};

/// Least-squares slope of ln|B(t)| over the retained tail of the trajectory
/// (the leading discard_fraction of samples is dropped as transient).
GrowthFit fit_growth_rate(const FieldTrajectory& traj,
                          double discard_fraction = 0.5);

/// CSV columns: t, B_n, B_b, abs_B.
void write_trajectory_csv(std::ostream& os, const FieldTrajectory& traj);

}  // namespace dynspec
