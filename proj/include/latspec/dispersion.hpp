#pragma once

#include <stdexcept>

namespace latspec {

/// Essential band of the free lattice operator with dispersion 1 - cos q.
inline constexpr double kBandBottom = 0.0;
inline constexpr double kBandTop = 2.0;

/// Evaluation guard: spectral points closer than this to a band edge raise
/// std::domain_error instead of producing inf/nan.
inline constexpr double kEdgeGuard = 1e-13;

/// On-site strength mu and nearest-neighbor strength lambda. Both may take
/// either sign; the perturbation is indefinite in general.
struct CouplingPair {
  double mu = 0.0;
  double lambda = 0.0;
};

/// Values of the three dispersion integrals and of the 2x2 determinant
/// delta = (1 - mu a)(1 - lambda c) - mu lambda b^2 at one spectral point.
struct DeterminantProfile {
  double z = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double delta = 1.0;
};

/// Leading and constant coefficients of delta near the band edges:
///   delta(2+s) = c_plus_half / sqrt(s) + c_plus_0 + O(sqrt(s))
///   delta(0-s) = c_minus_half / sqrt(s) + c_minus_0 + O(sqrt(s))
/// b2 and b0 are the edge scales of the integral a itself, both 1/sqrt(2).
struct EdgeCoefficients {
  double c_plus_half = 0.0;
  double c_plus_0 = 1.0;
  double c_minus_half = 0.0;
  double c_minus_0 = 1.0;
  double b2 = 0.0;
  double b0 = 0.0;
};

/// Integrand selector for the quadrature reference. Kernel::Cos carries the
/// minus sign of the defining integral of b.
enum class Kernel { One, Cos, Cos2 };

/// True when z is a valid spectral point: finite and at least kEdgeGuard
/// away from the band [0,2].
bool outside_band(double z) noexcept;

/// Signed distance to the nearest band edge; positive outside the band.
double edge_distance(double z) noexcept;

/// a(z) = integral of 1/(z - eps(q)) over the torus, closed form
/// sign(z-1)/sqrt(z(z-2)). Throws std::domain_error inside the guard band.
double integral_a(double z);

/// b(z) = -integral of cos(q)/(z - eps(q)), reduced to (z-1) a(z) - 1.
/// Strictly positive everywhere outside the band.
double integral_b(double z);

/// c(z) = integral of cos^2(q)/(z - eps(q)), reduced to (z-1) b(z).
/// Positive for z > 2, negative for z < 0.
double integral_c(double z);

/// Periodic trapezoidal sum of the defining integrand with the given node
/// count. Independent check of the closed forms; converges geometrically.
/// Requires nodes >= 16.
double quad_reference(Kernel kernel, double z, int nodes);

/// The exact composition used for DeterminantProfile::delta. Shared so tests
/// can reproduce the stored value bit for bit.
inline double compose_determinant(double mu, double lambda, double a, double b,
                                  double c) {
  return (1.0 - mu * a) * (1.0 - lambda * c) - mu * lambda * b * b;
}

/// Evaluate a, b, c and delta at z. Throws std::domain_error inside the
/// guard band.
DeterminantProfile determinant(CouplingPair cp, double z);

/// Analytic d(delta)/dz from the closed forms.
double determinant_derivative(CouplingPair cp, double z);

/// Band-edge asymptotic coefficients of delta as functions of the couplings:
///   c_plus_half  = (mu lambda - mu - lambda)/sqrt(2)
///   c_plus_0     = 1 + lambda - mu lambda
///   c_minus_half = (mu lambda + mu + lambda)/sqrt(2)
///   c_minus_0    = 1 - lambda - mu lambda
EdgeCoefficients edge_coefficients(CouplingPair cp) noexcept;

}  // namespace latspec
