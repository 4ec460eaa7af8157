#include "latspec/dispersion.hpp"

#include <cmath>
#include <numbers>

namespace latspec {

namespace {

void require_outside_band(double z) {
  if (!outside_band(z)) {
    throw std::domain_error(
        "spectral point must lie outside [0,2] with edge distance >= 1e-13");
  }
}

}  // namespace

bool outside_band(double z) noexcept {
  return std::isfinite(z) &&
         (z <= kBandBottom - kEdgeGuard || z >= kBandTop + kEdgeGuard);
}

double edge_distance(double z) noexcept {
  return z < 1.0 ? kBandBottom - z : z - kBandTop;
}

double integral_a(double z) {
  require_outside_band(z);
  const double sign = z > 1.0 ? 1.0 : -1.0;
  return sign / std::sqrt(z * (z - kBandTop));
}

double integral_b(double z) { return (z - 1.0) * integral_a(z) - 1.0; }

double integral_c(double z) { return (z - 1.0) * integral_b(z); }

double quad_reference(Kernel kernel, double z, int nodes) {
  require_outside_band(z);
  if (nodes < 16) {
    throw std::invalid_argument("quad_reference requires nodes >= 16");
  }
  const double step = 2.0 * std::numbers::pi / nodes;
  double sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double q = -std::numbers::pi + step * j;
    const double cq = std::cos(q);
    double numer = 1.0;
    switch (kernel) {
      case Kernel::One:
        numer = 1.0;
        break;
      case Kernel::Cos:
        numer = -cq;
        break;
      case Kernel::Cos2:
        numer = cq * cq;
        break;
    }
    sum += numer / (z - (1.0 - cq));
  }
  return sum / nodes;
}

DeterminantProfile determinant(CouplingPair cp, double z) {
  const double a = integral_a(z);
  const double b = (z - 1.0) * a - 1.0;
  const double c = (z - 1.0) * b;
  return {z, a, b, c, compose_determinant(cp.mu, cp.lambda, a, b, c)};
}

double determinant_derivative(CouplingPair cp, double z) {
  const double a = integral_a(z);
  const double shifted = z - 1.0;
  const double w = shifted * shifted - 1.0;  // z(z-2)
  const double b = shifted * a - 1.0;
  const double c = shifted * b;
  const double da = -shifted * a / w;
  const double db = a + shifted * da;
  const double dc = b + shifted * db;
  const double t1 = 1.0 - cp.mu * a;
  const double t2 = 1.0 - cp.lambda * c;
  return -cp.mu * da * t2 - cp.lambda * dc * t1 -
         2.0 * cp.mu * cp.lambda * b * db;
}

EdgeCoefficients edge_coefficients(CouplingPair cp) noexcept {
  const double scale = 1.0 / std::numbers::sqrt2;
  const double mu = cp.mu;
  const double lambda = cp.lambda;
  EdgeCoefficients out;
  out.c_plus_half = scale * (mu * lambda - mu - lambda);
  out.c_plus_0 = 1.0 + lambda - mu * lambda;
  out.c_minus_half = scale * (mu * lambda + mu + lambda);
  out.c_minus_0 = 1.0 - lambda - mu * lambda;
  out.b2 = scale;
  out.b0 = scale;
  return out;
}

}  // namespace latspec
