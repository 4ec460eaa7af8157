#pragma once

#include <array>
#include <optional>
#include <vector>

#include "latspec/dispersion.hpp"

namespace latspec {

/// Discrete spectrum of the perturbed operator: all zeros of delta outside
/// the band. A rank-2 perturbation yields at most two eigenvalues in total.
struct EigenvalueReport {
  std::vector<double> below;  // strictly increasing, all < 0
  std::vector<double> above;  // strictly increasing, all > 2
  std::optional<double> zeta_mu;      // rank-1 eigenvalue of (mu, 0)
  std::optional<double> zeta_lambda;  // rank-1 eigenvalue of (0, lambda)
  std::optional<double> zeta_min;     // set when both rank-1 values share a side
  std::optional<double> zeta_max;
  double tolerance = 0.0;       // widest final bracket among reported roots
  bool near_threshold = false;  // a sign change hides closer to an edge than
                                // the scan floor can bracket
};

/// The 2x2 linear system whose singularity at z marks an eigenvalue:
///   [[1 - mu a,  lambda b], [mu b,  1 - lambda c]].
struct BirmanSchwingerSystem {
  double m11 = 1.0;
  double m12 = 0.0;
  double m21 = 0.0;
  double m22 = 1.0;
  /// Unit-norm null vector (c1, c2); populated only when |delta| is below the
  /// scaled singularity tolerance.
  std::optional<std::array<double, 2>> null_vector;

  double det() const noexcept { return m11 * m22 - m12 * m21; }
};

/// Lattice profile of a bound state: psi_hat(x) for x = 0..x_max, together
/// with the null-vector components that generated it.
struct Eigenfunction {
  double eigenvalue = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  std::vector<double> lattice_values;
};

/// Eigenvalue of the on-site rank-1 problem: 1 + sign(mu) sqrt(1 + mu^2).
/// Throws std::invalid_argument for mu = 0 (delta is identically 1).
double rank1_mu_eigenvalue(double mu);

/// Unique zero of 1 - lambda c(z), located by bisection to absolute width
/// 1e-13. Lies in (2, inf) for lambda > 0 and (-inf, 0) for lambda < 0.
/// Throws std::invalid_argument for lambda = 0 and std::domain_error when
/// the root sits inside the edge guard band (|lambda| below ~2e-7).
double rank1_lambda_eigenvalue(double lambda);

/// Locate every zero of delta in (-Z, 0) and (2, Z), Z = 3 + |mu| + |lambda|,
/// by a sign-change scan (log-spaced near the edges down to 1e-12, uniform
/// farther out) followed by bisection to width <= tol and a safeguarded
/// Newton polish. tol must lie in [1e-14, 1e-6].
EigenvalueReport find_discrete_spectrum(CouplingPair cp, double tol = 1e-12);

/// Assemble the 2x2 system at z and, when it is singular to within the scaled
/// tolerance, its unit null vector, taken from the better-conditioned of the
/// two row complements (lambda b, -(1 - mu a)) and (-(1 - lambda c), mu b).
BirmanSchwingerSystem birman_schwinger_system(CouplingPair cp, double z);

/// Build the lattice eigenfunction at a verified zero of delta:
/// psi_hat(x) = integral of cos(xq) (mu c1 + lambda c2 cos q)/(z - eps(q)),
/// evaluated by periodic trapezoid with at least 64 x_max nodes.
/// Throws std::invalid_argument when the residual precondition fails.
Eigenfunction eigenfunction(CouplingPair cp, double eigenvalue, int x_max);

}  // namespace latspec
