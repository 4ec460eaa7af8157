#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "latspec/dispersion.hpp"

namespace latspec {

/// Symmetric tridiagonal truncation of the even-subspace half-line operator
/// (sites 0..n, Dirichlet cutoff at n+1):
///   diag    = [1 + mu, 1 + lambda/2, 1, 1, ...]
///   offdiag = [-1/sqrt(2), -1/2, -1/2, ...]
/// The -1/sqrt(2) first link is the weight of the unitary map
/// f -> (f(0), sqrt(2) f(1), sqrt(2) f(2), ...).
struct HalfLineMatrix {
  std::vector<double> diag;     // length n+1
  std::vector<double> offdiag;  // length n

  std::size_t order() const noexcept { return diag.size(); }
};

struct NotConvergedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requires n >= 8.
HalfLineMatrix build_half_line(CouplingPair cp, int n);

/// Number of eigenvalues of m strictly below x, from the negative-pivot count
/// of the shifted LDL^T recurrence. Zero pivots are replaced by -pivmin, so an
/// exact hit counts as below.
int sturm_count(const HalfLineMatrix& m, double x) noexcept;

/// Sorted eigenvalues below 0 and above 2, each isolated by bisection on the
/// count function to absolute width tol. Requires n >= 256 and tol >= 1e-12.
std::pair<std::vector<double>, std::vector<double>>
eigenvalues_outside_band(CouplingPair cp, int n, double tol);

/// Smallest n in {256, 512, ..., 8192} for which no outside-band eigenvalue
/// moves by tol_target or more when n doubles. Requires tol_target >= 1e-10.
/// Throws NotConvergedError when n = 8192 is still insufficient.
int truncation_error_probe(CouplingPair cp, double tol_target);

}  // namespace latspec
