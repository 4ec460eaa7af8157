#include "latspec/lattice_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace latspec {

namespace {

// smallest x with sturm_count(x) >= k + 1, i.e. the k-th eigenvalue
double kth_eigenvalue(const HalfLineMatrix& m, int k, double lo, double hi,
                      double tol) {
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(m, mid) >= k + 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::pair<double, double> gershgorin_bounds(const HalfLineMatrix& m) {
  double lo = m.diag[0];
  double hi = m.diag[0];
  const std::size_t order = m.order();
  for (std::size_t i = 0; i < order; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(m.offdiag[i - 1]);
    if (i + 1 < order) radius += std::abs(m.offdiag[i]);
    lo = std::min(lo, m.diag[i] - radius);
    hi = std::max(hi, m.diag[i] + radius);
  }
  return {lo, hi};
}

}  // namespace

HalfLineMatrix build_half_line(CouplingPair cp, int n) {
  if (n < 8) {
    throw std::invalid_argument("half-line truncation requires n >= 8");
  }
  HalfLineMatrix m;
  m.diag.assign(static_cast<std::size_t>(n) + 1, 1.0);
  m.diag[0] = 1.0 + cp.mu;
  m.diag[1] = 1.0 + 0.5 * cp.lambda;
  m.offdiag.assign(static_cast<std::size_t>(n), -0.5);
  m.offdiag[0] = -1.0 / std::numbers::sqrt2;
  return m;
}

int sturm_count(const HalfLineMatrix& m, double x) noexcept {
  double max_off2 = 0.0;
  for (double e : m.offdiag) max_off2 = std::max(max_off2, e * e);
  const double pivmin =
      std::numeric_limits<double>::min() * std::max(1.0, max_off2);

  int count = 0;
  double pivot = m.diag[0] - x;
  if (std::abs(pivot) < pivmin) pivot = -pivmin;  // exact hit counts as below
  if (pivot < 0.0) ++count;
  for (std::size_t k = 1; k < m.diag.size(); ++k) {
    pivot = m.diag[k] - x - m.offdiag[k - 1] * m.offdiag[k - 1] / pivot;
    if (std::abs(pivot) < pivmin) pivot = -pivmin;
    if (pivot < 0.0) ++count;
  }
  return count;
}

std::pair<std::vector<double>, std::vector<double>>
eigenvalues_outside_band(CouplingPair cp, int n, double tol) {
  if (n < 256) {
    throw std::invalid_argument("outside-band solve requires n >= 256");
  }
  if (!(tol >= 1e-12)) {
    throw std::invalid_argument("outside-band solve requires tol >= 1e-12");
  }
  const HalfLineMatrix m = build_half_line(cp, n);
  const auto [glo, ghi] = gershgorin_bounds(m);
  const int order = static_cast<int>(m.order());
  const int n_below = sturm_count(m, kBandBottom);
  const int n_above = order - sturm_count(m, kBandTop);

  std::vector<double> below;
  below.reserve(static_cast<std::size_t>(n_below));
  for (int j = 0; j < n_below; ++j) {
    below.push_back(kth_eigenvalue(m, j, glo, kBandBottom, tol));
  }
  std::vector<double> above;
  above.reserve(static_cast<std::size_t>(n_above));
  for (int j = order - n_above; j < order; ++j) {
    above.push_back(kth_eigenvalue(m, j, kBandTop, ghi, tol));
  }
  return {std::move(below), std::move(above)};
}

int truncation_error_probe(CouplingPair cp, double tol_target) {
  if (!(tol_target >= 1e-10)) {
    throw std::invalid_argument("probe requires tol_target >= 1e-10");
  }
  constexpr double solve_tol = 1e-12;
  auto current = eigenvalues_outside_band(cp, 256, solve_tol);
  for (int n = 256; n <= 8192; n *= 2) {
    const auto doubled = eigenvalues_outside_band(cp, 2 * n, solve_tol);
    if (current.first.size() == doubled.first.size() &&
        current.second.size() == doubled.second.size()) {
      double move = 0.0;
      for (std::size_t i = 0; i < current.first.size(); ++i) {
        move = std::max(move, std::abs(current.first[i] - doubled.first[i]));
      }
      for (std::size_t i = 0; i < current.second.size(); ++i) {
        move = std::max(move, std::abs(current.second[i] - doubled.second[i]));
      }
      if (move < tol_target) return n;
    }
    current = doubled;
  }
  throw NotConvergedError(
      "outside-band eigenvalues still moving between n = 8192 and n = 16384");
}

}  // namespace latspec
