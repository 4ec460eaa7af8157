#include "latspec/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace latspec {

namespace {

constexpr double kScanFloor = 1e-12;    // innermost edge distance sampled
constexpr double kMergeTol = 1e-9;      // roots closer than this collapse
constexpr double kSingularTol = 1e-10;  // scaled singularity threshold

double delta_at(CouplingPair cp, double z) { return determinant(cp, z).delta; }

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Bisection to width <= tol followed by a safeguarded Newton polish, which
// brings |delta| down to rounding level relative to its composition terms
// even where delta is steep near an edge.
double refine_root(CouplingPair cp, double lo, double hi, double flo,
                   double tol, double* width) {
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = delta_at(cp, mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if (sign_of(fm) == sign_of(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  *width = hi - lo;
  double root = 0.5 * (lo + hi);
  double froot = delta_at(cp, root);
  for (int it = 0; it < 4 && froot != 0.0; ++it) {
    const double slope = determinant_derivative(cp, root);
    if (slope == 0.0) break;
    const double next = root - froot / slope;
    if (!(next > lo && next < hi)) break;
    const double fnext = delta_at(cp, next);
    if (std::abs(fnext) >= std::abs(froot)) break;
    root = next;
    froot = fnext;
  }
  return root;
}

// Edge distances to sample on one side: log-spaced from the scan floor out to
// one band width, then uniform to s_max.
std::vector<double> scan_distances(double s_max) {
  std::vector<double> s;
  const double log_top = std::min(1.0, s_max);
  const double t0 = std::log10(kScanFloor);
  const double t1 = std::log10(log_top);
  const int nlog = std::max(2, static_cast<int>(std::ceil((t1 - t0) * 16.0)));
  for (int i = 0; i <= nlog; ++i) {
    s.push_back(std::pow(10.0, t0 + (t1 - t0) * i / nlog));
  }
  if (s_max > log_top) {
    const int nuni = 256;
    for (int i = 1; i <= nuni; ++i) {
      s.push_back(log_top + (s_max - log_top) * i / nuni);
    }
  }
  return s;
}

struct SideScan {
  std::vector<double> roots;
  double widest = 0.0;
  bool near_threshold = false;
};

// Sign of delta in the limit toward the edge, from the asymptotic
// coefficients: the divergent term decides unless it vanishes exactly.
int edge_limit_sign(CouplingPair cp, bool upper) {
  const EdgeCoefficients ec = edge_coefficients(cp);
  const double half = upper ? ec.c_plus_half : ec.c_minus_half;
  const double constant = upper ? ec.c_plus_0 : ec.c_minus_0;
  return sign_of(half != 0.0 ? half : constant);
}

SideScan scan_side(CouplingPair cp, bool upper, double radius, double tol,
                   const std::vector<double>& rank1_seeds) {
  const double s_max = upper ? radius - kBandTop : radius;
  std::vector<double> grid;
  for (double s : scan_distances(s_max)) {
    grid.push_back(upper ? kBandTop + s : -s);
  }
  for (double seed : rank1_seeds) {
    const bool on_side = upper ? seed > kBandTop : seed < kBandBottom;
    if (on_side && edge_distance(seed) >= kScanFloor &&
        edge_distance(seed) <= s_max) {
      grid.push_back(seed);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = delta_at(cp, grid[i]);
  }

  SideScan out;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (values[i] == 0.0) {
      out.roots.push_back(grid[i]);
      continue;
    }
    if (sign_of(values[i]) * sign_of(values[i + 1]) < 0) {
      double width = 0.0;
      out.roots.push_back(
          refine_root(cp, grid[i], grid[i + 1], values[i], tol, &width));
      out.widest = std::max(out.widest, width);
    }
  }
  if (!values.empty() && values.back() == 0.0) {
    out.roots.push_back(grid.back());
  }

  // A sign change between the edge and the innermost sample cannot be
  // bracketed; report it instead of inventing or dropping a root.
  const std::size_t innermost = upper ? 0 : grid.size() - 1;
  const int lim = edge_limit_sign(cp, upper);
  if (!values.empty() &&
      (lim == 0 || sign_of(values[innermost]) != lim)) {
    out.near_threshold = true;
  }

  std::sort(out.roots.begin(), out.roots.end());
  std::vector<double> merged;
  for (double r : out.roots) {
    if (merged.empty() || r - merged.back() >= kMergeTol) {
      merged.push_back(r);
    } else if (std::abs(delta_at(cp, r)) <
               std::abs(delta_at(cp, merged.back()))) {
      merged.back() = r;
    }
  }
  out.roots = std::move(merged);
  return out;
}

}  // namespace

double rank1_mu_eigenvalue(double mu) {
  if (mu == 0.0) {
    throw std::invalid_argument("mu = 0 has no discrete eigenvalue");
  }
  const double root = std::sqrt(1.0 + mu * mu);
  return mu > 0.0 ? 1.0 + root : 1.0 - root;
}

double rank1_lambda_eigenvalue(double lambda) {
  if (lambda == 0.0) {
    throw std::invalid_argument("lambda = 0 has no discrete eigenvalue");
  }
  const bool upper = lambda > 0.0;
  auto f = [lambda](double z) { return 1.0 - lambda * integral_c(z); };

  double lo = upper ? kBandTop + kEdgeGuard : kBandBottom - kEdgeGuard;
  double flo = f(lo);
  if (flo >= 0.0) {
    // c reaches 1/lambda only below the guard band
    throw std::domain_error(
        "rank-1 eigenvalue sits closer to the band edge than the guard band");
  }
  double dist = 1.0 + 2.0 * std::abs(lambda);
  double hi = upper ? kBandTop + dist : kBandBottom - dist;
  for (int it = 0; it < 60 && f(hi) <= 0.0; ++it) {
    dist *= 2.0;
    hi = upper ? kBandTop + dist : kBandBottom - dist;
  }
  if (!upper) std::swap(lo, hi);

  constexpr double tol = 1e-13;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    // f < 0 on the edge side of the root, on either half-axis
    if ((upper && fm < 0.0) || (!upper && fm > 0.0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

EigenvalueReport find_discrete_spectrum(CouplingPair cp, double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-6)) {
    throw std::invalid_argument("root tolerance must lie in [1e-14, 1e-6]");
  }
  EigenvalueReport report;
  report.tolerance = tol;

  if (cp.mu != 0.0) {
    report.zeta_mu = rank1_mu_eigenvalue(cp.mu);
  }
  if (cp.lambda != 0.0) {
    try {
      report.zeta_lambda = rank1_lambda_eigenvalue(cp.lambda);
    } catch (const std::domain_error&) {
      // unresolvable within the guard band; leave unset
    }
  }
  if (report.zeta_mu && report.zeta_lambda &&
      (cp.mu > 0.0) == (cp.lambda > 0.0)) {
    report.zeta_min = std::min(*report.zeta_mu, *report.zeta_lambda);
    report.zeta_max = std::max(*report.zeta_mu, *report.zeta_lambda);
  }

  // Seeding the scan with the rank-1 eigenvalues guarantees a sample between
  // interlaced zeros when both land on the same side.
  std::vector<double> seeds;
  if (report.zeta_mu) seeds.push_back(*report.zeta_mu);
  if (report.zeta_lambda) seeds.push_back(*report.zeta_lambda);

  const double radius = 3.0 + std::abs(cp.mu) + std::abs(cp.lambda);
  SideScan lower = scan_side(cp, false, radius, tol, seeds);
  SideScan upper = scan_side(cp, true, radius, tol, seeds);

  report.below = std::move(lower.roots);
  report.above = std::move(upper.roots);
  report.near_threshold = lower.near_threshold || upper.near_threshold;
  report.tolerance = std::max(lower.widest, upper.widest);
  if (report.below.empty() && report.above.empty()) {
    report.tolerance = tol;
  }
  return report;
}

BirmanSchwingerSystem birman_schwinger_system(CouplingPair cp, double z) {
  const DeterminantProfile p = determinant(cp, z);
  BirmanSchwingerSystem sys;
  sys.m11 = 1.0 - cp.mu * p.a;
  sys.m12 = cp.lambda * p.b;
  sys.m21 = cp.mu * p.b;
  sys.m22 = 1.0 - cp.lambda * p.c;

  const double scale = std::max(
      {1.0, std::abs(sys.m11 * sys.m22), std::abs(sys.m12 * sys.m21)});
  if (std::abs(p.delta) > kSingularTol * scale) {
    return sys;
  }
  const double row1[2] = {sys.m12, -sys.m11};   // complement of row 1
  const double row2[2] = {-sys.m22, sys.m21};   // complement of row 2
  const double n1 = std::hypot(row1[0], row1[1]);
  const double n2 = std::hypot(row2[0], row2[1]);
  const double* v = n1 >= n2 ? row1 : row2;
  const double norm = std::max(n1, n2);
  if (norm > 0.0) {
    double c1 = v[0] / norm;
    double c2 = v[1] / norm;
    if (c1 < 0.0 || (c1 == 0.0 && c2 < 0.0)) {
      c1 = -c1;
      c2 = -c2;
    }
    sys.null_vector = {{c1, c2}};
  }
  return sys;
}

Eigenfunction eigenfunction(CouplingPair cp, double eigenvalue, int x_max) {
  if (x_max < 1 || x_max > 32768) {
    throw std::invalid_argument("x_max must lie in [1, 32768]");
  }
  const BirmanSchwingerSystem sys = birman_schwinger_system(cp, eigenvalue);
  if (!sys.null_vector) {
    throw std::invalid_argument(
        "eigenvalue does not satisfy the determinant residual precondition");
  }
  const double c1 = (*sys.null_vector)[0];
  const double c2 = (*sys.null_vector)[1];

  const int nodes = std::max(1024, 64 * x_max);
  const double step = 2.0 * std::numbers::pi / nodes;
  std::vector<double> qs(nodes);
  std::vector<double> psi(nodes);
  for (int j = 0; j < nodes; ++j) {
    const double q = -std::numbers::pi + step * j;
    const double cq = std::cos(q);
    qs[j] = q;
    psi[j] = (cp.mu * c1 + cp.lambda * c2 * cq) / (eigenvalue - (1.0 - cq));
  }
  std::vector<double> values(static_cast<std::size_t>(x_max) + 1);
  for (int x = 0; x <= x_max; ++x) {
    double sum = 0.0;
    for (int j = 0; j < nodes; ++j) {
      sum += std::cos(x * qs[j]) * psi[j];
    }
    values[static_cast<std::size_t>(x)] = sum / nodes;
  }
  return {eigenvalue, c1, c2, std::move(values)};
}

}  // namespace latspec
