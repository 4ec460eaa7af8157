#pragma once

#include "latspec/dispersion.hpp"

namespace latspec {

/// Eigenvalue count above the band, decided by the sign of the upper edge
/// coefficient and the position of mu relative to +1.
enum class UpperClass { G0, G1, G2, Boundary };

/// Mirror classification below the band (lower edge coefficient, mu vs -1).
enum class LowerClass { G0, G1, G2, Boundary };

/// Combined region of the coupling plane. The five named regions carry the
/// eigenvalue counts (below, above) = (0,2), (0,1), (1,1), (1,0), (2,0).
enum class RegionName { G02, G01, G11, G10, G20, Boundary, Unclassified };

struct RegionLabel {
  RegionName name = RegionName::Unclassified;
  int n_below = 0;
  int n_above = 0;
  LowerClass lower = LowerClass::Boundary;
  UpperClass upper = UpperClass::Boundary;
};

/// With S = mu lambda - mu - lambda: G2 if S > tol and mu > 1; G1 if
/// S < -tol or (|S| <= tol and mu > 1 + tol); G0 if S > tol and mu < 1, or
/// (|S| <= tol and mu < 1 - tol); Boundary otherwise.
UpperClass classify_upper(CouplingPair cp, double boundary_tol = 1e-12) noexcept;

/// Mirror of classify_upper with T = mu lambda + mu + lambda and mu vs -1.
LowerClass classify_lower(CouplingPair cp, double boundary_tol = 1e-12) noexcept;

/// Compose the two half-plane classes. Combinations outside the five named
/// regions (and any boundary hit) fall back to direct root counting, so the
/// returned counts are always populated.
RegionLabel classify(CouplingPair cp, double boundary_tol = 1e-12);

const char* to_string(RegionName name) noexcept;
const char* to_string(UpperClass cls) noexcept;
const char* to_string(LowerClass cls) noexcept;

}  // namespace latspec
