#include "latspec/region.hpp"

#include "latspec/eigensolver.hpp"

namespace latspec {

UpperClass classify_upper(CouplingPair cp, double boundary_tol) noexcept {
  const double s = cp.mu * cp.lambda - cp.mu - cp.lambda;
  if (s > boundary_tol) {
    if (cp.mu > 1.0) return UpperClass::G2;
    if (cp.mu < 1.0) return UpperClass::G0;
    return UpperClass::Boundary;
  }
  if (s < -boundary_tol) return UpperClass::G1;
  if (cp.mu > 1.0 + boundary_tol) return UpperClass::G1;
  if (cp.mu < 1.0 - boundary_tol) return UpperClass::G0;
  return UpperClass::Boundary;
}

LowerClass classify_lower(CouplingPair cp, double boundary_tol) noexcept {
  const double t = cp.mu * cp.lambda + cp.mu + cp.lambda;
  if (t > boundary_tol) {
    if (cp.mu < -1.0) return LowerClass::G2;
    if (cp.mu > -1.0) return LowerClass::G0;
    return LowerClass::Boundary;
  }
  if (t < -boundary_tol) return LowerClass::G1;
  if (cp.mu < -1.0 - boundary_tol) return LowerClass::G1;
  if (cp.mu > -1.0 + boundary_tol) return LowerClass::G0;
  return LowerClass::Boundary;
}

RegionLabel classify(CouplingPair cp, double boundary_tol) {
  if (!(boundary_tol >= 0.0)) {
    throw std::invalid_argument("boundary_tol must be >= 0");
  }
  RegionLabel out;
  out.lower = classify_lower(cp, boundary_tol);
  out.upper = classify_upper(cp, boundary_tol);

  if (out.lower == LowerClass::Boundary || out.upper == UpperClass::Boundary) {
    out.name = RegionName::Boundary;
  } else if (out.lower == LowerClass::G0 && out.upper == UpperClass::G2) {
    out.name = RegionName::G02;
  } else if (out.lower == LowerClass::G0 && out.upper == UpperClass::G1) {
    out.name = RegionName::G01;
  } else if (out.lower == LowerClass::G1 && out.upper == UpperClass::G1) {
    out.name = RegionName::G11;
  } else if (out.lower == LowerClass::G1 && out.upper == UpperClass::G0) {
    out.name = RegionName::G10;
  } else if (out.lower == LowerClass::G2 && out.upper == UpperClass::G0) {
    out.name = RegionName::G20;
  } else {
    out.name = RegionName::Unclassified;
  }

  switch (out.name) {
    case RegionName::G02: out.n_below = 0; out.n_above = 2; break;
    case RegionName::G01: out.n_below = 0; out.n_above = 1; break;
    case RegionName::G11: out.n_below = 1; out.n_above = 1; break;
    case RegionName::G10: out.n_below = 1; out.n_above = 0; break;
    case RegionName::G20: out.n_below = 2; out.n_above = 0; break;
    default: {
      // boundary points and combinations outside the five named regions:
      // count the determinant zeros directly so the label stays total
      const EigenvalueReport rep = find_discrete_spectrum(cp, 1e-12);
      out.n_below = static_cast<int>(rep.below.size());
      out.n_above = static_cast<int>(rep.above.size());
      break;
    }
  }
  return out;
}

const char* to_string(RegionName name) noexcept {
  switch (name) {
    case RegionName::G02: return "G02";
    case RegionName::G01: return "G01";
    case RegionName::G11: return "G11";
    case RegionName::G10: return "G10";
    case RegionName::G20: return "G20";
    case RegionName::Boundary: return "BOUNDARY";
    case RegionName::Unclassified: return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

const char* to_string(UpperClass cls) noexcept {
  switch (cls) {
    case UpperClass::G0: return "G0+";
    case UpperClass::G1: return "G1+";
    case UpperClass::G2: return "G2+";
    case UpperClass::Boundary: return "BOUNDARY";
  }
  return "BOUNDARY";
}

const char* to_string(LowerClass cls) noexcept {
  switch (cls) {
    case LowerClass::G0: return "G0-";
    case LowerClass::G1: return "G1-";
    case LowerClass::G2: return "G2-";
    case LowerClass::Boundary: return "BOUNDARY";
  }
  return "BOUNDARY";
}

}  // namespace latspec
