#include "latspec.h"

#include <algorithm>
#include <cstring>
#include <memory>

#include "latspec/dispersion.hpp"
#include "latspec/eigensolver.hpp"
#include "latspec/lattice_oracle.hpp"
#include "latspec/region.hpp"

struct latspec_oracle {
  latspec::CouplingPair cp;
  latspec::HalfLineMatrix matrix;
};

namespace {

template <typename Fn>
latspec_status guarded(Fn&& fn) {
  try {
    fn();
    return LATSPEC_OK;
  } catch (const std::domain_error&) {
    return LATSPEC_ERR_DOMAIN;
  } catch (const std::invalid_argument&) {
    return LATSPEC_ERR_INVALID;
  } catch (const latspec::NotConvergedError&) {
    return LATSPEC_ERR_NOT_CONVERGED;
  } catch (...) {
    return LATSPEC_ERR_INTERNAL;
  }
}

void fill_report(const latspec::EigenvalueReport& rep,
                 latspec_eig_report* out) {
  std::memset(out, 0, sizeof(*out));
  out->n_below = static_cast<int>(std::min<std::size_t>(rep.below.size(), 2));
  for (int i = 0; i < out->n_below; ++i) out->below[i] = rep.below[i];
  out->n_above = static_cast<int>(std::min<std::size_t>(rep.above.size(), 2));
  for (int i = 0; i < out->n_above; ++i) out->above[i] = rep.above[i];
  if (rep.zeta_mu) {
    out->has_zeta_mu = 1;
    out->zeta_mu = *rep.zeta_mu;
  }
  if (rep.zeta_lambda) {
    out->has_zeta_lambda = 1;
    out->zeta_lambda = *rep.zeta_lambda;
  }
  if (rep.zeta_min && rep.zeta_max) {
    out->has_zeta_pair = 1;
    out->zeta_min = *rep.zeta_min;
    out->zeta_max = *rep.zeta_max;
  }
  out->tolerance = rep.tolerance;
  out->near_threshold = rep.near_threshold ? 1 : 0;
}

}  // namespace

extern "C" {

latspec_status latspec_integral_a(double z, double* out) {
  if (!out) return LATSPEC_ERR_INVALID;
  return guarded([&] { *out = latspec::integral_a(z); });
}

latspec_status latspec_integral_b(double z, double* out) {
  if (!out) return LATSPEC_ERR_INVALID;
  return guarded([&] { *out = latspec::integral_b(z); });
}

latspec_status latspec_integral_c(double z, double* out) {
  if (!out) return LATSPEC_ERR_INVALID;
  return guarded([&] { *out = latspec::integral_c(z); });
}

latspec_status latspec_quad_reference(int kernel, double z, int nodes,
                                      double* out) {
  if (!out) return LATSPEC_ERR_INVALID;
  if (kernel < LATSPEC_KERNEL_ONE || kernel > LATSPEC_KERNEL_COS2) {
    return LATSPEC_ERR_INVALID;
  }
  return guarded([&] {
    *out = latspec::quad_reference(static_cast<latspec::Kernel>(kernel), z,
                                   nodes);
  });
}

latspec_status latspec_determinant(double mu, double lambda, double z,
                                   latspec_det_profile* out) {
  if (!out) return LATSPEC_ERR_INVALID;
  return guarded([&] {
    const latspec::DeterminantProfile p =
        latspec::determinant({mu, lambda}, z);
    out->z = p.z;
    out->a = p.a;
    out->b = p.b;
    out->c = p.c;
    out->delta = p.delta;
  });
}

latspec_status latspec_determinant_derivative(double mu, double lambda,
                                              double z, double* out) {
  if (!out) return LATSPEC_ERR_INVALID;
  return guarded(
      [&] { *out = latspec::determinant_derivative({mu, lambda}, z); });
}

latspec_status latspec_edge_coefficients(double mu, double lambda,
                                         latspec_edge_coeffs* out) {
  if (!out) return LATSPEC_ERR_INVALID;
  const latspec::EdgeCoefficients ec =
      latspec::edge_coefficients({mu, lambda});
  out->c_plus_half = ec.c_plus_half;
  out->c_plus_0 = ec.c_plus_0;
  out->c_minus_half = ec.c_minus_half;
  out->c_minus_0 = ec.c_minus_0;
  out->b2 = ec.b2;
  out->b0 = ec.b0;
  return LATSPEC_OK;
}

latspec_status latspec_rank1_mu_eigenvalue(double mu, double* out) {
  if (!out) return LATSPEC_ERR_INVALID;
  return guarded([&] { *out = latspec::rank1_mu_eigenvalue(mu); });
}

latspec_status latspec_rank1_lambda_eigenvalue(double lambda, double* out) {
  if (!out) return LATSPEC_ERR_INVALID;
  return guarded([&] { *out = latspec::rank1_lambda_eigenvalue(lambda); });
}

latspec_status latspec_find_discrete_spectrum(double mu, double lambda,
                                              double tol,
                                              latspec_eig_report* out) {
  if (!out) return LATSPEC_ERR_INVALID;
  return guarded([&] {
    fill_report(latspec::find_discrete_spectrum({mu, lambda}, tol), out);
  });
}

latspec_status latspec_birman_schwinger_system(double mu, double lambda,
                                               double z,
                                               latspec_bs_system* out) {
  if (!out) return LATSPEC_ERR_INVALID;
  return guarded([&] {
    const latspec::BirmanSchwingerSystem sys =
        latspec::birman_schwinger_system({mu, lambda}, z);
    out->m11 = sys.m11;
    out->m12 = sys.m12;
    out->m21 = sys.m21;
    out->m22 = sys.m22;
    out->has_null_vector = sys.null_vector ? 1 : 0;
    out->c1 = sys.null_vector ? (*sys.null_vector)[0] : 0.0;
    out->c2 = sys.null_vector ? (*sys.null_vector)[1] : 0.0;
  });
}

latspec_status latspec_eigenfunction(double mu, double lambda,
                                     double eigenvalue, int x_max,
                                     double* values, double* c1, double* c2) {
  if (!values) return LATSPEC_ERR_INVALID;
  return guarded([&] {
    const latspec::Eigenfunction ef =
        latspec::eigenfunction({mu, lambda}, eigenvalue, x_max);
    std::copy(ef.lattice_values.begin(), ef.lattice_values.end(), values);
    if (c1) *c1 = ef.c1;
    if (c2) *c2 = ef.c2;
  });
}

latspec_status latspec_classify(double mu, double lambda, double boundary_tol,
                                latspec_region* out) {
  if (!out) return LATSPEC_ERR_INVALID;
  return guarded([&] {
    const latspec::RegionLabel label =
        latspec::classify({mu, lambda}, boundary_tol);
    out->name = static_cast<int>(label.name);
    out->n_below = label.n_below;
    out->n_above = label.n_above;
    out->lower_class = static_cast<int>(label.lower);
    out->upper_class = static_cast<int>(label.upper);
  });
}

const char* latspec_region_name_str(int name) {
  if (name < LATSPEC_REGION_G02 || name > LATSPEC_REGION_UNCLASSIFIED) {
    return "UNKNOWN";
  }
  return latspec::to_string(static_cast<latspec::RegionName>(name));
}

const char* latspec_half_class_str(int cls, int upper) {
  if (cls < LATSPEC_CLASS_G0 || cls > LATSPEC_CLASS_BOUNDARY) {
    return "UNKNOWN";
  }
  if (upper) {
    return latspec::to_string(static_cast<latspec::UpperClass>(cls));
  }
  return latspec::to_string(static_cast<latspec::LowerClass>(cls));
}

latspec_status latspec_oracle_create(double mu, double lambda, int n,
                                     latspec_oracle** out) {
  if (!out) return LATSPEC_ERR_INVALID;
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<latspec_oracle>();
    handle->cp = {mu, lambda};
    handle->matrix = latspec::build_half_line(handle->cp, n);
    *out = handle.release();
  });
}

void latspec_oracle_destroy(latspec_oracle* oracle) { delete oracle; }

int latspec_oracle_order(const latspec_oracle* oracle) {
  return oracle ? static_cast<int>(oracle->matrix.order()) : 0;
}

latspec_status latspec_oracle_sturm_count(const latspec_oracle* oracle,
                                          double x, int* count) {
  if (!oracle || !count) return LATSPEC_ERR_INVALID;
  *count = latspec::sturm_count(oracle->matrix, x);
  return LATSPEC_OK;
}

latspec_status latspec_oracle_eigenvalues(const latspec_oracle* oracle,
                                          double tol,
                                          latspec_eig_report* out) {
  if (!oracle || !out) return LATSPEC_ERR_INVALID;
  return guarded([&] {
    const int n = static_cast<int>(oracle->matrix.order()) - 1;
    const auto [below, above] =
        latspec::eigenvalues_outside_band(oracle->cp, n, tol);
    latspec::EigenvalueReport rep;
    rep.below = below;
    rep.above = above;
    rep.tolerance = tol;
    fill_report(rep, out);
  });
}

latspec_status latspec_truncation_probe(double mu, double lambda,
                                        double tol_target, int* n_out) {
  if (!n_out) return LATSPEC_ERR_INVALID;
  return guarded([&] {
    *n_out = latspec::truncation_error_probe({mu, lambda}, tol_target);
  });
}

const char* latspec_strerror(latspec_status status) {
  switch (status) {
    case LATSPEC_OK:
      return "ok";
    case LATSPEC_ERR_DOMAIN:
      return "spectral point inside the band [0,2] or its guard";
    case LATSPEC_ERR_INVALID:
      return "invalid argument";
    case LATSPEC_ERR_NOT_CONVERGED:
      return "not converged";
    case LATSPEC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* latspec_version(void) { return "0.1.0"; }

} /* extern "C" */
