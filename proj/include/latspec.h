/* C interface to the lattice bound-state library.
 *
 * Every function returns a latspec_status (0 on success) and writes results
 * through out-parameters, so the library can be loaded from C, ctypes, or any
 * FFI without exception support. The tridiagonal verification matrix is held
 * behind an opaque handle.
 */

#ifndef LATSPEC_H
#define LATSPEC_H

#if defined(_WIN32)
#  if defined(LATSPEC_BUILD_SHARED)
#    define LATSPEC_API __declspec(dllexport)
#  else
#    define LATSPEC_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__)
#  define LATSPEC_API __attribute__((visibility("default")))
#else
#  define LATSPEC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum latspec_status {
  LATSPEC_OK = 0,
  LATSPEC_ERR_DOMAIN = 1,        /* spectral point inside the band or guard */
  LATSPEC_ERR_INVALID = 2,       /* bad argument (null pointer, range, enum) */
  LATSPEC_ERR_NOT_CONVERGED = 3, /* truncation probe exhausted its sizes */
  LATSPEC_ERR_INTERNAL = 4
} latspec_status;

typedef enum latspec_kernel {
  LATSPEC_KERNEL_ONE = 0,
  LATSPEC_KERNEL_COS = 1, /* carries the minus sign of b's defining integral */
  LATSPEC_KERNEL_COS2 = 2
} latspec_kernel;

typedef enum latspec_region_name {
  LATSPEC_REGION_G02 = 0,
  LATSPEC_REGION_G01 = 1,
  LATSPEC_REGION_G11 = 2,
  LATSPEC_REGION_G10 = 3,
  LATSPEC_REGION_G20 = 4,
  LATSPEC_REGION_BOUNDARY = 5,
  LATSPEC_REGION_UNCLASSIFIED = 6
} latspec_region_name;

typedef enum latspec_half_class {
  LATSPEC_CLASS_G0 = 0,
  LATSPEC_CLASS_G1 = 1,
  LATSPEC_CLASS_G2 = 2,
  LATSPEC_CLASS_BOUNDARY = 3
} latspec_half_class;

/* a, b, c and delta = (1 - mu a)(1 - lambda c) - mu lambda b^2 at z. */
typedef struct latspec_det_profile {
  double z;
  double a;
  double b;
  double c;
  double delta;
} latspec_det_profile;

/* Band-edge asymptotics of delta: leading 1/sqrt coefficient and constant
 * term at each edge, plus the common scale b2 = b0 = 1/sqrt(2). */
typedef struct latspec_edge_coeffs {
  double c_plus_half;
  double c_plus_0;
  double c_minus_half;
  double c_minus_0;
  double b2;
  double b0;
} latspec_edge_coeffs;

/* Discrete spectrum: at most two eigenvalues in total for a rank-2
 * perturbation, so fixed-size arrays suffice. has_* fields are 0/1. */
typedef struct latspec_eig_report {
  double below[2];
  int n_below;
  double above[2];
  int n_above;
  int has_zeta_mu;
  double zeta_mu;
  int has_zeta_lambda;
  double zeta_lambda;
  int has_zeta_pair; /* zeta_min/zeta_max are set */
  double zeta_min;
  double zeta_max;
  double tolerance;
  int near_threshold;
} latspec_eig_report;

typedef struct latspec_bs_system {
  double m11, m12, m21, m22;
  int has_null_vector;
  double c1, c2;
} latspec_bs_system;

typedef struct latspec_region {
  int name;        /* latspec_region_name */
  int n_below;
  int n_above;
  int lower_class; /* latspec_half_class, below the band */
  int upper_class; /* latspec_half_class, above the band */
} latspec_region;

/* --- dispersion integrals and determinant ------------------------------- */

LATSPEC_API latspec_status latspec_integral_a(double z, double* out);
LATSPEC_API latspec_status latspec_integral_b(double z, double* out);
LATSPEC_API latspec_status latspec_integral_c(double z, double* out);
LATSPEC_API latspec_status latspec_quad_reference(int kernel, double z,
                                                  int nodes, double* out);
LATSPEC_API latspec_status latspec_determinant(double mu, double lambda,
                                               double z,
                                               latspec_det_profile* out);
LATSPEC_API latspec_status latspec_determinant_derivative(double mu,
                                                          double lambda,
                                                          double z,
                                                          double* out);
LATSPEC_API latspec_status latspec_edge_coefficients(double mu, double lambda,
                                                     latspec_edge_coeffs* out);

/* --- eigenvalues --------------------------------------------------------- */

LATSPEC_API latspec_status latspec_rank1_mu_eigenvalue(double mu, double* out);
LATSPEC_API latspec_status latspec_rank1_lambda_eigenvalue(double lambda,
                                                           double* out);
LATSPEC_API latspec_status latspec_find_discrete_spectrum(
    double mu, double lambda, double tol, latspec_eig_report* out);
LATSPEC_API latspec_status latspec_birman_schwinger_system(
    double mu, double lambda, double z, latspec_bs_system* out);

/* values must hold x_max + 1 doubles (psi_hat(0..x_max)); c1/c2 may be null */
LATSPEC_API latspec_status latspec_eigenfunction(double mu, double lambda,
                                                 double eigenvalue, int x_max,
                                                 double* values, double* c1,
                                                 double* c2);

/* --- coupling-plane classification --------------------------------------- */

LATSPEC_API latspec_status latspec_classify(double mu, double lambda,
                                            double boundary_tol,
                                            latspec_region* out);
LATSPEC_API const char* latspec_region_name_str(int name);
LATSPEC_API const char* latspec_half_class_str(int cls, int upper);

/* --- tridiagonal verification matrix (opaque handle) --------------------- */

typedef struct latspec_oracle latspec_oracle;

/* n >= 8 sites beyond the origin; order of the matrix is n + 1. */
LATSPEC_API latspec_status latspec_oracle_create(double mu, double lambda,
                                                 int n, latspec_oracle** out);
LATSPEC_API void latspec_oracle_destroy(latspec_oracle* oracle);
LATSPEC_API int latspec_oracle_order(const latspec_oracle* oracle);

/* number of eigenvalues strictly below x */
LATSPEC_API latspec_status latspec_oracle_sturm_count(
    const latspec_oracle* oracle, double x, int* count);

/* fills only the below/above fields of the report; requires order >= 257 */
LATSPEC_API latspec_status latspec_oracle_eigenvalues(
    const latspec_oracle* oracle, double tol, latspec_eig_report* out);

LATSPEC_API latspec_status latspec_truncation_probe(double mu, double lambda,
                                                    double tol_target,
                                                    int* n_out);

/* --- misc ---------------------------------------------------------------- */

LATSPEC_API const char* latspec_strerror(latspec_status status);
LATSPEC_API const char* latspec_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LATSPEC_H */
