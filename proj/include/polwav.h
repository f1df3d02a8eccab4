#ifndef POLWAV_H
#define POLWAV_H

/* polwav -- polynomial wavelet analysis on n-spheres.
 *
 * C interface over the core library: opaque handles and integer status
 * codes, no exceptions across the boundary.  Functions that return
 * polwav_status leave their outputs untouched on failure; a description of
 * the most recent failure on the calling thread is available from
 * polwav_last_error().  Handles are destroyed with their matching
 * *_destroy call; destroying NULL is a no-op.  All handles are immutable
 * after construction except polwav_signal, whose coefficients may be set;
 * distinct handles may be used concurrently from different threads.
 */

#include <stdint.h>

#ifndef POLWAV_API
#if defined(_WIN32)
#define POLWAV_API __declspec(dllexport)
#else
#define POLWAV_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum polwav_status {
  POLWAV_OK = 0,
  POLWAV_INVALID_ARGUMENT = 1, /* precondition violated (range, domain, name syntax) */
  POLWAV_OVERFLOW = 2,         /* exact integer result exceeds 64 bits */
  POLWAV_MISMATCH = 3,         /* operands on different spheres / bandlimits */
  POLWAV_NO_CONVERGENCE = 4,   /* iterative numerics failed to stabilize */
  POLWAV_UNKNOWN_PROFILE = 5,  /* no builtin profile with that name */
  POLWAV_NULL_POINTER = 6,     /* required pointer argument was NULL */
  POLWAV_INTERNAL = 7          /* unexpected failure (allocation, logic) */
} polwav_status;

POLWAV_API const char* polwav_status_name(polwav_status s);

/* Thread-local description of the most recent failure; empty string if the
 * last call on this thread succeeded. */
POLWAV_API const char* polwav_last_error(void);

POLWAV_API const char* polwav_version(void);

typedef struct polwav_sphere polwav_sphere;
typedef struct polwav_quadrature polwav_quadrature;
typedef struct polwav_symbol polwav_symbol;
typedef struct polwav_signal polwav_signal;
typedef struct polwav_profile polwav_profile;

/* ---- sphere & harmonics ------------------------------------------------ */

/* n >= 2; the Gegenbauer index is lambda = (n-1)/2. */
POLWAV_API polwav_status polwav_sphere_create(int n, polwav_sphere** out);
POLWAV_API void polwav_sphere_destroy(polwav_sphere* s);
POLWAV_API polwav_status polwav_sphere_n(const polwav_sphere* s, int* out);
POLWAV_API polwav_status polwav_sphere_lambda(const polwav_sphere* s, double* out);

/* Exact dimension N(n,l) of the degree-l harmonic space. */
POLWAV_API polwav_status polwav_dim_harmonics(const polwav_sphere* s, int l, uint64_t* out);

/* Gegenbauer polynomial C_l(t), t in [-1,1]. */
POLWAV_API polwav_status polwav_gegenbauer(const polwav_sphere* s, int l, double t,
                                           double* out);

/* Exact C_l(1). */
POLWAV_API polwav_status polwav_gegenbauer_at_one(const polwav_sphere* s, int l,
                                                  uint64_t* out);

/* ((lambda+l)/lambda) C_l(1) / N(n,l); identically 1. */
POLWAV_API polwav_status polwav_kernel_bound_identity(const polwav_sphere* s, int l,
                                                      double* out);

/* int_{-1}^{1} (1-t^2)^{lambda-1/2} dt. */
POLWAV_API polwav_status polwav_weight_mass(const polwav_sphere* s, double* out);

/* Gauss rule for the weight (1-t^2)^{lambda-1/2}; exact through degree
 * 2*node_count - 1. */
POLWAV_API polwav_status polwav_quadrature_create(const polwav_sphere* s, int node_count,
                                                  polwav_quadrature** out);
POLWAV_API void polwav_quadrature_destroy(polwav_quadrature* q);
POLWAV_API polwav_status polwav_quadrature_size(const polwav_quadrature* q, int* out);
/* Both arrays must hold size doubles. */
POLWAV_API polwav_status polwav_quadrature_nodes(const polwav_quadrature* q, double* out);
POLWAV_API polwav_status polwav_quadrature_weights(const polwav_quadrature* q, double* out);

/* ---- wavelet family ---------------------------------------------------- */

/* Scale profile gamma_l(rho), rho > 0. */
POLWAV_API polwav_status polwav_scale_profile(int l, double rho, double* out);

/* Closed-form tail int_R^inf gamma_l, R >= 0. */
POLWAV_API polwav_status polwav_scale_profile_tail(int l, double R, double* out);

/* Adaptive numeric integral of gamma_l over [lo, hi]; cross-check for the
 * closed form. */
POLWAV_API polwav_status polwav_scale_profile_integral(int l, double lo, double hi,
                                                       double tol, double* out);

/* sqrt(rho N(n,l) gamma_l(rho)), the only nonzero spectral coefficient of
 * the scale-rho wavelet in degree l. */
POLWAV_API polwav_status polwav_wavelet_coefficient(const polwav_sphere* s, int l,
                                                    double rho, double* out);

/* Degree of the polynomial wavelet at scale rho; -1 past rho = 2 where the
 * wavelet is the zero function. */
POLWAV_API polwav_status polwav_polynomial_degree(double rho, int* out);

/* Per-degree symbol sigma_l(rho) = rho gamma_l(rho), nonzero entries only,
 * truncated at lmax. */
POLWAV_API polwav_status polwav_symbol_create(const polwav_sphere* s, double rho, int lmax,
                                              polwav_symbol** out);
POLWAV_API void polwav_symbol_destroy(polwav_symbol* sym);
POLWAV_API polwav_status polwav_symbol_size(const polwav_symbol* sym, int* out);
POLWAV_API polwav_status polwav_symbol_entry(const polwav_symbol* sym, int index,
                                             int* degree, double* sigma);

typedef enum polwav_kernel_mode {
  POLWAV_KERNEL_WAVELET = 0,       /* coefficients sqrt(sigma_l) */
  POLWAV_KERNEL_RECONSTRUCTION = 1 /* coefficients sigma_l */
} polwav_kernel_mode;

/* Pointwise zonal evaluation sum_l c_l ((lambda+l)/lambda) C_l(t). */
POLWAV_API polwav_status polwav_kernel_evaluate(const polwav_sphere* s,
                                                const polwav_symbol* sym, double t,
                                                polwav_kernel_mode mode, double* out);

/* ---- spectral signals & transform -------------------------------------- */

POLWAV_API polwav_status polwav_signal_create(const polwav_sphere* s, int bandlimit,
                                              polwav_signal** out);

/* Deterministic complex Gaussian coefficients for the given seed. */
POLWAV_API polwav_status polwav_signal_random(const polwav_sphere* s, int bandlimit,
                                              uint64_t seed, polwav_signal** out);
POLWAV_API void polwav_signal_destroy(polwav_signal* f);
POLWAV_API polwav_status polwav_signal_bandlimit(const polwav_signal* f, int* out);
POLWAV_API polwav_status polwav_signal_block_size(const polwav_signal* f, int l,
                                                  uint64_t* out);
POLWAV_API polwav_status polwav_signal_get(const polwav_signal* f, int l, uint64_t m,
                                           double* re, double* im);
POLWAV_API polwav_status polwav_signal_set(polwav_signal* f, int l, uint64_t m, double re,
                                           double im);
POLWAV_API polwav_status polwav_signal_norm(const polwav_signal* f, double* out);

/* Block l of the output is sqrt(rho gamma_l(rho)) times block l of f. */
POLWAV_API polwav_status polwav_analyze(const polwav_signal* f, double rho,
                                        polwav_signal** out);

/* Exact scale integral over the window [R, 1/R], R in (0, 1/2]. */
POLWAV_API polwav_status polwav_scale_integral(int l, double R, double* out);

/* Reconstruction weights w_0..w_lmax; out must hold lmax+1 doubles. */
POLWAV_API polwav_status polwav_partial_weights(double R, int lmax, double* out);

/* Window-truncated inverse transform. */
POLWAV_API polwav_status polwav_synthesize(const polwav_signal* f, double R,
                                           polwav_signal** out);

/* L2 distance between f and synthesize(f, R). */
POLWAV_API polwav_status polwav_l2_residual(const polwav_signal* f, double R, double* out);

/* |<f,g> - sum_l w_l <f_l, g_l>|. */
POLWAV_API polwav_status polwav_isometry_defect(const polwav_signal* f,
                                                const polwav_signal* g, double R,
                                                double* out);

/* Weighted L1 norm of the tail kernel at cutoff R > 0 (the dropped
 * uniform-boundedness condition); lmax must cover the degrees reachable at
 * R. */
POLWAV_API polwav_status polwav_legacy_admissibility(const polwav_sphere* s, double R,
                                                     int lmax, double* out);

/* ---- zonal profiles ----------------------------------------------------- */

typedef double (*polwav_profile_fn)(double t, void* ctx);

/* Projection of f onto degrees 0..lmax with node_count >= lmax+1 Gauss
 * nodes. */
POLWAV_API polwav_status polwav_profile_ingest(const polwav_sphere* s, polwav_profile_fn f,
                                               void* ctx, int lmax, int node_count,
                                               polwav_profile** out);

/* Builtin profiles: "const", "exp", "abs", "cos<k>" (e.g. "cos2"). */
POLWAV_API polwav_status polwav_profile_builtin(const polwav_sphere* s, const char* name,
                                                int lmax, polwav_profile** out);

/* Static list of builtin profile names. */
POLWAV_API polwav_status polwav_profile_names(const char* const** names, int* count);

POLWAV_API void polwav_profile_destroy(polwav_profile* z);
POLWAV_API polwav_status polwav_profile_bandlimit(const polwav_profile* z, int* out);
POLWAV_API polwav_status polwav_profile_coefficient(const polwav_profile* z, int l,
                                                    double* out);

/* sup distance between input and re-synthesis at the ingestion nodes; 0 for
 * analytic profiles. */
POLWAV_API polwav_status polwav_profile_ingest_residual(const polwav_profile* z,
                                                        double* out);
POLWAV_API polwav_status polwav_profile_evaluate(const polwav_profile* z, double t,
                                                 double* out);

/* Spectral signal with the profile's per-degree masses in the weighted
 * [-1,1] metric. */
POLWAV_API polwav_status polwav_profile_signal(const polwav_profile* z,
                                               polwav_signal** out);

/* Max reconstruction error on a Chebyshev grid (grid >= 256). */
POLWAV_API polwav_status polwav_sup_error(const polwav_profile* z, double R, int grid,
                                          double* out);

#ifdef __cplusplus
}
#endif

#endif /* POLWAV_H */
