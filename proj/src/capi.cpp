#include "polwav.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "polwav/errors.hpp"
#include "polwav/harmonics.hpp"
#include "polwav/signals.hpp"
#include "polwav/transform.hpp"
#include "polwav/wavelet_family.hpp"

struct polwav_sphere {
  polwav::SphereParams impl;
};
struct polwav_quadrature {
  polwav::QuadratureRule impl;
};
struct polwav_symbol {
  polwav::SphereParams params;
  polwav::WaveletSymbol impl;
};
struct polwav_signal {
  polwav::SpectralSignal impl;
};
struct polwav_profile {
  polwav::ZonalProfile impl;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
polwav_status guarded(F&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return POLWAV_OK;
  } catch (const polwav::unknown_profile_error& e) {
    g_last_error = e.what();
    return POLWAV_UNKNOWN_PROFILE;
  } catch (const polwav::mismatch_error& e) {
    g_last_error = e.what();
    return POLWAV_MISMATCH;
  } catch (const polwav::convergence_error& e) {
    g_last_error = e.what();
    return POLWAV_NO_CONVERGENCE;
  } catch (const std::overflow_error& e) {
    g_last_error = e.what();
    return POLWAV_OVERFLOW;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return POLWAV_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return POLWAV_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return POLWAV_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return POLWAV_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return POLWAV_INTERNAL;
  }
}

polwav_status null_pointer(const char* what) noexcept {
  try {
    g_last_error = std::string(what) + ": required pointer is NULL";
  } catch (...) {
  }
  return POLWAV_NULL_POINTER;
}

bool is_finite(double x) noexcept { return std::isfinite(x); }

} // namespace

extern "C" {

const char* polwav_status_name(polwav_status s) {
  switch (s) {
    case POLWAV_OK: return "ok";
    case POLWAV_INVALID_ARGUMENT: return "invalid argument";
    case POLWAV_OVERFLOW: return "integer overflow";
    case POLWAV_MISMATCH: return "operand mismatch";
    case POLWAV_NO_CONVERGENCE: return "no convergence";
    case POLWAV_UNKNOWN_PROFILE: return "unknown profile";
    case POLWAV_NULL_POINTER: return "null pointer";
    case POLWAV_INTERNAL: return "internal error";
  }
  return "unrecognized status";
}

const char* polwav_last_error(void) { return g_last_error.c_str(); }

const char* polwav_version(void) { return "0.1.0"; }

/* ---- sphere & harmonics ------------------------------------------------ */

polwav_status polwav_sphere_create(int n, polwav_sphere** out) {
  if (!out) return null_pointer("polwav_sphere_create");
  return guarded([&] { *out = new polwav_sphere{polwav::SphereParams(n)}; });
}

void polwav_sphere_destroy(polwav_sphere* s) { delete s; }

polwav_status polwav_sphere_n(const polwav_sphere* s, int* out) {
  if (!s || !out) return null_pointer("polwav_sphere_n");
  return guarded([&] { *out = s->impl.n(); });
}

polwav_status polwav_sphere_lambda(const polwav_sphere* s, double* out) {
  if (!s || !out) return null_pointer("polwav_sphere_lambda");
  return guarded([&] { *out = s->impl.lambda(); });
}

polwav_status polwav_dim_harmonics(const polwav_sphere* s, int l, uint64_t* out) {
  if (!s || !out) return null_pointer("polwav_dim_harmonics");
  return guarded([&] { *out = polwav::dim_harmonics(s->impl, l); });
}

polwav_status polwav_gegenbauer(const polwav_sphere* s, int l, double t, double* out) {
  if (!s || !out) return null_pointer("polwav_gegenbauer");
  return guarded([&] {
    if (!is_finite(t)) throw std::invalid_argument("polwav_gegenbauer: t is not finite");
    *out = polwav::gegenbauer(s->impl, l, t);
  });
}

polwav_status polwav_gegenbauer_at_one(const polwav_sphere* s, int l, uint64_t* out) {
  if (!s || !out) return null_pointer("polwav_gegenbauer_at_one");
  return guarded([&] { *out = polwav::gegenbauer_at_one(s->impl, l); });
}

polwav_status polwav_kernel_bound_identity(const polwav_sphere* s, int l, double* out) {
  if (!s || !out) return null_pointer("polwav_kernel_bound_identity");
  return guarded([&] { *out = polwav::kernel_bound_identity(s->impl, l); });
}

polwav_status polwav_weight_mass(const polwav_sphere* s, double* out) {
  if (!s || !out) return null_pointer("polwav_weight_mass");
  return guarded([&] { *out = polwav::weight_mass(s->impl); });
}

polwav_status polwav_quadrature_create(const polwav_sphere* s, int node_count,
                                       polwav_quadrature** out) {
  if (!s || !out) return null_pointer("polwav_quadrature_create");
  return guarded([&] {
    *out = new polwav_quadrature{polwav::gauss_gegenbauer(s->impl, node_count)};
  });
}

void polwav_quadrature_destroy(polwav_quadrature* q) { delete q; }

polwav_status polwav_quadrature_size(const polwav_quadrature* q, int* out) {
  if (!q || !out) return null_pointer("polwav_quadrature_size");
  return guarded([&] { *out = q->impl.size(); });
}

polwav_status polwav_quadrature_nodes(const polwav_quadrature* q, double* out) {
  if (!q || !out) return null_pointer("polwav_quadrature_nodes");
  return guarded([&] {
    std::memcpy(out, q->impl.nodes().data(), sizeof(double) * q->impl.nodes().size());
  });
}

polwav_status polwav_quadrature_weights(const polwav_quadrature* q, double* out) {
  if (!q || !out) return null_pointer("polwav_quadrature_weights");
  return guarded([&] {
    std::memcpy(out, q->impl.weights().data(), sizeof(double) * q->impl.weights().size());
  });
}

/* ---- wavelet family ---------------------------------------------------- */

polwav_status polwav_scale_profile(int l, double rho, double* out) {
  if (!out) return null_pointer("polwav_scale_profile");
  return guarded([&] {
    if (!is_finite(rho)) throw std::invalid_argument("polwav_scale_profile: rho is not finite");
    *out = polwav::scale_profile(l, rho);
  });
}

polwav_status polwav_scale_profile_tail(int l, double R, double* out) {
  if (!out) return null_pointer("polwav_scale_profile_tail");
  return guarded([&] {
    if (!is_finite(R)) throw std::invalid_argument("polwav_scale_profile_tail: R is not finite");
    *out = polwav::scale_profile_tail(l, R);
  });
}

polwav_status polwav_scale_profile_integral(int l, double lo, double hi, double tol,
                                            double* out) {
  if (!out) return null_pointer("polwav_scale_profile_integral");
  return guarded([&] {
    if (!is_finite(lo) || !is_finite(hi) || !is_finite(tol) || tol <= 0.0) {
      throw std::invalid_argument("polwav_scale_profile_integral: bad interval or tolerance");
    }
    *out = polwav::scale_profile_integral_numeric(l, lo, hi, tol);
  });
}

polwav_status polwav_wavelet_coefficient(const polwav_sphere* s, int l, double rho,
                                         double* out) {
  if (!s || !out) return null_pointer("polwav_wavelet_coefficient");
  return guarded([&] {
    if (!is_finite(rho)) {
      throw std::invalid_argument("polwav_wavelet_coefficient: rho is not finite");
    }
    *out = polwav::wavelet_coefficient(s->impl, l, rho);
  });
}

polwav_status polwav_polynomial_degree(double rho, int* out) {
  if (!out) return null_pointer("polwav_polynomial_degree");
  return guarded([&] {
    if (!is_finite(rho)) {
      throw std::invalid_argument("polwav_polynomial_degree: rho is not finite");
    }
    const auto deg = polwav::polynomial_degree(rho);
    *out = deg ? *deg : -1;
  });
}

polwav_status polwav_symbol_create(const polwav_sphere* s, double rho, int lmax,
                                   polwav_symbol** out) {
  if (!s || !out) return null_pointer("polwav_symbol_create");
  return guarded([&] {
    if (!is_finite(rho)) throw std::invalid_argument("polwav_symbol_create: rho is not finite");
    *out = new polwav_symbol{s->impl, polwav::make_symbol(s->impl, rho, lmax)};
  });
}

void polwav_symbol_destroy(polwav_symbol* sym) { delete sym; }

polwav_status polwav_symbol_size(const polwav_symbol* sym, int* out) {
  if (!sym || !out) return null_pointer("polwav_symbol_size");
  return guarded([&] { *out = static_cast<int>(sym->impl.entries().size()); });
}

polwav_status polwav_symbol_entry(const polwav_symbol* sym, int index, int* degree,
                                  double* sigma) {
  if (!sym || !degree || !sigma) return null_pointer("polwav_symbol_entry");
  return guarded([&] {
    const auto& entries = sym->impl.entries();
    if (index < 0 || static_cast<std::size_t>(index) >= entries.size()) {
      throw std::invalid_argument("polwav_symbol_entry: index out of range");
    }
    *degree = entries[static_cast<std::size_t>(index)].first;
    *sigma = entries[static_cast<std::size_t>(index)].second;
  });
}

polwav_status polwav_kernel_evaluate(const polwav_sphere* s, const polwav_symbol* sym,
                                     double t, polwav_kernel_mode mode, double* out) {
  if (!s || !sym || !out) return null_pointer("polwav_kernel_evaluate");
  return guarded([&] {
    if (!is_finite(t)) throw std::invalid_argument("polwav_kernel_evaluate: t is not finite");
    if (mode != POLWAV_KERNEL_WAVELET && mode != POLWAV_KERNEL_RECONSTRUCTION) {
      throw std::invalid_argument("polwav_kernel_evaluate: bad mode");
    }
    *out = polwav::evaluate_kernel(s->impl, sym->impl, t,
                                   mode == POLWAV_KERNEL_WAVELET
                                       ? polwav::KernelMode::wavelet
                                       : polwav::KernelMode::reconstruction);
  });
}

/* ---- spectral signals & transform -------------------------------------- */

polwav_status polwav_signal_create(const polwav_sphere* s, int bandlimit,
                                   polwav_signal** out) {
  if (!s || !out) return null_pointer("polwav_signal_create");
  return guarded([&] {
    *out = new polwav_signal{polwav::SpectralSignal(s->impl, bandlimit)};
  });
}

polwav_status polwav_signal_random(const polwav_sphere* s, int bandlimit, uint64_t seed,
                                   polwav_signal** out) {
  if (!s || !out) return null_pointer("polwav_signal_random");
  return guarded([&] {
    *out = new polwav_signal{polwav::SpectralSignal::random(s->impl, bandlimit, seed)};
  });
}

void polwav_signal_destroy(polwav_signal* f) { delete f; }

polwav_status polwav_signal_bandlimit(const polwav_signal* f, int* out) {
  if (!f || !out) return null_pointer("polwav_signal_bandlimit");
  return guarded([&] { *out = f->impl.bandlimit(); });
}

polwav_status polwav_signal_block_size(const polwav_signal* f, int l, uint64_t* out) {
  if (!f || !out) return null_pointer("polwav_signal_block_size");
  return guarded([&] { *out = f->impl.block(l).size(); });
}

polwav_status polwav_signal_get(const polwav_signal* f, int l, uint64_t m, double* re,
                                double* im) {
  if (!f || !re || !im) return null_pointer("polwav_signal_get");
  return guarded([&] {
    const auto& blk = f->impl.block(l);
    if (m >= blk.size()) {
      throw std::invalid_argument("polwav_signal_get: coefficient index out of range");
    }
    *re = blk[m].real();
    *im = blk[m].imag();
  });
}

polwav_status polwav_signal_set(polwav_signal* f, int l, uint64_t m, double re, double im) {
  if (!f) return null_pointer("polwav_signal_set");
  return guarded([&] {
    if (!is_finite(re) || !is_finite(im)) {
      throw std::invalid_argument("polwav_signal_set: coefficient must be finite");
    }
    auto& blk = f->impl.block(l);
    if (m >= blk.size()) {
      throw std::invalid_argument("polwav_signal_set: coefficient index out of range");
    }
    blk[m] = {re, im};
  });
}

polwav_status polwav_signal_norm(const polwav_signal* f, double* out) {
  if (!f || !out) return null_pointer("polwav_signal_norm");
  return guarded([&] { *out = f->impl.norm(); });
}

polwav_status polwav_analyze(const polwav_signal* f, double rho, polwav_signal** out) {
  if (!f || !out) return null_pointer("polwav_analyze");
  return guarded([&] {
    if (!is_finite(rho)) throw std::invalid_argument("polwav_analyze: rho is not finite");
    *out = new polwav_signal{polwav::analyze(f->impl, rho)};
  });
}

polwav_status polwav_scale_integral(int l, double R, double* out) {
  if (!out) return null_pointer("polwav_scale_integral");
  return guarded([&] { *out = polwav::scale_integral(l, polwav::ScaleWindow(R)); });
}

polwav_status polwav_partial_weights(double R, int lmax, double* out) {
  if (!out) return null_pointer("polwav_partial_weights");
  return guarded([&] {
    const auto w = polwav::partial_weights(polwav::ScaleWindow(R), lmax);
    std::memcpy(out, w.data(), sizeof(double) * w.size());
  });
}

polwav_status polwav_synthesize(const polwav_signal* f, double R, polwav_signal** out) {
  if (!f || !out) return null_pointer("polwav_synthesize");
  return guarded([&] {
    *out = new polwav_signal{polwav::synthesize(f->impl, polwav::ScaleWindow(R))};
  });
}

polwav_status polwav_l2_residual(const polwav_signal* f, double R, double* out) {
  if (!f || !out) return null_pointer("polwav_l2_residual");
  return guarded([&] { *out = polwav::l2_residual(f->impl, polwav::ScaleWindow(R)); });
}

polwav_status polwav_isometry_defect(const polwav_signal* f, const polwav_signal* g,
                                     double R, double* out) {
  if (!f || !g || !out) return null_pointer("polwav_isometry_defect");
  return guarded([&] {
    *out = polwav::isometry_defect(f->impl, g->impl, polwav::ScaleWindow(R));
  });
}

polwav_status polwav_legacy_admissibility(const polwav_sphere* s, double R, int lmax,
                                          double* out) {
  if (!s || !out) return null_pointer("polwav_legacy_admissibility");
  return guarded([&] {
    if (!is_finite(R)) {
      throw std::invalid_argument("polwav_legacy_admissibility: R is not finite");
    }
    *out = polwav::legacy_admissibility(s->impl, R, lmax);
  });
}

/* ---- zonal profiles ----------------------------------------------------- */

polwav_status polwav_profile_ingest(const polwav_sphere* s, polwav_profile_fn f, void* ctx,
                                    int lmax, int node_count, polwav_profile** out) {
  if (!s || !f || !out) return null_pointer("polwav_profile_ingest");
  return guarded([&] {
    auto wrapped = [f, ctx](double t) { return f(t, ctx); };
    *out = new polwav_profile{polwav::ingest_profile(s->impl, wrapped, lmax, node_count)};
  });
}

polwav_status polwav_profile_builtin(const polwav_sphere* s, const char* name, int lmax,
                                     polwav_profile** out) {
  if (!s || !name || !out) return null_pointer("polwav_profile_builtin");
  return guarded([&] {
    *out = new polwav_profile{polwav::builtin_profile(s->impl, name, lmax)};
  });
}

polwav_status polwav_profile_names(const char* const** names, int* count) {
  if (!names || !count) return null_pointer("polwav_profile_names");
  static const char* const kNames[] = {"const", "exp", "abs", "cos<k>"};
  return guarded([&] {
    *names = kNames;
    *count = 4;
  });
}

void polwav_profile_destroy(polwav_profile* z) { delete z; }

polwav_status polwav_profile_bandlimit(const polwav_profile* z, int* out) {
  if (!z || !out) return null_pointer("polwav_profile_bandlimit");
  return guarded([&] { *out = z->impl.bandlimit(); });
}

polwav_status polwav_profile_coefficient(const polwav_profile* z, int l, double* out) {
  if (!z || !out) return null_pointer("polwav_profile_coefficient");
  return guarded([&] {
    if (l < 0 || l > z->impl.bandlimit()) {
      throw std::invalid_argument("polwav_profile_coefficient: degree out of range");
    }
    *out = z->impl.coefficients()[static_cast<std::size_t>(l)];
  });
}

polwav_status polwav_profile_ingest_residual(const polwav_profile* z, double* out) {
  if (!z || !out) return null_pointer("polwav_profile_ingest_residual");
  return guarded([&] { *out = z->impl.ingest_residual(); });
}

polwav_status polwav_profile_evaluate(const polwav_profile* z, double t, double* out) {
  if (!z || !out) return null_pointer("polwav_profile_evaluate");
  return guarded([&] {
    if (!is_finite(t)) throw std::invalid_argument("polwav_profile_evaluate: t is not finite");
    *out = polwav::evaluate_profile(z->impl, t);
  });
}

polwav_status polwav_profile_signal(const polwav_profile* z, polwav_signal** out) {
  if (!z || !out) return null_pointer("polwav_profile_signal");
  return guarded([&] { *out = new polwav_signal{polwav::profile_signal(z->impl)}; });
}

polwav_status polwav_sup_error(const polwav_profile* z, double R, int grid, double* out) {
  if (!z || !out) return null_pointer("polwav_sup_error");
  return guarded([&] {
    *out = polwav::sup_error(z->impl, polwav::ScaleWindow(R), grid);
  });
}

} /* extern "C" */
