#ifndef POLWAV_TRANSFORM_HPP
#define POLWAV_TRANSFORM_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "polwav/harmonics.hpp"
#include "polwav/wavelet_family.hpp"

namespace polwav {

// Synthesis window [R, 1/R].  R is capped at 1/2 so the window always
// contains (0,2], the union of all scale-profile supports above R; larger
// cutoffs would truncate the degree-0 profile and leave the convergence
// regime this library studies.
class ScaleWindow {
public:
  explicit ScaleWindow(double R);

  double R() const noexcept { return r_; }
  double upper() const noexcept { return 1.0 / r_; }

private:
  double r_;
};

// Bandlimited function on S^n held spectrally: block l carries the N(n,l)
// coefficients of the degree-l harmonic component.  The per-degree index is
// a flat 0..N(n,l)-1; no explicit harmonic basis is needed for any
// operation in this library.
class SpectralSignal {
public:
  SpectralSignal(const SphereParams& p, int bandlimit);

  // Independent complex Gaussian coefficients, deterministic in the seed
  // (fixed generator and Box-Muller transform, no library distributions).
  static SpectralSignal random(const SphereParams& p, int bandlimit, std::uint64_t seed);

  const SphereParams& params() const noexcept { return params_; }
  int bandlimit() const noexcept { return static_cast<int>(blocks_.size()) - 1; }

  std::vector<std::complex<double>>& block(int l);
  const std::vector<std::complex<double>>& block(int l) const;

  double block_norm2(int l) const;
  double norm() const;

private:
  SphereParams params_;
  std::vector<std::vector<std::complex<double>>> blocks_;
};

// sum over all coefficients of conj(f) * g; throws mismatch_error unless
// both signals share the sphere and the bandlimit.
std::complex<double> inner_product(const SpectralSignal& f, const SpectralSignal& g);

// One scale of the wavelet transform: block l of the output is
// sqrt(rho * gamma_l(rho)) times block l of f.  The wavelet family is zonal,
// so analysis is a per-degree multiplier; no rotation-group sampling occurs.
SpectralSignal analyze(const SpectralSignal& f, double rho);

// Multi-scale view of the transform: one spectral slice per sampled scale.
struct WaveletField {
  std::vector<double> scales;
  std::vector<SpectralSignal> slices;
};

WaveletField analyze_field(const SpectralSignal& f, const std::vector<double>& scales);

// Exact value of int_R^{1/R} of the synthesis integrand for degree l.  The
// rho from the squared coefficients cancels against the weight 1/rho, so
// this is just the closed-form profile tail (the window top 1/R >= 2 lies
// past every support).
double scale_integral(int l, const ScaleWindow& w);

// Per-degree reconstruction weights w_l = scale_integral(l, w) for
// l = 0..lmax.  With L the band index of R (R in [1/(L+1), 1/L]) the list
// satisfies w_l = (1-R)^l for l < L, w_L in [0, (1-R)^L], w_l = 0 beyond;
// this structure is re-verified on every call.
std::vector<double> partial_weights(const ScaleWindow& w, int lmax);

// Window-truncated inverse transform: block l of the output is w_l times
// block l of f.  Composes analysis and its adjoint with the exact scale
// integral in place of numeric rho-quadrature.
SpectralSignal synthesize(const SpectralSignal& f, const ScaleWindow& w);

// L2 distance between f and synthesize(f, w), computed per degree as
// sqrt( sum_l (1 - w_l)^2 |block l|^2 ).
double l2_residual(const SpectralSignal& f, const ScaleWindow& w);

// Magnitude of <f,g> - sum_l w_l <block_l f, block_l g>, the defect of the
// window-truncated phase-space inner product.  Tends to 0 as R -> 0.
double isometry_defect(const SpectralSignal& f, const SpectralSignal& g,
                       const ScaleWindow& w);

// Weighted L1 norm of the tail kernel
//   K_R(t) = sum_l tail_l(R) ((lambda+l)/lambda) C_l(t)
// against (1-t^2)^{lambda-1/2}: the dropped uniform-boundedness probe.
// Splits [-1,1] at the sign changes of the polynomial K_R before
// integrating.  Requires lmax at least the largest degree with a nonzero
// tail at R.  Throws convergence_error if a piece integral does not
// stabilize.
double legacy_admissibility(const SphereParams& p, double R, int lmax);

} // namespace polwav

#endif
