#ifndef POLWAV_WAVELET_FAMILY_HPP
#define POLWAV_WAVELET_FAMILY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polwav/harmonics.hpp"

namespace polwav {

// Per-degree scale profile gamma_l of the wavelet family.
//
// gamma_0 is the indicator of [1,2].  For l >= 1 the profile is
//
//   l (1-rho)^{l-1}              on (0, 1/(l+1)),
//   l^{l+1} / (l+1)^{l-1}        on [1/(l+1), 1/l)   (the plateau),
//   0                            on [1/l, inf).
//
// The plateau value is exactly the one that makes the tail integral below
// continuous; the profile itself steps up by a factor l at 1/(l+1).
double scale_profile(int l, double rho);

// Plateau value l^{l+1}/(l+1)^{l-1}.  A direct power quotient up to l = 30,
// a single log-space exponentiation l^2 exp(-(l-1) log1p(1/l)) beyond, so
// the value never overflows and stays within ~1e-15 relative error.
double plateau_constant(int l);

// Closed-form tail integral int_R^inf gamma_l(rho) drho:
//
//   l >= 1:  (1-R)^l on [0, 1/(l+1)],  plateau * (1/l - R) on the middle
//            band,  0 on [1/l, inf).
//   l == 0:  1 on [0,1],  2-R on (1,2],  0 beyond.
//
// Continuous and nonincreasing in R; equals 1 at R = 0 for every degree
// (the admissibility normalization).
double scale_profile_tail(int l, double R);

// Adaptive-Simpson integration of scale_profile over [lo, hi], split at the
// profile breakpoints so every panel is smooth.  Numeric cross-check for
// the closed form.  Throws convergence_error when the refinement depth is
// exhausted before reaching tol.
double scale_profile_integral_numeric(int l, double lo, double hi, double tol = 1e-12);

// Spectral coefficient of the scale-rho wavelet on the degree-l zonal slot:
// sqrt(rho * N(n,l) * gamma_l(rho)).  All other coefficients of the family
// vanish.
double wavelet_coefficient(const SphereParams& p, int l, double rho);

// Largest harmonic degree carried by the scale-rho wavelet, i.e. the degree
// of the polynomial Psi_rho.  nullopt for rho > 2, where the wavelet is the
// zero function.
std::optional<int> polynomial_degree(double rho);

// The nonzero per-degree mass sigma_l(rho) = rho * gamma_l(rho) of a single
// scale.  Immutable; entries are sorted by degree and strictly positive.
class WaveletSymbol {
public:
  WaveletSymbol(double rho, std::vector<std::pair<int, double>> entries);

  double rho() const noexcept { return rho_; }
  const std::vector<std::pair<int, double>>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  int max_degree() const noexcept { return entries_.empty() ? -1 : entries_.back().first; }
  double sigma(int l) const noexcept;  // 0 for absent degrees

private:
  double rho_;
  std::vector<std::pair<int, double>> entries_;
};

// Symbol of the scale-rho wavelet truncated at lmax.  Degrees above
// polynomial_degree(rho) carry no mass and are omitted.
WaveletSymbol make_symbol(const SphereParams& p, double rho, int lmax);

enum class KernelMode {
  wavelet,         // coefficients sqrt(sigma_l): the wavelet Psi_rho itself
  reconstruction,  // coefficients sigma_l: the self-convolution kernel
};

// Pointwise zonal evaluation sum_l c_l ((lambda+l)/lambda) C_l(t); a finite
// polynomial in t.
double evaluate_kernel(const SphereParams& p, const WaveletSymbol& s, double t,
                       KernelMode mode);

} // namespace polwav

#endif
