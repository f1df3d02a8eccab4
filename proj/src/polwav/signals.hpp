#ifndef POLWAV_SIGNALS_HPP
#define POLWAV_SIGNALS_HPP

#include <functional>
#include <string>
#include <vector>

#include "polwav/harmonics.hpp"
#include "polwav/transform.hpp"

namespace polwav {

// Zonal function Z(t) = sum_l b_l ((lambda+l)/lambda) C_l(t), held by its
// per-degree coefficients b_l.
class ZonalProfile {
public:
  enum class Provenance { analytic, ingested };

  ZonalProfile(const SphereParams& p, std::vector<double> coeffs, Provenance prov,
               double ingest_residual = 0.0);

  const SphereParams& params() const noexcept { return params_; }
  int bandlimit() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  Provenance provenance() const noexcept { return provenance_; }

  // sup distance between the input and its re-synthesis at the ingestion
  // nodes; 0 for analytic profiles
  double ingest_residual() const noexcept { return ingest_residual_; }

private:
  SphereParams params_;
  std::vector<double> coeffs_;
  Provenance provenance_;
  double ingest_residual_;
};

// Projects f onto degrees 0..lmax with a node_count-point Gauss rule
// (node_count >= lmax+1); exact for polynomial inputs of degree <= lmax.
ZonalProfile ingest_profile(const SphereParams& p, const std::function<double(double)>& f,
                            int lmax, int node_count);

double evaluate_profile(const ZonalProfile& z, double t);

// Builtin test profiles.
std::vector<std::string> builtin_profile_names();
ZonalProfile builtin_profile(const SphereParams& p, const std::string& name, int lmax);

// Spectral signal carrying the profile's degree masses in the weighted
// [-1,1] metric: block l holds the single coefficient
// b_l ((lambda+l)/lambda) sqrt(h_l), so block norms match the L2 norm of
// the zonal component as a function of t.
SpectralSignal profile_signal(const ZonalProfile& z);

// Max pointwise distance between the profile and its window-truncated
// reconstruction on a Chebyshev grid of the given size (grid >= 256); a
// lower bound on the true sup-norm distance.
double sup_error(const ZonalProfile& z, const ScaleWindow& w, int grid);

} // namespace polwav

#endif
