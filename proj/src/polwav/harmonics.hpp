#ifndef POLWAV_HARMONICS_HPP
#define POLWAV_HARMONICS_HPP

#include <cstdint>
#include <vector>

namespace polwav {

// Parameters of the unit sphere S^n in R^{n+1}.  Every zonal computation in
// this library is driven by the Gegenbauer index lambda = (n-1)/2, the one
// for which the degree-l reproducing kernels are ((lambda+l)/lambda) C_l.
// n = 1 (lambda = 0) is rejected: the kernel factor (lambda+l)/lambda is
// singular there.
class SphereParams {
public:
  explicit SphereParams(int n);

  int n() const noexcept { return n_; }
  double lambda() const noexcept { return 0.5 * (n_ - 1); }

private:
  int n_;
};

// Dimension N(n,l) of the degree-l hyperspherical harmonic space,
//
//   N(n,l) = (n+2l-1)/(n-1) * binom(n+l-2, l),
//
// evaluated in exact integer arithmetic (the division is exact).
// Throws std::overflow_error if the result exceeds 64 bits.
std::uint64_t dim_harmonics(const SphereParams& p, int l);

// C_l(1) = binom(n+l-2, l), exact.  Same overflow contract as dim_harmonics.
std::uint64_t gegenbauer_at_one(const SphereParams& p, int l);

// Gegenbauer polynomial C_l(t) for lambda = (n-1)/2 by the three-term
// recurrence C_0 = 1, C_1 = 2 lambda t,
//   k C_k = 2(k-1+lambda) t C_{k-1} - (k-2+2 lambda) C_{k-2}.
// Requires t in [-1,1].
double gegenbauer(const SphereParams& p, int l, double t);

// All of C_0(t) .. C_lmax(t) in a single recurrence pass.
std::vector<double> gegenbauer_all(const SphereParams& p, int lmax, double t);

// ((lambda+l)/lambda) * C_l(1) / N(n,l).  Identically 1; exported as a
// self-test of the dimension and endpoint-value bookkeeping.
double kernel_bound_identity(const SphereParams& p, int l);

// Total mass of the Gegenbauer weight, int_{-1}^{1} (1-t^2)^{lambda-1/2} dt,
// by the exact reduction I_nu = 2nu/(2nu+1) I_{nu-1}.
double weight_mass(const SphereParams& p);

// Squared norm h_l = int_{-1}^{1} C_l(t)^2 (1-t^2)^{lambda-1/2} dt.
double gegenbauer_norm2(const SphereParams& p, int l);

// Gauss rule for the weight (1-t^2)^{lambda-1/2} on (-1,1): node_count
// nodes, exact for polynomials of degree <= 2*node_count - 1.  Nodes are
// strictly increasing; weights are positive and sum to weight_mass.
class QuadratureRule {
public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights, double lambda);

  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double lambda() const noexcept { return lambda_; }

  template <typename F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (int i = 0; i < size(); ++i) acc += weights_[i] * f(nodes_[i]);
    return acc;
  }

private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  double lambda_;
};

// Builds the rule by Newton iteration on the orthonormal recurrence with
// Christoffel-function weights (see the note in harmonics.cpp).  Throws
// convergence_error, with the node index, if a root search fails.
QuadratureRule gauss_gegenbauer(const SphereParams& p, int node_count);

} // namespace polwav

#endif
