#include "polwav/harmonics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>

#include "polwav/errors.hpp"

namespace polwav {

namespace {

// binom(top, k), exact; the running product binom(top-k+i, i) is an integer
// after every division.  Throws on 64-bit overflow.
std::uint64_t checked_binomial(int top, int k, const char* caller) {
  if (k < 0 || k > top) return 0;
  k = std::min(k, top - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc *= static_cast<unsigned int>(top - k + i);
    acc /= static_cast<unsigned int>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error(std::string(caller) + ": value exceeds 64-bit range");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

} // namespace

SphereParams::SphereParams(int n) : n_(n) {
  if (n < 2) {
    throw std::invalid_argument("SphereParams: sphere dimension must be >= 2, got " +
                                std::to_string(n));
  }
}

std::uint64_t dim_harmonics(const SphereParams& p, int l) {
  if (l < 0) throw std::invalid_argument("dim_harmonics: degree must be >= 0");
  const int n = p.n();
  const std::uint64_t b = checked_binomial(n + l - 2, std::min(l, n - 2), "dim_harmonics");
  unsigned __int128 num = static_cast<unsigned __int128>(b) *
                          static_cast<unsigned int>(n + 2 * l - 1);
  // (n+2l-1) * binom(n+l-2, l) is always divisible by n-1.
  assert(num % static_cast<unsigned int>(n - 1) == 0);
  num /= static_cast<unsigned int>(n - 1);
  if (num > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("dim_harmonics: value exceeds 64-bit range");
  }
  return static_cast<std::uint64_t>(num);
}

std::uint64_t gegenbauer_at_one(const SphereParams& p, int l) {
  if (l < 0) throw std::invalid_argument("gegenbauer_at_one: degree must be >= 0");
  return checked_binomial(p.n() + l - 2, std::min(l, p.n() - 2), "gegenbauer_at_one");
}

double gegenbauer(const SphereParams& p, int l, double t) {
  if (l < 0) throw std::invalid_argument("gegenbauer: degree must be >= 0");
  if (!(t >= -1.0 && t <= 1.0)) {
    throw std::invalid_argument("gegenbauer: t must lie in [-1,1]");
  }
  const double lam = p.lambda();
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * lam * t;
  for (int k = 2; k <= l; ++k) {
    const double next = (2.0 * (k - 1 + lam) * t * cur - (k - 2 + 2.0 * lam) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> gegenbauer_all(const SphereParams& p, int lmax, double t) {
  if (lmax < 0) throw std::invalid_argument("gegenbauer_all: lmax must be >= 0");
  if (!(t >= -1.0 && t <= 1.0)) {
    throw std::invalid_argument("gegenbauer_all: t must lie in [-1,1]");
  }
  const double lam = p.lambda();
  std::vector<double> vals(static_cast<std::size_t>(lmax) + 1);
  vals[0] = 1.0;
  if (lmax >= 1) vals[1] = 2.0 * lam * t;
  for (int k = 2; k <= lmax; ++k) {
    vals[k] = (2.0 * (k - 1 + lam) * t * vals[k - 1] - (k - 2 + 2.0 * lam) * vals[k - 2]) / k;
  }
  return vals;
}

double kernel_bound_identity(const SphereParams& p, int l) {
  const double lam = p.lambda();
  const double c1 = static_cast<double>(gegenbauer_at_one(p, l));
  const double dim = static_cast<double>(dim_harmonics(p, l));
  return (lam + l) / lam * c1 / dim;
}

double weight_mass(const SphereParams& p) {
  // I_mu, mu = lambda - 1/2 = (n-2)/2, via I_nu = 2nu/(2nu+1) I_{nu-1}
  // starting from I_0 = 2 (n even) or I_{1/2} = pi/2 (n odd).
  const int twice_mu = p.n() - 2;
  double val;
  double nu;
  if (twice_mu % 2 == 0) {
    val = 2.0;
    nu = 1.0;
  } else {
    val = M_PI / 2.0;
    nu = 1.5;
  }
  for (; 2.0 * nu <= twice_mu + 0.5; nu += 1.0) val *= 2.0 * nu / (2.0 * nu + 1.0);
  return val;
}

double gegenbauer_norm2(const SphereParams& p, int l) {
  if (l < 0) throw std::invalid_argument("gegenbauer_norm2: degree must be >= 0");
  const double lam = p.lambda();
  // h_l = pi 2^{1-2 lambda} Gamma(l+2 lambda) / (l! (l+lambda) Gamma(lambda)^2)
  const double lg = std::log(M_PI) + (1.0 - 2.0 * lam) * std::log(2.0) +
                    std::lgamma(l + 2.0 * lam) - std::log(l + lam) -
                    2.0 * std::lgamma(lam) - std::lgamma(l + 1.0);
  return std::exp(lg);
}

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights,
                               double lambda)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), lambda_(lambda) {
  if (nodes_.size() != weights_.size()) {
    throw std::invalid_argument("QuadratureRule: node/weight size mismatch");
  }
}

// Node construction.  The orthonormal polynomials q_k for the weight
// (1-t^2)^{lambda-1/2} obey
//
//   q_{k+1} = (t q_k - e_k q_{k-1}) / e_{k+1},   e_k^2 = k(k+n-2) / ((2k+n-1)(2k+n-3)),
//
// and the Gauss nodes are the roots of q_m.  Each root is polished by Newton
// iteration from the usual cosine interlacing guess; the weight at a node is
// the Christoffel value 1 / sum_{k<m} q_k(x)^2.  This avoids ratios of
// half-integer Gamma values entirely.
QuadratureRule gauss_gegenbauer(const SphereParams& p, int node_count) {
  if (node_count < 1) throw std::invalid_argument("gauss_gegenbauer: need at least one node");
  const int m = node_count;
  const double nn = p.n();
  const double mu = p.lambda() - 0.5;
  const double mass = weight_mass(p);

  std::vector<double> e(static_cast<std::size_t>(m) + 1, 0.0);
  for (int k = 1; k <= m; ++k) {
    e[k] = std::sqrt(k * (k + nn - 2.0) / ((2.0 * k + nn - 1.0) * (2.0 * k + nn - 3.0)));
  }
  const double q0 = 1.0 / std::sqrt(mass);

  // value and derivative of q_m plus the Christoffel sum at t
  auto eval = [&](double t, double& qm, double& dqm, double& christoffel) {
    double qp = 0.0, dqp = 0.0;   // q_{k-1}
    double qc = q0, dqc = 0.0;    // q_k
    double sum = qc * qc;
    for (int k = 0; k < m; ++k) {
      const double qn = (t * qc - e[k] * qp) / e[k + 1];
      const double dqn = (qc + t * dqc - e[k] * dqp) / e[k + 1];
      qp = qc;
      dqp = dqc;
      qc = qn;
      dqc = dqn;
      if (k + 1 < m) sum += qc * qc;
    }
    qm = qc;
    dqm = dqc;
    christoffel = sum;
  };

  std::vector<double> nodes(m), weights(m);
  for (int i = 1; i <= m; ++i) {
    double x = std::cos(M_PI * (0.5 * mu + i - 0.25) / (m + mu + 0.5));
    double qm = 0.0, dqm = 0.0, sum = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      eval(x, qm, dqm, sum);
      const double dx = qm / dqm;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * (1.0 + std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw convergence_error("gauss_gegenbauer: Newton iteration failed for node " +
                              std::to_string(i - 1) + " of " + std::to_string(m));
    }
    eval(x, qm, dqm, sum);
    nodes[i - 1] = x;
    weights[i - 1] = 1.0 / sum;
  }

  // guesses walk from +1 down; store ascending
  std::reverse(nodes.begin(), nodes.end());
  std::reverse(weights.begin(), weights.end());
  for (int i = 0; i < m; ++i) {
    if (!(nodes[i] > -1.0 && nodes[i] < 1.0) ||
        (i > 0 && !(nodes[i] > nodes[i - 1]))) {
      throw convergence_error("gauss_gegenbauer: node " + std::to_string(i) +
                              " violates the interlacing order");
    }
  }
  return QuadratureRule(std::move(nodes), std::move(weights), p.lambda());
}

} // namespace polwav
