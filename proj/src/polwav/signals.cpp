#include "polwav/signals.hpp"

#include <cmath>
#include <stdexcept>

#include "polwav/errors.hpp"

namespace polwav {

ZonalProfile::ZonalProfile(const SphereParams& p, std::vector<double> coeffs,
                           Provenance prov, double ingest_residual)
    : params_(p), coeffs_(std::move(coeffs)), provenance_(prov),
      ingest_residual_(ingest_residual) {
  if (coeffs_.empty()) throw std::invalid_argument("ZonalProfile: empty coefficient list");
  for (double b : coeffs_) {
    if (!std::isfinite(b)) throw std::invalid_argument("ZonalProfile: non-finite coefficient");
  }
}

ZonalProfile ingest_profile(const SphereParams& p, const std::function<double(double)>& f,
                            int lmax, int node_count) {
  if (lmax < 0) throw std::invalid_argument("ingest_profile: lmax must be >= 0");
  if (node_count < lmax + 1) {
    throw std::invalid_argument("ingest_profile: need at least lmax+1 quadrature nodes");
  }
  const double lam = p.lambda();
  const auto rule = gauss_gegenbauer(p, node_count);

  std::vector<double> fvals(static_cast<std::size_t>(node_count));
  for (int i = 0; i < node_count; ++i) fvals[static_cast<std::size_t>(i)] = f(rule.nodes()[i]);

  // projections <f, C_l> against the Gegenbauer weight, one recurrence pass
  // per node
  std::vector<double> proj(static_cast<std::size_t>(lmax) + 1, 0.0);
  for (int i = 0; i < node_count; ++i) {
    const auto c = gegenbauer_all(p, lmax, rule.nodes()[i]);
    const double wf = rule.weights()[i] * fvals[static_cast<std::size_t>(i)];
    for (int l = 0; l <= lmax; ++l) proj[static_cast<std::size_t>(l)] += wf * c[static_cast<std::size_t>(l)];
  }

  std::vector<double> coeffs(static_cast<std::size_t>(lmax) + 1);
  for (int l = 0; l <= lmax; ++l) {
    coeffs[static_cast<std::size_t>(l)] =
        proj[static_cast<std::size_t>(l)] * lam / ((lam + l) * gegenbauer_norm2(p, l));
  }

  // re-synthesis residual at the nodes
  double residual = 0.0;
  for (int i = 0; i < node_count; ++i) {
    const auto c = gegenbauer_all(p, lmax, rule.nodes()[i]);
    double synth = 0.0;
    for (int l = 0; l <= lmax; ++l) {
      synth += coeffs[static_cast<std::size_t>(l)] * (lam + l) / lam * c[static_cast<std::size_t>(l)];
    }
    residual = std::max(residual, std::abs(synth - fvals[static_cast<std::size_t>(i)]));
  }

  return ZonalProfile(p, std::move(coeffs), ZonalProfile::Provenance::ingested, residual);
}

double evaluate_profile(const ZonalProfile& z, double t) {
  if (!(t >= -1.0 && t <= 1.0)) {
    throw std::invalid_argument("evaluate_profile: t must lie in [-1,1]");
  }
  const double lam = z.params().lambda();
  const auto c = gegenbauer_all(z.params(), z.bandlimit(), t);
  double acc = 0.0;
  for (int l = 0; l <= z.bandlimit(); ++l) {
    acc += z.coefficients()[static_cast<std::size_t>(l)] * (lam + l) / lam *
           c[static_cast<std::size_t>(l)];
  }
  return acc;
}

std::vector<std::string> builtin_profile_names() {
  return {"const", "exp", "abs", "cos<k>"};
}

namespace {

// "cos<k>" -> k, or 0 when the name is not of that form
int parse_cos_index(const std::string& name) {
  if (name.size() < 4 || name.compare(0, 3, "cos") != 0) return 0;
  int k = 0;
  for (std::size_t i = 3; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return 0;
    k = 10 * k + (name[i] - '0');
    if (k > 1000) return 0;
  }
  return k;
}

} // namespace

ZonalProfile builtin_profile(const SphereParams& p, const std::string& name, int lmax) {
  if (lmax < 0) throw std::invalid_argument("builtin_profile: lmax must be >= 0");
  const int nodes = 2 * (lmax + 1);
  if (name == "const") {
    std::vector<double> coeffs(static_cast<std::size_t>(lmax) + 1, 0.0);
    coeffs[0] = 1.0;
    return ZonalProfile(p, std::move(coeffs), ZonalProfile::Provenance::analytic);
  }
  if (name == "exp") {
    return ingest_profile(p, [](double t) { return std::exp(t); }, lmax, nodes);
  }
  if (name == "abs") {
    return ingest_profile(p, [](double t) { return std::abs(t); }, lmax, nodes);
  }
  if (const int k = parse_cos_index(name); k > 0) {
    return ingest_profile(p, [k](double t) { return std::cos(k * M_PI * t); }, lmax, nodes);
  }
  std::string msg = "builtin_profile: unknown profile \"" + name + "\"; available:";
  for (const auto& n : builtin_profile_names()) msg += " " + n;
  throw unknown_profile_error(msg);
}

SpectralSignal profile_signal(const ZonalProfile& z) {
  const double lam = z.params().lambda();
  SpectralSignal f(z.params(), z.bandlimit());
  for (int l = 0; l <= z.bandlimit(); ++l) {
    const double mass = z.coefficients()[static_cast<std::size_t>(l)] * (lam + l) / lam *
                        std::sqrt(gegenbauer_norm2(z.params(), l));
    f.block(l)[0] = mass;
  }
  return f;
}

double sup_error(const ZonalProfile& z, const ScaleWindow& w, int grid) {
  if (grid < 256) throw std::invalid_argument("sup_error: grid must be >= 256");
  const auto weights = partial_weights(w, z.bandlimit());
  const double lam = z.params().lambda();
  double worst = 0.0;
  for (int j = 0; j < grid; ++j) {
    // Chebyshev points of the second kind; the endpoints, where zonal sums
    // peak, are included
    const double t = std::cos(M_PI * j / (grid - 1));
    const auto c = gegenbauer_all(z.params(), z.bandlimit(), t);
    double diff = 0.0;
    for (int l = 0; l <= z.bandlimit(); ++l) {
      diff += z.coefficients()[static_cast<std::size_t>(l)] *
              (1.0 - weights[static_cast<std::size_t>(l)]) * (lam + l) / lam *
              c[static_cast<std::size_t>(l)];
    }
    worst = std::max(worst, std::abs(diff));
  }
  return worst;
}

} // namespace polwav
