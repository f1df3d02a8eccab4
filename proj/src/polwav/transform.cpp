#include "polwav/transform.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "polwav/errors.hpp"

namespace polwav {

ScaleWindow::ScaleWindow(double R) : r_(R) {
  if (!(R > 0.0 && R <= 0.5)) {
    throw std::invalid_argument("ScaleWindow: cutoff must lie in (0, 1/2], got " +
                                std::to_string(R));
  }
}

SpectralSignal::SpectralSignal(const SphereParams& p, int bandlimit) : params_(p) {
  if (bandlimit < 0) throw std::invalid_argument("SpectralSignal: bandlimit must be >= 0");
  blocks_.resize(static_cast<std::size_t>(bandlimit) + 1);
  for (int l = 0; l <= bandlimit; ++l) {
    blocks_[static_cast<std::size_t>(l)].resize(dim_harmonics(p, l));
  }
}

namespace {

// (0,1] uniform from the top 53 bits
double unit_double(std::mt19937_64& eng) {
  return static_cast<double>((eng() >> 11) + 1) * 0x1p-53;
}

class GaussianSource {
public:
  explicit GaussianSource(std::uint64_t seed) : eng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = unit_double(eng_);
    const double u2 = unit_double(eng_);
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

} // namespace

SpectralSignal SpectralSignal::random(const SphereParams& p, int bandlimit,
                                      std::uint64_t seed) {
  SpectralSignal f(p, bandlimit);
  GaussianSource gauss(seed);
  for (int l = 0; l <= bandlimit; ++l) {
    for (auto& c : f.block(l)) {
      const double re = gauss.next();
      const double im = gauss.next();
      c = {re, im};
    }
  }
  return f;
}

std::vector<std::complex<double>>& SpectralSignal::block(int l) {
  if (l < 0 || l > bandlimit()) throw std::out_of_range("SpectralSignal: degree out of range");
  return blocks_[static_cast<std::size_t>(l)];
}

const std::vector<std::complex<double>>& SpectralSignal::block(int l) const {
  if (l < 0 || l > bandlimit()) throw std::out_of_range("SpectralSignal: degree out of range");
  return blocks_[static_cast<std::size_t>(l)];
}

double SpectralSignal::block_norm2(int l) const {
  double acc = 0.0;
  for (const auto& c : block(l)) acc += std::norm(c);
  return acc;
}

double SpectralSignal::norm() const {
  double acc = 0.0;
  for (int l = 0; l <= bandlimit(); ++l) acc += block_norm2(l);
  return std::sqrt(acc);
}

namespace {

void require_compatible(const SpectralSignal& f, const SpectralSignal& g,
                        const char* caller) {
  if (f.params().n() != g.params().n()) {
    throw mismatch_error(std::string(caller) + ": signals live on different spheres");
  }
  if (f.bandlimit() != g.bandlimit()) {
    throw mismatch_error(std::string(caller) + ": bandlimits differ (" +
                         std::to_string(f.bandlimit()) + " vs " +
                         std::to_string(g.bandlimit()) + ")");
  }
}

std::complex<double> block_inner(const std::vector<std::complex<double>>& a,
                                 const std::vector<std::complex<double>>& b) {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

} // namespace

std::complex<double> inner_product(const SpectralSignal& f, const SpectralSignal& g) {
  require_compatible(f, g, "inner_product");
  std::complex<double> acc{0.0, 0.0};
  for (int l = 0; l <= f.bandlimit(); ++l) acc += block_inner(f.block(l), g.block(l));
  return acc;
}

SpectralSignal analyze(const SpectralSignal& f, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("analyze: scale must be > 0");
  SpectralSignal out(f.params(), f.bandlimit());
  for (int l = 0; l <= f.bandlimit(); ++l) {
    const double mult = std::sqrt(rho * scale_profile(l, rho));
    if (mult == 0.0) continue;
    const auto& src = f.block(l);
    auto& dst = out.block(l);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = mult * src[i];
  }
  return out;
}

WaveletField analyze_field(const SpectralSignal& f, const std::vector<double>& scales) {
  WaveletField field;
  field.scales = scales;
  field.slices.reserve(scales.size());
  for (double rho : scales) field.slices.push_back(analyze(f, rho));
  return field;
}

double scale_integral(int l, const ScaleWindow& w) {
  // supp gamma_l is contained in (0,2] and 1/R >= 2, so the window integral
  // equals the full tail from R.
  return scale_profile_tail(l, w.R());
}

std::vector<double> partial_weights(const ScaleWindow& w, int lmax) {
  if (lmax < 0) throw std::invalid_argument("partial_weights: lmax must be >= 0");
  const double R = w.R();
  std::vector<double> weights(static_cast<std::size_t>(lmax) + 1);
  for (int l = 0; l <= lmax; ++l) weights[static_cast<std::size_t>(l)] = scale_integral(l, w);

  // re-verify the three-regime structure of the list; the band index is the
  // first degree past its pure ramp regime, found with the same comparison
  // scale_profile_tail branches on (lmax+1 when every tracked degree ramps)
  int L = lmax + 1;
  for (int l = 0; l <= lmax; ++l) {
    if (R > 1.0 / (l + 1)) {
      L = l;
      break;
    }
  }
  for (int l = 0; l <= lmax; ++l) {
    const double wl = weights[static_cast<std::size_t>(l)];
    bool ok;
    if (l < L) {
      ok = wl == std::pow(1.0 - R, l);
    } else if (l == L) {
      ok = wl >= 0.0 && wl <= std::pow(1.0 - R, l) * (1.0 + 1e-12);
    } else {
      ok = wl == 0.0;
    }
    if (!ok) {
      throw std::logic_error("partial_weights: weight structure violated at degree " +
                             std::to_string(l));
    }
  }
  return weights;
}

SpectralSignal synthesize(const SpectralSignal& f, const ScaleWindow& w) {
  const auto weights = partial_weights(w, f.bandlimit());
  SpectralSignal out(f.params(), f.bandlimit());
  for (int l = 0; l <= f.bandlimit(); ++l) {
    const double wl = weights[static_cast<std::size_t>(l)];
    if (wl == 0.0) continue;
    const auto& src = f.block(l);
    auto& dst = out.block(l);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = wl * src[i];
  }
  return out;
}

double l2_residual(const SpectralSignal& f, const ScaleWindow& w) {
  double acc = 0.0;
  for (int l = 0; l <= f.bandlimit(); ++l) {
    const double defect = 1.0 - scale_integral(l, w);
    acc += defect * defect * f.block_norm2(l);
  }
  return std::sqrt(acc);
}

double isometry_defect(const SpectralSignal& f, const SpectralSignal& g,
                       const ScaleWindow& w) {
  require_compatible(f, g, "isometry_defect");
  std::complex<double> full{0.0, 0.0};
  std::complex<double> windowed{0.0, 0.0};
  for (int l = 0; l <= f.bandlimit(); ++l) {
    const auto ip = block_inner(f.block(l), g.block(l));
    full += ip;
    windowed += scale_integral(l, w) * ip;
  }
  return std::abs(full - windowed);
}

// ---------------------------------------------------------------------------
// legacy probe
// ---------------------------------------------------------------------------

namespace {

struct TailKernel {
  const SphereParams* params;
  std::vector<double> coeffs;  // tail_l(R) * (lambda+l)/lambda

  double operator()(double t) const {
    const auto c = gegenbauer_all(*params, static_cast<int>(coeffs.size()) - 1, t);
    double acc = 0.0;
    for (std::size_t l = 0; l < coeffs.size(); ++l) acc += coeffs[l] * c[l];
    return acc;
  }
};

double bisect_root(const TailKernel& k, double a, double b, double fa) {
  for (int iter = 0; iter < 200; ++iter) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b) return m;
    const double fm = k(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> kernel_roots(const TailKernel& k, int degree) {
  std::vector<double> roots;
  if (degree == 0) return roots;
  const int samples = std::max(64, 8 * (degree + 2));
  double prev_t = -1.0;
  double prev_v = k(prev_t);
  for (int j = 1; j <= samples; ++j) {
    const double t = -std::cos(M_PI * j / samples);
    const double v = k(t);
    if (prev_v == 0.0) {
      roots.push_back(prev_t);
    } else if ((prev_v < 0.0) != (v < 0.0) && v != 0.0) {
      roots.push_back(bisect_root(k, prev_t, t, prev_v));
    }
    prev_t = t;
    prev_v = v;
  }
  return roots;
}

// One sign-constant piece of int K(t) (1-t^2)^mu dt.  Pieces touching an
// endpoint are mapped by t = +-(1 - span s^2), which turns the weight factor
// at that endpoint into the polynomial s^{n-2}; the remaining factor is
// smooth on the piece.  Refines the node count until two successive
// estimates agree.
double piece_integral(const TailKernel& k, double mu, double a, double b, double tol) {
  const bool at_left = a <= -1.0;
  const bool at_right = b >= 1.0;
  const SphereParams circle(2);  // Gauss-Legendre carrier

  auto plain = [&](double t) { return k(t) * std::pow(1.0 - t * t, mu); };

  auto eval_with = [&](int m) {
    const QuadratureRule rule = gauss_gegenbauer(circle, m);
    double acc = 0.0;
    if (at_left && !at_right) {
      const double span = b - a;  // a = -1
      for (int i = 0; i < rule.size(); ++i) {
        const double s = 0.5 * (rule.nodes()[i] + 1.0);
        const double t = -1.0 + span * s * s;
        const double val = k(t) * std::pow(s * s * span, mu) * std::pow(1.0 - t, mu) *
                           2.0 * span * s;
        acc += 0.5 * rule.weights()[i] * val;
      }
      return acc;
    }
    if (at_right && !at_left) {
      const double span = b - a;  // b = 1
      for (int i = 0; i < rule.size(); ++i) {
        const double s = 0.5 * (rule.nodes()[i] + 1.0);
        const double t = 1.0 - span * s * s;
        const double val = k(t) * std::pow(s * s * span, mu) * std::pow(1.0 + t, mu) *
                           2.0 * span * s;
        acc += 0.5 * rule.weights()[i] * val;
      }
      return acc;
    }
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < rule.size(); ++i) {
      acc += half * rule.weights()[i] * plain(mid + half * rule.nodes()[i]);
    }
    return acc;
  };

  if (at_left && at_right) {
    const double m = 0.0;
    return piece_integral(k, mu, a, m, tol) + piece_integral(k, mu, m, b, tol);
  }

  double prev = eval_with(16);
  for (int m = 32; m <= 2048; m *= 2) {
    const double cur = eval_with(m);
    if (std::abs(cur - prev) <= tol * (b - a) + tol * std::abs(cur)) return cur;
    prev = cur;
  }
  throw convergence_error("legacy_admissibility: piece integral on [" + std::to_string(a) +
                          ", " + std::to_string(b) + "] did not stabilize");
}

} // namespace

double legacy_admissibility(const SphereParams& p, double R, int lmax) {
  if (!(R > 0.0)) throw std::invalid_argument("legacy_admissibility: cutoff must be > 0");
  if (lmax < 0) throw std::invalid_argument("legacy_admissibility: lmax must be >= 0");
  const auto reachable = polynomial_degree(R);
  if (!reachable) return 0.0;  // every tail vanishes past R = 2
  if (lmax < *reachable) {
    throw std::invalid_argument("legacy_admissibility: lmax = " + std::to_string(lmax) +
                                " is below the reachable degree " +
                                std::to_string(*reachable) + " at this cutoff");
  }

  TailKernel kernel;
  kernel.params = &p;
  const double lam = p.lambda();
  kernel.coeffs.resize(static_cast<std::size_t>(*reachable) + 1);
  bool all_zero = true;
  for (int l = 0; l <= *reachable; ++l) {
    const double tail = scale_profile_tail(l, R);
    kernel.coeffs[static_cast<std::size_t>(l)] = tail * (lam + l) / lam;
    if (tail != 0.0) all_zero = false;
  }
  if (all_zero) return 0.0;

  const double mu = lam - 0.5;
  auto roots = kernel_roots(kernel, *reachable);
  std::vector<double> edges{-1.0};
  for (double r : roots) {
    if (r > edges.back() + 1e-14 && r < 1.0 - 1e-14) edges.push_back(r);
  }
  edges.push_back(1.0);

  // roundoff floor of one kernel evaluation scales with the triangle bound
  // sum coeff_l * C_l(1); near-cancelling pieces cannot stabilize below it
  double kernel_scale = 0.0;
  for (int l = 0; l <= *reachable; ++l) {
    kernel_scale += kernel.coeffs[static_cast<std::size_t>(l)] *
                    static_cast<double>(gegenbauer_at_one(p, l));
  }

  double total = 0.0;
  const double tol = 1e-12 * std::max(1.0, kernel_scale);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    total += std::abs(piece_integral(kernel, mu, edges[i], edges[i + 1], tol));
  }
  return total;
}

} // namespace polwav
