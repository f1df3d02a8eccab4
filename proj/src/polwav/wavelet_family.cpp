#include "polwav/wavelet_family.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "polwav/errors.hpp"

namespace polwav {

double plateau_constant(int l) {
  if (l < 1) throw std::invalid_argument("plateau_constant: degree must be >= 1");
  const double ld = static_cast<double>(l);
  if (l <= 30) return std::pow(ld, l + 1) / std::pow(ld + 1.0, l - 1);
  return ld * ld * std::exp(-(l - 1) * std::log1p(1.0 / ld));
}

double scale_profile(int l, double rho) {
  if (l < 0) throw std::invalid_argument("scale_profile: degree must be >= 0");
  if (!(rho > 0.0)) throw std::invalid_argument("scale_profile: scale must be > 0");
  if (l == 0) return (rho >= 1.0 && rho <= 2.0) ? 1.0 : 0.0;
  const double inv_l = 1.0 / l;
  if (rho >= inv_l) return 0.0;
  if (rho >= 1.0 / (l + 1)) return plateau_constant(l);
  return l * std::pow(1.0 - rho, l - 1);
}

double scale_profile_tail(int l, double R) {
  if (l < 0) throw std::invalid_argument("scale_profile_tail: degree must be >= 0");
  if (!(R >= 0.0)) throw std::invalid_argument("scale_profile_tail: cutoff must be >= 0");
  if (l == 0) {
    if (R <= 1.0) return 1.0;
    if (R <= 2.0) return 2.0 - R;
    return 0.0;
  }
  const double inv_l = 1.0 / l;
  if (R >= inv_l) return 0.0;
  if (R > 1.0 / (l + 1)) return plateau_constant(l) * (inv_l - R);
  return std::pow(1.0 - R, l);
}

namespace {

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) {
    throw convergence_error("adaptive_simpson: depth exhausted on [" +
                            std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate_smooth(const F& f, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  // endpoint samples just inside the panel: the profile is smooth on the
  // open piece but may jump at the cuts themselves
  const double fa = f(std::nextafter(a, b));
  const double fb = f(std::nextafter(b, a));
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

} // namespace

double scale_profile_integral_numeric(int l, double lo, double hi, double tol) {
  if (l < 0) throw std::invalid_argument("scale_profile_integral_numeric: degree must be >= 0");
  if (!(lo >= 0.0) || !(hi >= lo)) {
    throw std::invalid_argument("scale_profile_integral_numeric: bad interval");
  }
  // breakpoints of gamma_l inside [lo, hi]
  std::vector<double> cuts{lo};
  const double b1 = (l == 0) ? 1.0 : 1.0 / (l + 1);
  const double b2 = (l == 0) ? 2.0 : 1.0 / l;
  if (b1 > lo && b1 < hi) cuts.push_back(b1);
  if (b2 > lo && b2 < hi) cuts.push_back(b2);
  cuts.push_back(hi);

  auto f = [l](double rho) { return rho > 0.0 ? scale_profile(l, rho) : 0.0; };
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    acc += integrate_smooth(f, cuts[i], cuts[i + 1], tol / static_cast<double>(cuts.size()));
  }
  return acc;
}

double wavelet_coefficient(const SphereParams& p, int l, double rho) {
  const double g = scale_profile(l, rho);
  if (g == 0.0) return 0.0;
  return std::sqrt(rho * static_cast<double>(dim_harmonics(p, l)) * g);
}

std::optional<int> polynomial_degree(double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("polynomial_degree: scale must be > 0");
  if (rho > 2.0) return std::nullopt;
  if (rho >= 1.0) return 0;
  if (rho < 0x1p-30) {
    throw std::overflow_error("polynomial_degree: degree exceeds the integer range");
  }
  // largest l with gamma_l(rho) > 0, i.e. with rho < 1/l
  int l = static_cast<int>(std::floor(1.0 / rho));
  while (l >= 1 && rho >= 1.0 / l) --l;
  return l;
}

WaveletSymbol::WaveletSymbol(double rho, std::vector<std::pair<int, double>> entries)
    : rho_(rho), entries_(std::move(entries)) {}

double WaveletSymbol::sigma(int l) const noexcept {
  for (const auto& [deg, val] : entries_) {
    if (deg == l) return val;
    if (deg > l) break;
  }
  return 0.0;
}

WaveletSymbol make_symbol(const SphereParams& p, double rho, int lmax) {
  (void)p;
  if (lmax < 0) throw std::invalid_argument("make_symbol: lmax must be >= 0");
  const auto degree = polynomial_degree(rho);
  std::vector<std::pair<int, double>> entries;
  if (degree) {
    const int top = std::min(lmax, *degree);
    for (int l = 0; l <= top; ++l) {
      const double sigma = rho * scale_profile(l, rho);
      if (sigma > 0.0) entries.emplace_back(l, sigma);
    }
  }
  return WaveletSymbol(rho, std::move(entries));
}

double evaluate_kernel(const SphereParams& p, const WaveletSymbol& s, double t,
                       KernelMode mode) {
  if (!(t >= -1.0 && t <= 1.0)) {
    throw std::invalid_argument("evaluate_kernel: t must lie in [-1,1]");
  }
  if (s.empty()) return 0.0;
  const double lam = p.lambda();
  const auto c = gegenbauer_all(p, s.max_degree(), t);
  double acc = 0.0;
  for (const auto& [l, sigma] : s.entries()) {
    const double coeff = (mode == KernelMode::wavelet) ? std::sqrt(sigma) : sigma;
    acc += coeff * (lam + l) / lam * c[static_cast<std::size_t>(l)];
  }
  return acc;
}

} // namespace polwav
