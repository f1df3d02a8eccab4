// polwav command-line front end.  Every computation goes through the C API
// in polwav.h; output is CSV (UTF-8, LF, full round-trip precision) to
// --out or stdout.  Exit codes: 0 success, 2 usage/config error,
// 3 numerical failure.

#include <polwav.h>

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(polwav_status st) {
  switch (st) {
    case POLWAV_NO_CONVERGENCE:
    case POLWAV_INTERNAL:
      return 3;
    default:
      return 2;
  }
}

void check(polwav_status st, const char* what) {
  if (st == POLWAV_OK) return;
  std::string msg = std::string(what) + ": " + polwav_status_name(st);
  const char* detail = polwav_last_error();
  if (detail && detail[0] != '\0') msg += std::string(": ") + detail;
  throw CliError{exit_code_for(st), msg};
}

struct RunConfig {
  int n = 2;
  int lmax = 64;
  double rho = 0.5;
  std::string profile = "exp";
  std::vector<double> R_list;
  int grid = 512;
  std::uint64_t seed = 0;
  double ingest_tol = 1e-9;
  std::string out;
};

using SphereHandle = std::unique_ptr<polwav_sphere, decltype(&polwav_sphere_destroy)>;
using SymbolHandle = std::unique_ptr<polwav_symbol, decltype(&polwav_symbol_destroy)>;
using SignalHandle = std::unique_ptr<polwav_signal, decltype(&polwav_signal_destroy)>;
using ProfileHandle = std::unique_ptr<polwav_profile, decltype(&polwav_profile_destroy)>;

SphereHandle make_sphere(int n) {
  polwav_sphere* raw = nullptr;
  check(polwav_sphere_create(n, &raw), "sphere");
  return SphereHandle(raw, &polwav_sphere_destroy);
}

class CsvWriter {
public:
  explicit CsvWriter(std::string header) { buffer_ = std::move(header) + "\n"; }

  void field(double v) {
    char tmp[40];
    std::snprintf(tmp, sizeof(tmp), "%.17g", v);
    append(tmp);
  }
  void field(int v) {
    char tmp[16];
    std::snprintf(tmp, sizeof(tmp), "%d", v);
    append(tmp);
  }
  void end_row() {
    buffer_ += '\n';
    row_open_ = false;
  }

  void write_to(const std::string& path) const {
    if (path.empty()) {
      std::fwrite(buffer_.data(), 1, buffer_.size(), stdout);
      return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw CliError{2, "cannot open output file: " + path};
    os.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  }

private:
  void append(const char* text) {
    if (row_open_) buffer_ += ',';
    buffer_ += text;
    row_open_ = true;
  }

  std::string buffer_;
  bool row_open_ = false;
};

void require_scales(const RunConfig& cfg) {
  if (cfg.R_list.empty()) throw CliError{2, "at least one --R value is required"};
}

// --- kernel: wavelet and reconstruction-kernel samples for one scale -----

void run_kernel(const RunConfig& cfg) {
  if (cfg.grid < 2) throw CliError{2, "--grid must be >= 2"};
  auto sphere = make_sphere(cfg.n);

  int degree = -1;
  check(polwav_polynomial_degree(cfg.rho, &degree), "kernel");
  if (degree > 200000) {
    throw CliError{2, "scale too small: wavelet degree " + std::to_string(degree)};
  }

  polwav_symbol* raw = nullptr;
  check(polwav_symbol_create(sphere.get(), cfg.rho, degree < 0 ? 0 : degree, &raw),
        "kernel");
  SymbolHandle symbol(raw, &polwav_symbol_destroy);

  CsvWriter csv("rho,n,degree,t,psi,kernel");
  for (int j = 0; j < cfg.grid; ++j) {
    const double t = -1.0 + 2.0 * j / (cfg.grid - 1);
    double psi = 0.0, kernel = 0.0;
    check(polwav_kernel_evaluate(sphere.get(), symbol.get(), t, POLWAV_KERNEL_WAVELET, &psi),
          "kernel");
    check(polwav_kernel_evaluate(sphere.get(), symbol.get(), t,
                                 POLWAV_KERNEL_RECONSTRUCTION, &kernel),
          "kernel");
    csv.field(cfg.rho);
    csv.field(cfg.n);
    csv.field(degree);
    csv.field(t);
    csv.field(psi);
    csv.field(kernel);
    csv.end_row();
  }
  csv.write_to(cfg.out);
}

// --- admissibility: closed-form vs numeric scale integrals ---------------

void run_admissibility(const RunConfig& cfg) {
  if (cfg.lmax < 0) throw CliError{2, "--lmax must be >= 0"};
  CsvWriter csv("l,closed_form,quadrature,abs_diff");
  for (int l = 0; l <= cfg.lmax; ++l) {
    double closed = 0.0, quad = 0.0;
    check(polwav_scale_profile_tail(l, 0.0, &closed), "admissibility");
    check(polwav_scale_profile_integral(l, 0.0, 2.0, 1e-12, &quad), "admissibility");
    csv.field(l);
    csv.field(closed);
    csv.field(quad);
    csv.field(std::abs(closed - quad));
    csv.end_row();
  }
  csv.write_to(cfg.out);
}

// --- reconstruct: sup and L2 reconstruction errors over a scale sweep ----

void run_reconstruct(const RunConfig& cfg) {
  require_scales(cfg);
  auto sphere = make_sphere(cfg.n);

  polwav_profile* praw = nullptr;
  check(polwav_profile_builtin(sphere.get(), cfg.profile.c_str(), cfg.lmax, &praw),
        "reconstruct");
  ProfileHandle profile(praw, &polwav_profile_destroy);

  double residual = 0.0;
  check(polwav_profile_ingest_residual(profile.get(), &residual), "reconstruct");
  if (residual > cfg.ingest_tol) {
    std::fprintf(stderr,
                 "warning: profile \"%s\" ingest residual %.6e above tolerance %.6e\n",
                 cfg.profile.c_str(), residual, cfg.ingest_tol);
  }

  polwav_signal* sraw = nullptr;
  check(polwav_profile_signal(profile.get(), &sraw), "reconstruct");
  SignalHandle signal(sraw, &polwav_signal_destroy);

  CsvWriter csv("R,sup_error,l2_residual");
  for (double R : cfg.R_list) {
    double sup = 0.0, l2 = 0.0;
    check(polwav_sup_error(profile.get(), R, cfg.grid, &sup), "reconstruct");
    check(polwav_l2_residual(signal.get(), R, &l2), "reconstruct");
    csv.field(R);
    csv.field(sup);
    csv.field(l2);
    csv.end_row();
  }
  csv.write_to(cfg.out);
}

// --- isometry: phase-space inner-product defect for random signals -------

void run_isometry(const RunConfig& cfg) {
  require_scales(cfg);
  auto sphere = make_sphere(cfg.n);

  CsvWriter csv("R,defect_ratio");
  for (std::size_t i = 0; i < cfg.R_list.size(); ++i) {
    const std::uint64_t base = cfg.seed * 0x9E3779B97F4A7C15ULL + 2 * i;
    polwav_signal *fraw = nullptr, *graw = nullptr;
    check(polwav_signal_random(sphere.get(), cfg.lmax, base + 1, &fraw), "isometry");
    SignalHandle f(fraw, &polwav_signal_destroy);
    check(polwav_signal_random(sphere.get(), cfg.lmax, base + 2, &graw), "isometry");
    SignalHandle g(graw, &polwav_signal_destroy);

    double defect = 0.0, nf = 0.0, ng = 0.0;
    check(polwav_isometry_defect(f.get(), g.get(), cfg.R_list[i], &defect), "isometry");
    check(polwav_signal_norm(f.get(), &nf), "isometry");
    check(polwav_signal_norm(g.get(), &ng), "isometry");

    csv.field(cfg.R_list[i]);
    csv.field(defect / (nf * ng));
    csv.end_row();
  }
  csv.write_to(cfg.out);
}

// --- legacy: weighted L1 norm of the tail kernel -------------------------

void run_legacy(const RunConfig& cfg) {
  require_scales(cfg);
  auto sphere = make_sphere(cfg.n);

  CsvWriter csv("R,legacy_l1");
  for (double R : cfg.R_list) {
    double value = 0.0;
    check(polwav_legacy_admissibility(sphere.get(), R, cfg.lmax, &value), "legacy");
    csv.field(R);
    csv.field(value);
    csv.end_row();
  }
  csv.write_to(cfg.out);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"zonal polynomial wavelets on n-spheres"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--n", cfg.n, "Sphere dimension n >= 2")->capture_default_str();
  app.add_option("--lmax", cfg.lmax, "Maximum harmonic degree")->capture_default_str();
  app.add_option("--rho", cfg.rho, "Wavelet scale (kernel command)")->capture_default_str();
  app.add_option("--profile", cfg.profile, "Zonal test profile name")->capture_default_str();
  app.add_option("--R", cfg.R_list, "Scale cutoff; repeat for a sweep");
  app.add_option("--grid", cfg.grid, "Evaluation grid size")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for random spectral signals")
      ->capture_default_str();
  app.add_option("--ingest-tol", cfg.ingest_tol, "Profile ingestion residual tolerance")
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Output CSV path (stdout when absent)");
  app.set_config("--config", "", "Read options from a config file; flags win");

  auto* kernel = app.add_subcommand("kernel", "Sample the wavelet and its kernel at one scale");
  auto* admissibility =
      app.add_subcommand("admissibility", "Closed-form vs numeric scale integrals");
  auto* reconstruct =
      app.add_subcommand("reconstruct", "Reconstruction error sweep for a test profile");
  auto* isometry = app.add_subcommand("isometry", "Phase-space inner-product defects");
  auto* legacy = app.add_subcommand("legacy", "Weighted L1 norm of the tail kernel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (kernel->parsed()) run_kernel(cfg);
    if (admissibility->parsed()) run_admissibility(cfg);
    if (reconstruct->parsed()) run_reconstruct(cfg);
    if (isometry->parsed()) run_isometry(cfg);
    if (legacy->parsed()) run_legacy(cfg);
  } catch (const CliError& e) {
    std::fprintf(stderr, "polwav: %s\n", e.message.c_str());
    return e.code;
  }
  return 0;
}
