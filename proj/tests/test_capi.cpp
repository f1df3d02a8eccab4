#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <polwav.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

namespace {

struct Sphere {
  polwav_sphere* h = nullptr;
  explicit Sphere(int n) { REQUIRE(polwav_sphere_create(n, &h) == POLWAV_OK); }
  ~Sphere() { polwav_sphere_destroy(h); }
};

} // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(polwav_status_name(POLWAV_OK)) == "ok");
  CHECK(std::string(polwav_status_name(POLWAV_OVERFLOW)) == "integer overflow");
  CHECK(std::string(polwav_status_name(POLWAV_UNKNOWN_PROFILE)) == "unknown profile");
  CHECK(std::strlen(polwav_version()) > 0);
}

TEST_CASE("sphere lifecycle and validation") {
  polwav_sphere* s = nullptr;
  CHECK(polwav_sphere_create(1, &s) == POLWAV_INVALID_ARGUMENT);
  CHECK(std::strlen(polwav_last_error()) > 0);

  // a successful call clears the thread-local failure text
  REQUIRE(polwav_sphere_create(2, &s) == POLWAV_OK);
  CHECK(std::strlen(polwav_last_error()) == 0);
  polwav_sphere_destroy(s);
  s = nullptr;
  CHECK(polwav_sphere_create(-2, &s) == POLWAV_INVALID_ARGUMENT);
  CHECK(polwav_sphere_create(3, nullptr) == POLWAV_NULL_POINTER);

  REQUIRE(polwav_sphere_create(5, &s) == POLWAV_OK);
  int n = 0;
  double lambda = 0.0;
  CHECK(polwav_sphere_n(s, &n) == POLWAV_OK);
  CHECK(n == 5);
  CHECK(polwav_sphere_lambda(s, &lambda) == POLWAV_OK);
  CHECK(lambda == 2.0);
  polwav_sphere_destroy(s);
  polwav_sphere_destroy(nullptr);  // no-op
}

TEST_CASE("harmonics through the C surface") {
  Sphere s2(2), s3(3), s8(8);

  uint64_t dim = 0;
  CHECK(polwav_dim_harmonics(s2.h, 5, &dim) == POLWAV_OK);
  CHECK(dim == 11);
  CHECK(polwav_dim_harmonics(s3.h, 2, &dim) == POLWAV_OK);
  CHECK(dim == 9);
  CHECK(polwav_dim_harmonics(s2.h, -1, &dim) == POLWAV_INVALID_ARGUMENT);
  CHECK(polwav_dim_harmonics(s8.h, 100000, &dim) == POLWAV_OVERFLOW);

  uint64_t one = 0;
  CHECK(polwav_gegenbauer_at_one(s3.h, 3, &one) == POLWAV_OK);
  CHECK(one == 4);

  double val = 0.0;
  CHECK(polwav_gegenbauer(s2.h, 2, 0.5, &val) == POLWAV_OK);
  CHECK(val == doctest::Approx(0.5 * (3 * 0.25 - 1)).epsilon(1e-14));
  CHECK(polwav_gegenbauer(s2.h, 2, 1.5, &val) == POLWAV_INVALID_ARGUMENT);
  const double nan = std::nan("");
  CHECK(polwav_gegenbauer(s2.h, 2, nan, &val) == POLWAV_INVALID_ARGUMENT);

  CHECK(polwav_kernel_bound_identity(s8.h, 123, &val) == POLWAV_OK);
  CHECK(val == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(polwav_weight_mass(s2.h, &val) == POLWAV_OK);
  CHECK(val == 2.0);
}

TEST_CASE("quadrature handles") {
  Sphere s3(3);
  polwav_quadrature* q = nullptr;
  CHECK(polwav_quadrature_create(s3.h, 0, &q) == POLWAV_INVALID_ARGUMENT);
  REQUIRE(polwav_quadrature_create(s3.h, 12, &q) == POLWAV_OK);

  int size = 0;
  CHECK(polwav_quadrature_size(q, &size) == POLWAV_OK);
  REQUIRE(size == 12);

  std::vector<double> nodes(12), weights(12);
  CHECK(polwav_quadrature_nodes(q, nodes.data()) == POLWAV_OK);
  CHECK(polwav_quadrature_weights(q, weights.data()) == POLWAV_OK);
  double mass = 0.0, wsum = 0.0;
  for (int i = 0; i < 12; ++i) {
    if (i > 0) CHECK(nodes[i] > nodes[i - 1]);
    wsum += weights[i];
  }
  CHECK(polwav_weight_mass(s3.h, &mass) == POLWAV_OK);
  CHECK(wsum == doctest::Approx(mass).epsilon(1e-13));
  polwav_quadrature_destroy(q);
}

TEST_CASE("wavelet family through the C surface") {
  Sphere s2(2);
  double val = 0.0;

  CHECK(polwav_scale_profile(2, 0.4, &val) == POLWAV_OK);
  CHECK(val == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
  CHECK(polwav_scale_profile(2, 0.0, &val) == POLWAV_INVALID_ARGUMENT);

  CHECK(polwav_scale_profile_tail(3, 0.1, &val) == POLWAV_OK);
  CHECK(val == doctest::Approx(0.729).epsilon(1e-15));

  CHECK(polwav_scale_profile_integral(3, 0.0, 2.0, 1e-12, &val) == POLWAV_OK);
  CHECK(val == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(polwav_scale_profile_integral(3, 0.0, 2.0, -1.0, &val) == POLWAV_INVALID_ARGUMENT);

  CHECK(polwav_wavelet_coefficient(s2.h, 2, 0.4, &val) == POLWAV_OK);
  CHECK(val == doctest::Approx(std::sqrt(0.4 * 5.0 * 8.0 / 3.0)).epsilon(1e-14));

  int degree = 0;
  CHECK(polwav_polynomial_degree(0.4, &degree) == POLWAV_OK);
  CHECK(degree == 2);
  CHECK(polwav_polynomial_degree(3.0, &degree) == POLWAV_OK);
  CHECK(degree == -1);
  CHECK(polwav_polynomial_degree(0.0, &degree) == POLWAV_INVALID_ARGUMENT);

  polwav_symbol* sym = nullptr;
  REQUIRE(polwav_symbol_create(s2.h, 0.4, 64, &sym) == POLWAV_OK);
  int count = 0;
  CHECK(polwav_symbol_size(sym, &count) == POLWAV_OK);
  REQUIRE(count == 2);
  int deg = 0;
  double sigma = 0.0;
  CHECK(polwav_symbol_entry(sym, 0, &deg, &sigma) == POLWAV_OK);
  CHECK(deg == 1);
  CHECK(sigma == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(polwav_symbol_entry(sym, 1, &deg, &sigma) == POLWAV_OK);
  CHECK(deg == 2);
  CHECK(sigma == doctest::Approx(16.0 / 15.0).epsilon(1e-14));
  CHECK(polwav_symbol_entry(sym, 2, &deg, &sigma) == POLWAV_INVALID_ARGUMENT);

  CHECK(polwav_kernel_evaluate(s2.h, sym, 0.3, POLWAV_KERNEL_RECONSTRUCTION, &val) ==
        POLWAV_OK);
  const double expected = 0.4 * 3.0 * 0.3 + (16.0 / 15.0) * 5.0 * 0.5 * (3 * 0.09 - 1);
  CHECK(val == doctest::Approx(expected).epsilon(1e-13));
  CHECK(polwav_kernel_evaluate(s2.h, sym, 0.3, static_cast<polwav_kernel_mode>(9), &val) ==
        POLWAV_INVALID_ARGUMENT);
  polwav_symbol_destroy(sym);
}

TEST_CASE("signals and transform through the C surface") {
  Sphere s2(2);

  polwav_signal* f = nullptr;
  REQUIRE(polwav_signal_create(s2.h, 4, &f) == POLWAV_OK);
  int bl = 0;
  CHECK(polwav_signal_bandlimit(f, &bl) == POLWAV_OK);
  CHECK(bl == 4);
  uint64_t bs = 0;
  CHECK(polwav_signal_block_size(f, 3, &bs) == POLWAV_OK);
  CHECK(bs == 7);
  CHECK(polwav_signal_block_size(f, 9, &bs) == POLWAV_INVALID_ARGUMENT);

  CHECK(polwav_signal_set(f, 2, 1, 0.6, -1.1) == POLWAV_OK);
  CHECK(polwav_signal_set(f, 2, 99, 1.0, 0.0) == POLWAV_INVALID_ARGUMENT);
  CHECK(polwav_signal_set(f, 2, 0, std::nan(""), 0.0) == POLWAV_INVALID_ARGUMENT);
  double re = 0.0, im = 0.0;
  CHECK(polwav_signal_get(f, 2, 1, &re, &im) == POLWAV_OK);
  CHECK(re == 0.6);
  CHECK(im == -1.1);

  double norm = 0.0;
  CHECK(polwav_signal_norm(f, &norm) == POLWAV_OK);
  CHECK(norm == doctest::Approx(std::hypot(0.6, 1.1)).epsilon(1e-15));

  SUBCASE("analysis multiplies by sqrt(rho gamma_l)") {
    polwav_signal* w = nullptr;
    REQUIRE(polwav_analyze(f, 0.4, &w) == POLWAV_OK);
    CHECK(polwav_signal_get(w, 2, 1, &re, &im) == POLWAV_OK);
    const double mult = std::sqrt(0.4 * 8.0 / 3.0);
    CHECK(re == doctest::Approx(0.6 * mult).epsilon(1e-14));
    CHECK(im == doctest::Approx(-1.1 * mult).epsilon(1e-14));
    polwav_signal_destroy(w);
  }

  SUBCASE("synthesis and residual agree") {
    polwav_signal* g = nullptr;
    REQUIRE(polwav_synthesize(f, 0.3, &g) == POLWAV_OK);
    CHECK(polwav_signal_get(g, 2, 1, &re, &im) == POLWAV_OK);
    CHECK(re == doctest::Approx(0.6 * 0.49).epsilon(1e-14));

    double res = 0.0;
    CHECK(polwav_l2_residual(f, 0.3, &res) == POLWAV_OK);
    CHECK(res == doctest::Approx(norm * (1.0 - 0.49)).epsilon(1e-13));
    CHECK(polwav_l2_residual(f, 0.7, &res) == POLWAV_INVALID_ARGUMENT);
    polwav_signal_destroy(g);
  }

  SUBCASE("isometry defect and mismatch") {
    double defect = 0.0;
    CHECK(polwav_isometry_defect(f, f, 0.3, &defect) == POLWAV_OK);
    CHECK(defect == doctest::Approx(norm * norm * (1.0 - 0.49)).epsilon(1e-13));

    polwav_signal* other = nullptr;
    REQUIRE(polwav_signal_create(s2.h, 5, &other) == POLWAV_OK);
    CHECK(polwav_isometry_defect(f, other, 0.3, &defect) == POLWAV_MISMATCH);
    polwav_signal_destroy(other);
  }

  polwav_signal_destroy(f);
}

TEST_CASE("random signals are reproducible") {
  Sphere s3(3);
  polwav_signal *a = nullptr, *b = nullptr;
  REQUIRE(polwav_signal_random(s3.h, 6, 99, &a) == POLWAV_OK);
  REQUIRE(polwav_signal_random(s3.h, 6, 99, &b) == POLWAV_OK);
  for (int l = 0; l <= 6; ++l) {
    uint64_t size = 0;
    REQUIRE(polwav_signal_block_size(a, l, &size) == POLWAV_OK);
    for (uint64_t m = 0; m < size; ++m) {
      double ra, ia, rb, ib;
      REQUIRE(polwav_signal_get(a, l, m, &ra, &ia) == POLWAV_OK);
      REQUIRE(polwav_signal_get(b, l, m, &rb, &ib) == POLWAV_OK);
      CHECK(ra == rb);
      CHECK(ia == ib);
    }
  }
  polwav_signal_destroy(a);
  polwav_signal_destroy(b);
}

TEST_CASE("scale integrals and weights") {
  double val = 0.0;
  CHECK(polwav_scale_integral(0, 0.25, &val) == POLWAV_OK);
  CHECK(val == 1.0);
  CHECK(polwav_scale_integral(0, 0.75, &val) == POLWAV_INVALID_ARGUMENT);

  std::vector<double> w(9, -1.0);
  CHECK(polwav_partial_weights(0.3, 8, w.data()) == POLWAV_OK);
  CHECK(w[0] == 1.0);
  CHECK(w[1] == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(w[3] == doctest::Approx(0.16875).epsilon(1e-13));
  CHECK(w[4] == 0.0);
}

TEST_CASE("legacy probe through the C surface") {
  Sphere s2(2);
  double val = 0.0;
  CHECK(polwav_legacy_admissibility(s2.h, 1.0, 4, &val) == POLWAV_OK);
  CHECK(val == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(polwav_legacy_admissibility(s2.h, 2.0, 4, &val) == POLWAV_OK);
  CHECK(val == 0.0);
  CHECK(polwav_legacy_admissibility(s2.h, 0.1, 3, &val) == POLWAV_INVALID_ARGUMENT);
}

namespace {
double shifted_exp(double t, void* ctx) { return std::exp(t) + *static_cast<double*>(ctx); }
} // namespace

TEST_CASE("profiles through the C surface") {
  Sphere s2(2);

  polwav_profile* z = nullptr;
  CHECK(polwav_profile_builtin(s2.h, "nope", 16, &z) == POLWAV_UNKNOWN_PROFILE);
  CHECK(std::string(polwav_last_error()).find("available") != std::string::npos);

  const char* const* names = nullptr;
  int count = 0;
  CHECK(polwav_profile_names(&names, &count) == POLWAV_OK);
  REQUIRE(count == 4);
  CHECK(std::string(names[0]) == "const");

  REQUIRE(polwav_profile_builtin(s2.h, "exp", 24, &z) == POLWAV_OK);
  int bl = 0;
  CHECK(polwav_profile_bandlimit(z, &bl) == POLWAV_OK);
  CHECK(bl == 24);

  double b0 = 0.0;
  CHECK(polwav_profile_coefficient(z, 0, &b0) == POLWAV_OK);
  CHECK(b0 == doctest::Approx(std::sinh(1.0)).epsilon(1e-12));
  CHECK(polwav_profile_coefficient(z, 25, &b0) == POLWAV_INVALID_ARGUMENT);

  double residual = -1.0;
  CHECK(polwav_profile_ingest_residual(z, &residual) == POLWAV_OK);
  CHECK(residual >= 0.0);
  CHECK(residual <= 1e-12);

  double val = 0.0;
  CHECK(polwav_profile_evaluate(z, 0.25, &val) == POLWAV_OK);
  CHECK(val == doctest::Approx(std::exp(0.25)).epsilon(1e-10));

  double sup = 0.0;
  CHECK(polwav_sup_error(z, 0.125, 512, &sup) == POLWAV_OK);
  CHECK(sup > 0.0);
  CHECK(polwav_sup_error(z, 0.125, 16, &sup) == POLWAV_INVALID_ARGUMENT);

  polwav_signal* sig = nullptr;
  REQUIRE(polwav_profile_signal(z, &sig) == POLWAV_OK);
  double res = 0.0;
  CHECK(polwav_l2_residual(sig, 0.125, &res) == POLWAV_OK);
  CHECK(res > 0.0);
  polwav_signal_destroy(sig);
  polwav_profile_destroy(z);

  SUBCASE("ingestion with a user callback") {
    double shift = 2.0;
    polwav_profile* zi = nullptr;
    REQUIRE(polwav_profile_ingest(s2.h, &shifted_exp, &shift, 24, 50, &zi) == POLWAV_OK);
    CHECK(polwav_profile_coefficient(zi, 0, &b0) == POLWAV_OK);
    CHECK(b0 == doctest::Approx(std::sinh(1.0) + 2.0).epsilon(1e-12));
    CHECK(polwav_profile_evaluate(zi, -0.4, &val) == POLWAV_OK);
    CHECK(val == doctest::Approx(std::exp(-0.4) + 2.0).epsilon(1e-10));
    polwav_profile_destroy(zi);

    CHECK(polwav_profile_ingest(s2.h, nullptr, nullptr, 24, 50, &zi) ==
          POLWAV_NULL_POINTER);
    CHECK(polwav_profile_ingest(s2.h, &shifted_exp, &shift, 24, 10, &zi) ==
          POLWAV_INVALID_ARGUMENT);
  }
}
