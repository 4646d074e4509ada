#include <cmath>
#include <cstring>
#include <string>
#include <thread>

#include "aim/aim.h"
#include "doctest.h"

TEST_CASE("rational helpers") {
  char buf[64];
  CHECK(aim_rational_normalize("0.50", buf, sizeof buf) == AIM_OK);
  CHECK(std::string(buf) == "1/2");
  CHECK(aim_rational_normalize("x", buf, sizeof buf) == AIM_E_PARSE);
  CHECK(std::strlen(aim_last_error()) > 0);
  CHECK(aim_rational_normalize("1/3", buf, 2) == AIM_E_INVALID_ARGUMENT);
  CHECK(aim_rational_interpolate("0", "1", 1, 4, buf, sizeof buf) == AIM_OK);
  CHECK(std::string(buf) == "1/3");
  CHECK(aim_rational_interpolate("0", "1", 0, 1, buf, sizeof buf) == AIM_E_INVALID_ARGUMENT);
  double d = 0;
  CHECK(aim_rational_to_double("-3/4", &d) == AIM_OK);
  CHECK(d == -0.75);
}

TEST_CASE("model lifecycle and solve") {
  aim_model* m = nullptr;
  CHECK(aim_model_create("nonsense", &m) == AIM_E_INVALID_ARGUMENT);
  REQUIRE(aim_model_create("jt", &m) == AIM_OK);
  CHECK(aim_model_iterative(m) == 1);
  CHECK(aim_model_set(m, "gamma3", "1") == AIM_E_INVALID_ARGUMENT);
  CHECK(aim_model_set(m, "kappa_sq", "1/4") == AIM_OK);

  int herm = 0, classes = 0;
  CHECK(aim_model_validate(m, &herm, &classes) == AIM_OK);
  CHECK(herm == 1);
  CHECK(classes == 4);

  aim_solve_options o{"0", 14, 1e-6, AIM_DELTA_1};
  aim_spectrum* s = nullptr;
  REQUIRE(aim_solve(m, &o, &s) == AIM_OK);
  CHECK(aim_spectrum_discarded_first_root(s) == 1);
  bool found = false;
  for (size_t i = 0; i < aim_spectrum_level_count(s); ++i) {
    aim_level_info l;
    REQUIRE(aim_spectrum_level(s, i, &l) == AIM_OK);
    if (l.index == 0) {
      found = true;
      CHECK(std::abs(l.energy - 0.7738) <= 1e-3);
      CHECK(l.converged == 1);
      int n = 0;
      double v = 0;
      CHECK(aim_spectrum_history(s, i, l.history_len - 1, &n, &v) == AIM_OK);
      CHECK(n == 14);
      CHECK(v == l.energy);
    }
  }
  CHECK(found);
  aim_level_info l;
  CHECK(aim_spectrum_level(s, 10000, &l) == AIM_E_INVALID_ARGUMENT);
  aim_spectrum_free(s);

  o.n_max = 1;
  CHECK(aim_solve(m, &o, &s) == AIM_E_INVALID_ARGUMENT);
  aim_model_free(m);
}

TEST_CASE("error statuses from the model layer") {
  aim_model* m = nullptr;
  REQUIRE(aim_model_create("jc", &m) == AIM_OK);
  aim_spectrum* s = nullptr;
  CHECK(aim_solve(m, nullptr, &s) == AIM_E_DECOUPLED);
  CHECK(aim_model_set(m, "omega", "0") == AIM_OK);
  CHECK(aim_model_set(m, "kappa", "1") == AIM_OK);
  CHECK(aim_solve(m, nullptr, &s) == AIM_E_ZERO_FREQUENCY);
  aim_model_free(m);

  REQUIRE(aim_model_create("jt", &m) == AIM_OK);
  aim_model_set(m, "omega", "2");
  aim_model_set(m, "kappa", "1");
  CHECK(aim_solve(m, nullptr, &s) == AIM_E_BAD_PATTERN);
  aim_model_free(m);

  REQUIRE(aim_model_create("mjc", &m) == AIM_OK);
  CHECK(aim_model_iterative(m) == 0);
  CHECK(aim_solve(m, nullptr, &s) == AIM_E_INVALID_ARGUMENT);
  aim_model_free(m);

  REQUIRE(aim_model_create("custom", &m) == AIM_OK);
  aim_model_set(m, "omega1", "1");
  aim_model_set(m, "omega2", "1");
  aim_model_set(m, "kappa1", "1");
  aim_model_set(m, "kappa3", "1");
  aim_model_set(m, "gamma2", "1");
  aim_model_set(m, "gamma4", "1");
  CHECK(aim_model_set(m, "case", "Q") == AIM_E_INVALID_ARGUMENT);
  aim_model_set(m, "case", "N");
  CHECK(aim_solve(m, nullptr, &s) == AIM_E_SINGULAR_SYSTEM);
  aim_model_set(m, "case", "K");
  CHECK(aim_solve(m, nullptr, &s) == AIM_E_CONSTRAINT_VIOLATION);
  aim_model_free(m);

  CHECK(std::string(aim_status_name(AIM_E_NOT_POLYNOMIAL)) == "NotPolynomial");
  CHECK(std::string(aim_status_name(AIM_OK)) == "ok");
}

TEST_CASE("custom model matches the catalog") {
  aim_model *c = nullptr, *j = nullptr;
  REQUIRE(aim_model_create("custom", &c) == AIM_OK);
  REQUIRE(aim_model_create("jt", &j) == AIM_OK);
  for (const char* key : {"kappa1", "kappa4", "gamma2", "gamma3"}) aim_model_set(c, key, "1/2");
  aim_model_set(c, "omega1", "1");
  aim_model_set(c, "omega2", "1");
  aim_model_set(j, "kappa", "1/2");
  aim_solve_options o{nullptr, 8, 1e-6, AIM_DELTA_1};
  aim_spectrum *sc = nullptr, *sj = nullptr;
  REQUIRE(aim_solve(c, &o, &sc) == AIM_OK);
  REQUIRE(aim_solve(j, &o, &sj) == AIM_OK);
  REQUIRE(aim_spectrum_level_count(sc) == aim_spectrum_level_count(sj));
  for (size_t i = 0; i < aim_spectrum_level_count(sc); ++i) {
    aim_level_info a, b;
    aim_spectrum_level(sc, i, &a);
    aim_spectrum_level(sj, i, &b);
    CHECK(a.energy == b.energy);
  }
  aim_spectrum_free(sc);
  aim_spectrum_free(sj);
  aim_model_free(c);
  aim_model_free(j);
}

TEST_CASE("closed forms") {
  double e[2];
  CHECK(aim_closed_form_jc("2", 1, "1", "0", "0", e) == AIM_OK);
  CHECK(e[0] == 2);
  CHECK(e[1] == 3);
  CHECK(aim_closed_form_jc("0", 1, "0", "0", "-1", e) == AIM_E_COMPLEX_ENERGY);
  CHECK(aim_closed_form_mjc("0", 1, "0", "0", e) == AIM_OK);
  CHECK(e[0] == 1);
  CHECK(e[1] == 2);
  double d[4];
  int real[4];
  CHECK(aim_closed_form_dirac("1", "1", "1", "1", "0", 1, d, real) == AIM_OK);
  CHECK(real[2] == 1);
  CHECK(d[3] == doctest::Approx(std::sqrt(2.0)));
  CHECK(aim_closed_form_jc(nullptr, 1, "1", "0", "0", e) == AIM_E_INVALID_ARGUMENT);
}

TEST_CASE("eigenfunction and wavefunction") {
  aim_model* m = nullptr;
  REQUIRE(aim_model_create("jc", &m) == AIM_OK);
  aim_model_set(m, "kappa", "1/5");
  aim_model_set(m, "k", "1");
  double lines[2];
  REQUIRE(aim_closed_form_jc("1", 1, "1", "0", "1/25", lines) == AIM_OK);
  aim_eigenfunction* f = nullptr;
  REQUIRE(aim_eigenfunction_compute(m, lines[0], 4, 1e-8, &f) == AIM_OK);
  CHECK(aim_eigenfunction_residual(f) <= 1e-8);
  const double* c = nullptr;
  size_t n = 0;
  CHECK(aim_eigenfunction_coeffs(f, 1, &c, &n) == AIM_OK);
  CHECK(n == 1);
  CHECK(aim_eigenfunction_coeffs(f, 3, &c, &n) == AIM_E_INVALID_ARGUMENT);

  const double xs[] = {2, 0}, ys[] = {3, 1};
  double up[2], down[2];
  CHECK(aim_wavefunction(m, f, xs, ys, 1, up, down) == AIM_OK);
  // N sector: x^(k+1) on the upper component, x^k on the lower.
  double p1, p2;
  aim_eigenfunction_coeffs(f, 1, &c, &n);
  p1 = c[0];
  aim_eigenfunction_coeffs(f, 2, &c, &n);
  p2 = c[0];
  CHECK(down[0] == doctest::Approx(2 * p1));
  CHECK(up[0] == doctest::Approx(4 * p2));
  CHECK(aim_wavefunction(m, f, xs, ys, 2, up, down) == AIM_E_DOMAIN_ERROR);
  aim_eigenfunction_free(f);

  CHECK(aim_eigenfunction_compute(m, lines[0] + 0.1, 4, 1e-8, &f) == AIM_E_NOT_POLYNOMIAL);
  aim_model_free(m);
}

TEST_CASE("last error is per thread") {
  char buf[8];
  aim_rational_normalize("bad", buf, sizeof buf);
  std::string other;
  std::thread t([&] {
    aim_rational_normalize("1", buf, sizeof buf);
    other = aim_last_error();
  });
  t.join();
  CHECK(other.empty());
  CHECK(std::strlen(aim_last_error()) > 0);
}

TEST_CASE("verification report") {
  aim_report* r = nullptr;
  CHECK(aim_verify("nope", &r) == AIM_E_INVALID_ARGUMENT);
  REQUIRE(aim_verify("mjc", &r) == AIM_OK);
  REQUIRE(aim_report_count(r) > 0);
  for (size_t i = 0; i < aim_report_count(r); ++i) {
    aim_check_info c;
    REQUIRE(aim_report_case(r, i, &c) == AIM_OK);
    CHECK(std::string(c.suite) == "mjc");
    CHECK(c.pass == 1);
  }
  aim_report_free(r);
}
