#include "aim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "aim/engine.hpp"
#include "aim/error.hpp"
#include "aim/roots.hpp"

namespace aim::verify {

using algebra::Rational;
using namespace aim::model;
using namespace aim::engine;

namespace {

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Check make(const char* suite, std::string name, double obs, double expd, double tol,
           std::string note = {}) {
  const bool pass = std::isfinite(obs) && std::abs(obs - expd) <= tol;
  return {suite, std::move(name), obs, expd, tol, pass, std::move(note)};
}

// Ground-state column of the published comparison table; the coupling column
// there lists kappa^2.
struct TableRow {
  const char* kappa_sq;
  double energy;
};
constexpr TableRow kTable[] = {
    {"0.25", 0.7738}, {"0.5", 0.5780}, {"0.75", 0.3997}, {"1", 0.2330},
    {"2", -0.3689},   {"3", -0.9189},  {"5", -1.9610},   {"7", -2.9760},
    {"10", -4.4850},  {"15", -6.9901}, {"20", -9.4809},  {"30", -14.488},
};

void table1(std::vector<Check>& out) {
  for (const auto& row : kTable) {
    const auto seed = seed_jt_rescaled({Rational::parse(row.kappa_sq), 0, 1, 0});
    SolveOptions o;
    o.n_max = 14;
    const auto res = solve_spectrum(seed, o);
    const auto phys = res.physical();
    const double e = phys.empty() ? std::nan("") : phys.front()->energy;
    out.push_back(make("table1", std::string("kappa_sq=") + row.kappa_sq, e, row.energy, 1e-3,
                       "n_max=14 z0=0"));
  }
}

// Every real closed-form line that can show up within n_max iterations.
std::vector<double> jc_lines(const Rational& k, const Rational& w, const Rational& w0,
                             const Rational& ks, int n_max) {
  std::vector<double> v;
  for (int n = 1; n <= n_max + 2; ++n) {
    try {
      auto [lo, hi] = closed_form_jc(k, n, w, w0, ks);
      v.push_back(lo);
      v.push_back(hi);
    } catch (const Error&) {
    }
  }
  return v;
}

void jc(std::vector<Check>& out) {
  const int n_max = 8;
  for (const char* w : {"1", "2"})
    for (const char* w0 : {"0", "0.3", "0.5"})
      for (const char* kap : {"0.1", "0.5"})
        for (int k = 0; k <= 2; ++k) {
          const Rational rw = Rational::parse(w), rw0 = Rational::parse(w0),
                         rk = Rational::parse(kap);
          const auto seed = seed_jc(jc_model(rk, k, rw, rw0));
          const auto lines = jc_lines(k, rw, rw0, rk * rk, n_max);
          const std::string tag = std::string("w=") + w + " w0=" + w0 + " kappa=" + kap +
                                  " k=" + std::to_string(k);

          SolveOptions o;
          o.n_max = n_max;
          const auto res = solve_spectrum(seed, o);
          double worst = 0;
          int used = 0;
          for (const Level* l : res.physical()) {
            if (!l->converged) continue;
            double best = INFINITY;
            for (double x : lines) best = std::min(best, std::abs(x - l->energy));
            worst = std::max(worst, best);
            ++used;
          }
          if (used == 0) worst = std::nan("");
          out.push_back(make("jc", tag + " closed-form", worst, 0, 1e-8,
                             std::to_string(used) + " converged levels"));

          // Root sets of the termination polynomial at two expansion points.
          AimRow prev = initial_row(seed), cur = aim_step(prev, seed);
          for (int n = 2; n <= 6; ++n) {
            prev = std::move(cur);
            cur = aim_step(prev, seed);
          }
          const auto r0 = algebra::real_roots_exact(
              delta_at(prev, cur, 0, WhichDelta::D1).delta1);
          const auto r1 = algebra::real_roots_exact(
              delta_at(prev, cur, Rational(1, 2), WhichDelta::D1).delta1);
          double dz = r0.size() == r1.size() ? 0 : INFINITY;
          for (std::size_t i = 0; i < r0.size() && i < r1.size(); ++i)
            dz = std::max(dz, std::abs(r0[i] - r1[i]));
          out.push_back(make("jc", tag + " z0 invariance", dz, 0, 1e-8, "n=6, z0 in {0, 1/2}"));
        }
}

void mjc(std::vector<Check>& out) {
  for (int k = 0; k <= 3; ++k)
    for (const char* w0s : {"0", "0.3", "1/2", "2"})
      for (int n = 1; n <= 4; ++n) {
        const Rational w0 = Rational::parse(w0s);
        auto [lo, hi] = closed_form_mjc(k, n, 0, w0);
        const double half = std::abs(w0.to_double() - 0.5);
        const double centre = k + 1.5;
        const double dev = std::max(std::abs(lo - (centre - half)), std::abs(hi - (centre + half)));
        out.push_back(make("mjc",
                           "kappa=0 k=" + std::to_string(k) + " w0=" + w0s + " n=" +
                               std::to_string(n),
                           dev, 0, 1e-14, "uncoupled ladder"));
      }
  for (int k = 0; k <= 3; ++k)
    for (const char* kap : {"0.1", "1", "7/3"}) {
      auto [lo, hi] = closed_form_mjc(k, k + 1, Rational::parse(kap), Rational(1, 2));
      const double dev = std::max(std::abs(lo - (k + 1.5)), std::abs(hi - (k + 1.5)));
      out.push_back(make("mjc", "w0=1/2 n=k+1 k=" + std::to_string(k) + " kappa=" + kap, dev, 0,
                         0, "degenerate pair"));
    }
}

Rational draw(std::mt19937& g, int lo, int hi, int den) {
  std::uniform_int_distribution<int> d(lo, hi);
  return Rational(d(g), den);
}

void dirac(std::vector<Check>& out) {
  {
    const auto e = closed_form_dirac(Rational(3, 2), 2, 0, 1, 1, 1);
    const double rest = 1.5 * 4;
    double dev = 0;
    for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(std::abs(e.energy[i]) - rest));
    out.push_back(make("dirac", "w'=0 rest energy", dev, 0, 1e-12));
  }
  {
    const auto e = closed_form_dirac(1, 1, 1, 1, 0, 1);
    out.push_back(make("dirac", "m=c=hbar=w'=1 k=0 n=1 inner -", e.at(-1, 1), std::sqrt(2.0),
                       1e-12));
  }

  // Mapping onto the JC line formula with w = 0, w0 = m c^2,
  // kappa^2 = -4 c^2 m w' hbar, same (k, n).
  std::mt19937 gen(20240611);
  for (int trial = 0; trial < 20; ++trial) {
    Rational m, c, wp, hb, k;
    int n = 0;
    DiracEnergies d;
    std::pair<double, double> j;
    for (;;) {
      m = draw(gen, 5, 30, 10);
      c = draw(gen, 5, 20, 10);
      wp = draw(gen, 1, 20, 100);
      hb = draw(gen, 5, 20, 10);
      k = Rational(std::uniform_int_distribution<int>(0, 3)(gen));
      n = std::uniform_int_distribution<int>(1, 3)(gen);
      d = closed_form_dirac(m, c, wp, hb, k, n);
      if (!d.real[0] || !d.real[2]) continue;
      try {
        j = closed_form_jc(k, n, 0, m * c * c, -4 * c * c * m * wp * hb);
      } catch (const Error&) {
        continue;
      }
      break;
    }
    double best = INFINITY;
    for (int inner : {0, 2})
      best = std::min(best, std::max(std::abs(d.energy[inner] - j.first),
                                     std::abs(d.energy[inner + 1] - j.second)));
    out.push_back(make("dirac", "mapping draw " + std::to_string(trial + 1), best, 0, 1e-12,
                       "k=" + k.to_string() + " n=" + std::to_string(n) +
                           " jc=" + fmt("%.9g", j.second) + " dirac=" +
                           fmt("%.9g", d.energy[1]) + "/" + fmt("%.9g", d.energy[3])));
  }
}

}  // namespace

std::vector<Check> run_suite(std::string_view suite) {
  std::vector<Check> out;
  const bool all = suite == "all";
  if (!all && suite != "table1" && suite != "jc" && suite != "mjc" && suite != "dirac")
    throw Error(ErrorCode::InvalidArgument, "unknown verification suite '" + std::string(suite) + "'");
  if (all || suite == "table1") table1(out);
  if (all || suite == "jc") jc(out);
  if (all || suite == "mjc") mjc(out);
  if (all || suite == "dirac") dirac(out);
  return out;
}

}  // namespace aim::verify
