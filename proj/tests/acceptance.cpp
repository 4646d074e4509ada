// Acceptance run: one PASS/FAIL line per criterion, failing sub-checks listed
// beneath. Reference numbers are hard-coded here or computed by the test-side
// oracles; tolerances are pinned below.
//
// Exit status is 0 when the failing sub-checks are exactly the known gaps
// matched by known_gap() (documented in README.md). Anything else, including a
// known gap that starts passing, exits 1.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "aim/engine.hpp"
#include "aim/error.hpp"
#include "support/oracles.hpp"

using namespace aim::engine;
using namespace aim::model;
using aim::ErrorCode;
using aim::algebra::BiPoly;

namespace {

constexpr double kTable1Tol = 1e-3;
constexpr double kSeqTol = 1e-3;
constexpr double kStableTol = 1e-5;
constexpr double kExactTol = 1e-8;
constexpr double kMjcTol = 0;
constexpr double kDiracTol = 1e-12;
constexpr double kResidualTol = 1e-8;
constexpr double kParityTol = 1e-12;

struct Sub {
  std::string id;
  bool pass;
  std::string detail;
};

using Subs = std::vector<Sub>;

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

bool known_gap(const std::string& id) {
  return id == "table1 kappa_sq=20" || id.rfind("dirac mapping draw", 0) == 0;
}

// ---- 1: ground levels of the E x e model -----------------------------------

Subs table1() {
  const std::vector<std::pair<Rational, double>> rows{
      {Rational(1, 4), 0.7738}, {Rational(1, 2), 0.5780}, {Rational(3, 4), 0.3997},
      {1, 0.2330},              {2, -0.3689},             {3, -0.9189},
      {5, -1.9610},             {7, -2.9760},             {10, -4.4850},
      {15, -6.9901},            {20, -9.4809},            {30, -14.488}};
  Subs out;
  for (const auto& [ks, want] : rows) {
    const auto res = solve_spectrum(seed_jt_rescaled({ks, 0, 1, 0}));
    const auto phys = res.physical();
    const double got = phys.empty() ? NAN : phys[0]->energy;
    out.push_back({"table1 kappa_sq=" + ks.to_string(), std::abs(got - want) <= kTable1Tol,
                   "got " + fmt("%.8f", got) + " want " + fmt("%.4f", want)});
  }
  return out;
}

// ---- 2: convergence of the twentieth level ---------------------------------

Subs convergence() {
  const auto res = solve_spectrum(seed_jt_rescaled({Rational(1, 100), 1, 1, 0}));
  const Level* hit = nullptr;
  for (const Level* l : res.physical())
    if (std::abs(l->energy - 21.007064) <= kStableTol) hit = l;
  if (!hit) return {{"E20 trajectory", false, "no trajectory ends at 21.007064"}};

  auto at = [&](int n) -> double {
    for (const auto& [m, v] : hit->history)
      if (m == n) return v;
    return NAN;
  };
  Subs out;
  out.push_back({"E20 is the 20th physical level", hit->index == 19,
                 "index " + std::to_string(hit->index)});
  const std::vector<std::pair<int, double>> loose{{10, 21.103745}, {11, 21.007171}};
  for (const auto& [n, want] : loose)
    out.push_back({"E20 at n=" + std::to_string(n), std::abs(at(n) - want) <= kSeqTol,
                   "got " + fmt("%.6f", at(n))});
  for (int n : {12, 13, 14})
    out.push_back({"E20 at n=" + std::to_string(n), std::abs(at(n) - 21.007064) <= kStableTol,
                   "got " + fmt("%.6f", at(n))});
  return out;
}

// ---- 3: exactly solvable rotating-wave model -------------------------------

Subs jc_exactness() {
  Subs out;
  for (int w : {1, 2})
    for (const Rational& w0 : {Rational(0), Rational(3, 10), Rational(1, 2)})
      for (const Rational& kap : {Rational(1, 10), Rational(1, 2)})
        for (int k : {0, 1, 2}) {
          const std::string tag = "w=" + std::to_string(w) + " w0=" + w0.to_string() +
                                  " kappa=" + kap.to_string() + " k=" + std::to_string(k);
          const auto s = seed_jc(jc_model(kap, k, w, w0));
          SolveOptions o;
          o.n_max = 8;
          const auto res = solve_spectrum(s, o);
          const auto lines =
              oracle::jc_lines(k, w, w0.to_double(), (kap * kap).to_double(), o.n_max + 2);
          double worst = 0;
          int converged = 0;
          for (const Level* l : res.physical())
            if (l->converged) {
              ++converged;
              worst = std::max(worst, oracle::nearest_distance(lines, l->energy));
            }
          out.push_back({"jc lines " + tag, converged > 0 && worst <= kExactTol,
                         std::to_string(converged) + " converged, max dev " + fmt("%.2e", worst)});

          AimRow prev = initial_row(s), cur = aim_step(prev, s);
          double drift = 0;
          bool same_count = true;
          for (int n = 1; n <= 6; ++n) {
            if (n > 1) {
              prev = std::move(cur);
              cur = aim_step(prev, s);
            }
            const auto a = split_roots(delta_at(prev, cur, 0, WhichDelta::D1).delta1,
                                       s.b0().eval_numer_at(0)).first;
            const Rational half(1, 2);
            const auto b = split_roots(delta_at(prev, cur, half, WhichDelta::D1).delta1,
                                       s.b0().eval_numer_at(half)).first;
            same_count = same_count && a.size() == b.size();
            for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
              drift = std::max(drift, std::abs(a[i] - b[i]));
          }
          out.push_back({"jc z0 invariance " + tag, same_count && drift <= kExactTol,
                         "max drift " + fmt("%.2e", drift)});
        }
  return out;
}

// ---- 4: closed forms of the two-mode and Dirac models ----------------------

Subs closed_forms() {
  Subs out;
  oracle::Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const Rational k(i % 4), w0 = rng.rational();
    const int n = 1 + i % 3;
    // kappa = 0: harmonic ladder k + 3/2 -+ |2 w0 - 1| / 2
    const Rational gap = 2 * w0 - 1, half_gap = (gap.sign() < 0 ? -gap : gap) / 2;
    const auto e = closed_form_mjc(k, n, 0, w0);
    const bool ok = e.first == (k + Rational(3, 2) - half_gap).to_double() &&
                    e.second == (k + Rational(3, 2) + half_gap).to_double();
    out.push_back({"mjc kappa=0 draw " + std::to_string(i + 1), ok,
                   "w0=" + w0.to_string() + " got " + fmt("%.17g", e.first)});
    // w0 = 1/2 and n = k + 1: both branches collapse onto k + 3/2
    const Rational kap = rng.rational();
    const auto d = closed_form_mjc(k, static_cast<int>(i % 4) + 1, kap, Rational(1, 2));
    const double centre = (k + Rational(3, 2)).to_double();
    out.push_back({"mjc degeneracy draw " + std::to_string(i + 1),
                   std::abs(d.first - centre) <= kMjcTol && std::abs(d.second - centre) <= kMjcTol,
                   "kappa=" + kap.to_string() + " got " + fmt("%.17g", d.first)});
  }

  // Dirac lines against the rotating-wave lines with w = 0, w0 = m c^2,
  // kappa^2 = -4 c^2 m w' hbar, at the same (k, n).
  std::mt19937 gen(7);
  auto draw = [&](int lo, int hi, int den) {
    return Rational(std::uniform_int_distribution<int>(lo, hi)(gen), den);
  };
  for (int trial = 0; trial < 20; ++trial) {
    double m, c, wp, hb;
    int k, n;
    double dirac_inner[2][2];
    double jc[2];
    for (;;) {
      m = draw(5, 30, 10).to_double();
      c = draw(5, 20, 10).to_double();
      wp = draw(1, 20, 100).to_double();
      hb = draw(5, 20, 10).to_double();
      k = std::uniform_int_distribution<int>(0, 3)(gen);
      n = std::uniform_int_distribution<int>(1, 3)(gen);
      const double mc2 = m * c * c;
      bool real = true;
      for (int s = 0; s < 2; ++s) {
        const double rad = 4 * mc2 * mc2 - 4 * hb * wp * mc2 * (s == 0 ? k + n : k - n);
        real = real && rad >= 0;
        dirac_inner[s][0] = -0.5 * std::sqrt(rad);
        dirac_inner[s][1] = 0.5 * std::sqrt(rad);
      }
      const double ks = -4 * c * c * m * wp * hb;
      const double rad = 4 * ks * (k + 2 - n) + 4 * mc2 * mc2;
      if (!real || rad < 0) continue;
      jc[0] = -0.5 * std::sqrt(rad);
      jc[1] = 0.5 * std::sqrt(rad);
      break;
    }
    // The library closed forms must agree with the direct formulas...
    const Rational rm(static_cast<long>(std::lround(m * 10)), 10),
        rc(static_cast<long>(std::lround(c * 10)), 10),
        rw(static_cast<long>(std::lround(wp * 100)), 100),
        rh(static_cast<long>(std::lround(hb * 10)), 10);
    const auto lib_d = closed_form_dirac(rm, rc, rw, rh, k, n);
    const auto lib_j = closed_form_jc(k, n, 0, rm * rc * rc, -4 * rc * rc * rm * rw * rh);
    double self = std::max(std::abs(lib_j.first - jc[0]), std::abs(lib_j.second - jc[1]));
    for (int s = 0; s < 2; ++s)
      for (int b = 0; b < 2; ++b)
        self = std::max(self, std::abs(lib_d.energy[2 * s + b] - dirac_inner[s][b]));
    out.push_back({"dirac formula draw " + std::to_string(trial + 1), self <= kDiracTol,
                   "dev " + fmt("%.2e", self)});
    // ...and the mapping identity itself, with the better of the two inner signs.
    double best = INFINITY;
    for (int s = 0; s < 2; ++s)
      best = std::min(best, std::max(std::abs(dirac_inner[s][0] - jc[0]),
                                     std::abs(dirac_inner[s][1] - jc[1])));
    out.push_back({"dirac mapping draw " + std::to_string(trial + 1), best <= kDiracTol,
                   "k=" + std::to_string(k) + " n=" + std::to_string(n) + " jc=" +
                       fmt("%.9g", jc[1]) + " dirac=" + fmt("%.9g", dirac_inner[0][1]) + "/" +
                       fmt("%.9g", dirac_inner[1][1])});
  }
  return out;
}

// ---- 5: polynomial eigenfunctions -------------------------------------------

Subs eigenfunctions() {
  Subs out;
  const Rational w0(3, 10), kap(1, 5);
  const int k = 2;
  const auto s = seed_jc(jc_model(kap, k, 1, w0));
  for (int n = 1; n <= 3; ++n) {
    const auto lines = oracle::jc_lines(k, 1, 0.3, 0.04, n);
    for (int branch = 0; branch < 2; ++branch) {
      const double e = lines[2 * (n - 1) + branch];
      const std::string tag = "n=" + std::to_string(n) + (branch ? " upper" : " lower");
      try {
        const auto f = polynomial_eigenfunction(s, e, 5);
        bool mono = f.phi1.size() == static_cast<std::size_t>(n) &&
                    f.phi2.size() == static_cast<std::size_t>(n);
        for (int j = 0; mono && j + 1 < n; ++j)
          mono = std::abs(f.phi1[j]) <= 1e-9 && std::abs(f.phi2[j]) <= 1e-9;
        mono = mono && f.phi1.back() != 0 && f.phi2.back() != 0;
        out.push_back({"monomial eigenfunction " + tag, mono && f.residual <= kResidualTol,
                       "residual " + fmt("%.2e", f.residual)});
      } catch (const aim::Error& err) {
        out.push_back({"monomial eigenfunction " + tag, false, err.what()});
      }
      bool rejected = false;
      try {
        polynomial_eigenfunction(s, e + 0.1, 5);
      } catch (const aim::Error& err) {
        rejected = err.code() == ErrorCode::NotPolynomial;
      }
      out.push_back({"offset energy rejected " + tag, rejected, ""});
    }
  }
  return out;
}

// ---- 6: property suites -------------------------------------------------------

Subs properties() {
  Subs out;
  {
    oracle::Rng rng(2024);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const BiPoly p = rng.bipoly(), q = rng.bipoly();
      bool ok = p * q == oracle::from_terms(oracle::multiply(oracle::terms_of(p), oracle::terms_of(q)));
      ok = ok && (p + q).derive_z() == p.derive_z() + q.derive_z();
      ok = ok && (p * q).derive_z() == p.derive_z() * q + p * q.derive_z();
      ok = ok && p.derive_z() == oracle::from_terms(oracle::derive_z(oracle::terms_of(p)));
      const QPoly shared = rng.zpoly(1);
      const RatFunc f(p * shared, rng.zpoly() * shared), g(q, rng.zpoly());
      ok = ok && f.canonicalized() == f && f.canonicalized().canonicalized() == f.canonicalized();
      ok = ok && (f + g).derive_z() == f.derive_z() + g.derive_z();
      ok = ok && (f * g).derive_z() == f.derive_z() * g + f * g.derive_z();
      bad += !ok;
    }
    out.push_back({"algebra laws on 1000 random cases", bad == 0, std::to_string(bad) + " failures"});
  }
  {
    const std::vector<std::pair<CoeffQuartet, CoeffQuartet>> pairs{
        {seed_jt(jt_model(Rational(1, 2), 0, 0)), seed_jt(jt_model(Rational(-1, 2), 0, 0))},
        {seed_rashba(rashba_model(1, 1, Rational(1, 3))),
         seed_rashba(rashba_model(-1, 1, Rational(1, 3)))},
        {seed_jc(jc_model(Rational(1, 2), 1, 1, 0)), seed_jc(jc_model(Rational(-1, 2), 1, 1, 0))}};
    const char* names[] = {"jt", "rashba", "jc"};
    for (int i = 0; i < 3; ++i) {
      SolveOptions o;
      o.n_max = 10;
      const auto a = solve_spectrum(pairs[i].first, o), b = solve_spectrum(pairs[i].second, o);
      double dev = a.levels.size() == b.levels.size() ? 0 : INFINITY;
      for (std::size_t j = 0; dev < INFINITY && j < a.levels.size(); ++j)
        dev = std::max(dev, std::abs(a.levels[j].energy - b.levels[j].energy));
      out.push_back({std::string("kappa parity ") + names[i], dev <= kParityTol,
                     "max dev " + fmt("%.2e", dev)});
    }
  }
  {
    oracle::Rng rng(99);
    int bad = 0;
    for (int i = 0; i < 30; ++i) {
      Rational kap = rng.rational(), k = rng.rational(4, 2), w0 = rng.rational(), w = rng.rational();
      if (kap.is_zero()) kap = 1;
      if (w.is_zero()) w = 2;
      const auto jt = jt_model(kap, k, w0);
      const auto ra = rashba_model(kap, k, w0);
      const auto jc = jc_model(kap, k, w, w0);
      bad += !(reduce_to_coupled_ode(jt, Case::K) == seed_jt(jt));
      bad += !(reduce_to_coupled_ode(ra, Case::K) == seed_rashba(ra));
      bad += !(reduce_to_coupled_ode(jc, Case::N) == seed_jc(jc));
    }
    out.push_back({"reduction equals catalog seeds", bad == 0, std::to_string(bad) + " mismatches"});
  }
  {
    oracle::Rng rng(11);
    std::vector<CoeffQuartet> seeds{seed_jt(jt_model(Rational(1, 3), 1, Rational(1, 2))),
                                    seed_jc(jc_model(Rational(2, 5), 0, 2, Rational(1, 3))),
                                    seed_rashba(rashba_model(Rational(3, 2), 1, 0))};
    for (int i = 0; i < 6; ++i) {
      auto f = [&] { return RatFunc(rng.bipoly(2, 1, 3), rng.zpoly(2)); };
      seeds.push_back({f(), f(), f(), f()});
    }
    int bad = 0, points = 0;
    for (const auto& s : seeds) {
      AimRow row = initial_row(s);
      for (int n = 0; n <= 4; ++n) {
        if (n > 0) row = aim_step(row, s);
        for (int t = 0; t < 2; ++t) {
          const Rational zs = rng.rational(7, 3), es = rng.rational();
          bool pole = false;
          for (const auto* f : {&s.a0(), &s.b0(), &s.c0(), &s.d0()})
            pole = pole || f->den().eval(zs).is_zero();
          if (pole) continue;
          const auto want = oracle::row_at(s, n, zs, es);
          auto value = [&](const RatFunc& f) {
            Rational num = 0, ej = 1;
            for (const auto& slice : f.num().e_slices()) {
              num += slice.eval(zs) * ej;
              ej = ej * es;
            }
            return num / f.den().eval(zs);
          };
          ++points;
          bad += !(value(row.a) == want.a && value(row.b) == want.b && value(row.c) == want.c &&
                   value(row.d) == want.d);
        }
      }
    }
    out.push_back({"recursion equals series oracle for n <= 4", bad == 0 && points > 50,
                   std::to_string(points) + " points, " + std::to_string(bad) + " mismatches"});
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Subs()>>> criteria{
      {"1 E x e ground levels (12 couplings, 1e-3)", table1},
      {"2 twentieth-level convergence n=10..14", convergence},
      {"3 rotating-wave exactness and z0 invariance (36 points, 1e-8)", jc_exactness},
      {"4 two-mode identities and Dirac mapping", closed_forms},
      {"5 monomial eigenfunctions and offset rejection", eigenfunctions},
      {"6 property suites", properties},
  };

  bool unexpected = false;
  int passed = 0;
  for (const auto& [title, fn] : criteria) {
    Subs subs;
    try {
      subs = fn();
    } catch (const std::exception& e) {
      subs.push_back({"exception", false, e.what()});
    }
    std::vector<const Sub*> failed;
    for (const Sub& s : subs) {
      if (!s.pass) failed.push_back(&s);
      if (s.pass && known_gap(s.id)) {
        unexpected = true;
        std::printf("  note: known gap '%s' now passes; update README\n", s.id.c_str());
      }
    }
    const bool ok = failed.empty();
    passed += ok;
    std::printf("%s criterion %s  [%zu/%zu]\n", ok ? "PASS" : "FAIL", title.c_str(),
                subs.size() - failed.size(), subs.size());
    for (const Sub* s : failed) {
      const bool gap = known_gap(s->id);
      unexpected = unexpected || !gap;
      std::printf("    fail %s: %s%s\n", s->id.c_str(), s->detail.c_str(),
                  gap ? "  (known gap, see README)" : "");
    }
  }
  std::printf("%d/%zu criteria pass; %s\n", passed, criteria.size(),
              unexpected ? "UNEXPECTED failures" : "remaining failures are the documented gaps");
  return unexpected ? 1 : 0;
}
