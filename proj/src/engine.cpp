#include "aim/engine.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "aim/error.hpp"
#include "aim/roots.hpp"

namespace aim::engine {

using algebra::BiPoly;

AimRow initial_row(const CoeffQuartet& seed) {
  return {0, seed.a0(), seed.b0(), seed.c0(), seed.d0()};
}

AimRow aim_step(const AimRow& prev, const CoeffQuartet& s) {
  AimRow r;
  r.n = prev.n + 1;
  r.a = s.a0() * prev.a + prev.a.derive_z() + s.d0() * prev.b;
  r.b = s.b0() * prev.a + prev.b.derive_z() + s.c0() * prev.b;
  r.c = s.c0() * prev.c + prev.c.derive_z() + s.b0() * prev.d;
  r.d = s.d0() * prev.c + prev.d.derive_z() + s.a0() * prev.d;
  return r;
}

DeltaPair delta_at(const AimRow& prev, const AimRow& cur, const Rational& z0, WhichDelta which) {
  DeltaPair out;
  out.n = cur.n;
  if (which != WhichDelta::D2) {
    out.delta1 = (prev.b * cur.a - prev.a * cur.b).eval_numer_at(z0);
    if (out.delta1.is_zero()) throw Error(ErrorCode::IdenticallyZero, "delta1 vanishes identically");
  }
  if (which != WhichDelta::D1) {
    out.delta2 = (prev.d * cur.c - prev.c * cur.d).eval_numer_at(z0);
    if (out.delta2.is_zero()) throw Error(ErrorCode::IdenticallyZero, "delta2 vanishes identically");
  }
  return out;
}

std::vector<const Level*> SpectrumResult::physical() const {
  std::vector<const Level*> out;
  for (const auto& l : levels)
    if (!l.flagged) out.push_back(&l);
  return out;
}

std::pair<std::vector<double>, std::vector<double>> split_roots(const QPoly& delta,
                                                                const QPoly& spurious) {
  QPoly g = spurious.degree() >= 1 ? algebra::gcd(delta, spurious) : QPoly(1);
  if (g.degree() < 1) return {algebra::real_roots_exact(delta), {}};
  QPoly rest = algebra::exact_div(delta, g);
  std::vector<double> phys = rest.degree() >= 1 ? algebra::real_roots_exact(rest) : std::vector<double>{};
  return {std::move(phys), algebra::real_roots_exact(g)};
}

namespace {

struct Track {
  std::vector<std::pair<int, double>> hist;
  bool flagged = false;
  double last() const { return hist.back().second; }
};

// Links the roots of iteration n to the trajectories alive at n - 1. Pairs
// are taken closest first; a trajectory only accepts a root within half the
// distance to its nearest neighbour (or 10 tol, whichever is larger), so that
// a trajectory still drifting between two settled ones is not stolen.
void extend_tracks(std::vector<Track>& tracks, const std::vector<double>& roots, bool flagged,
                   int n, double tol) {
  std::vector<std::size_t> alive;
  for (std::size_t i = 0; i < tracks.size(); ++i)
    if (tracks[i].flagged == flagged && tracks[i].hist.back().first == n - 1) alive.push_back(i);

  std::vector<double> gate(alive.size(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < alive.size(); ++i) {
    double spacing = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < alive.size(); ++j)
      if (j != i)
        spacing = std::min(spacing, std::abs(tracks[alive[i]].last() - tracks[alive[j]].last()));
    gate[i] = std::max(10 * tol, 0.5 * spacing);
  }

  struct Cand {
    double dist;
    std::size_t t, r;
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < alive.size(); ++i)
    for (std::size_t r = 0; r < roots.size(); ++r) {
      double d = std::abs(tracks[alive[i]].last() - roots[r]);
      if (d <= gate[i]) cands.push_back({d, i, r});
    }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.dist < b.dist; });

  std::vector<bool> t_used(alive.size(), false), r_used(roots.size(), false);
  for (const auto& c : cands) {
    if (t_used[c.t] || r_used[c.r]) continue;
    t_used[c.t] = r_used[c.r] = true;
    tracks[alive[c.t]].hist.emplace_back(n, roots[c.r]);
  }
  for (std::size_t r = 0; r < roots.size(); ++r)
    if (!r_used[r]) tracks.push_back({{{n, roots[r]}}, flagged});
}

struct DeltaRun {
  std::vector<Track> tracks;
  bool any_roots = false;
  bool discarded = false;
};

Level to_level(const Track& t, double tol, int which) {
  Level l;
  l.history = t.hist;
  l.energy = t.last();
  l.flagged = t.flagged;
  l.delta = which;
  const auto& h = t.hist;
  std::size_t i = h.size() - 1;
  while (i > 0 && std::abs(h[i].second - h[i - 1].second) <= tol) --i;
  const std::size_t stable = h.size() - 1 - i;  // agreements in the final run
  l.converged = stable >= 2;
  l.n_converged = l.converged ? h[i + 1].first : h.back().first;
  return l;
}

}  // namespace

SpectrumResult solve_spectrum(const CoeffQuartet& seed, const SolveOptions& o) {
  if (o.n_max < 2) throw Error(ErrorCode::InvalidArgument, "n_max must be at least 2");
  if (!(o.tol > 0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  if (!seed.coupled())
    throw Error(ErrorCode::Decoupled, "uncoupled system; use the closed-form spectrum");

  const bool want1 = o.which != WhichDelta::D2, want2 = o.which != WhichDelta::D1;
  const QPoly spur1 = seed.b0().eval_numer_at(o.z0);
  const QPoly spur2 = seed.d0().eval_numer_at(o.z0);
  DeltaRun run1, run2;

  auto feed = [&](DeltaRun& run, const QPoly& delta, const QPoly& spur, int n) {
    if (delta.is_zero() || delta.degree() < 1) return;
    auto [phys, flagged] = split_roots(delta, spur);
    if (o.confirm) {
      std::vector<double> keep;
      for (double e : flagged) {
        if (o.confirm(e))
          phys.insert(std::upper_bound(phys.begin(), phys.end(), e), e);
        else
          keep.push_back(e);
      }
      flagged = std::move(keep);
    }
    run.any_roots = run.any_roots || !phys.empty() || !flagged.empty();
    run.discarded = run.discarded || !flagged.empty();
    extend_tracks(run.tracks, phys, false, n, o.tol);
    extend_tracks(run.tracks, flagged, true, n, o.tol);
  };

  AimRow prev = initial_row(seed);
  AimRow cur = aim_step(prev, seed);
  for (int n = 2; n <= o.n_max; ++n) {
    prev = std::move(cur);
    cur = aim_step(prev, seed);
    // Row m holds the (m+1)-th derivative; iteration n pairs rows n-1 and n.
    if (want1) feed(run1, (prev.b * cur.a - prev.a * cur.b).eval_numer_at(o.z0), spur1, n);
    if (want2) feed(run2, (prev.d * cur.c - prev.c * cur.d).eval_numer_at(o.z0), spur2, n);
  }
  if (!run1.any_roots && !run2.any_roots)
    throw Error(ErrorCode::NoRealRoots, "termination polynomials have no real roots");

  SpectrumResult res;
  res.iterations_used = o.n_max;
  res.z0 = o.z0;
  res.discarded_first_root = run1.discarded || run2.discarded;
  for (const auto& t : run1.tracks)
    if (t.hist.back().first == o.n_max) res.levels.push_back(to_level(t, o.tol, 1));
  const std::size_t from_d1 = res.levels.size();
  for (const auto& t : run2.tracks) {
    if (t.hist.back().first != o.n_max) continue;
    Level l = to_level(t, o.tol, 2);
    // With both polynomials requested, a level seen by both is reported once.
    bool dup = false;
    for (std::size_t i = 0; i < from_d1 && !dup; ++i)
      dup = res.levels[i].flagged == l.flagged &&
            std::abs(res.levels[i].energy - l.energy) <= std::max(10 * o.tol, 1e-8);
    if (!dup) res.levels.push_back(std::move(l));
  }
  std::stable_sort(res.levels.begin(), res.levels.end(),
                   [](const Level& a, const Level& b) { return a.energy < b.energy; });
  int idx = 0;
  for (auto& l : res.levels) l.index = l.flagged ? -1 : idx++;
  return res;
}

namespace {

// Row of phi_i' = u phi_i + v phi_j with denominators cleared:
// L phi_i' - U phi_i - V phi_j = 0, returned as z-coefficient vectors.
struct ClearedRow {
  std::vector<double> lead, self, other;
};

std::vector<double> to_double(const QPoly& p) {
  std::vector<double> out;
  for (const auto& c : p.coeffs()) out.push_back(c.to_double());
  return out;
}

std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

ClearedRow clear(const RatFunc& u, const RatFunc& v, double e) {
  const QPoly g = algebra::gcd(u.den(), v.den());
  const QPoly l = algebra::exact_div(u.den() * v.den(), g);
  return {to_double(l), mul(u.num().eval_e(e), to_double(algebra::exact_div(l, u.den()))),
          mul(v.num().eval_e(e), to_double(algebra::exact_div(l, v.den())))};
}

// Adds coefficient contributions of poly * phi (or poly * phi') into the
// linear system, phi having degree <= deg and unknowns starting at col.
void stamp(Eigen::MatrixXd& m, int row0, const std::vector<double>& poly, int col, int deg,
           bool derivative, double sign) {
  for (int j = 0; j <= deg; ++j) {
    if (derivative && j == 0) continue;
    const int p = derivative ? j - 1 : j;
    const double f = derivative ? j : 1.0;
    for (std::size_t i = 0; i < poly.size(); ++i)
      m(row0 + static_cast<int>(i) + p, col + j) += sign * f * poly[i];
  }
}

double poly_eval(const std::vector<double>& c, double z) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double poly_deriv(const std::vector<double>& c, double z) {
  double acc = 0;
  for (std::size_t i = c.size(); i-- > 1;) acc = acc * z + static_cast<double>(i) * c[i];
  return acc;
}

}  // namespace

PolyEigenfunction polynomial_eigenfunction(const CoeffQuartet& seed, double energy, int max_deg,
                                           double sample_tol) {
  if (!std::isfinite(energy)) throw Error(ErrorCode::InvalidArgument, "energy must be finite");
  if (max_deg < 0) throw Error(ErrorCode::InvalidArgument, "max_deg must be non-negative");

  const ClearedRow r1 = clear(seed.a0(), seed.b0(), energy);
  const ClearedRow r2 = clear(seed.c0(), seed.d0(), energy);
  auto width = [](const ClearedRow& r) {
    return std::max({r.lead.size(), r.self.size(), r.other.size()});
  };

  for (int deg = 0; deg <= max_deg; ++deg) {
    const int n1 = static_cast<int>(width(r1)) + deg;
    const int n2 = static_cast<int>(width(r2)) + deg;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n1 + n2, 2 * (deg + 1));
    const int c1 = 0, c2 = deg + 1;
    stamp(m, 0, r1.lead, c1, deg, true, 1);
    stamp(m, 0, r1.self, c1, deg, false, -1);
    stamp(m, 0, r1.other, c2, deg, false, -1);
    stamp(m, n1, r2.lead, c2, deg, true, 1);
    stamp(m, n1, r2.self, c2, deg, false, -1);
    stamp(m, n1, r2.other, c1, deg, false, -1);
    for (int i = 0; i < m.rows(); ++i) {
      const double s = m.row(i).cwiseAbs().maxCoeff();
      if (s > 0) m.row(i) /= s;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    // Fewer equations than unknowns leaves an exact null direction.
    const double smin = m.rows() < m.cols() ? 0.0 : sv(sv.size() - 1);
    if (smax == 0 || smin > 1e-9 * smax) continue;

    Eigen::VectorXd v = svd.matrixV().col(m.cols() - 1);
    Eigen::Index big = 0;
    v.cwiseAbs().maxCoeff(&big);
    v /= v(big);

    PolyEigenfunction out;
    out.energy = energy;
    out.phi1.assign(v.data(), v.data() + deg + 1);
    out.phi2.assign(v.data() + deg + 1, v.data() + 2 * (deg + 1));
    for (int i = 0; i < 16; ++i) {
      const double z = 0.1 + 1.5 * i / 15.0;
      const double f1 = poly_eval(out.phi1, z), f2 = poly_eval(out.phi2, z);
      const double e1 = poly_deriv(out.phi1, z) - seed.a0().eval(z, energy) * f1 -
                        seed.b0().eval(z, energy) * f2;
      const double e2 = poly_deriv(out.phi2, z) - seed.c0().eval(z, energy) * f2 -
                        seed.d0().eval(z, energy) * f1;
      out.residual = std::max({out.residual, std::abs(e1), std::abs(e2)});
    }
    if (out.residual <= sample_tol) return out;
  }
  throw Error(ErrorCode::NotPolynomial, "no polynomial solution at this energy");
}

std::vector<WavePoint> assemble_wavefunction(model::Case c, const Rational& k,
                                             const PolyEigenfunction& phi,
                                             const std::vector<std::pair<double, double>>& grid) {
  const double kd = k.to_double();
  std::vector<WavePoint> out;
  out.reserve(grid.size());
  for (auto [x, y] : grid) {
    if (c == model::Case::N && x == 0)
      throw Error(ErrorCode::DomainError, "x = 0 is outside the N-sector ansatz");
    if (x < 0 && !k.is_integer())
      throw Error(ErrorCode::DomainError, "negative x with a non-integer sector label");
    const double z = c == model::Case::K ? x * y : y / x;
    const double lo = std::pow(x, kd) * poly_eval(phi.phi1, z);
    const double hi = std::pow(x, kd + 1) * poly_eval(phi.phi2, z);
    if (c == model::Case::K)
      out.push_back({x, y, lo, hi});
    else
      out.push_back({x, y, hi, lo});
  }
  return out;
}

}  // namespace aim::engine
