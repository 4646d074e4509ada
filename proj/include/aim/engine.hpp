#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "aim/model.hpp"
#include "aim/qpoly.hpp"

namespace aim::engine {

using algebra::QPoly;
using algebra::Rational;
using algebra::RatFunc;
using model::CoeffQuartet;

/// Coefficients of the n-th derivatives:
///   phi1^(n+1) = a phi1 + b phi2,  phi2^(n+1) = c phi2 + d phi1.
struct AimRow {
  int n = 0;
  RatFunc a, b, c, d;
};

AimRow initial_row(const CoeffQuartet& seed);
AimRow aim_step(const AimRow& prev, const CoeffQuartet& seed);

enum class WhichDelta { D1, D2, Both };

struct DeltaPair {
  int n = 0;
  QPoly delta1;
  QPoly delta2;
};

/// Termination polynomials of rows (n-1, n), as exact polynomials in E at z0.
/// Throws IdenticallyZero if a requested numerator vanishes identically.
DeltaPair delta_at(const AimRow& prev, const AimRow& cur, const Rational& z0,
                   WhichDelta which = WhichDelta::Both);

struct Level {
  int index = -1;  // -1 for flagged roots
  double energy = 0;
  std::vector<std::pair<int, double>> history;
  bool converged = false;
  int n_converged = 0;  // first iteration of the final stable run
  bool flagged = false;
  int delta = 1;  // which termination polynomial produced it
};

struct SpectrumResult {
  std::vector<Level> levels;  // ascending by energy
  int iterations_used = 0;
  Rational z0;
  bool discarded_first_root = false;

  /// Physical levels only, ascending.
  std::vector<const Level*> physical() const;
};

struct SolveOptions {
  Rational z0{0};
  int n_max = 14;
  double tol = 1e-6;
  WhichDelta which = WhichDelta::D1;
  /// Optional closed-form check; a flagged root it confirms is kept as physical.
  std::function<bool(double)> confirm;
};

/// Roots of the termination polynomial common with the numerator of b0 (for
/// delta1) or d0 (for delta2) at z0 persist at every iteration without being
/// eigenvalues of the coupled problem; one copy of each is flagged.
SpectrumResult solve_spectrum(const CoeffQuartet& seed, const SolveOptions& opts = {});

/// Splits the real roots of delta into (physical, flagged) using the spurious
/// factor described above. Exposed for tests and diagnostics.
std::pair<std::vector<double>, std::vector<double>> split_roots(const QPoly& delta,
                                                                const QPoly& spurious);

struct PolyEigenfunction {
  double energy = 0;
  std::vector<double> phi1;  // coefficients in z, lowest power first
  std::vector<double> phi2;
  double residual = 0;
};

/// Polynomial solution of the coupled system at a fixed energy, if any exists
/// with degree <= max_deg and sampled defect <= sample_tol. Throws NotPolynomial.
PolyEigenfunction polynomial_eigenfunction(const CoeffQuartet& seed, double energy, int max_deg,
                                           double sample_tol = 1e-8);

struct WavePoint {
  double x, y, psi_up, psi_down;
};

/// Case K: up = x^k phi1(xy), down = x^(k+1) phi2(xy).
/// Case N: down = x^k phi1(y/x), up = x^(k+1) phi2(y/x).
/// Unnormalized. Throws DomainError where the ansatz is undefined.
std::vector<WavePoint> assemble_wavefunction(model::Case c, const Rational& k,
                                             const PolyEigenfunction& phi,
                                             const std::vector<std::pair<double, double>>& grid);

}  // namespace aim::engine
