#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "aim/ratfunc.hpp"

namespace aim::model {

using algebra::Rational;
using algebra::RatFunc;

/// Parameters of the general two-mode spin-boson Hamiltonian
///   H = w1 a+a + w2 b+b + w0 s0 + (k1 a + k2 a+ + k3 b + k4 b+) s+
///                               + (g1 a + g2 a+ + g3 b + g4 b+) s-
/// together with the conserved-quantity sector label k.
struct ModelSpec {
  Rational omega1, omega2, omega0;
  Rational kappa1, kappa2, kappa3, kappa4;
  Rational gamma1, gamma2, gamma3, gamma4;
  Rational k;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

enum class SymmetryClass { K1, N1, K2, N2 };
const char* to_string(SymmetryClass c) noexcept;

struct Validation {
  bool hermitian = false;
  std::vector<SymmetryClass> classes;  // in the order K1, N1, K2, N2
};

Validation validate_model(const ModelSpec& m);

/// Coefficients of phi1' = a0 phi1 + b0 phi2, phi2' = c0 phi2 + d0 phi1.
/// Construction checks that every numerator is at most affine in E.
class CoeffQuartet {
 public:
  CoeffQuartet(RatFunc a0, RatFunc b0, RatFunc c0, RatFunc d0);

  const RatFunc& a0() const noexcept { return a0_; }
  const RatFunc& b0() const noexcept { return b0_; }
  const RatFunc& c0() const noexcept { return c0_; }
  const RatFunc& d0() const noexcept { return d0_; }

  /// False when either off-diagonal coefficient vanishes, i.e. the system is
  /// triangular and the spectrum follows from the diagonal alone.
  bool coupled() const noexcept { return !b0_.is_zero() && !d0_.is_zero(); }

  friend bool operator==(const CoeffQuartet&, const CoeffQuartet&) = default;

 private:
  RatFunc a0_, b0_, c0_, d0_;
};

// Catalog parameter patterns.
ModelSpec jt_model(const Rational& kappa, const Rational& k, const Rational& omega0,
                   const Rational& omega = Rational(1));
ModelSpec rashba_model(const Rational& kappa, const Rational& k, const Rational& omega0,
                       const Rational& omega = Rational(1));
ModelSpec jc_model(const Rational& kappa, const Rational& k, const Rational& omega,
                   const Rational& omega0);
ModelSpec mjc_model(const Rational& kappa, const Rational& k, const Rational& omega,
                    const Rational& omega0);

/// E x e Jahn-Teller coefficients (unit mode frequency).
CoeffQuartet seed_jt(const ModelSpec& m);
/// Rashba quantum-dot coefficients (unit mode frequency).
CoeffQuartet seed_rashba(const ModelSpec& m);
/// Jaynes-Cummings coefficients; throws ZeroFrequency for w1 = 0.
CoeffQuartet seed_jc(const ModelSpec& m);

/// Catalog parameters expressed through kappa^2, so that kappa may be
/// irrational or imaginary.
struct PatternParams {
  Rational kappa_sq;
  Rational k;
  Rational omega{1};
  Rational omega0;
};

// Same spectra as the seeds above, after the diagonal rescaling
// phi2 -> kappa phi2, i.e. (b0, d0) -> (b0 / kappa, kappa d0).
CoeffQuartet seed_jt_rescaled(const PatternParams& p);
CoeffQuartet seed_rashba_rescaled(const PatternParams& p);
CoeffQuartet seed_jc_rescaled(const PatternParams& p);

/// Applies (b0, d0) -> (b0 / kappa, kappa d0). kappa must be nonzero.
CoeffQuartet rescale_coupling(const CoeffQuartet& q, const Rational& kappa);

enum class Case { K, N };

/// Energy bookkeeping used when reducing the Hamiltonian. The printed
/// coefficient sets follow two different conventions: the K-sector models
/// count the zero-point energy (w1 + w2)/2 and take the level splitting with
/// the opposite sign, the N-sector models use the Hamiltonian as written.
struct Convention {
  bool zero_point = false;
  int sigma0_sign = 1;

  static constexpr Convention as_written() { return {false, 1}; }
  static constexpr Convention vibronic() { return {true, -1}; }
  static constexpr Convention for_case(Case c) {
    return c == Case::K ? vibronic() : as_written();
  }
};

/// Substitutes a+ -> x, a -> d/dx, b+ -> y, b -> d/dy and the separable
/// ansatz x^p phi(xy) (case K) or x^p phi(y/x) (case N) into H psi = E psi,
/// and solves the two resulting first-order equations for (phi1', phi2').
/// Throws ConstraintViolation if the Hamiltonian does not separate in the
/// requested sector, SingularSystem if the derivative terms are degenerate.
CoeffQuartet reduce_to_coupled_ode(const ModelSpec& m, Case c, Convention conv);
inline CoeffQuartet reduce_to_coupled_ode(const ModelSpec& m, Case c) {
  return reduce_to_coupled_ode(m, c, Convention::for_case(c));
}

// Closed-form spectra. Each returns the (minus, plus) branches.

/// Jaynes-Cummings line n: (k + 3/2 - n) w -+ sqrt(4 kappa^2 (k + 2 - n) + (w + 2 w0)^2) / 2.
std::pair<double, double> closed_form_jc(const Rational& k, int n, const Rational& omega,
                                         const Rational& omega0, const Rational& kappa_sq);

/// Two-cavity modified JC: (k + 3/2) -+ sqrt(8 (k + 1 - n) kappa^2 + (2 w0 - 1)^2) / 2.
std::pair<double, double> closed_form_mjc(const Rational& k, int n, const Rational& kappa,
                                          const Rational& omega0);

struct DiracEnergies {
  // Index 0/1: inner sign +, outer -/+. Index 2/3: inner sign -, outer -/+.
  std::array<double, 4> energy{};
  std::array<bool, 4> real{};

  /// Throws ComplexEnergy when the requested combination is not real.
  double at(int inner_sign, int outer_sign) const;
};

/// E = +- sqrt(4 m^2 c^4 - 4 hbar w' m c^2 (k +- n)) / 2.
DiracEnergies closed_form_dirac(const Rational& mass, const Rational& c,
                                const Rational& omega_prime, const Rational& hbar,
                                const Rational& k, int n);

}  // namespace aim::model
