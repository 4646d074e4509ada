#include "aim/model.hpp"

#include <cmath>

#include "aim/error.hpp"

namespace aim::model {

using algebra::BiPoly;
using algebra::QPoly;

const char* to_string(SymmetryClass c) noexcept {
  switch (c) {
    case SymmetryClass::K1: return "K1";
    case SymmetryClass::N1: return "N1";
    case SymmetryClass::K2: return "K2";
    case SymmetryClass::N2: return "N2";
  }
  return "?";
}

Validation validate_model(const ModelSpec& m) {
  Validation v;
  v.hermitian = m.kappa1 == m.gamma2 && m.kappa2 == m.gamma1 && m.kappa3 == m.gamma4 &&
                m.kappa4 == m.gamma3;
  auto zero = [](std::initializer_list<const Rational*> xs) {
    for (const auto* x : xs)
      if (!x->is_zero()) return false;
    return true;
  };
  if (zero({&m.gamma2, &m.gamma3, &m.kappa1, &m.kappa4})) v.classes.push_back(SymmetryClass::K1);
  if (zero({&m.gamma1, &m.gamma3, &m.kappa2, &m.kappa4})) v.classes.push_back(SymmetryClass::N1);
  if (zero({&m.gamma1, &m.gamma4, &m.kappa2, &m.kappa3})) v.classes.push_back(SymmetryClass::K2);
  if (zero({&m.gamma2, &m.gamma4, &m.kappa1, &m.kappa3})) v.classes.push_back(SymmetryClass::N2);
  return v;
}

CoeffQuartet::CoeffQuartet(RatFunc a0, RatFunc b0, RatFunc c0, RatFunc d0)
    : a0_(std::move(a0)), b0_(std::move(b0)), c0_(std::move(c0)), d0_(std::move(d0)) {
  for (const RatFunc* f : {&a0_, &b0_, &c0_, &d0_})
    if (f->num().deg_e() > 1)
      throw Error(ErrorCode::InvalidArgument, "seed coefficient is not affine in E");
}

ModelSpec jt_model(const Rational& kappa, const Rational& k, const Rational& omega0,
                   const Rational& omega) {
  ModelSpec m;
  m.omega1 = m.omega2 = omega;
  m.omega0 = omega0;
  m.kappa1 = m.kappa4 = m.gamma2 = m.gamma3 = kappa;
  m.k = k;
  return m;
}

ModelSpec rashba_model(const Rational& kappa, const Rational& k, const Rational& omega0,
                       const Rational& omega) {
  ModelSpec m;
  m.omega1 = m.omega2 = omega;
  m.omega0 = omega0;
  m.kappa1 = m.gamma2 = kappa;
  m.kappa4 = m.gamma3 = -kappa;
  m.k = k;
  return m;
}

ModelSpec jc_model(const Rational& kappa, const Rational& k, const Rational& omega,
                   const Rational& omega0) {
  ModelSpec m;
  m.omega1 = omega;
  m.omega0 = omega0;
  m.kappa1 = m.gamma2 = kappa;
  m.k = k;
  return m;
}

ModelSpec mjc_model(const Rational& kappa, const Rational& k, const Rational& omega,
                    const Rational& omega0) {
  ModelSpec m;
  m.omega1 = m.omega2 = omega;
  m.omega0 = omega0;
  m.kappa1 = m.gamma2 = m.kappa3 = m.gamma4 = kappa;
  m.k = k;
  return m;
}

namespace {

const BiPoly kZ = BiPoly::z();
const BiPoly kE = BiPoly::E();

RatFunc frac(const BiPoly& num, const BiPoly& den) {
  if (den.deg_e() > 0) throw Error(ErrorCode::InvalidArgument, "denominator depends on E");
  return RatFunc(num, den.e_coeff(0));
}

void require(bool ok, const char* model) {
  if (!ok) throw Error(ErrorCode::BadPattern, std::string("parameters do not match the ") + model + " pattern");
}

// Shared by the direct and rescaled seeds: ks is kappa^2, kb and kd the
// factors carried by b0 and d0 (kappa and kappa, or 1 and kappa^2).
CoeffQuartet jt_quartet(const Rational& ks, const Rational& kb, const Rational& kd,
                        const Rational& k, const Rational& w0) {
  const BiPoly c = BiPoly(ks);
  const BiPoly a0n = c - 2 * w0 - 2 * k + 2 * kE - 2;
  const BiPoly b0n = kb * (w0 + k + 2 * kZ + kE);
  const BiPoly c0n = ks * (1 + k + kZ) + 2 * kZ * (w0 - k + kE - 2);
  const BiPoly d0n = kd * (kE - w0 - k + 2 * kZ - 1);
  return {frac(a0n, 4 * kZ - c), frac(b0n, c - 4 * kZ), frac(c0n, kZ * (4 * kZ - c)),
          frac(d0n, kZ * (c - 4 * kZ))};
}

CoeffQuartet rashba_quartet(const Rational& ks, const Rational& kb, const Rational& kd,
                            const Rational& k, const Rational& w0) {
  const BiPoly c = BiPoly(ks);
  const BiPoly a0n = c - 2 * w0 - 2 * k + 2 * kE - 2;
  const BiPoly b0n = kb * (2 * kZ - w0 - k - kE);
  const RatFunc c0 = frac(c + 2 * (w0 + k + kE), 4 * kZ + c) - frac(BiPoly(k + 1), kZ);
  const BiPoly d0n = kd * (kE - w0 - k - 2 * kZ - 1);
  return {frac(a0n, 4 * kZ + c), frac(b0n, c + 4 * kZ), c0, frac(d0n, kZ * (c + 4 * kZ))};
}

CoeffQuartet jc_quartet(const Rational& ks, const Rational& kb, const Rational& kd,
                        const Rational& k, const Rational& w, const Rational& w0) {
  const BiPoly w2z = (w * w) * kZ;
  const BiPoly wz = w * kZ;
  return {frac(-(BiPoly(ks) + w * (kE - k * w + w0)), w2z), frac(kb * (kE - w0), w2z),
          frac(BiPoly(w + k * w + w0) - kE, wz), frac(BiPoly(kd), wz)};
}

void check_unit_pair(const ModelSpec& m, const char* name) {
  require(m.omega1 == Rational(1) && m.omega2 == Rational(1), name);
  require(m.kappa2.is_zero() && m.kappa3.is_zero() && m.gamma1.is_zero() && m.gamma4.is_zero(),
          name);
}

}  // namespace

CoeffQuartet seed_jt(const ModelSpec& m) {
  check_unit_pair(m, "Jahn-Teller");
  const Rational& kap = m.kappa1;
  require(m.kappa4 == kap && m.gamma2 == kap && m.gamma3 == kap, "Jahn-Teller");
  return jt_quartet(kap * kap, kap, kap, m.k, m.omega0);
}

CoeffQuartet seed_rashba(const ModelSpec& m) {
  check_unit_pair(m, "Rashba");
  const Rational& kap = m.kappa1;
  require(m.kappa4 == -kap && m.gamma2 == kap && m.gamma3 == -kap, "Rashba");
  return rashba_quartet(kap * kap, kap, kap, m.k, m.omega0);
}

CoeffQuartet seed_jc(const ModelSpec& m) {
  const Rational& kap = m.kappa1;
  require(m.gamma2 == kap && m.omega2.is_zero() && m.kappa2.is_zero() && m.kappa3.is_zero() &&
              m.kappa4.is_zero() && m.gamma1.is_zero() && m.gamma3.is_zero() &&
              m.gamma4.is_zero(),
          "Jaynes-Cummings");
  if (m.omega1.is_zero())
    throw Error(ErrorCode::ZeroFrequency, "Jaynes-Cummings seed needs a nonzero mode frequency");
  return jc_quartet(kap * kap, kap, kap, m.k, m.omega1, m.omega0);
}

CoeffQuartet seed_jt_rescaled(const PatternParams& p) {
  require(p.omega == Rational(1), "Jahn-Teller");
  return jt_quartet(p.kappa_sq, 1, p.kappa_sq, p.k, p.omega0);
}

CoeffQuartet seed_rashba_rescaled(const PatternParams& p) {
  require(p.omega == Rational(1), "Rashba");
  return rashba_quartet(p.kappa_sq, 1, p.kappa_sq, p.k, p.omega0);
}

CoeffQuartet seed_jc_rescaled(const PatternParams& p) {
  if (p.omega.is_zero())
    throw Error(ErrorCode::ZeroFrequency, "Jaynes-Cummings seed needs a nonzero mode frequency");
  return jc_quartet(p.kappa_sq, 1, p.kappa_sq, p.k, p.omega, p.omega0);
}

CoeffQuartet rescale_coupling(const CoeffQuartet& q, const Rational& kappa) {
  if (kappa.is_zero()) throw Error(ErrorCode::InvalidArgument, "rescaling by zero coupling");
  return {q.a0(), q.b0() * RatFunc(Rational(1) / kappa), q.c0(), q.d0() * RatFunc(kappa)};
}

namespace {

// Result of a boson operator acting on x^p phi(z): x^(p+shift) (alpha phi + beta phi').
struct OpAction {
  int shift;
  BiPoly alpha;
  BiPoly beta;
};

enum class Op { A, Ad, B, Bd, Na, Nb };

OpAction act(Op op, Case c, const Rational& p) {
  const bool K = c == Case::K;
  switch (op) {
    case Op::Ad: return {1, 1, 0};
    case Op::A: return {-1, BiPoly(p), K ? kZ : -kZ};
    case Op::Bd: return K ? OpAction{-1, kZ, 0} : OpAction{1, kZ, 0};
    case Op::B: return K ? OpAction{1, 0, 1} : OpAction{-1, 0, 1};
    case Op::Na: return {0, BiPoly(p), K ? kZ : -kZ};
    case Op::Nb: return {0, 0, kZ};
  }
  return {0, 0, 0};
}

// One row: P1 phi1 + Q1 phi1' + P2 phi2 + Q2 phi2' = 0.
struct Row {
  BiPoly p1, q1, p2, q2;
};

struct Coupling {
  Op op;
  const Rational* g;
};

// Adds the coupling terms acting on the other component; false if any
// nonzero term lands on the wrong power of x.
bool add_coupling(const std::array<Coupling, 4>& terms, Case c, const Rational& p_other,
                  int required_shift, BiPoly& p, BiPoly& q) {
  for (const auto& t : terms) {
    if (t.g->is_zero()) continue;
    OpAction a = act(t.op, c, p_other);
    if (a.shift != required_shift) return false;
    p += *t.g * a.alpha;
    q += *t.g * a.beta;
  }
  return true;
}

}  // namespace

CoeffQuartet reduce_to_coupled_ode(const ModelSpec& m, Case c, Convention conv) {
  const std::array<Coupling, 4> up{{{Op::A, &m.kappa1}, {Op::Ad, &m.kappa2},
                                    {Op::B, &m.kappa3}, {Op::Bd, &m.kappa4}}};
  const std::array<Coupling, 4> down{{{Op::A, &m.gamma1}, {Op::Ad, &m.gamma2},
                                      {Op::B, &m.gamma3}, {Op::Bd, &m.gamma4}}};
  Rational offset = conv.zero_point ? (m.omega1 + m.omega2) / Rational(2) : Rational(0);
  const Rational split = Rational(conv.sigma0_sign) * m.omega0;

  // First orientation is the one the printed ansatz uses for each case.
  const int first = c == Case::K ? 0 : 1;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const bool low_top = (attempt == 0) == (first == 0);
    const Rational p_top = low_top ? m.k : m.k + 1;
    const Rational p_bot = low_top ? m.k + 1 : m.k;
    const int dshift = low_top ? 1 : -1;  // p_bot - p_top

    auto diag = [&](const Rational& pw, const Rational& level, BiPoly& p, BiPoly& q) {
      OpAction na = act(Op::Na, c, pw), nb = act(Op::Nb, c, pw);
      p = m.omega1 * na.alpha + m.omega2 * nb.alpha + BiPoly(offset + level) - kE;
      q = m.omega1 * na.beta + m.omega2 * nb.beta;
    };

    Row top, bot;
    diag(p_top, -split, top.p1, top.q1);
    diag(p_bot, split, bot.p2, bot.q2);
    if (!add_coupling(up, c, p_bot, -dshift, top.p2, top.q2)) continue;
    if (!add_coupling(down, c, p_top, dshift, bot.p1, bot.q1)) continue;

    const BiPoly det = top.q1 * bot.q2 - top.q2 * bot.q1;
    if (det.is_zero())
      throw Error(ErrorCode::SingularSystem, "derivative terms of the reduced system are degenerate");
    return {frac(top.q2 * bot.p1 - top.p1 * bot.q2, det),
            frac(top.q2 * bot.p2 - top.p2 * bot.q2, det),
            frac(bot.q1 * top.p2 - top.q1 * bot.p2, det),
            frac(bot.q1 * top.p1 - top.q1 * bot.p1, det)};
  }
  throw Error(ErrorCode::ConstraintViolation, std::string("Hamiltonian does not separate in the ") +
                                                  (c == Case::K ? "K" : "N") + " sector");
}

namespace {

// centre -+ sqrt(radicand)/2. A perfect-square radicand stays exact, so the
// degenerate and uncoupled limits come out without rounding.
std::pair<double, double> lines(const Rational& centre, const Rational& radicand) {
  if (radicand.sign() < 0) throw Error(ErrorCode::ComplexEnergy, "closed-form energy is complex");
  const mpz_class num = radicand.numerator(), den = radicand.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    const Rational r(mpq_class(mpz_class(sqrt(num)), mpz_class(sqrt(den))) / 2);
    return {(centre - r).to_double(), (centre + r).to_double()};
  }
  const double c = centre.to_double(), r = 0.5 * std::sqrt(radicand.to_double());
  return {c - r, c + r};
}

void check_level(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "level index n must be positive");
}

}  // namespace

std::pair<double, double> closed_form_jc(const Rational& k, int n, const Rational& omega,
                                         const Rational& omega0, const Rational& kappa_sq) {
  check_level(n);
  const Rational nn(n);
  const Rational s = omega + 2 * omega0;
  return lines((k + Rational(3, 2) - nn) * omega, 4 * kappa_sq * (k + 2 - nn) + s * s);
}

std::pair<double, double> closed_form_mjc(const Rational& k, int n, const Rational& kappa,
                                          const Rational& omega0) {
  check_level(n);
  const Rational s = 2 * omega0 - 1;
  return lines(k + Rational(3, 2), 8 * (k + 1 - Rational(n)) * kappa * kappa + s * s);
}

double DiracEnergies::at(int inner_sign, int outer_sign) const {
  const int i = (inner_sign > 0 ? 0 : 2) + (outer_sign > 0 ? 1 : 0);
  if (!real[i]) throw Error(ErrorCode::ComplexEnergy, "Dirac oscillator energy is complex");
  return energy[i];
}

DiracEnergies closed_form_dirac(const Rational& mass, const Rational& c,
                                const Rational& omega_prime, const Rational& hbar,
                                const Rational& k, int n) {
  check_level(n);
  const Rational mc2 = mass * c * c;
  DiracEnergies out;
  for (int inner = 0; inner < 2; ++inner) {
    const Rational label = inner == 0 ? k + Rational(n) : k - Rational(n);
    const Rational rad = 4 * mc2 * mc2 - 4 * hbar * omega_prime * mc2 * label;
    const bool real = rad.sign() >= 0;
    const double r = real ? 0.5 * std::sqrt(rad.to_double()) : std::nan("");
    out.energy[2 * inner] = -r;
    out.energy[2 * inner + 1] = r;
    out.real[2 * inner] = out.real[2 * inner + 1] = real;
  }
  return out;
}

}  // namespace aim::model
