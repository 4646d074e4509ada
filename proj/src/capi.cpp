#include "aim/aim.h"

#include <algorithm>
#include <cstring>
#include <map>
#include <new>
#include <optional>
#include <string>

#include "aim/engine.hpp"
#include "aim/error.hpp"
#include "aim/verify.hpp"

using aim::Error;
using aim::ErrorCode;
using aim::algebra::Rational;
namespace model = aim::model;
namespace engine = aim::engine;

struct aim_model {
  std::string kind;
  std::map<std::string, Rational> params;
  model::Case sector = model::Case::K;
};

struct aim_spectrum {
  engine::SpectrumResult result;
};

struct aim_eigenfunction {
  engine::PolyEigenfunction f;
};

struct aim_report {
  std::vector<aim::verify::Check> checks;
};

namespace {

thread_local std::string g_last_error;

aim_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return AIM_E_INVALID_ARGUMENT;
    case ErrorCode::Parse: return AIM_E_PARSE;
    case ErrorCode::ZeroPolynomial: return AIM_E_ZERO_POLYNOMIAL;
    case ErrorCode::DegreeZero: return AIM_E_DEGREE_ZERO;
    case ErrorCode::BadPattern: return AIM_E_BAD_PATTERN;
    case ErrorCode::ZeroFrequency: return AIM_E_ZERO_FREQUENCY;
    case ErrorCode::ConstraintViolation: return AIM_E_CONSTRAINT_VIOLATION;
    case ErrorCode::SingularSystem: return AIM_E_SINGULAR_SYSTEM;
    case ErrorCode::ComplexEnergy: return AIM_E_COMPLEX_ENERGY;
    case ErrorCode::IdenticallyZero: return AIM_E_IDENTICALLY_ZERO;
    case ErrorCode::NoRealRoots: return AIM_E_NO_REAL_ROOTS;
    case ErrorCode::Decoupled: return AIM_E_DECOUPLED;
    case ErrorCode::NotPolynomial: return AIM_E_NOT_POLYNOMIAL;
    case ErrorCode::DomainError: return AIM_E_DOMAIN_ERROR;
  }
  return AIM_E_INTERNAL;
}

template <class F>
aim_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return AIM_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  }
  return AIM_E_INTERNAL;
}

void need(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

Rational parse(const char* text, const char* what) {
  need(text, what);
  return Rational::parse(text);
}

void write_text(const std::string& s, char* buf, size_t len) {
  need(buf, "output buffer");
  if (s.size() + 1 > len) throw Error(ErrorCode::InvalidArgument, "output buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
}

const std::map<std::string, std::vector<std::string>>& known_keys() {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"jt", {"kappa", "kappa_sq", "k", "omega", "omega0"}},
      {"rashba", {"kappa", "kappa_sq", "k", "omega", "omega0"}},
      {"jc", {"kappa", "kappa_sq", "k", "omega", "omega0"}},
      {"mjc", {"kappa", "k", "omega0"}},
      {"dirac", {"mass", "c", "omega_prime", "hbar", "k"}},
      {"custom",
       {"omega1", "omega2", "omega0", "kappa1", "kappa2", "kappa3", "kappa4", "gamma1", "gamma2",
        "gamma3", "gamma4", "k", "case"}},
  };
  return keys;
}

Rational get(const aim_model& m, const char* key, const Rational& dflt) {
  auto it = m.params.find(key);
  return it == m.params.end() ? dflt : it->second;
}

bool iterative(const aim_model& m) { return m.kind != "mjc" && m.kind != "dirac"; }

model::Case sector_of(const aim_model& m) {
  if (m.kind == "jc") return model::Case::N;
  if (m.kind == "custom") return m.sector;
  return model::Case::K;
}

model::CoeffQuartet quartet(const aim_model& m) {
  if (!iterative(m))
    throw Error(ErrorCode::InvalidArgument,
                "model '" + m.kind + "' has no iterative solver; use the closed form");
  const Rational k = get(m, "k", 0), w = get(m, "omega", 1), w0 = get(m, "omega0", 0);
  if (m.kind == "custom") {
    model::ModelSpec s;
    s.omega1 = get(m, "omega1", 0);
    s.omega2 = get(m, "omega2", 0);
    s.omega0 = w0;
    s.kappa1 = get(m, "kappa1", 0);
    s.kappa2 = get(m, "kappa2", 0);
    s.kappa3 = get(m, "kappa3", 0);
    s.kappa4 = get(m, "kappa4", 0);
    s.gamma1 = get(m, "gamma1", 0);
    s.gamma2 = get(m, "gamma2", 0);
    s.gamma3 = get(m, "gamma3", 0);
    s.gamma4 = get(m, "gamma4", 0);
    s.k = k;
    return model::reduce_to_coupled_ode(s, m.sector);
  }
  if (m.params.count("kappa_sq")) {
    const model::PatternParams p{m.params.at("kappa_sq"), k, w, w0};
    if (m.kind == "jt") return model::seed_jt_rescaled(p);
    if (m.kind == "rashba") return model::seed_rashba_rescaled(p);
    return model::seed_jc_rescaled(p);
  }
  const Rational kap = get(m, "kappa", 0);
  if (m.kind == "jt") return model::seed_jt(model::jt_model(kap, k, w0, w));
  if (m.kind == "rashba") return model::seed_rashba(model::rashba_model(kap, k, w0, w));
  return model::seed_jc(model::jc_model(kap, k, w, w0));
}

}  // namespace

extern "C" {

const char* aim_last_error(void) { return g_last_error.c_str(); }

const char* aim_status_name(aim_status s) {
  switch (s) {
    case AIM_OK: return "ok";
    case AIM_E_INTERNAL: return "internal error";
    default: return aim::to_string(static_cast<ErrorCode>(s - 1));
  }
}

aim_status aim_rational_normalize(const char* text, char* buf, size_t len) {
  return guarded([&] { write_text(parse(text, "text").to_string(), buf, len); });
}

aim_status aim_rational_interpolate(const char* from, const char* to, int i, int steps, char* buf,
                                    size_t len) {
  return guarded([&] {
    if (steps < 2 || i < 0 || i >= steps)
      throw Error(ErrorCode::InvalidArgument, "interpolation needs steps >= 2 and 0 <= i < steps");
    const Rational a = parse(from, "from"), b = parse(to, "to");
    write_text((a + (b - a) * Rational(i, steps - 1)).to_string(), buf, len);
  });
}

aim_status aim_rational_to_double(const char* text, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = parse(text, "text").to_double();
  });
}

aim_status aim_model_create(const char* kind, aim_model** out) {
  return guarded([&] {
    need(kind, "kind");
    need(out, "out");
    if (!known_keys().count(kind))
      throw Error(ErrorCode::InvalidArgument, std::string("unknown model '") + kind + "'");
    *out = new aim_model{kind, {}, model::Case::K};
  });
}

void aim_model_free(aim_model* m) { delete m; }

aim_status aim_model_set(aim_model* m, const char* key, const char* value) {
  return guarded([&] {
    need(m, "model");
    need(key, "key");
    need(value, "value");
    const auto& keys = known_keys().at(m->kind);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw Error(ErrorCode::InvalidArgument,
                  std::string("parameter '") + key + "' does not apply to model '" + m->kind + "'");
    const std::string k = key;
    if (k == "case") {
      const std::string v = value;
      if (v != "K" && v != "N") throw Error(ErrorCode::InvalidArgument, "case must be K or N");
      m->sector = v == "K" ? model::Case::K : model::Case::N;
      return;
    }
    Rational r = Rational::parse(value);
    // kappa and kappa_sq describe the same coupling; the later one wins.
    if (k == "kappa") m->params.erase("kappa_sq");
    if (k == "kappa_sq") m->params.erase("kappa");
    m->params[k] = r;
  });
}

int aim_model_iterative(const aim_model* m) { return m && iterative(*m) ? 1 : 0; }

aim_status aim_model_validate(const aim_model* m, int* hermitian, int* classes) {
  return guarded([&] {
    need(m, "model");
    model::ModelSpec s;
    if (m->kind == "custom") {
      s.omega1 = get(*m, "omega1", 0);
      s.omega2 = get(*m, "omega2", 0);
      s.kappa1 = get(*m, "kappa1", 0);
      s.kappa2 = get(*m, "kappa2", 0);
      s.kappa3 = get(*m, "kappa3", 0);
      s.kappa4 = get(*m, "kappa4", 0);
      s.gamma1 = get(*m, "gamma1", 0);
      s.gamma2 = get(*m, "gamma2", 0);
      s.gamma3 = get(*m, "gamma3", 0);
      s.gamma4 = get(*m, "gamma4", 0);
    } else if (m->kind == "jt" || m->kind == "rashba" || m->kind == "jc" || m->kind == "mjc") {
      const Rational kap = get(*m, "kappa", 1);
      const Rational w = get(*m, "omega", 1), w0 = get(*m, "omega0", 0), k = get(*m, "k", 0);
      s = m->kind == "jt"       ? model::jt_model(kap, k, w0, w)
          : m->kind == "rashba" ? model::rashba_model(kap, k, w0, w)
          : m->kind == "jc"     ? model::jc_model(kap, k, w, w0)
                                : model::mjc_model(kap, k, w, w0);
    } else {
      throw Error(ErrorCode::InvalidArgument, "model '" + m->kind + "' has no coupling pattern");
    }
    const auto v = model::validate_model(s);
    int mask = 0;
    for (auto c : v.classes) mask |= 1 << static_cast<int>(c);
    if (hermitian) *hermitian = v.hermitian ? 1 : 0;
    if (classes) *classes = mask;
  });
}

aim_status aim_solve(const aim_model* m, const aim_solve_options* opts, aim_spectrum** out) {
  return guarded([&] {
    need(m, "model");
    need(out, "out");
    engine::SolveOptions o;
    if (opts) {
      if (opts->z0) o.z0 = Rational::parse(opts->z0);
      o.n_max = opts->n_max;
      o.tol = opts->tol;
      switch (opts->which) {
        case AIM_DELTA_1: o.which = engine::WhichDelta::D1; break;
        case AIM_DELTA_2: o.which = engine::WhichDelta::D2; break;
        case AIM_DELTA_BOTH: o.which = engine::WhichDelta::Both; break;
        default: throw Error(ErrorCode::InvalidArgument, "unknown delta selector");
      }
    }
    auto res = engine::solve_spectrum(quartet(*m), o);
    *out = new aim_spectrum{std::move(res)};
  });
}

void aim_spectrum_free(aim_spectrum* s) { delete s; }

size_t aim_spectrum_level_count(const aim_spectrum* s) { return s ? s->result.levels.size() : 0; }

aim_status aim_spectrum_level(const aim_spectrum* s, size_t i, aim_level_info* out) {
  return guarded([&] {
    need(s, "spectrum");
    need(out, "out");
    if (i >= s->result.levels.size()) throw Error(ErrorCode::InvalidArgument, "level out of range");
    const auto& l = s->result.levels[i];
    *out = {l.index, l.energy, l.converged, l.n_converged, l.flagged, l.delta, l.history.size()};
  });
}

aim_status aim_spectrum_history(const aim_spectrum* s, size_t level, size_t j, int* n,
                                double* value) {
  return guarded([&] {
    need(s, "spectrum");
    if (level >= s->result.levels.size() || j >= s->result.levels[level].history.size())
      throw Error(ErrorCode::InvalidArgument, "history index out of range");
    const auto& h = s->result.levels[level].history[j];
    if (n) *n = h.first;
    if (value) *value = h.second;
  });
}

int aim_spectrum_discarded_first_root(const aim_spectrum* s) {
  return s && s->result.discarded_first_root ? 1 : 0;
}

aim_status aim_closed_form_jc(const char* k, int n, const char* omega, const char* omega0,
                              const char* kappa_sq, double out[2]) {
  return guarded([&] {
    need(out, "out");
    auto [lo, hi] = model::closed_form_jc(parse(k, "k"), n, parse(omega, "omega"),
                                          parse(omega0, "omega0"), parse(kappa_sq, "kappa_sq"));
    out[0] = lo;
    out[1] = hi;
  });
}

aim_status aim_closed_form_mjc(const char* k, int n, const char* kappa, const char* omega0,
                               double out[2]) {
  return guarded([&] {
    need(out, "out");
    auto [lo, hi] =
        model::closed_form_mjc(parse(k, "k"), n, parse(kappa, "kappa"), parse(omega0, "omega0"));
    out[0] = lo;
    out[1] = hi;
  });
}

aim_status aim_closed_form_dirac(const char* mass, const char* c, const char* omega_prime,
                                 const char* hbar, const char* k, int n, double energy[4],
                                 int real[4]) {
  return guarded([&] {
    need(energy, "energy");
    const auto d = model::closed_form_dirac(parse(mass, "mass"), parse(c, "c"),
                                            parse(omega_prime, "omega_prime"),
                                            parse(hbar, "hbar"), parse(k, "k"), n);
    for (int i = 0; i < 4; ++i) {
      energy[i] = d.energy[i];
      if (real) real[i] = d.real[i] ? 1 : 0;
    }
  });
}

aim_status aim_eigenfunction_compute(const aim_model* m, double energy, int max_deg,
                                     double sample_tol, aim_eigenfunction** out) {
  return guarded([&] {
    need(m, "model");
    need(out, "out");
    auto f = engine::polynomial_eigenfunction(quartet(*m), energy, max_deg, sample_tol);
    *out = new aim_eigenfunction{std::move(f)};
  });
}

void aim_eigenfunction_free(aim_eigenfunction* f) { delete f; }

aim_status aim_eigenfunction_coeffs(const aim_eigenfunction* f, int component,
                                    const double** data, size_t* len) {
  return guarded([&] {
    need(f, "eigenfunction");
    need(data, "data");
    need(len, "len");
    if (component != 1 && component != 2)
      throw Error(ErrorCode::InvalidArgument, "component must be 1 or 2");
    const auto& v = component == 1 ? f->f.phi1 : f->f.phi2;
    *data = v.data();
    *len = v.size();
  });
}

double aim_eigenfunction_residual(const aim_eigenfunction* f) { return f ? f->f.residual : -1; }

aim_status aim_wavefunction(const aim_model* m, const aim_eigenfunction* f, const double* xs,
                            const double* ys, size_t count, double* up, double* down) {
  return guarded([&] {
    need(m, "model");
    need(f, "eigenfunction");
    if (count && (!xs || !ys || !up || !down))
      throw Error(ErrorCode::InvalidArgument, "grid or output arrays are null");
    std::vector<std::pair<double, double>> grid;
    for (size_t i = 0; i < count; ++i) grid.emplace_back(xs[i], ys[i]);
    const auto pts = engine::assemble_wavefunction(sector_of(*m), get(*m, "k", 0), f->f, grid);
    for (size_t i = 0; i < count; ++i) {
      up[i] = pts[i].psi_up;
      down[i] = pts[i].psi_down;
    }
  });
}

aim_status aim_verify(const char* suite, aim_report** out) {
  return guarded([&] {
    need(suite, "suite");
    need(out, "out");
    *out = new aim_report{aim::verify::run_suite(suite)};
  });
}

void aim_report_free(aim_report* r) { delete r; }

size_t aim_report_count(const aim_report* r) { return r ? r->checks.size() : 0; }

aim_status aim_report_case(const aim_report* r, size_t i, aim_check_info* out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    if (i >= r->checks.size()) throw Error(ErrorCode::InvalidArgument, "case out of range");
    const auto& c = r->checks[i];
    *out = {c.suite.c_str(), c.name.c_str(), c.observed, c.expected, c.tol, c.pass ? 1 : 0,
            c.note.c_str()};
  });
}

}  // extern "C"
