#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>
#include <thread>

#include "aim/aim.h"

namespace runner {

namespace {

struct ModelDeleter {
  void operator()(aim_model* m) const { aim_model_free(m); }
};
struct SpectrumDeleter {
  void operator()(aim_spectrum* s) const { aim_spectrum_free(s); }
};
struct ReportDeleter {
  void operator()(aim_report* r) const { aim_report_free(r); }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::string param(const RunConfig& cfg, const char* key, const char* dflt) {
  auto it = cfg.params.find(key);
  return it == cfg.params.end() ? dflt : it->second;
}

PointResult failure(int code, std::string msg) {
  PointResult r;
  r.code = code;
  r.error = std::move(msg);
  return r;
}

// Closed-form lines n = 1..levels, real branches, lowest `levels` of them.
PointResult closed_form(const RunConfig& cfg) {
  std::vector<double> energies;
  const std::string k = param(cfg, "k", "0");
  for (int n = 1; n <= cfg.levels; ++n) {
    if (cfg.model == "mjc") {
      double e[2];
      const std::string kap = param(cfg, "kappa", "0"), w0 = param(cfg, "omega0", "0");
      if (aim_closed_form_mjc(k.c_str(), n, kap.c_str(), w0.c_str(), e) == AIM_OK)
        energies.insert(energies.end(), {e[0], e[1]});
    } else {
      double e[4];
      int real[4];
      const std::string m = param(cfg, "mass", "1"), c = param(cfg, "c", "1"),
                        wp = param(cfg, "omega_prime", "1"), hb = param(cfg, "hbar", "1");
      if (aim_closed_form_dirac(m.c_str(), c.c_str(), wp.c_str(), hb.c_str(), k.c_str(), n, e,
                                real) != AIM_OK)
        return failure(kBadInput, aim_last_error());
      for (int i = 0; i < 4; ++i)
        if (real[i]) energies.push_back(e[i]);
    }
  }
  std::sort(energies.begin(), energies.end());
  if (energies.size() > static_cast<std::size_t>(cfg.levels)) energies.resize(cfg.levels);
  PointResult r;
  for (std::size_t i = 0; i < energies.size(); ++i)
    r.rows.push_back({static_cast<int>(i), energies[i], 0, true, false});
  return r;
}

}  // namespace

PointResult evaluate(const RunConfig& cfg) {
  aim_model* raw = nullptr;
  if (aim_model_create(cfg.model.c_str(), &raw) != AIM_OK) return failure(kBadInput, aim_last_error());
  std::unique_ptr<aim_model, ModelDeleter> model(raw);
  for (const auto& [k, v] : cfg.params)
    if (aim_model_set(model.get(), k.c_str(), v.c_str()) != AIM_OK)
      return failure(kBadInput, aim_last_error());

  if (!aim_model_iterative(model.get())) return closed_form(cfg);

  if (cfg.model == "custom") {
    int herm = 0, classes = 0;
    if (aim_model_validate(model.get(), &herm, &classes) != AIM_OK)
      return failure(kBadInput, aim_last_error());
    if (classes == 0) return failure(kBadInput, "custom couplings satisfy no symmetry class");
  }

  aim_solve_options opts{cfg.z0.c_str(), cfg.n_max, cfg.tol,
                         cfg.which == "d2"     ? AIM_DELTA_2
                         : cfg.which == "both" ? AIM_DELTA_BOTH
                                               : AIM_DELTA_1};
  aim_spectrum* sraw = nullptr;
  const aim_status st = aim_solve(model.get(), &opts, &sraw);
  if (st == AIM_E_DECOUPLED) return failure(kBadInput, "uncoupled system; use verify/closed-form");
  if (st == AIM_E_NO_REAL_ROOTS) return failure(kNotConverged, aim_last_error());
  if (st != AIM_OK) return failure(kBadInput, aim_last_error());
  std::unique_ptr<aim_spectrum, SpectrumDeleter> spec(sraw);

  PointResult r;
  std::vector<Row> all;
  for (std::size_t i = 0; i < aim_spectrum_level_count(spec.get()); ++i) {
    aim_level_info l;
    aim_spectrum_level(spec.get(), i, &l);
    all.push_back({l.index, l.energy, l.n_converged, l.converged != 0, l.flagged != 0});
  }
  // The requested physical levels, plus any flagged root lying among them.
  double top = -INFINITY;
  int found = 0;
  for (const auto& row : all)
    if (!row.flagged && row.level < cfg.levels) {
      top = row.energy;
      ++found;
    }
  for (const auto& row : all)
    if (row.flagged ? row.energy <= top : row.level < cfg.levels) r.rows.push_back(row);
  bool ok = found == cfg.levels;
  for (const auto& row : r.rows)
    if (!row.flagged && !row.converged) ok = false;
  if (!ok) {
    r.code = kNotConverged;
    r.error = found < cfg.levels ? "fewer levels than requested" : "a requested level did not converge";
  }
  return r;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  const PointResult r = evaluate(cfg);
  if (r.code == kBadInput) {
    err << "error: " << r.error << "\n";
    return kBadInput;
  }
  out << "level,energy,n_converged,converged,flagged_first_root\n";
  for (const auto& row : r.rows)
    out << row.level << "," << num(row.energy) << "," << row.n_converged << ","
        << flag(row.converged) << "," << flag(row.flagged) << "\n";
  if (r.code != kOk) err << "warning: " << r.error << "\n";
  return r.code;
}

unsigned sweep_threads() {
  if (const char* env = std::getenv("AIM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    if (!cfg.sweep) throw ConfigError("no sweep given");
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  const Sweep& sw = *cfg.sweep;
  std::vector<RunConfig> points(sw.steps, cfg);
  std::vector<double> values(sw.steps);
  for (int i = 0; i < sw.steps; ++i) {
    char buf[512];
    if (aim_rational_interpolate(sw.from.c_str(), sw.to.c_str(), i, sw.steps, buf, sizeof buf) !=
        AIM_OK) {
      err << "error: " << aim_last_error() << "\n";
      return kBadInput;
    }
    points[i].sweep.reset();
    try {
      set_value(points[i], sw.param, buf);
    } catch (const ConfigError& e) {
      err << "error: " << e.what() << "\n";
      return kBadInput;
    }
    aim_rational_to_double(buf, &values[i]);
  }

  // A sweep over a parameter the model does not have is a config error, not
  // a per-point failure.
  {
    aim_model* raw = nullptr;
    if (aim_model_create(cfg.model.c_str(), &raw) != AIM_OK ||
        aim_model_set(raw, sw.param.c_str(), "0") != AIM_OK) {
      err << "error: " << aim_last_error() << "\n";
      aim_model_free(raw);
      return kBadInput;
    }
    aim_model_free(raw);
  }

  std::vector<PointResult> results(sw.steps);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next++) < sw.steps;) results[i] = evaluate(points[i]);
  };
  const unsigned n_threads = std::min<unsigned>(sweep_threads(), sw.steps);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kOk;
  out << "sweep_value,level,energy,converged\n";
  for (int i = 0; i < sw.steps; ++i) {
    const auto& r = results[i];
    if (r.code != kOk) {
      code = kNotConverged;
      err << "warning: " << sw.param << "=" << num(values[i]) << ": " << r.error << "\n";
    }
    for (int level = 0; level < cfg.levels; ++level) {
      const Row* hit = nullptr;
      for (const auto& row : r.rows)
        if (!row.flagged && row.level == level) hit = &row;
      out << num(values[i]) << "," << level << ",";
      if (hit && r.code != kBadInput)
        out << num(hit->energy) << "," << flag(hit->converged) << "\n";
      else
        out << ",false\n";
    }
  }
  return code;
}

int cmd_verify(const std::string& suite, std::ostream& out, std::ostream& err) {
  aim_report* raw = nullptr;
  if (aim_verify(suite.c_str(), &raw) != AIM_OK) {
    err << "error: " << aim_last_error() << "\n";
    return kBadInput;
  }
  std::unique_ptr<aim_report, ReportDeleter> report(raw);
  std::size_t passed = 0;
  const std::size_t total = aim_report_count(report.get());
  for (std::size_t i = 0; i < total; ++i) {
    aim_check_info c;
    aim_report_case(report.get(), i, &c);
    passed += c.pass ? 1 : 0;
    out << (c.pass ? "PASS " : "FAIL ") << c.suite << " " << c.name << "  observed=" << num(c.observed)
        << " expected=" << num(c.expected) << " tol=" << num(c.tol);
    if (c.note && *c.note) out << "  (" << c.note << ")";
    out << "\n";
  }
  out << passed << "/" << total << " passed\n";
  return passed == total ? kOk : kVerifyFailed;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.verify.empty()) return cmd_verify(cfg.verify, out, err);
  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << cfg.output_path << "'\n";
      return kBadInput;
    }
    sink = &file;
  }
  return cfg.sweep ? cmd_sweep(cfg, *sink, err) : cmd_solve(cfg, *sink, err);
}

}  // namespace runner
