#include "config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "aim/aim.h"

namespace runner {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string rational(const std::string& key, const std::string& text) {
  char buf[512];
  if (aim_rational_normalize(text.c_str(), buf, sizeof buf) != AIM_OK)
    throw ConfigError(key + ": " + aim_last_error());
  return buf;
}

int to_int(const std::string& key, const std::string& text) {
  int v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    throw ConfigError(key + ": expected an integer, got '" + text + "'");
  return v;
}

double to_real(const std::string& key, const std::string& text) {
  double v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    throw ConfigError(key + ": expected a number, got '" + text + "'");
  return v;
}

Sweep parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(trim(item));
  if (parts.size() != 4 || parts[0].empty())
    throw ConfigError("sweep: expected <param>:<from>:<to>:<steps>, got '" + text + "'");
  return {parts[0], rational("sweep", parts[1]), rational("sweep", parts[2]),
          to_int("sweep", parts[3])};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

void set_value(RunConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key.empty()) throw ConfigError("empty key");
  if (key == "model") {
    cfg.model = value;
  } else if (key == "n_max") {
    cfg.n_max = to_int(key, value);
  } else if (key == "tol") {
    cfg.tol = to_real(key, value);
  } else if (key == "z0") {
    cfg.z0 = rational(key, value);
  } else if (key == "levels") {
    cfg.levels = to_int(key, value);
  } else if (key == "which") {
    if (value != "d1" && value != "d2" && value != "both")
      throw ConfigError("which: expected d1, d2 or both");
    cfg.which = value;
  } else if (key == "sweep") {
    cfg.sweep = parse_sweep(value);
  } else if (key == "out") {
    cfg.output_path = value;
  } else if (key == "verify") {
    cfg.verify = value;
  } else if (key == "case") {
    if (value != "K" && value != "N") throw ConfigError("case: expected K or N");
    cfg.params[key] = value;
  } else {
    // kappa and kappa_sq name the same coupling; keep only the latest.
    if (key == "kappa") cfg.params.erase("kappa_sq");
    if (key == "kappa_sq") cfg.params.erase("kappa");
    cfg.params[key] = rational(key, value);
  }
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    try {
      set_value(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream os;
  os << "model = " << cfg.model << "\n";
  for (const auto& [k, v] : cfg.params) os << k << " = " << v << "\n";
  os << "n_max = " << cfg.n_max << "\n";
  os << "tol = " << format_double(cfg.tol) << "\n";
  os << "z0 = " << cfg.z0 << "\n";
  os << "levels = " << cfg.levels << "\n";
  os << "which = " << cfg.which << "\n";
  if (cfg.sweep)
    os << "sweep = " << cfg.sweep->param << ":" << cfg.sweep->from << ":" << cfg.sweep->to << ":"
       << cfg.sweep->steps << "\n";
  if (!cfg.output_path.empty()) os << "out = " << cfg.output_path << "\n";
  if (!cfg.verify.empty()) os << "verify = " << cfg.verify << "\n";
  return os.str();
}

void validate(const RunConfig& cfg) {
  if (cfg.n_max < 2) throw ConfigError("n_max must be at least 2");
  if (cfg.levels < 1) throw ConfigError("levels must be at least 1");
  if (!(cfg.tol > 0)) throw ConfigError("tol must be positive");
  if (cfg.sweep) {
    if (cfg.sweep->steps < 2) throw ConfigError("sweep needs at least 2 steps");
    if (cfg.sweep->param == "case") throw ConfigError("sweep parameter must be numeric");
  }
}

}  // namespace runner
