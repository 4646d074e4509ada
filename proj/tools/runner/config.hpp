#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace runner {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Sweep {
  std::string param;
  std::string from, to;  // canonical rational text
  int steps = 0;
};

struct RunConfig {
  std::string model = "jt";
  // Model parameters by name, values in canonical rational text ("case" holds K or N).
  std::map<std::string, std::string> params;
  int n_max = 14;
  double tol = 1e-6;
  std::string z0 = "0";
  int levels = 5;
  std::string which = "d1";
  std::optional<Sweep> sweep;
  std::string output_path;
  std::string verify;
};

/// Applies one key/value pair, normalizing rationals. Unknown keys are taken
/// as model parameters and checked when the model is built.
void set_value(RunConfig& cfg, const std::string& key, const std::string& value);

/// Flat "key = value" text with '#' comments.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& cfg);

/// Structural checks: n_max >= 2, levels >= 1, tol > 0, sweep steps >= 2.
void validate(const RunConfig& cfg);

/// Shortest text that reads back to the same double.
std::string format_double(double v);

}  // namespace runner
