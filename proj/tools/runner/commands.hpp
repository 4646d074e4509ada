#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace runner {

enum ExitCode { kOk = 0, kBadInput = 1, kNotConverged = 2, kVerifyFailed = 3 };

struct Row {
  int level = 0;  // -1 for flagged roots
  double energy = 0;
  int n_converged = 0;
  bool converged = false;
  bool flagged = false;
};

struct PointResult {
  int code = kOk;
  std::string error;
  std::vector<Row> rows;
};

/// Spectrum for one configuration: iterative solve or closed-form lines.
PointResult evaluate(const RunConfig& cfg);

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& suite, std::ostream& out, std::ostream& err);

/// Dispatches on the config (verify, sweep or solve) and handles --out.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Worker count for sweeps: AIM_THREADS if it is a positive integer.
unsigned sweep_threads();

}  // namespace runner
