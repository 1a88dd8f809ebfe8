#ifndef SIGMAGB_CLI_HPP
#define SIGMAGB_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sigmagb/gb_engine.hpp"
#include "sigmagb/problem.hpp"

namespace sigmagb {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitParse = 2, kExitAborted = 3 };

struct RunReport {
  std::string name;
  std::string strategy;
  std::string bound;
  std::size_t in = 0;
  std::size_t out = 0;
  std::size_t minout = 0;
  std::size_t pairs = 0;
  double time_ms = 0.0;
  std::optional<bool> certified;
  bool aborted = false;
  std::size_t reopened = 0;
};

RunReport make_report(const GBRun& run);
std::string report_json(const RunReport& r);

struct BenchEntry {
  std::string name;    // e.g. "heat-12w-sigma"
  std::string system;  // data file stem
  Ranking ranking;
  Strategy strategy;
  int bound;
  // Runs that take far longer than the rest; skipped unless requested.
  bool long_running = false;
};

// Every bundled system under the configured rankings and strategies.
std::vector<BenchEntry> default_suite();

// Loads the problem, applies the ranking, runs the strategy.
RunReport run_entry(const BenchEntry& e, const std::string& data_dir, std::vector<DiffPolynomial>* basis = nullptr,
                    std::size_t max_pairs = 0);

// Full command-line driver; returns the process exit code.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sigmagb

#endif
