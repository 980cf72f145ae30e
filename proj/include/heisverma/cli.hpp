#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "heisverma/rational.hpp"

namespace heisverma {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitMatch = 0, kExitMismatch = 1, kExitUsage = 2 };

struct RunConfig {
  std::string command;  // realize, solve, classify, verify, examples, conjecture
  unsigned n = 3;
  unsigned r = 0;
  bool generic = true;  // lambda given as "generic" (or omitted)
  Rational l1, l2;
  unsigned m_max = 2;
  std::optional<long> t;
  unsigned a = 1;
  std::string output;  // empty for standard output
  std::string format = "text";
};

/// Parses "generic" or "p,q" with rational p, q. Throws std::invalid_argument.
void parse_lambda(const std::string& text, RunConfig& cfg);

/// Entry point of the heisverma tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs one parsed configuration, writing the report to out.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace heisverma
