#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lagc/signature.hpp"

namespace lagc::cli {

/// One invocation of the command-line tool.
struct JobSpec {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<Signature> sig;
  std::uint64_t seed = 1;
  int order = 1;
  bool json = false;
  std::optional<std::string> out;

  // corpus / sweep shape
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> r;
  std::optional<int> s;
  int count = 50;
  int degree = 2;
};

/// Exit codes: 0 all contracts hold, 1 a contract failed, 2 input error.
enum ExitCode : int { kOk = 0, kContractFailed = 1, kInputError = 2 };

struct RunResult {
  int exit_code = kOk;
  /// Report text (or JSON document) destined for stdout / --out.
  std::string output;
  /// Diagnostic for input errors, destined for stderr.
  std::string error;
};

/// Executes a job. Never throws for bad input; errors come back as exit 2.
RunResult run(const JobSpec& job);

/// Parses argv into a job and runs it, printing to stdout/stderr.
int main_entry(int argc, char** argv);

}  // namespace lagc::cli
