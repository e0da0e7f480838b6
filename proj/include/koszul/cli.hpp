#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace koszul {

// One CLI invocation: a command, a model file, and command-specific
// parameters. Reports are deterministic; repeated runs on identical inputs
// emit identical bytes.
struct JobSpec {
  std::string command;
  std::string model_path;
  std::map<std::string, std::string> params;
  bool json_output = true;
};

// Executes the job, writing the report to `out`. Returns 0 on success, 2 on
// a precondition violation, 3 on malformed input, 1 otherwise.
int run_job(const JobSpec& job, std::ostream& out);

}  // namespace koszul
