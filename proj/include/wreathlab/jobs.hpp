#pragma once

#include <string>

#include <json.hpp>

namespace wreathlab {

/// One unit of work: a command name, its JSON arguments, and the requested
/// output format ("text" or "json"). The same requests run from CLI flags
/// and from batch files.
struct JobRequest {
  std::string command;
  nlohmann::json args;
  std::string format = "text";
};

/// Exit codes: 0 success, 1 operation error, 2 parse/config error,
/// 3 verification mismatch. `report` is the JSON envelope
/// {command, method, inputs, result} (or {command, error, exit_code});
/// `text` renders the same values for humans.
struct JobResult {
  int exit_code = 0;
  nlohmann::json report;
  std::string text;
};

/// Dispatch one request. Never throws: errors are mapped to exit codes and
/// an error envelope.
JobResult run_job(const JobRequest& req);

/// Run a JSON array of jobs ({"command": ..., "args": {...}} each) in
/// order. The aggregate exit code is the maximum over the jobs, so it is
/// non-zero iff any job errored or any verification mismatched. Throws
/// ParseError on schema violations.
JobResult run_batch(const nlohmann::json& jobs, const std::string& format);

/// run_batch on a JSON file; I/O problems surface as ParseError.
JobResult run_batch_file(const std::string& path, const std::string& format);

}  // namespace wreathlab
