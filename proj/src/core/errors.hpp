#pragma once

#include <stdexcept>
#include <string>

namespace ahs {

/// Error categories. Values mirror the C API status codes and the CLI
/// exit-code contract (0 success, 1 config, 2 non-certification, 3 path
/// failure, 4 internal invariant violation).
enum class Status {
  ok = 0,
  config_error = 1,
  not_certified = 2,
  path_failure = 3,
  internal_error = 4,
  argument_error = 5,
  io_error = 6,
};

class Error : public std::runtime_error {
public:
  Error(Status s, std::string msg) : std::runtime_error(std::move(msg)), status_(s) {}
  Status status() const noexcept { return status_; }

private:
  Status status_;
};

/// Stable short names, used by summaries, CSV cells and the C API.
inline const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::config_error: return "config-error";
    case Status::not_certified: return "not-certified";
    case Status::path_failure: return "path-failure";
    case Status::internal_error: return "internal-error";
    case Status::argument_error: return "argument-error";
    case Status::io_error: return "io-error";
  }
  return "unknown";
}

[[noreturn]] inline void fail(Status s, const std::string& msg) { throw Error(s, msg); }

inline void require(bool cond, Status s, const std::string& msg) {
  if (!cond) fail(s, msg);
}

} // namespace ahs
