#pragma once
// Error taxonomy shared by the core, the C API and the CLI exit codes:
//   usage         -> malformed request (bad JSON shape, unknown name)
//   precondition  -> a documented operation precondition was violated
//   not_found     -> a search/iteration budget ran out before success
//   numeric       -> internal numerical failure (step underflow, ...)

#include <stdexcept>
#include <string>

namespace acp {

enum class ErrorCode { usage = 1, precondition = 2, not_found = 3, numeric = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool ok, ErrorCode code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

inline void require_pre(bool ok, const std::string& msg) {
  require(ok, ErrorCode::precondition, msg);
}

}  // namespace acp
