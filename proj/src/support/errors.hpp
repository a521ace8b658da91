#pragma once

#include <stdexcept>
#include <string>

namespace bsim {

enum class ErrorKind {
  range,        // argument outside the supported property/parameter domain
  phase,        // wrong thermodynamic region for the requested evaluation
  config,       // malformed scenario, parameter or override input
  degenerate,   // numerical degeneracy in the model equations
  dryout,       // riser section water mass exhausted
  convergence,  // iterative solver failed to converge
  io,           // file access or parse failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace bsim
