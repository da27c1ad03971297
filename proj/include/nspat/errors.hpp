#pragma once

#include <stdexcept>
#include <string>

namespace nspat {

// Domain errors carry a stable code string so the CLI can map them to
// machine-readable error identifiers.
class domain_error : public std::runtime_error {
 public:
  domain_error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void throw_domain(const char* code, const std::string& what) {
  throw domain_error(code, what);
}

}  // namespace nspat
