#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace depthlab {

// All library failures are reported through this exception. `kind` is a
// stable machine-readable tag (e.g. "RingMismatch", "NotDomain"); the
// message carries the human detail. The scenario interpreter records both.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace depthlab
