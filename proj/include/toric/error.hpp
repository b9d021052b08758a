#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Domain error with a stable machine-readable code ("NonPrimitiveRay",
// "NotInSupport", ...) and a human-readable detail message. The CLI maps
// these to {"error": code, "detail": ...} with exit status 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)), detail_(detail) {}

  const std::string& code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string code_;
  std::string detail_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace toric
