#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dqc {

/// Domain error with a stable, machine-readable name ("NotHermitian",
/// "NotContraction", ...). what() is "<name>: <detail>"; name() is the
/// bare name, which is the string contract the CLI exposes on stderr.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void raise(const std::string& name, const std::string& detail) {
  throw Error(name, detail);
}

}  // namespace dqc
