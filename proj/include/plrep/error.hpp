#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace plrep {

// All domain and validation failures carry a stable machine-readable name
// (e.g. "NotMonotone", "NoRightLift") next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& what) {
  throw Error(std::move(name), what);
}

}  // namespace plrep
