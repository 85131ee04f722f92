#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orthokit {

// Malformed input: bad edge lists, shape mismatches, unparsable scalars.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed a configured bound. The bound is named so the
// CLI can report which flag to raise.
class bound_exceeded : public std::runtime_error {
 public:
  bound_exceeded(std::string bound, std::size_t limit, std::size_t needed)
      : std::runtime_error("bound exceeded: " + bound + "=" + std::to_string(limit) +
                           " (needed " + std::to_string(needed) + ")"),
        bound_(std::move(bound)),
        limit_(limit) {}

  const std::string& bound() const noexcept { return bound_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string bound_;
  std::size_t limit_;
};

// A precondition of an operation does not hold on the given instance.
class precondition_failed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace orthokit
