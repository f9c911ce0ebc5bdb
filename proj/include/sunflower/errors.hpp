#pragma once

#include <stdexcept>
#include <string>

namespace sunflower {

// Input file rejected; line is 1-based within the stream.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Explicit refusal: the request is outside a documented desk-scale guard.
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sunflower
