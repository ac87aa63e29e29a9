#pragma once

#include <stdexcept>
#include <string>

namespace skewmaps {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search or table construction would exceed its configured size bound.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, int size, int bound)
      : Error(what + ": size " + std::to_string(size) + " exceeds bound " +
              std::to_string(bound)),
        size_(size),
        bound_(bound) {}

  int size() const noexcept { return size_; }
  int bound() const noexcept { return bound_; }

 private:
  int size_;
  int bound_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace skewmaps
