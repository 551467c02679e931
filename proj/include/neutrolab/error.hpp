#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace neutrolab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

// Raised for violated preconditions: empty subsets, disjoint parameter sets,
// predicates applied to the wrong kind of structure.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ResourceError : public Error {
 public:
  ResourceError(std::string cap, const std::string& what)
      : Error(what + " (cap: " + cap + ")"), cap_(std::move(cap)) {}

  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace neutrolab
