#pragma once

#include <stdexcept>
#include <string>

namespace semnet {

// Error categories map one-to-one onto the C API status codes.
enum class ErrorKind {
  argument,    // bad value or contract breach at a library call
  config,      // malformed or inconsistent configuration / input data
  infeasible,  // instance admits no feasible point (QoS, delay, capacity, user)
  mismatch,    // cross-check disagreement (solver vs oracle)
  io,          // file system failure
  internal,    // should-not-happen
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  static Error argument(const std::string& what) { return {ErrorKind::argument, what}; }
  static Error config(const std::string& what) { return {ErrorKind::config, what}; }
  static Error infeasible(const std::string& what) { return {ErrorKind::infeasible, what}; }
  static Error mismatch(const std::string& what) { return {ErrorKind::mismatch, what}; }
  static Error io(const std::string& what) { return {ErrorKind::io, what}; }
  static Error internal(const std::string& what) { return {ErrorKind::internal, what}; }

 private:
  ErrorKind kind_;
};

}  // namespace semnet
