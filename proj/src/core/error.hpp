#pragma once

#include <stdexcept>
#include <string>

namespace qrz {

enum class ErrorCode {
  parse,         // malformed literal or spec string
  invalid_group, // a table that violates a group axiom
  precondition,  // well-formed input outside an operation's domain
  budget,        // configured search or enumeration budget exceeded
  io,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace qrz
