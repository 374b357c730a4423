#pragma once

#include <stdexcept>
#include <string>

namespace reptile {

enum class ErrorCode {
  EmptyPolycube,
  BadScale,
  NotManifold,
  InvalidDiagram,
  NotABrickPair,
  MalformedLine,
  BadHeader,
  BadCertificate,
  Io,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure carrying the 1-based line number of the offending input line.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, const std::string& what)
      : Error(code, what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace reptile
