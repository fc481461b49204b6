#pragma once

#include <stdexcept>
#include <string>

namespace turancover {

/// Process exit codes used by the command-line frontend.
enum class ExitCode : int {
  kOk = 0,
  kParse = 2,
  kParameter = 3,
  kResource = 4,
  kVerification = 5,
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual ExitCode code() const = 0;
};

/// Malformed input text. Carries the 1-based line number where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }
  ExitCode code() const override { return ExitCode::kParse; }

 private:
  std::size_t line_;
};

class ParameterError : public Error {
 public:
  using Error::Error;
  ExitCode code() const override { return ExitCode::kParameter; }
};

/// A configured size guard or search budget was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
  ExitCode code() const override { return ExitCode::kResource; }
};

class VerificationError : public Error {
 public:
  using Error::Error;
  ExitCode code() const override { return ExitCode::kVerification; }
};

}  // namespace turancover
