#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clfe {

// Broad failure classes. The CLI maps them onto exit codes 2, 3 and 4.
enum class ErrorKind { kValidation, kAdapter, kIo };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::kValidation, what) {}
};

class UnknownLanguageError : public ValidationError {
 public:
  explicit UnknownLanguageError(const std::string& code)
      : ValidationError("unknown language code '" + code + "'"), code_(code) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// A validation failure tied to a 1-based line of an input file.
class LineError : public ValidationError {
 public:
  LineError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

class AdapterError : public Error {
 public:
  AdapterError(const std::string& adapter, const std::string& what,
               int exit_code = 0)
      : Error(ErrorKind::kAdapter, "adapter '" + adapter + "': " + what),
        adapter_(adapter),
        exit_code_(exit_code) {}

  const std::string& adapter() const { return adapter_; }
  // Exit status of the external process, 0 when the failure was not an exit.
  int exit_code() const { return exit_code_; }

 private:
  std::string adapter_;
  int exit_code_;
};

}  // namespace clfe
