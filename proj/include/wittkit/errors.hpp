#pragma once

#include <stdexcept>
#include <string>

namespace wittkit {

// Base class for everything this library throws on contract violations.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Arithmetic between elements of different fields or different rings.
class IncompatibleError : public Error {
public:
  using Error::Error;
};

// A quotient presentation collapsed to the zero ring (1 lies in the ideal).
class ZeroRingError : public Error {
public:
  using Error::Error;
};

// A symbolic operation exceeded the configured total-degree cap.
class DegreeCapError : public Error {
public:
  using Error::Error;
};

// Malformed text input; carries a file:line location when known.
class ParseError : public Error {
public:
  ParseError(const std::string& file, long line, const std::string& what)
      : Error(file.empty() ? what
                           : file + ":" + std::to_string(line) + ": " + what),
        file_(file), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  const std::string& file() const { return file_; }
  long line() const { return line_; }

private:
  std::string file_;
  long line_;
};

} // namespace wittkit
