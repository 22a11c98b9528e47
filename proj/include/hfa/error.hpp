#pragma once

#include <stdexcept>
#include <string>

namespace hfa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed, out-of-range or over-precise degree text.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument was violated (empty HFE, q out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two hesitant fuzzy sets (or families) live on different universes.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// Schema or content violation while reading a document. `path()` names the
/// offending location, e.g. "sets/A/y".
class DocumentError : public Error {
 public:
  DocumentError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace hfa
