#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lf {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A required field is missing or has the wrong type. Carries the field path.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A value falls outside a closed vocabulary (status, relation predicate).
class VocabError : public Error {
 public:
  using Error::Error;
};

/// A reference points at an id that does not exist in the record.
class RefError : public Error {
 public:
  using Error::Error;
};

/// A layout does not cover the expected object id set.
class CoverageError : public Error {
 public:
  CoverageError(std::string what, std::vector<std::string> missing,
                std::vector<std::string> extra)
      : Error(std::move(what)), missing_(std::move(missing)), extra_(std::move(extra)) {}
  const std::vector<std::string>& missing() const { return missing_; }
  const std::vector<std::string>& extra() const { return extra_; }

 private:
  std::vector<std::string> missing_;
  std::vector<std::string> extra_;
};

/// A bounding-box component violates its range invariant.
class BoxRangeError : public Error {
 public:
  using Error::Error;
};

/// Scalar argument outside its documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class InsufficientFrames : public Error {
 public:
  using Error::Error;
};

/// Filesystem / file-format failure surfaced by the CLI as exit code 1.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lf
