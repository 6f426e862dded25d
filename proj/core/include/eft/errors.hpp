#pragma once

#include <stdexcept>
#include <string>

namespace eft {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Digamma evaluated at a pole (0, -1, -2, ... on the real axis).
class PoleError : public Error {
public:
  using Error::Error;
};

/// Quadrature could not reach the requested tolerance within its budget.
class NonConvergence : public Error {
public:
  NonConvergence(const std::string& what, double achieved_error)
      : Error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

private:
  double achieved_error_;
};

/// The test function's transform does not see any n >= 2.
class DegenerateSupport : public Error {
public:
  using Error::Error;
};

/// A coefficient needed by the prime side is missing.
class IncompleteData : public Error {
public:
  using Error::Error;
};

/// Neither network, cache nor fixtures could supply a record.
class DataUnavailable : public Error {
public:
  using Error::Error;
};

/// A remote response lacked expected fields. The raw payload is kept on disk.
class SchemaDrift : public Error {
public:
  SchemaDrift(const std::string& what, std::string payload_path)
      : Error(what + " (raw payload: " + payload_path + ")"),
        payload_path_(std::move(payload_path)) {}

  const std::string& payload_path() const noexcept { return payload_path_; }

private:
  std::string payload_path_;
};

} // namespace eft
