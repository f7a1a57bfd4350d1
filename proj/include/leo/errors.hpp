#pragma once

#include <stdexcept>
#include <string>

namespace leo {

/// Structured failure of response parsing. Carries the first offending line
/// so callers can log exactly what the generator produced.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { CountMismatch, TokenError, EmptyResponse };

  ParseError(Kind kind, const std::string& message, int line_no = -1,
             std::string line = {})
      : std::runtime_error(message),
        kind_(kind),
        line_no_(line_no),
        line_(std::move(line)) {}

  Kind kind() const { return kind_; }
  int line_no() const { return line_no_; }
  const std::string& line() const { return line_; }

 private:
  Kind kind_;
  int line_no_;
  std::string line_;
};

/// Network or HTTP-level failure after all retries. last_response() holds the
/// final body (or error text) for the run log.
class BackendUnavailable : public std::runtime_error {
 public:
  BackendUnavailable(const std::string& message, std::string last_response = {})
      : std::runtime_error(message), last_response_(std::move(last_response)) {}
  const std::string& last_response() const { return last_response_; }

 private:
  std::string last_response_;
};

/// Generator answered but its output never parsed, even after retries.
class MalformedResponse : public std::runtime_error {
 public:
  MalformedResponse(const std::string& message, std::string last_response = {})
      : std::runtime_error(message), last_response_(std::move(last_response)) {}
  const std::string& last_response() const { return last_response_; }

 private:
  std::string last_response_;
};

/// An objective returned NaN or infinity; such values are never stored.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace leo
