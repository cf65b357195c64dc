#pragma once

#include <stdexcept>
#include <string>

namespace mcluster {

/// Input violates an operation's documented precondition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A runtime self-check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed serialized input. `path` is a JSON pointer when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace mcluster
