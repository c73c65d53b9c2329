#pragma once

#include <stdexcept>
#include <string>

namespace disjnet {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed argument, file, or spec string.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Operation invoked outside its stated domain (e.g. asking for the
/// partition classes of a graph that is not strongly connected).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A size cap was exceeded; the message names the cap to raise.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace disjnet
