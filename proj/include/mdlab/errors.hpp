#pragma once

#include <stdexcept>
#include <string>

namespace mdlab {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments to a graph operation (out-of-range vertex, non-edge, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input: graph6 lines, coloring JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the documented domain of a formula or constructor.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded; the operation refuses instead of truncating.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace mdlab
