#pragma once

#include <stdexcept>
#include <string>

namespace chordbond {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad vertex id, self-loop, missing edge, parse failure.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured size limit was exceeded. Callers such as the CLI catch this
// and mark the stage as skipped.
class LimitExceeded : public Error {
 public:
  LimitExceeded(std::string what_limit, std::size_t max, std::size_t got)
      : Error(what_limit + " limit " + std::to_string(max) + " exceeded (got " +
              std::to_string(got) + ")"),
        limit_name(std::move(what_limit)),
        limit(max),
        actual(got) {}

  std::string limit_name;
  std::size_t limit;
  std::size_t actual;
};

// An operation's structural precondition (connected, chordal, non-clique...)
// does not hold for the given graph.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace chordbond
