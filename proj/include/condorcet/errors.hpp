#ifndef CONDORCET_ERRORS_HPP
#define CONDORCET_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace condorcet {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (foreign ids, overlapping sets...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// An enumeration would exceed its configured cap.
class ResourceLimitError : public Error {
public:
  ResourceLimitError(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

/// The input is not a Condorcet domain where one is required.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed text or JSON input. line() is 1-based, 0 when unknown.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace condorcet

#endif  // CONDORCET_ERRORS_HPP
