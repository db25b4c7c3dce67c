#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metdim {

// Bad caller input: out-of-range vertex, invalid generator parameters, ...
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The operation needs a connected graph; callers split components first.
class DisconnectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reading a distance that does not exist (source and target in different components).
class UnreachableError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Search budget exhausted. Carries the bounds proven so far; lower_bound is the
// largest size shown infeasible plus one.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, int lower_bound, int upper_bound)
      : std::runtime_error(what), lower_(lower_bound), upper_(upper_bound) {}
  int lower_bound() const { return lower_; }
  int upper_bound() const { return upper_; }

 private:
  int lower_;
  int upper_;
};

// A solver produced a witness that failed independent verification.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace metdim
