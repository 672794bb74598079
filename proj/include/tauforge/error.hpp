#pragma once

#include <stdexcept>
#include <string>

namespace tauforge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A rational function was evaluated at a point where its denominator vanishes.
class PoleError : public Error {
 public:
  PoleError(std::string denominator, std::string point)
      : Error("pole at q=" + point + ": denominator " + denominator + " vanishes"),
        denominator_(std::move(denominator)) {}
  const std::string& denominator() const noexcept { return denominator_; }

 private:
  std::string denominator_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A rewriting presentation misbehaved (unknown generator, exhausted step budget).
class PresentationError : public Error {
 public:
  using Error::Error;
};

/// A structural assumption about representations or intertwiners failed.
class ConventionError : public Error {
 public:
  using Error::Error;
};

/// A truncated Fock-space computation came too close to the mode window edge.
class BoundaryError : public Error {
 public:
  BoundaryError(int mode, const std::string& context)
      : Error("boundary violation at mode " + std::to_string(mode) + " (" + context + ")"), mode_(mode) {}
  int mode() const noexcept { return mode_; }

 private:
  int mode_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace tauforge
