#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace radsolve {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Root isolation was asked for on the zero polynomial (every real is a root).
class ZeroPolynomial : public Error {
public:
  ZeroPolynomial() : Error("polynomial is identically zero") {}
};

/// A rational function was evaluated at a root of its denominator.
class PoleAt : public Error {
public:
  explicit PoleAt(const std::string &where)
      : Error("denominator vanishes at " + where) {}
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string &message)
      : Error(message), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string> &expected() const noexcept {
    return expected_;
  }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// The equation is well formed but falls outside the supported radical forms.
class UnsupportedForm : public Error {
public:
  using Error::Error;
};

class DegenerateQuadratic : public Error {
public:
  using Error::Error;
};

/// Numeric evaluation divided by (almost) zero.
class PoleEncountered : public Error {
public:
  using Error::Error;
};

class NonFinite : public Error {
public:
  using Error::Error;
};

} // namespace radsolve
