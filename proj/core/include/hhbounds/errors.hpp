#ifndef HHBOUNDS_ERRORS_HPP
#define HHBOUNDS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hhb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside its admissible range (alpha, lambda, q, grid sizes ...).
class ParameterError : public Error {
public:
  using Error::Error;
};

/// A function was evaluated outside its domain, or returned a non-finite value.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Unknown catalog name.
class LookupError : public Error {
public:
  using Error::Error;
};

/// The requested combination is not supported (e.g. the Hoelder bound with q = 1).
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// A closed form overflowed or underflowed to a non-finite value.
class RangeError : public Error {
public:
  using Error::Error;
};

/// Two routes that must agree did not.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

/// Convexity hypothesis failed on one cell of a composite rule.
class HypothesisError : public Error {
public:
  HypothesisError(const std::string& what, std::size_t cell) : Error(what), cell_(cell) {}
  std::size_t cell() const noexcept { return cell_; }

private:
  std::size_t cell_;
};

}  // namespace hhb

#endif  // HHBOUNDS_ERRORS_HPP
