#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace annular {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Attempt to invert a scalar that is not a unit of the Laurent ring,
/// or to substitute a non-unit value into a variable.
class NonUnitError : public std::domain_error {
 public:
  explicit NonUnitError(const std::string& what) : std::domain_error(what) {}
};

/// Composition or operation attempted between objects whose boundary
/// signatures do not chain.
class SignatureError : public std::invalid_argument {
 public:
  explicit SignatureError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Raw arc data does not describe a crossing-free equivariant diagram.
class InvalidDiagramError : public std::invalid_argument {
 public:
  explicit InvalidDiagramError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Text input rejected; carries the byte position of the failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace annular
