#ifndef LIEDERIV_ERRORS_HPP
#define LIEDERIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liederiv {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
  explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

class VariableMismatch : public Error {
public:
  explicit VariableMismatch(const std::string& what = "incompatible variable lists") : Error(what) {}
};

class AlgebraMismatch : public Error {
public:
  explicit AlgebraMismatch(const std::string& what = "elements refer to different algebras") : Error(what) {}
};

class ShapeMismatch : public Error {
public:
  explicit ShapeMismatch(const std::string& what = "matrix shape mismatch") : Error(what) {}
};

class NotASubalgebra : public Error {
public:
  explicit NotASubalgebra(const std::string& what = "subspace is not closed under bracket") : Error(what) {}
};

class NotComplement : public Error {
public:
  explicit NotComplement(const std::string& what = "complement does not span together with L1") : Error(what) {}
};

class NotNilpotent : public Error {
public:
  explicit NotNilpotent(const std::string& what = "ad w is not nilpotent on the orbit (max_steps exceeded)")
      : Error(what) {}
};

class WNotInJ : public Error {
public:
  explicit WNotInJ(const std::string& what = "jet mode requires every coefficient of w in the ideal J")
      : Error(what) {}
};

class SingularSystem : public Error {
public:
  explicit SingularSystem(const std::string& what = "linear system is singular") : Error(what) {}
};

class UnknownPreset : public Error {
public:
  explicit UnknownPreset(const std::string& what = "unknown preset name") : Error(what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what = "parse error") : Error(what) {}
};

class InvalidInput : public Error {
public:
  explicit InvalidInput(const std::string& what = "invalid input") : Error(what) {}
};

} // namespace liederiv

#endif
