#pragma once

#include <stdexcept>
#include <string>

namespace jordan {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};

class InvalidField : public Error {
 public:
  explicit InvalidField(const std::string& what) : Error("invalid field: " + what) {}
};

class FieldReductionError : public Error {
 public:
  explicit FieldReductionError(const std::string& what) : Error("cannot reduce: " + what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what) : Error("singular matrix: " + what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class StructureError : public Error {
 public:
  explicit StructureError(const std::string& what) : Error("bad structure constants: " + what) {}
};

class AlgebraMismatch : public Error {
 public:
  explicit AlgebraMismatch(const std::string& what) : Error("algebra mismatch: " + what) {}
};

class InvalidCocycle : public Error {
 public:
  explicit InvalidCocycle(const std::string& what) : Error("invalid cocycle: " + what) {}
};

class NotAnExtension : public Error {
 public:
  explicit NotAnExtension(const std::string& what) : Error("not a central extension: " + what) {}
};

class UnknownAlgebra : public Error {
 public:
  explicit UnknownAlgebra(const std::string& what) : Error("unknown algebra: " + what) {}
};

class InadmissibleParameter : public Error {
 public:
  explicit InadmissibleParameter(const std::string& what)
      : Error("inadmissible parameter: " + what) {}
};

class RootNotInField : public Error {
 public:
  explicit RootNotInField(const std::string& what) : Error("root not in field: " + what) {}
};

class CaseNotCovered : public Error {
 public:
  explicit CaseNotCovered(const std::string& what) : Error("case not covered: " + what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

}  // namespace jordan
