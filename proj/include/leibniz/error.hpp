#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LEIBNIZ_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  };

LEIBNIZ_DEFINE_ERROR(DivisionByZero)
LEIBNIZ_DEFINE_ERROR(DimensionMismatch)
LEIBNIZ_DEFINE_ERROR(NotAnIdeal)
LEIBNIZ_DEFINE_ERROR(ShapeMismatch)
LEIBNIZ_DEFINE_ERROR(SingularTransform)
LEIBNIZ_DEFINE_ERROR(BadDimension)
LEIBNIZ_DEFINE_ERROR(NonDiagonalizable)
LEIBNIZ_DEFINE_ERROR(NonIntegerSpectrum)
LEIBNIZ_DEFINE_ERROR(DecompositionFailed)
LEIBNIZ_DEFINE_ERROR(NotInvariant)
LEIBNIZ_DEFINE_ERROR(BadSpec)
LEIBNIZ_DEFINE_ERROR(DegenerateAction)
LEIBNIZ_DEFINE_ERROR(NotNormalizable)
LEIBNIZ_DEFINE_ERROR(BlockMismatch)
LEIBNIZ_DEFINE_ERROR(NotPerfect)
LEIBNIZ_DEFINE_ERROR(BadRank)
LEIBNIZ_DEFINE_ERROR(SchemaError)
LEIBNIZ_DEFINE_ERROR(ParseError)

#undef LEIBNIZ_DEFINE_ERROR

}  // namespace leibniz
