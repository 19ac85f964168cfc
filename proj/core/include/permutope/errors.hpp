#pragma once

#include <stdexcept>
#include <string>

namespace permutope {

/// Base class of every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PERMUTOPE_DEFINE_ERROR(Name)  \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

PERMUTOPE_DEFINE_ERROR(ParseError);
PERMUTOPE_DEFINE_ERROR(InvalidPermutationError);
PERMUTOPE_DEFINE_ERROR(DistinctnessError);
PERMUTOPE_DEFINE_ERROR(IndexError);
PERMUTOPE_DEFINE_ERROR(SizeError);
PERMUTOPE_DEFINE_ERROR(EmptyError);
PERMUTOPE_DEFINE_ERROR(ArityError);
PERMUTOPE_DEFINE_ERROR(CapacityError);
PERMUTOPE_DEFINE_ERROR(InvalidWalkError);
PERMUTOPE_DEFINE_ERROR(EmptyPolytopeError);
PERMUTOPE_DEFINE_ERROR(NotInPolytopeError);
PERMUTOPE_DEFINE_ERROR(NotFullError);
PERMUTOPE_DEFINE_ERROR(RationalityError);
PERMUTOPE_DEFINE_ERROR(DistributionError);
PERMUTOPE_DEFINE_ERROR(IoError);

#undef PERMUTOPE_DEFINE_ERROR

}  // namespace permutope
