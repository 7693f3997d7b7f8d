#ifndef LADDERMAT_ERROR_HPP
#define LADDERMAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace laddermat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LADDERMAT_DEFINE_ERROR(Name)        \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

// exact-field
LADDERMAT_DEFINE_ERROR(FieldMismatch);
LADDERMAT_DEFINE_ERROR(DivisionByZero);
LADDERMAT_DEFINE_ERROR(InvalidField);

// exact-linalg
LADDERMAT_DEFINE_ERROR(DimensionMismatch);

// ladder-combinatorics
LADDERMAT_DEFINE_ERROR(InvalidLadder);
LADDERMAT_DEFINE_ERROR(EmptyLadder);
LADDERMAT_DEFINE_ERROR(NotALadderShape);
LADDERMAT_DEFINE_ERROR(ParseError);

// ladder-algebra
LADDERMAT_DEFINE_ERROR(NotBracketClosed);
LADDERMAT_DEFINE_ERROR(AlgebraMismatch);

// derivation-engine
LADDERMAT_DEFINE_ERROR(HypothesisViolated);
LADDERMAT_DEFINE_ERROR(NotInDecomposition);
LADDERMAT_DEFINE_ERROR(StabilityViolation);
LADDERMAT_DEFINE_ERROR(NoAdjointWitness);

#undef LADDERMAT_DEFINE_ERROR

}  // namespace laddermat

#endif  // LADDERMAT_ERROR_HPP
