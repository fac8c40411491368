#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace csa {

enum class ErrorKind {
    InvalidArgument,
    ParseError,
    DivisionByZero,
    ZeroPolynomial,
    ConstantPolynomial,
    NonMonic,
    NotIrreducible,
    NonPrimePlace,
    NonIntegralInput,
    UnsupportedLocalComputation,
    MissingOverride,
    InvariantSumNonzero,
    BadArchimedeanInvariant,
    DegreeMismatch,
    ReductionObstructed,
    SplitAlgebra,
    NotACharPoly,
    NonIntegral,
    KeyIsT,
    NotInvertible,
    InvalidClass,
    NotDivisionAlgebra,
    ShapeMismatch,
    InternalNonRational,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind names are stable and appear
/// in CLI diagnostics.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace csa
